/// Exact sparse polynomials over the rationals, kept in canonical form:
/// terms sorted strictly descending under the anti-diagonal order, no zero
/// coefficients.
#ifndef PFAFFIANS_POLYNOMIAL_HPP
#define PFAFFIANS_POLYNOMIAL_HPP

#include "pfaffians/monomial.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace pfaffians {

struct Term {
    Rational coefficient;
    Monomial monomial;

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(Rational constant)
    {
        if (constant != 0)
            terms_.push_back({std::move(constant), Monomial{}});
    }

    explicit Polynomial(Term t)
    {
        if (t.coefficient != 0)
            terms_.push_back(std::move(t));
    }

    static Polynomial variable(int i, int j)
    {
        return Polynomial(Term{Rational(1), Monomial::variable(i, j)});
    }

    static Polynomial from_terms(std::vector<Term> ts)
    {
        std::map<Monomial, Rational, MonomialGreater> acc;
        for (auto& t : ts)
            acc[t.monomial] += t.coefficient;
        Polynomial p;
        for (auto& [m, c] : acc)
            if (c != 0)
                p.terms_.push_back({c, m});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const
    {
        if (terms_.empty())
            throw std::domain_error("zero polynomial has no initial term");
        return terms_.front();
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial operator-() const
    {
        Polynomial p(*this);
        for (auto& t : p.terms_)
            t.coefficient = -t.coefficient;
        return p;
    }

    Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merge(o, true); }

    Polynomial operator*(const Polynomial& o) const
    {
        std::map<Monomial, Rational, MonomialGreater> acc;
        for (auto& s : terms_)
            for (auto& t : o.terms_)
                acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
        Polynomial p;
        for (auto& [m, c] : acc)
            if (c != 0)
                p.terms_.push_back({c, m});
        return p;
    }

    /// this * (c * m), the workhorse of division steps.
    Polynomial times_term(const Rational& c, const Monomial& m) const
    {
        Polynomial p;
        if (c == 0)
            return p;
        p.terms_.reserve(terms_.size());
        for (auto& t : terms_)
            p.terms_.push_back({t.coefficient * c, t.monomial * m});
        return p;
    }

    Polynomial operator*(const Rational& c) const { return times_term(c, Monomial{}); }

    /// Leading coefficient scaled to 1.
    Polynomial monic() const
    {
        if (terms_.empty())
            return *this;
        Rational lc = terms_.front().coefficient;
        Polynomial p(*this);
        for (auto& t : p.terms_)
            t.coefficient /= lc;
        return p;
    }

private:
    Polynomial merge(const Polynomial& o, bool subtract) const
    {
        Polynomial p;
        p.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = term_cmp(terms_[i].monomial, o.terms_[j].monomial);
            if (c > 0) {
                p.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                Term t = o.terms_[j++];
                if (subtract)
                    t.coefficient = -t.coefficient;
                p.terms_.push_back(std::move(t));
            } else {
                Rational sum = subtract ? Rational(terms_[i].coefficient - o.terms_[j].coefficient)
                                        : Rational(terms_[i].coefficient + o.terms_[j].coefficient);
                if (sum != 0)
                    p.terms_.push_back({std::move(sum), terms_[i].monomial});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i)
            p.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            Term t = o.terms_[j];
            if (subtract)
                t.coefficient = -t.coefficient;
            p.terms_.push_back(std::move(t));
        }
        return p;
    }

    std::vector<Term> terms_;
};

/// The term of p maximal under the anti-diagonal order.
inline Term initial_term(const Polynomial& p) { return p.leading_term(); }

inline Monomial initial_monomial(const Polynomial& p) { return p.leading_term().monomial; }

} // namespace pfaffians

#endif
