/// Monomials in the variables X_ij, (i,j) in X+, with the concrete
/// anti-diagonal term order used throughout: pure lexicographic with variable
/// precedence X_ij > X_kl iff i < k, or i = k and j > l.
#ifndef PFAFFIANS_MONOMIAL_HPP
#define PFAFFIANS_MONOMIAL_HPP

#include "pfaffians/types.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace pfaffians {

/// Higher precedence = earlier row, then later column.
inline bool var_precedes(LatticePoint a, LatticePoint b)
{
    if (a.row != b.row)
        return a.row < b.row;
    return a.col > b.col;
}

/// Exponent map from lattice points to positive integers; the empty map is
/// the unit monomial. Entries are kept sorted by variable precedence so that
/// lexicographic comparison is a single merge walk.
class Monomial {
public:
    using Entry = std::pair<LatticePoint, int>;

    Monomial() = default;

    explicit Monomial(std::vector<Entry> entries) : vars_(std::move(entries))
    {
        for (auto& [p, e] : vars_) {
            validate_lattice_point(p);
            if (e <= 0)
                throw std::invalid_argument("monomial exponents must be positive");
        }
        std::sort(vars_.begin(), vars_.end(),
                  [](const Entry& a, const Entry& b) { return var_precedes(a.first, b.first); });
        for (std::size_t i = 1; i < vars_.size(); ++i)
            if (vars_[i - 1].first == vars_[i].first)
                throw std::invalid_argument("monomial has a repeated variable");
    }

    static Monomial variable(LatticePoint p) { return Monomial({{p, 1}}); }
    static Monomial variable(int i, int j) { return variable(LatticePoint{i, j}); }

    bool is_unit() const { return vars_.empty(); }
    int degree() const
    {
        int d = 0;
        for (auto& [p, e] : vars_)
            d += e;
        return d;
    }
    const std::vector<Entry>& entries() const { return vars_; }

    int exponent(LatticePoint p) const
    {
        for (auto& [q, e] : vars_)
            if (q == p)
                return e;
        return 0;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const
    {
        std::vector<Entry> out;
        out.reserve(vars_.size() + o.vars_.size());
        std::size_t i = 0, j = 0;
        while (i < vars_.size() && j < o.vars_.size()) {
            if (vars_[i].first == o.vars_[j].first) {
                out.push_back({vars_[i].first, vars_[i].second + o.vars_[j].second});
                ++i, ++j;
            } else if (var_precedes(vars_[i].first, o.vars_[j].first)) {
                out.push_back(vars_[i++]);
            } else {
                out.push_back(o.vars_[j++]);
            }
        }
        for (; i < vars_.size(); ++i)
            out.push_back(vars_[i]);
        for (; j < o.vars_.size(); ++j)
            out.push_back(o.vars_[j]);
        Monomial m;
        m.vars_ = std::move(out);
        return m;
    }

    bool divides(const Monomial& o) const
    {
        std::size_t j = 0;
        for (auto& [p, e] : vars_) {
            while (j < o.vars_.size() && var_precedes(o.vars_[j].first, p))
                ++j;
            if (j >= o.vars_.size() || !(o.vars_[j].first == p) || o.vars_[j].second < e)
                return false;
        }
        return true;
    }

    /// Quotient o / this; caller must ensure divisibility.
    Monomial divide_into(const Monomial& o) const
    {
        std::vector<Entry> out;
        std::size_t i = 0;
        for (auto& [p, e] : o.vars_) {
            int sub = 0;
            if (i < vars_.size() && vars_[i].first == p) {
                sub = vars_[i].second;
                ++i;
            }
            if (e - sub < 0)
                throw std::invalid_argument("monomial division is not exact");
            if (e - sub > 0)
                out.push_back({p, e - sub});
        }
        if (i != vars_.size())
            throw std::invalid_argument("monomial division is not exact");
        Monomial m;
        m.vars_ = std::move(out);
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        std::vector<Entry> out;
        std::size_t i = 0, j = 0;
        while (i < a.vars_.size() && j < b.vars_.size()) {
            if (a.vars_[i].first == b.vars_[j].first) {
                out.push_back({a.vars_[i].first, std::max(a.vars_[i].second, b.vars_[j].second)});
                ++i, ++j;
            } else if (var_precedes(a.vars_[i].first, b.vars_[j].first)) {
                out.push_back(a.vars_[i++]);
            } else {
                out.push_back(b.vars_[j++]);
            }
        }
        for (; i < a.vars_.size(); ++i)
            out.push_back(a.vars_[i]);
        for (; j < b.vars_.size(); ++j)
            out.push_back(b.vars_[j]);
        Monomial m;
        m.vars_ = std::move(out);
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b)
    {
        std::size_t i = 0, j = 0;
        while (i < a.vars_.size() && j < b.vars_.size()) {
            if (a.vars_[i].first == b.vars_[j].first)
                return false;
            if (var_precedes(a.vars_[i].first, b.vars_[j].first))
                ++i;
            else
                ++j;
        }
        return true;
    }

    /// Support as lattice points (precedence order).
    std::vector<LatticePoint> support() const
    {
        std::vector<LatticePoint> s;
        s.reserve(vars_.size());
        for (auto& [p, e] : vars_)
            s.push_back(p);
        return s;
    }

private:
    std::vector<Entry> vars_;
};

/// Anti-diagonal term order: <0, 0, >0 as m1 is below, equal to, above m2.
inline int term_cmp(const Monomial& m1, const Monomial& m2)
{
    const auto& a = m1.entries();
    const auto& b = m2.entries();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second)
                return a[i].second > b[j].second ? 1 : -1;
            ++i, ++j;
        } else if (var_precedes(a[i].first, b[j].first)) {
            return 1; // m1 owns the higher-precedence variable
        } else {
            return -1;
        }
    }
    if (i < a.size())
        return 1;
    if (j < b.size())
        return -1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return term_cmp(a, b) < 0; }
};
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return term_cmp(a, b) > 0; }
};

} // namespace pfaffians

#endif
