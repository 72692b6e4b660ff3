/// Desk-scale Buchberger engine over the anti-diagonal order: multivariate
/// division, S-pairs with the coprimality criterion, normal pair strategy,
/// and monomial-ideal comparison.
#ifndef PFAFFIANS_GROEBNER_HPP
#define PFAFFIANS_GROEBNER_HPP

#include "pfaffians/polynomial.hpp"

#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfaffians {

/// Remainder of division of f by the basis, deterministic: at each step the
/// first listed divisor of the current leading term is used; no remainder
/// monomial is divisible by any basis leading monomial.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis)
{
    for (auto& g : basis)
        if (g.is_zero())
            throw std::invalid_argument("normal_form: basis elements must be nonzero");
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (auto& g : basis) {
            const Term& gl = g.leading_term();
            if (gl.monomial.divides(lt.monomial)) {
                Monomial q = gl.monomial.divide_into(lt.monomial);
                h = h - g.times_term(lt.coefficient / gl.coefficient, q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            h = h - Polynomial(lt);
        }
    }
    return Polynomial::from_terms(std::move(remainder));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g)
{
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    Monomial l = lcm(lf.monomial, lg.monomial);
    return f.times_term(Rational(1) / lf.coefficient, lf.monomial.divide_into(l)) -
           g.times_term(Rational(1) / lg.coefficient, lg.monomial.divide_into(l));
}

struct BuchbergerLimits {
    std::size_t max_generators = 200;
    std::size_t max_pairs = 50000;
};

struct PairStats {
    std::size_t pairs_seen = 0;
    std::size_t pairs_reduced = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t basis_growth = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, PairStats s, std::size_t basis)
        : std::runtime_error(std::move(what)), stats(s), basis_size(basis)
    {
    }
    PairStats stats;
    std::size_t basis_size;
};

struct BasisComputation {
    std::vector<Polynomial> generators;
    std::vector<Polynomial> computed_basis;
    PairStats stats;

    std::vector<Monomial> leading_monomials() const
    {
        std::vector<Monomial> out;
        for (auto& g : computed_basis)
            out.push_back(g.leading_term().monomial);
        return out;
    }
};

/// Buchberger with criterion-1 pruning; pairs are processed by smallest lcm
/// under the term order, ties by insertion sequence.
inline BasisComputation buchberger(const std::vector<Polynomial>& gens,
                                   BuchbergerLimits limits = {})
{
    for (auto& g : gens)
        if (g.is_zero())
            throw std::invalid_argument("buchberger: generators must be nonzero");

    BasisComputation comp;
    comp.generators = gens;
    for (auto& g : gens)
        comp.computed_basis.push_back(g.monic());

    struct QueuedPair {
        Monomial lcm_mono;
        std::size_t seq;
        std::size_t i, j;
    };
    auto later = [](const QueuedPair& a, const QueuedPair& b) {
        int c = term_cmp(a.lcm_mono, b.lcm_mono);
        if (c != 0)
            return c > 0; // larger lcm comes later
        return a.seq > b.seq;
    };
    std::priority_queue<QueuedPair, std::vector<QueuedPair>, decltype(later)> queue(later);

    std::size_t seq = 0;
    auto add_pairs_for = [&](std::size_t m) {
        for (std::size_t i = 0; i < m; ++i) {
            const Monomial& a = comp.computed_basis[i].leading_term().monomial;
            const Monomial& b = comp.computed_basis[m].leading_term().monomial;
            ++comp.stats.pairs_seen;
            if (coprime(a, b)) {
                ++comp.stats.pairs_skipped_coprime;
                continue;
            }
            queue.push({lcm(a, b), seq++, i, m});
        }
    };
    for (std::size_t m = 1; m < comp.computed_basis.size(); ++m)
        add_pairs_for(m);

    while (!queue.empty()) {
        QueuedPair p = queue.top();
        queue.pop();
        if (++comp.stats.pairs_reduced > limits.max_pairs)
            throw BudgetExceeded("buchberger: pair budget exceeded after " +
                                     std::to_string(comp.stats.pairs_reduced - 1) + " pairs",
                                 comp.stats, comp.computed_basis.size());
        Polynomial s = s_polynomial(comp.computed_basis[p.i], comp.computed_basis[p.j]);
        Polynomial r = normal_form(s, comp.computed_basis);
        if (r.is_zero())
            continue;
        comp.computed_basis.push_back(r.monic());
        ++comp.stats.basis_growth;
        if (comp.computed_basis.size() > limits.max_generators)
            throw BudgetExceeded("buchberger: basis size budget exceeded", comp.stats,
                                 comp.computed_basis.size());
        add_pairs_for(comp.computed_basis.size() - 1);
    }
    return comp;
}

/// Equality of monomial ideals via mutual divisibility of generators.
inline bool monomial_span_equal(const std::vector<Monomial>& g1, const std::vector<Monomial>& g2)
{
    auto covered = [](const Monomial& m, const std::vector<Monomial>& gens) {
        for (auto& g : gens)
            if (g.divides(m))
                return true;
        return false;
    };
    for (auto& m : g1)
        if (!covered(m, g2))
            return false;
    for (auto& m : g2)
        if (!covered(m, g1))
            return false;
    return true;
}

} // namespace pfaffians

#endif
