/// The Pfaffian poset, anti-diagonal monomials, and the recursive expansion
/// of a Pfaffian into an exact polynomial.
#ifndef PFAFFIANS_PFAFFIAN_HPP
#define PFAFFIANS_PFAFFIAN_HPP

#include "pfaffians/polynomial.hpp"

#include <map>
#include <vector>

namespace pfaffians {

/// Natural partial order on Pfaffians: alpha <= beta iff alpha is at least as
/// long and entrywise below beta on beta's positions.
inline bool poset_leq(const IndexTuple& alpha, const IndexTuple& beta)
{
    if (alpha.half() < beta.half())
        return false;
    for (std::size_t i = 0; i < beta.idx.size(); ++i)
        if (alpha.idx[i] > beta.idx[i])
            return false;
    return true;
}

/// Main anti-diagonal X_{a1,a2t} X_{a2,a2t-1} ... X_{at,at+1}.
inline Monomial adiag(const IndexTuple& indices)
{
    const auto& a = indices.idx;
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; 2 * i + 1 < a.size(); ++i)
        entries.push_back({LatticePoint{a[i], a[a.size() - 1 - i]}, 1});
    return Monomial(std::move(entries));
}

namespace detail {

inline const Polynomial& pfaffian_rec(const std::vector<int>& idx,
                                      std::map<std::vector<int>, Polynomial>& memo)
{
    auto it = memo.find(idx);
    if (it != memo.end())
        return it->second;
    Polynomial result;
    if (idx.empty()) {
        result = Polynomial(Rational(1));
    } else {
        // Expansion along the first row: alternating signs, + for the pairing
        // with the second index.
        std::vector<Term> acc;
        for (std::size_t j = 1; j < idx.size(); ++j) {
            std::vector<int> rest;
            rest.reserve(idx.size() - 2);
            for (std::size_t k = 1; k < idx.size(); ++k)
                if (k != j)
                    rest.push_back(idx[k]);
            const Polynomial& sub = pfaffian_rec(rest, memo);
            Rational sign = (j % 2 == 1) ? 1 : -1;
            Monomial var = Monomial::variable(idx[0], idx[j]);
            for (auto& t : sub.terms())
                acc.push_back({t.coefficient * sign, t.monomial * var});
        }
        result = Polynomial::from_terms(std::move(acc));
    }
    return memo.emplace(idx, std::move(result)).first->second;
}

} // namespace detail

/// Pfaffian of the skew-symmetric submatrix on the given rows/columns,
/// expanded recursively along the first row; [i,j] |-> +X_ij.
inline Polynomial pfaffian_polynomial(const IndexTuple& indices, int n)
{
    indices.validate_against(n);
    std::map<std::vector<int>, Polynomial> memo;
    return detail::pfaffian_rec(indices.idx, memo);
}

} // namespace pfaffians

#endif
