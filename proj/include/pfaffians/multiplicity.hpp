/// Closed-form multiplicity via non-intersecting lattice-path determinants:
/// binomial path counts, the reflection formula for paths inside X+, the
/// path matrix of a (h,k) cell, and the full sum.
#ifndef PFAFFIANS_MULTIPLICITY_HPP
#define PFAFFIANS_MULTIPLICITY_HPP

#include "pfaffians/ideal.hpp"

#include <vector>

namespace pfaffians {

inline Integer binomial(long long n, long long k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    k = std::min(k, n - k);
    Integer c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

/// Monotone unit-step paths q -> p ignoring the triangular constraint.
inline Integer path_count(LatticePoint q, LatticePoint p)
{
    long long dr = p.row - q.row, dc = p.col - q.col;
    if (dr < 0 || dc < 0)
        return 0;
    return binomial(dr + dc, dr);
}

/// Paths q -> p staying strictly above the diagonal at every vertex,
/// by the reflection difference of binomials.
inline Integer constrained_path_count(LatticePoint q, LatticePoint p)
{
    validate_lattice_point(q);
    validate_lattice_point(p);
    long long dr = p.row - q.row, dc = p.col - q.col;
    if (dr < 0 || dc < 0)
        return 0;
    return binomial(dr + dc, dr) - binomial(dr + dc, p.row - q.col);
}

/// Path matrix of a cell: a_ij counts the X+ paths from Q_i to P_j, with
/// Q_i = (a, a+2i-1) for i <= t-2, Q_{t-1} = (a,k), Q_t = (h,b) and
/// P_j = (n-2j+1, n).
struct LGVMatrix {
    int h = 0;
    int k = 0;
    std::vector<std::vector<Integer>> entries;

    LGVMatrix(const CogeneratorSpec& spec, int h_, int k_) : h(h_), k(k_)
    {
        RegionMap rm(spec);
        const int a = rm.a, b = rm.b, t = rm.t, n = rm.n;
        std::vector<LatticePoint> q, p;
        for (int i = 1; i <= t - 2; ++i)
            q.push_back({a, a + 2 * i - 1});
        if (t >= 2)
            q.push_back({a, k});
        q.push_back({h, b});
        for (int j = 1; j <= t; ++j)
            p.push_back({n - 2 * j + 1, n});
        entries.assign(t, std::vector<Integer>(t));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                entries[i][j] = constrained_path_count(q[i], p[j]);
    }

    /// Exact determinant by fraction-free elimination.
    Integer det() const
    {
        std::vector<std::vector<Integer>> m = entries;
        const int t = static_cast<int>(m.size());
        Integer denom = 1;
        int sign = 1;
        for (int c = 0; c < t - 1; ++c) {
            int pivot = -1;
            for (int r = c; r < t; ++r)
                if (m[r][c] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            if (pivot != c) {
                std::swap(m[pivot], m[c]);
                sign = -sign;
            }
            for (int r = c + 1; r < t; ++r) {
                for (int cc = c + 1; cc < t; ++cc) {
                    m[r][cc] = (m[r][cc] * m[c][c] - m[r][c] * m[c][cc]) / denom;
                }
                m[r][c] = 0;
            }
            denom = m[c][c];
        }
        return sign > 0 ? m[t - 1][t - 1] : -m[t - 1][t - 1];
    }
};

struct MultiplicityTerm {
    int h = 0;
    int k = 0;
    Integer routes;       // paths Q -> P_hk
    Integer determinant;  // det of the path matrix
    Integer contribution; // routes * determinant
};

struct MultiplicityResult {
    CogeneratorSpec reduced;
    Integer value;
    std::vector<MultiplicityTerm> terms;
};

/// Multiplicity of a G-Pfaffian cogenerated ring; reduces the cogenerator
/// first. For t = 1 the (h,k) sum degenerates to the single count of paths
/// (1,b) -> (n-1,n) inside X+.
inline MultiplicityResult multiplicity_detailed(const CogeneratorSpec& spec)
{
    if (!is_g_pfaffian(spec.alpha))
        throw std::invalid_argument("multiplicity: formula applies only to G-Pfaffians");
    MultiplicityResult res;
    res.reduced = reduce_cogenerator(spec);
    RegionMap rm(res.reduced);
    res.value = 0;
    if (rm.t == 1) {
        MultiplicityTerm term;
        term.h = 1;
        term.k = rm.b;
        term.routes = 1;
        term.determinant =
            constrained_path_count({1, rm.b}, {rm.n - 1, rm.n});
        term.contribution = term.determinant;
        res.value = term.contribution;
        res.terms.push_back(std::move(term));
        return res;
    }
    for (int h = 1; h <= rm.a - 1; ++h) {
        for (int k = rm.a + 2 * rm.t - 3; k <= rm.b - 1; ++k) {
            MultiplicityTerm term;
            term.h = h;
            term.k = k;
            term.routes = path_count({1, rm.a}, {h, k});
            term.determinant = LGVMatrix(res.reduced, h, k).det();
            term.contribution = term.routes * term.determinant;
            res.value += term.contribution;
            res.terms.push_back(std::move(term));
        }
    }
    return res;
}

inline Integer multiplicity(const CogeneratorSpec& spec)
{
    return multiplicity_detailed(spec).value;
}

} // namespace pfaffians

#endif
