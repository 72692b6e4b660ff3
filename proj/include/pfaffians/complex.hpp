/// The simplicial complex of a reduced G-Pfaffian initial ideal: light and
/// shadow decompositions, the face test, facet enumeration as families of
/// non-intersecting lattice paths, purity, the ball certificate, and
/// shelling.
#ifndef PFAFFIANS_COMPLEX_HPP
#define PFAFFIANS_COMPLEX_HPP

#include "pfaffians/ideal.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace pfaffians {

/// Subset of X+, kept sorted in reading order.
struct Face {
    std::vector<LatticePoint> points;

    Face() = default;
    explicit Face(std::vector<LatticePoint> pts) : points(std::move(pts))
    {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (auto p : points)
            validate_lattice_point(p);
    }

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
    bool contains(LatticePoint p) const
    {
        return std::binary_search(points.begin(), points.end(), p);
    }

    Monomial squarefree_monomial() const
    {
        std::vector<Monomial::Entry> e;
        for (auto p : points)
            e.push_back({p, 1});
        return Monomial(std::move(e));
    }

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face& a, const Face& b) { return a.points <=> b.points; }
};

namespace detail {

inline bool strictly_up_right(LatticePoint q, LatticePoint p)
{
    return q.row < p.row && q.col > p.col; // q up-right of p
}
inline bool strictly_down_left(LatticePoint q, LatticePoint p)
{
    return q.row > p.row && q.col < p.col;
}

} // namespace detail

/// Sunlit points: nothing of Z strictly below-left.
inline std::vector<LatticePoint> sun_light(const std::vector<LatticePoint>& z)
{
    std::vector<LatticePoint> out;
    for (auto p : z) {
        bool shadowed = false;
        for (auto q : z)
            if (detail::strictly_down_left(q, p)) {
                shadowed = true;
                break;
            }
        if (!shadowed)
            out.push_back(p);
    }
    return out;
}

/// Moonlit points: nothing of Z strictly up-right.
inline std::vector<LatticePoint> moon_light(const std::vector<LatticePoint>& z)
{
    std::vector<LatticePoint> out;
    for (auto p : z) {
        bool shadowed = false;
        for (auto q : z)
            if (detail::strictly_up_right(q, p)) {
                shadowed = true;
                break;
            }
        if (!shadowed)
            out.push_back(p);
    }
    return out;
}

/// Iterated sunlight layers of a point set.
inline std::vector<Face> sun_layers(const Face& z)
{
    std::vector<Face> layers;
    std::vector<LatticePoint> rest = z.points;
    while (!rest.empty()) {
        auto layer = sun_light(rest);
        std::vector<LatticePoint> next;
        for (auto p : rest)
            if (!std::binary_search(layer.begin(), layer.end(), p))
                next.push_back(p);
        layers.push_back(Face(std::move(layer)));
        rest = std::move(next);
    }
    return layers;
}

/// Mixed decomposition: moon layer of Z first, then the sunlight layers of
/// the remainder. r = number of sun chains = maximal adiag length of the
/// remainder.
struct ShadowDecomposition {
    Face moon_first;
    std::vector<Face> sun_chains;

    int r() const { return static_cast<int>(sun_chains.size()); }
};

inline ShadowDecomposition shadow_decompose(const Face& z)
{
    ShadowDecomposition d;
    d.moon_first = Face(moon_light(z.points));
    std::vector<LatticePoint> rest;
    for (auto p : z.points)
        if (!d.moon_first.contains(p))
            rest.push_back(p);
    d.sun_chains = sun_layers(Face(std::move(rest)));
    return d;
}

/// Face test for a reduced G-Pfaffian: no point in A, the off-moon part
/// inside D u E, at most t-1 sun chains, and when there are exactly t-1 no
/// moon point of B u D may sit in a column beyond the smallest column of the
/// deepest sun chain.
inline bool is_face(const Face& z, const CogeneratorSpec& spec)
{
    RegionMap rm(spec);
    for (auto p : z.points)
        if (p.col > rm.n)
            throw std::invalid_argument("is_face: point outside the ambient grid");

    for (auto p : z.points)
        if (p.col <= rm.a - 1)
            return false;

    ShadowDecomposition d = shadow_decompose(z);
    for (auto& chain : d.sun_chains)
        for (auto p : chain.points)
            if (p.row <= rm.a - 1)
                return false; // a point of B u C escaped the moon layer

    if (d.r() > rm.t - 1)
        return false;

    if (rm.t >= 2 && d.r() == rm.t - 1) {
        int c = d.sun_chains.back().points.front().col;
        for (auto p : d.sun_chains.back().points)
            c = std::min(c, p.col);
        for (auto p : d.moon_first.points)
            if (p.col <= rm.b - 1 && p.col > c)
                return false;
    }
    return true;
}

/// A facet presented as its defining family of non-intersecting saturated
/// paths. For t >= 2 the paths are, in order, Q -> P_hk, Q^h -> P_t and
/// Q_i -> P_i for i = 1..t-1; the degenerate t = 1 facet is the single path
/// (1,b) -> (n-1,n) and h records the deepest row reached in column b.
struct FacetSpec {
    int h = 0;
    int k = 0;
    std::vector<std::vector<LatticePoint>> paths;

    Face face() const
    {
        std::vector<LatticePoint> pts;
        for (auto& path : paths)
            pts.insert(pts.end(), path.begin(), path.end());
        return Face(std::move(pts));
    }

    /// Chains for the shelling order: the sun chains Q_1P_1..Q_{t-1}P_{t-1}
    /// followed by the moon component (renamed Z_t).
    std::vector<Face> chains() const
    {
        std::vector<Face> out;
        if (paths.size() == 1) {
            out.push_back(Face(paths[0]));
            return out;
        }
        for (std::size_t i = 2; i < paths.size(); ++i)
            out.push_back(Face(paths[i]));
        std::vector<LatticePoint> moon(paths[0]);
        moon.insert(moon.end(), paths[1].begin(), paths[1].end());
        out.push_back(Face(std::move(moon)));
        return out;
    }
};

namespace detail {

/// All saturated monotone paths q -> p inside X+ avoiding `used`; calls sink
/// on each complete path.
template <typename Sink>
inline void walk_paths(LatticePoint q, LatticePoint p, std::vector<LatticePoint>& acc,
                       const std::vector<LatticePoint>& used, const Sink& sink)
{
    if (q.row > p.row || q.col > p.col)
        return;
    if (!(q.row < q.col))
        return;
    if (std::find(used.begin(), used.end(), q) != used.end())
        return;
    acc.push_back(q);
    if (q == p) {
        sink(acc);
    } else {
        if (q.row < p.row)
            walk_paths({q.row + 1, q.col}, p, acc, used, sink);
        if (q.col < p.col)
            walk_paths({q.row, q.col + 1}, p, acc, used, sink);
    }
    acc.pop_back();
}

template <typename Sink>
inline void disjoint_families(const std::vector<std::pair<LatticePoint, LatticePoint>>& endpoints,
                              std::size_t at, std::vector<LatticePoint>& used,
                              std::vector<std::vector<LatticePoint>>& family, const Sink& sink)
{
    if (at == endpoints.size()) {
        sink(family);
        return;
    }
    std::vector<LatticePoint> acc;
    walk_paths(endpoints[at].first, endpoints[at].second, acc, used,
               [&](const std::vector<LatticePoint>& path) {
                   std::size_t mark = used.size();
                   used.insert(used.end(), path.begin(), path.end());
                   family.push_back(path);
                   disjoint_families(endpoints, at + 1, used, family, sink);
                   family.pop_back();
                   used.resize(mark);
               });
}

} // namespace detail

/// All facets. Throws when more than `cap` facets would be produced.
inline std::vector<FacetSpec> enumerate_facets(const CogeneratorSpec& spec,
                                               std::size_t cap = 200000)
{
    RegionMap rm(spec);
    const int a = rm.a, b = rm.b, t = rm.t, n = rm.n;
    if (n < 2 * t)
        throw std::invalid_argument("enumerate_facets: ambient grid too small");

    std::vector<FacetSpec> out;
    auto guard = [&] {
        if (out.size() > cap)
            throw std::invalid_argument("enumerate_facets: facet cap exceeded");
    };

    if (t == 1) {
        std::vector<LatticePoint> acc;
        std::vector<LatticePoint> used;
        detail::walk_paths({1, b}, {n - 1, n}, acc, used,
                           [&](const std::vector<LatticePoint>& path) {
                               FacetSpec f;
                               f.k = b - 1;
                               for (auto p : path)
                                   if (p.col == b)
                                       f.h = std::max(f.h, p.row);
                               f.paths = {path};
                               out.push_back(std::move(f));
                               guard();
                           });
        return out;
    }

    for (int h = 1; h <= a - 1; ++h) {
        for (int k = a + 2 * t - 3; k <= b - 1; ++k) {
            // Q -> P_hk lives in rows <= h < a and columns <= k < b, so it can
            // never intersect the other paths; enumerate it independently.
            std::vector<std::vector<LatticePoint>> moon1;
            std::vector<LatticePoint> acc, used;
            detail::walk_paths({1, a}, {h, k}, acc, used,
                               [&](const std::vector<LatticePoint>& path) {
                                   moon1.push_back(path);
                               });

            std::vector<std::pair<LatticePoint, LatticePoint>> endpoints;
            endpoints.push_back({{h, b}, {n - 2 * t + 1, n}}); // Q^h -> P_t
            for (int i = 1; i <= t - 2; ++i)
                endpoints.push_back({{a, a + 2 * i - 1}, {n - 2 * i + 1, n}});
            endpoints.push_back({{a, k}, {n - 2 * (t - 1) + 1, n}}); // Q_{t-1} -> P_{t-1}

            std::vector<std::vector<LatticePoint>> family;
            detail::disjoint_families(
                endpoints, 0, used, family,
                [&](const std::vector<std::vector<LatticePoint>>& fam) {
                    for (auto& m1 : moon1) {
                        FacetSpec f;
                        f.h = h;
                        f.k = k;
                        f.paths.push_back(m1);
                        f.paths.push_back(fam[0]); // Q^h -> P_t
                        for (std::size_t i = 1; i < fam.size(); ++i)
                            f.paths.push_back(fam[i]); // Q_1..Q_{t-1}
                        out.push_back(std::move(f));
                        guard();
                    }
                });
        }
    }
    return out;
}

/// Facet cardinality predicted by the closed formula.
inline int facet_cardinality_formula(const CogeneratorSpec& spec)
{
    RegionMap rm(spec);
    return 2 * rm.n * rm.t - 1 - rm.b - 2 * (rm.t - 1) * rm.a -
           (2 * rm.t - 3) * (rm.t - 1);
}

struct PurityReport {
    bool pure = false;
    int dimension = -1;
};

inline PurityReport verify_pure_and_dimension(const CogeneratorSpec& spec)
{
    auto facets = enumerate_facets(spec);
    if (facets.empty())
        return {false, -1};
    std::size_t d = facets.front().face().size();
    for (auto& f : facets)
        if (f.face().size() != d)
            return {false, -1};
    return {true, static_cast<int>(d) - 1};
}

/// Ball check on the facet list: every codimension-1 face in at most two
/// facets and at least one in exactly one.
inline bool ball_certificate(const std::vector<FacetSpec>& facets)
{
    if (facets.empty())
        return false;
    std::map<std::vector<LatticePoint>, int> ridge_count;
    for (auto& f : facets) {
        const Face face = f.face();
        for (std::size_t drop = 0; drop < face.points.size(); ++drop) {
            std::vector<LatticePoint> ridge;
            ridge.reserve(face.points.size() - 1);
            for (std::size_t i = 0; i < face.points.size(); ++i)
                if (i != drop)
                    ridge.push_back(face.points[i]);
            ++ridge_count[ridge];
        }
    }
    bool any_boundary = false;
    for (auto& [ridge, count] : ridge_count) {
        if (count > 2)
            return false;
        if (count == 1)
            any_boundary = true;
    }
    return any_boundary;
}

namespace detail {

/// F >= F' in the chainwise right-shadow order: every point of each chain of
/// F weakly up-right of some point of the corresponding chain of F'.
inline bool facet_geq(const std::vector<Face>& f, const std::vector<Face>& g)
{
    if (f.size() != g.size())
        return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (auto p : f[i].points) {
            bool covered = false;
            for (auto q : g[i].points) {
                if (p.row <= q.row && p.col >= q.col) {
                    covered = true;
                    break;
                }
            }
            if (!covered)
                return false;
        }
    }
    return true;
}

} // namespace detail

/// Linear extension of the facet order, smaller facets first, ties broken
/// lexicographically on the sorted point lists.
inline std::vector<FacetSpec> shelling_order(const std::vector<FacetSpec>& facets)
{
    const std::size_t m = facets.size();
    std::vector<std::vector<Face>> chains;
    std::vector<Face> faces;
    chains.reserve(m);
    for (auto& f : facets) {
        chains.push_back(f.chains());
        faces.push_back(f.face());
    }
    // strictly_less[i][j]: facet i strictly below facet j.
    std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && detail::facet_geq(chains[j], chains[i]) &&
                !detail::facet_geq(chains[i], chains[j]))
                less[i][j] = true;

    std::vector<bool> placed(m, false);
    std::vector<FacetSpec> out;
    out.reserve(m);
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t pick = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (placed[i])
                continue;
            bool ready = true;
            for (std::size_t j = 0; j < m; ++j)
                if (!placed[j] && less[j][i]) {
                    ready = false;
                    break;
                }
            if (!ready)
                continue;
            if (pick == m || faces[i] < faces[pick])
                pick = i;
        }
        if (pick == m)
            throw std::logic_error("shelling_order: facet order has a cycle");
        placed[pick] = true;
        out.push_back(facets[pick]);
    }
    return out;
}

/// Standard shelling condition for a pure complex: each facet meets the union
/// of its predecessors in pure codimension one.
inline bool verify_shelling(const std::vector<FacetSpec>& order)
{
    std::vector<Face> faces;
    faces.reserve(order.size());
    for (auto& f : order)
        faces.push_back(f.face());

    for (std::size_t j = 1; j < faces.size(); ++j) {
        // Points x with F_j \ F_l = {x} for some l < j.
        std::vector<LatticePoint> pivots;
        for (std::size_t l = 0; l < j; ++l) {
            std::vector<LatticePoint> diff;
            for (auto p : faces[j].points)
                if (!faces[l].contains(p))
                    diff.push_back(p);
            if (diff.size() == 1)
                pivots.push_back(diff[0]);
        }
        for (std::size_t i = 0; i < j; ++i) {
            bool ok = false;
            for (auto x : pivots)
                if (!faces[i].contains(x)) {
                    ok = true;
                    break;
                }
            if (!ok)
                return false;
        }
    }
    return true;
}

} // namespace pfaffians

#endif
