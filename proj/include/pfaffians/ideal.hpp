/// Cogenerated Pfaffian ideals: generator enumeration, the reduction to
/// first entry 1, the G-Pfaffian predicate, the initial-ideal families and
/// their minimal filtering, the region partition of X+, and the witness
/// element certifying the G-basis failure for non-G cogenerators.
#ifndef PFAFFIANS_IDEAL_HPP
#define PFAFFIANS_IDEAL_HPP

#include "pfaffians/pfaffian.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace pfaffians {

struct CogeneratorSpec {
    IndexTuple alpha;
    int n = 0;

    CogeneratorSpec() = default;
    CogeneratorSpec(IndexTuple a, int ambient) : alpha(std::move(a)), n(ambient)
    {
        alpha.validate_against(n);
        if (alpha.size() > n)
            throw std::invalid_argument("cogenerator size exceeds ambient matrix");
    }

    int t() const { return alpha.half(); }
    bool reduced() const { return alpha.idx.front() == 1; }

    friend bool operator==(const CogeneratorSpec&, const CogeneratorSpec&) = default;
};

/// Shift so that the first entry becomes 1; identity when it already is.
inline CogeneratorSpec reduce_cogenerator(const CogeneratorSpec& spec)
{
    int shift = spec.alpha.idx.front() - 1;
    if (shift == 0)
        return spec;
    std::vector<int> shifted;
    shifted.reserve(spec.alpha.idx.size());
    for (int a : spec.alpha.idx)
        shifted.push_back(a - shift);
    return CogeneratorSpec(IndexTuple(std::move(shifted)), spec.n - shift);
}

/// a_i = a_{i-1} + 1 for i = 3,...,2t-1 (vacuous for t = 1).
inline bool is_g_pfaffian(const IndexTuple& alpha)
{
    const auto& a = alpha.idx;
    for (std::size_t i = 2; i + 1 < a.size(); ++i)
        if (a[i] != a[i - 1] + 1)
            return false;
    return true;
}

enum class Region : std::uint8_t { A, B, C, D, E };

/// Partition of X+ read off a reduced G-Pfaffian [1,a,a+1,...,a+2t-3,b].
/// For t = 1 the parameter a degenerates to b.
struct RegionMap {
    int a = 0;
    int b = 0;
    int t = 0;
    int n = 0;

    explicit RegionMap(const CogeneratorSpec& spec)
    {
        if (!spec.reduced())
            throw std::invalid_argument("region map requires a reduced cogenerator (a1 = 1)");
        if (!is_g_pfaffian(spec.alpha))
            throw std::invalid_argument(
                "initial-ideal description applies only to G-Pfaffians");
        t = spec.t();
        n = spec.n;
        b = spec.alpha.idx.back();
        a = (t == 1) ? b : spec.alpha.idx[1];
    }

    Region region(LatticePoint p) const
    {
        if (p.col <= a - 1)
            return Region::A;
        if (p.row <= a - 1)
            return p.col <= b - 1 ? Region::B : Region::C;
        return p.col <= b - 1 ? Region::D : Region::E;
    }
};

/// All IndexTuples over {1..n} of size <= max_size that are not >= alpha.
/// Refuses up front when the candidate count would exceed the cap.
inline std::vector<IndexTuple> natural_generators(const CogeneratorSpec& spec, int max_size,
                                                  std::uint64_t cap = 1u << 20)
{
    if (max_size % 2 != 0)
        throw std::invalid_argument("natural_generators: max_size must be even");
    if (max_size > spec.n)
        max_size = spec.n - spec.n % 2;

    std::uint64_t count = 0;
    for (int s = 2; s <= max_size; s += 2) {
        std::uint64_t c = 1;
        for (int i = 0; i < s; ++i)
            c = c * static_cast<std::uint64_t>(spec.n - i) / (i + 1);
        count += c;
        if (count > cap)
            throw std::invalid_argument(
                "natural_generators: candidate count exceeds the configured cap");
    }

    std::vector<IndexTuple> out;
    std::vector<int> cur;
    auto emit = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            IndexTuple beta{std::vector<int>(cur)};
            if (!poset_leq(spec.alpha, beta))
                out.push_back(std::move(beta));
            return;
        }
        for (int v = next; v + remaining - 1 <= spec.n; ++v) {
            cur.push_back(v);
            self(self, v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    for (int s = 2; s <= max_size; s += 2)
        emit(emit, 1, s);
    std::sort(out.begin(), out.end());
    return out;
}

/// Default size bound 2t+2: any larger Pfaffian has its anti-diagonal
/// divisible by a (t+1)-adiag of a generator.
inline std::vector<IndexTuple> natural_generators(const CogeneratorSpec& spec)
{
    return natural_generators(spec, spec.alpha.size() + 2);
}

namespace detail {

/// All s-adiags whose 2s indices are drawn from the given pool, filtered.
template <typename Keep>
inline void collect_adiags(const std::vector<int>& pool, int s, const Keep& keep,
                           std::vector<Monomial>& out)
{
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == 2 * s) {
            std::vector<Monomial::Entry> entries;
            for (int i = 0; i < s; ++i)
                entries.push_back({LatticePoint{pick[i], pick[2 * s - 1 - i]}, 1});
            Monomial m{std::move(entries)};
            if (keep(m))
                out.push_back(std::move(m));
            return;
        }
        for (std::size_t k = from; k < pool.size(); ++k) {
            if (pool.size() - k < 2 * s - pick.size())
                break;
            pick.push_back(pool[k]);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// The four generator families of the initial ideal of a reduced G-Pfaffian.
/// With minimal = false: (i) variables in A, (ii) 2-adiags in the first a-1
/// rows, (iii) t-adiags in the first b-1 rows and columns, (iv) all
/// (t+1)-adiags. With minimal = true the redundancy filters are applied and
/// the result is inclusion-minimal.
inline std::vector<Monomial> initial_ideal_generators(const CogeneratorSpec& spec, bool minimal)
{
    RegionMap rm(spec);
    const int a = rm.a, b = rm.b, t = rm.t, n = rm.n;

    std::vector<Monomial> out;

    // (i) variables in A
    for (int j = 2; j <= a - 1; ++j)
        for (int i = 1; i < j; ++i)
            out.push_back(Monomial::variable(i, j));

    auto count_if = [](const Monomial& m, auto&& pred) {
        int k = 0;
        for (auto& [p, e] : m.entries())
            if (pred(p))
                ++k;
        return k;
    };

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i + 1;

    // (ii) 2-adiags with both points in the first a-1 rows, i.e. i2 <= a-1;
    // minimal additionally demands both points outside A (columns >= a).
    detail::collect_adiags(
        all, 2,
        [&](const Monomial& m) {
            const auto& e = m.entries();
            int i2 = std::max(e[0].first.row, e[1].first.row);
            if (i2 > a - 1)
                return false;
            if (minimal)
                for (auto& [p, x] : e)
                    if (p.col <= a - 1)
                        return false;
            return true;
        },
        out);

    // (iii) t-adiags in the first b-1 rows and columns; minimal keeps those
    // inside B u D with at most one point in B.
    if (2 * t <= b - 1) {
        std::vector<int> pool(b - 1);
        for (int i = 0; i < b - 1; ++i)
            pool[i] = i + 1;
        detail::collect_adiags(
            pool, t,
            [&](const Monomial& m) {
                if (!minimal)
                    return true;
                for (auto& [p, x] : m.entries())
                    if (p.col <= a - 1)
                        return false;
                return count_if(m, [&](LatticePoint p) { return p.row <= a - 1; }) <= 1;
            },
            out);
    }

    // (iv) (t+1)-adiags; minimal keeps those outside A with at most one point
    // in B u C and at most t-1 points in B u D.
    if (2 * (t + 1) <= n) {
        detail::collect_adiags(
            all, t + 1,
            [&](const Monomial& m) {
                if (!minimal)
                    return true;
                for (auto& [p, x] : m.entries())
                    if (p.col <= a - 1)
                        return false;
                if (count_if(m, [&](LatticePoint p) { return p.row <= a - 1; }) > 1)
                    return false;
                return count_if(m, [&](LatticePoint p) { return p.col <= b - 1; }) <= t - 1;
            },
            out);
    }

    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return term_cmp(x, y) > 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The element beta1*gamma1 - beta2*gamma2 whose initial monomial escapes
/// every natural generator's leading term, together with that monomial.
struct CounterexampleWitness {
    Polynomial element;
    Monomial witness_monomial;
    IndexTuple beta1, gamma1, beta2, gamma2;
    int gap_index = 0; // the i of the construction
};

inline CounterexampleWitness counterexample_witness(const CogeneratorSpec& spec)
{
    const auto& a = spec.alpha.idx;
    const int two_t = spec.alpha.size();
    if (is_g_pfaffian(spec.alpha))
        throw std::invalid_argument("counterexample_witness: cogenerator is a G-Pfaffian");

    // i = min{k >= 2 : a_k + 1 < a_{k+1}}, with a_{2t+1} = +infinity.
    int i = 0;
    for (int k = 2; k <= two_t; ++k) {
        if (k == two_t || a[k - 1] + 1 < a[k]) {
            i = k;
            break;
        }
    }
    if (i >= two_t - 1)
        throw std::invalid_argument("counterexample_witness: construction precondition violated");

    auto prefix_plus = [&](std::initializer_list<int> tail) {
        std::vector<int> v(a.begin(), a.begin() + i);
        v.push_back(a[i - 1] + 1);
        for (int x : tail)
            v.push_back(x);
        return IndexTuple(std::move(v));
    };

    CounterexampleWitness w;
    w.gap_index = i;
    if (i % 2 == 0) {
        w.beta1 = prefix_plus({a[i]});
        w.gamma1 = IndexTuple{a[0], a[i + 1]};
        w.beta2 = prefix_plus({a[i + 1]});
        w.gamma2 = IndexTuple{a[0], a[i]};
    } else {
        w.beta1 = prefix_plus({a[i], a[i + 2]});
        w.gamma1 = IndexTuple{a[1], a[i + 1]};
        w.beta2 = prefix_plus({a[i + 1], a[i + 2]});
        w.gamma2 = IndexTuple{a[1], a[i]};
    }
    w.element = pfaffian_polynomial(w.beta1, spec.n) * pfaffian_polynomial(w.gamma1, spec.n) -
                pfaffian_polynomial(w.beta2, spec.n) * pfaffian_polynomial(w.gamma2, spec.n);
    w.witness_monomial = initial_monomial(w.element);
    return w;
}

} // namespace pfaffians

#endif
