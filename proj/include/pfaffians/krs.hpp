/// The tableau correspondences: KRS on bi-tableaux, Burge's variant BKRS on
/// single d-tableaux, its inverse, and the width statistic.
///
/// Arrays are kept in raw extraction order. For BKRS output that order is
/// lexicographically descending: u weakly decreases and, within a block of
/// equal u, v weakly decreases as well; every pair has u > v and the array
/// determines (and is determined by) its monomial.
#ifndef PFAFFIANS_KRS_HPP
#define PFAFFIANS_KRS_HPP

#include "pfaffians/monomial.hpp"
#include "pfaffians/tableau.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace pfaffians {

struct TwoLinedArray {
    std::vector<std::pair<int, int>> pairs; // (u, v) in extraction order

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }

    std::vector<int> top_line() const
    {
        std::vector<int> u;
        for (auto& [a, b] : pairs)
            u.push_back(a);
        return u;
    }
    std::vector<int> bottom_line() const
    {
        std::vector<int> v;
        for (auto& [a, b] : pairs)
            v.push_back(b);
        return v;
    }

    /// Product of X_{min(u,v),max(u,v)} over all pairs.
    Monomial monomial() const
    {
        Monomial m;
        for (auto& [u, v] : pairs) {
            if (u == v)
                throw std::invalid_argument("array pair has u = v, no such variable");
            m = m * Monomial::variable(std::min(u, v), std::max(u, v));
        }
        return m;
    }

    bool top_line_sorted() const
    {
        for (std::size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i - 1].first < pairs[i].first)
                return false;
        return true;
    }

    /// BKRS image format: u weakly decreasing, u > v everywhere, and v weakly
    /// decreasing within a block of equal u (lexicographically descending).
    bool is_bkrs_format() const
    {
        for (auto& [u, v] : pairs)
            if (!(u > v && v >= 1))
                return false;
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            if (pairs[i - 1].first < pairs[i].first)
                return false;
            if (pairs[i - 1].first == pairs[i].first && pairs[i - 1].second < pairs[i].second)
                return false;
        }
        return true;
    }

    friend bool operator==(const TwoLinedArray&, const TwoLinedArray&) = default;
};

namespace detail {

/// Cell of the largest entry with largest column index: columns strictly
/// increase, so each column's candidate is its bottom entry.
inline CellRef largest_with_largest_col(const Tableau& t)
{
    int best_col = -1, best_val = 0;
    for (int c = 0; c < t.num_cols(); ++c) {
        int v = t.cell(t.col_len(c) - 1, c);
        if (best_col < 0 || v >= best_val) {
            best_val = v;
            best_col = c;
        }
    }
    return CellRef{t.col_len(best_col) - 1, best_col};
}

} // namespace detail

/// KRS on a standard bi-tableau: repeatedly remove the largest entry of t1
/// (largest column index) and delete from t2 at the mirrored position.
inline TwoLinedArray krs(const Tableau& t1, const Tableau& t2)
{
    if (t1.shape() != t2.shape())
        throw std::invalid_argument("krs: tableaux must have the same shape");
    if (!t1.is_standard() || !t2.is_standard())
        throw std::invalid_argument("krs: tableaux must be standard");
    Tableau a = t1, b = t2;
    TwoLinedArray out;
    while (!a.empty()) {
        CellRef at = detail::largest_with_largest_col(a);
        int u = a.cell(at.row, at.col);
        a.pop_cell(at);
        DeleteResult d = delete_corner(b, at);
        b = std::move(d.tableau);
        out.pairs.push_back({u, d.ejected});
    }
    return out;
}

/// One step of BKRS, recorded for trace-based property checks.
struct BkrsStep {
    CellRef corner;      // position of the removed largest entry u1
    int u = 0;           // its value
    int v = 0;           // the value ejected from row 1
    DeleteTrace bumping; // the delete applied at the upper neighbour
};

/// Burge's variant: remove the largest entry with largest column index, then
/// delete at its upper neighbour; emits (u1, v1) with u1 > v1.
inline TwoLinedArray bkrs(const Tableau& t, std::vector<BkrsStep>* trace = nullptr)
{
    if (!t.is_d_tableau() || !t.is_standard())
        throw std::invalid_argument("bkrs: input must be a standard d-tableau");
    Tableau w = t;
    TwoLinedArray out;
    if (trace)
        trace->clear();
    while (!w.empty()) {
        CellRef at = detail::largest_with_largest_col(w);
        BkrsStep step;
        step.corner = at;
        step.u = w.cell(at.row, at.col);
        w.pop_cell(at);
        // The upper neighbour is now the corner of the shrunken tableau.
        CellRef up{at.row - 1, at.col};
        DeleteResult d = delete_corner(w, up, trace ? &step.bumping : nullptr);
        w = std::move(d.tableau);
        step.v = d.ejected;
        out.pairs.push_back({step.u, step.v});
        if (trace)
            trace->push_back(std::move(step));
    }
    if (!out.is_bkrs_format())
        throw std::logic_error("bkrs produced an array outside the expected format");
    return out;
}

namespace detail {

/// Reverse of one BKRS step: insert v into row 1 (displacing the leftmost
/// strictly greater entry, bumping downward), append the final carried value
/// as a new corner, and put u directly below it. Returns false whenever the
/// required structure is violated, which flags an out-of-image array.
inline bool bkrs_insert(Tableau& w, int u, int v)
{
    int x = v;
    int r = 0;
    while (true) {
        int len = w.row_len(r);
        int pos = -1;
        for (int c = 0; c < len; ++c) {
            if (w.cell(r, c) > x) {
                pos = c;
                break;
            }
        }
        if (pos >= 0) {
            // Column must stay strictly increasing around the swap.
            if (r > 0 && w.cell(r - 1, pos) >= x)
                return false;
            int displaced = w.cell(r, pos);
            w.set_cell(r, pos, x);
            x = displaced;
            ++r;
            continue;
        }
        // Append x at (r, len) and u below it.
        if (r % 2 != 0)
            return false; // new cells must start an odd (1-based) row
        if (w.col_len(len) != r)
            return false;
        if (r > 0 && w.row_len(r - 1) < len + 1)
            return false; // shape would not be a Young diagram
        if (r > 0 && w.cell(r - 1, len) >= x)
            return false;
        if (len > 0 && w.cell(r, len - 1) > x)
            return false;
        if (u <= x)
            return false;
        if (len > 0 && w.col_len(len - 1) < r + 2)
            return false;
        w.push_cell(len, x);
        if (len > 0 && w.row_len(r + 1) != len)
            return false;
        if (len > 0 && w.cell(r + 1, len - 1) > u)
            return false;
        w.push_cell(len, u);
        return true;
    }
}

} // namespace detail

/// Unique standard d-tableau with bkrs(t) == a. Arrays not in the image
/// format, or in format but outside the image, are rejected.
inline Tableau bkrs_inverse(const TwoLinedArray& a)
{
    if (!a.is_bkrs_format())
        throw std::invalid_argument("bkrs_inverse: not in BKRS image format");
    Tableau w;
    for (auto it = a.pairs.rbegin(); it != a.pairs.rend(); ++it) {
        if (!detail::bkrs_insert(w, it->first, it->second))
            throw std::invalid_argument("bkrs_inverse: array is not in the BKRS image");
    }
    if (!w.is_d_tableau() || !w.is_standard())
        throw std::invalid_argument("bkrs_inverse: array is not in the BKRS image");
    // The map is injective, so a is in the image iff bkrs returns it back.
    if (!(bkrs(w) == a))
        throw std::invalid_argument("bkrs_inverse: array is not in the BKRS image");
    return w;
}

/// Length of the longest strictly increasing subsequence of the bottom line.
inline int width(const TwoLinedArray& a)
{
    std::vector<int> tails;
    for (auto& [u, v] : a.pairs) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

} // namespace pfaffians

#endif
