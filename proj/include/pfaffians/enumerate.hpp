/// Exhaustive desk-scale corpora: index tuples over {1..n} and standard
/// d-tableaux under entry/cell/column bounds. Shared by the verification
/// commands and the test suites.
#ifndef PFAFFIANS_ENUMERATE_HPP
#define PFAFFIANS_ENUMERATE_HPP

#include "pfaffians/tableau.hpp"
#include "pfaffians/types.hpp"

#include <functional>
#include <vector>

namespace pfaffians {

/// All strictly increasing even tuples over {1..n} with size in [2, max_size].
inline std::vector<IndexTuple> all_index_tuples(int n, int max_size)
{
    std::vector<IndexTuple> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (!cur.empty() && cur.size() % 2 == 0)
            out.push_back(IndexTuple{std::vector<int>(cur)});
        if (static_cast<int>(cur.size()) == max_size)
            return;
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace detail {

/// Strictly increasing columns over {1..max_entry} of the given even length.
inline std::vector<std::vector<int>> even_columns(int max_entry, int length)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= max_entry; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace detail

/// All standard d-tableaux with entries <= max_entry, at most max_cells cells
/// and at most max_cols columns (0 = unbounded). Includes the empty tableau.
inline std::vector<Tableau> standard_d_tableaux(int max_entry, int max_cells, int max_cols = 0)
{
    std::vector<std::vector<std::vector<int>>> cols_by_len(max_entry + 1);
    for (int len = 2; len <= max_entry; len += 2)
        cols_by_len[len] = detail::even_columns(max_entry, len);

    std::vector<Tableau> out;
    std::vector<std::vector<int>> cur;
    int cells = 0;

    auto fits_after = [&](const std::vector<int>& prev, const std::vector<int>& next) {
        if (next.size() > prev.size())
            return false;
        for (std::size_t r = 0; r < next.size(); ++r)
            if (next[r] < prev[r])
                return false;
        return true;
    };

    auto rec = [&](auto&& self) -> void {
        out.push_back(Tableau{std::vector<std::vector<int>>(cur)});
        if (max_cols > 0 && static_cast<int>(cur.size()) == max_cols)
            return;
        int max_len = cur.empty() ? max_entry : static_cast<int>(cur.back().size());
        for (int len = 2; len <= max_len; len += 2) {
            if (max_cells > 0 && cells + len > max_cells)
                continue;
            for (auto& col : cols_by_len[len]) {
                if (!cur.empty() && !fits_after(cur.back(), col))
                    continue;
                cur.push_back(col);
                cells += len;
                self(self);
                cells -= len;
                cur.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

} // namespace pfaffians

#endif
