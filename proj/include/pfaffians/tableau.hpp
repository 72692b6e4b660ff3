/// Column-major tableaux with strictly increasing columns, plus the upward
/// bumping step ("delete") that underlies both KRS variants. Intermediate
/// tableaux of those procedures can have odd columns, so evenness is only
/// demanded where an operation requires a d-tableau.
#ifndef PFAFFIANS_TABLEAU_HPP
#define PFAFFIANS_TABLEAU_HPP

#include "pfaffians/types.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace pfaffians {

struct CellRef {
    int row = 0; // 0-based
    int col = 0; // 0-based
    friend bool operator==(const CellRef&, const CellRef&) = default;
};

class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> columns) : cols_(std::move(columns))
    {
        validate();
    }

    Tableau(std::initializer_list<std::vector<int>> columns) : cols_(columns) { validate(); }

    void validate() const
    {
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (cols_[c].empty())
                throw std::invalid_argument("tableau has an empty column");
            if (cols_[c].front() < 1)
                throw std::invalid_argument("tableau entries must be positive");
            for (std::size_t r = 1; r < cols_[c].size(); ++r)
                if (cols_[c][r - 1] >= cols_[c][r])
                    throw std::invalid_argument("tableau columns must strictly increase");
            if (c > 0 && cols_[c - 1].size() < cols_[c].size())
                throw std::invalid_argument("tableau column lengths must weakly decrease");
        }
    }

    const std::vector<std::vector<int>>& columns() const { return cols_; }
    int num_cols() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }

    int cells() const
    {
        int k = 0;
        for (auto& c : cols_)
            k += static_cast<int>(c.size());
        return k;
    }

    /// Number of entries of the first column (0 when empty).
    int length() const { return cols_.empty() ? 0 : static_cast<int>(cols_[0].size()); }

    int cell(int r, int c) const { return cols_[c][r]; }

    int col_len(int c) const
    {
        return c < num_cols() ? static_cast<int>(cols_[c].size()) : 0;
    }

    int row_len(int r) const
    {
        int k = 0;
        while (k < num_cols() && static_cast<int>(cols_[k].size()) > r)
            ++k;
        return k;
    }

    /// Row-count vector (lambda_1,...,lambda_t).
    std::vector<int> shape() const
    {
        std::vector<int> s;
        for (int r = 0; r < length(); ++r)
            s.push_back(row_len(r));
        return s;
    }

    std::vector<std::vector<int>> rows() const
    {
        std::vector<std::vector<int>> out;
        for (int r = 0; r < length(); ++r) {
            std::vector<int> row;
            for (int c = 0; c < row_len(r); ++c)
                row.push_back(cols_[c][r]);
            out.push_back(std::move(row));
        }
        return out;
    }

    bool is_d_tableau() const
    {
        for (auto& c : cols_)
            if (c.size() % 2 != 0)
                return false;
        return true;
    }

    /// Standard: every row weakly increases left to right.
    bool is_standard() const
    {
        for (std::size_t c = 1; c < cols_.size(); ++c)
            for (std::size_t r = 0; r < cols_[c].size(); ++r)
                if (cols_[c - 1][r] > cols_[c][r])
                    return false;
        return true;
    }

    bool is_corner(CellRef at) const
    {
        if (at.col < 0 || at.col >= num_cols() || at.row < 0)
            return false;
        if (at.row != col_len(at.col) - 1)
            return false; // must be the bottom of its column
        return col_len(at.col + 1) <= at.row; // nothing to its right
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.cols_ <=> b.cols_; }

    // Mutators used by the KRS procedures; they keep the raw structure and
    // leave invariant checking to the callers.
    void set_cell(int r, int c, int value) { cols_[c][r] = value; }

    void pop_cell(CellRef at)
    {
        cols_[at.col].pop_back();
        if (cols_[at.col].empty())
            cols_.erase(cols_.begin() + at.col);
    }

    void push_cell(int c, int value)
    {
        if (c == num_cols())
            cols_.emplace_back();
        cols_[c].push_back(value);
    }

private:
    std::vector<std::vector<int>> cols_;
};

/// One bubbling replacement inside a delete step.
struct BumpMove {
    CellRef at;
    int placed = 0;    // value written into the cell
    int displaced = 0; // value carried to the row above
};

struct DeleteTrace {
    CellRef corner;
    int corner_value = 0;
    std::vector<BumpMove> moves;
};

struct DeleteResult {
    int ejected = 0;
    Tableau tableau;
};

/// Removes the corner entry and bubbles upward: in each row above, the
/// rightmost entry strictly smaller than the carried value is replaced,
/// scanning right to left, until a value leaves row 1.
inline DeleteResult delete_corner(const Tableau& t, CellRef at, DeleteTrace* trace = nullptr)
{
    if (!t.is_corner(at))
        throw std::invalid_argument("delete: cell is not a corner");
    Tableau w = t;
    int carry = w.cell(at.row, at.col);
    if (trace) {
        trace->corner = at;
        trace->corner_value = carry;
        trace->moves.clear();
    }
    w.pop_cell(at);
    for (int r = at.row - 1; r >= 0; --r) {
        int len = w.row_len(r);
        int pos = -1;
        for (int c = len - 1; c >= 0; --c) {
            if (w.cell(r, c) < carry) {
                pos = c;
                break;
            }
        }
        if (pos < 0)
            throw std::logic_error("delete: no smaller entry in the row above");
        int displaced = w.cell(r, pos);
        w.set_cell(r, pos, carry);
        if (trace)
            trace->moves.push_back({CellRef{r, pos}, carry, displaced});
        carry = displaced;
    }
    return {carry, std::move(w)};
}

/// Value-based wrapper; among equal corner values the rightmost column wins.
inline DeleteResult delete_corner(const Tableau& t, int value, DeleteTrace* trace = nullptr)
{
    for (int c = t.num_cols() - 1; c >= 0; --c) {
        CellRef at{t.col_len(c) - 1, c};
        if (t.cell(at.row, at.col) == value && t.is_corner(at))
            return delete_corner(t, at, trace);
    }
    throw std::invalid_argument("delete: value is not at a corner");
}

} // namespace pfaffians

#endif
