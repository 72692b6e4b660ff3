/// Basic value types shared by every module: lattice points of the strictly
/// upper-triangular grid X+, index tuples naming Pfaffians, and the exact
/// arithmetic types.
#ifndef PFAFFIANS_TYPES_HPP
#define PFAFFIANS_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfaffians {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A variable position (i,j) with 1 <= i < j: the grid X+.
struct LatticePoint {
    int row = 0;
    int col = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    // Reading order (row, then column); used for canonical point lists.
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b)
    {
        if (auto c = a.row <=> b.row; c != 0)
            return c;
        return a.col <=> b.col;
    }
};

inline bool in_upper_grid(LatticePoint p, int n)
{
    return 1 <= p.row && p.row < p.col && p.col <= n;
}

inline void validate_lattice_point(LatticePoint p)
{
    if (!(1 <= p.row && p.row < p.col))
        throw std::invalid_argument("lattice point (" + std::to_string(p.row) + "," +
                                    std::to_string(p.col) + ") is not in X+");
}

/// Strictly increasing even-length list of row/column labels [a1,...,a2t].
struct IndexTuple {
    std::vector<int> idx;

    IndexTuple() = default;
    explicit IndexTuple(std::vector<int> v) : idx(std::move(v)) { validate(); }
    IndexTuple(std::initializer_list<int> v) : idx(v) { validate(); }

    void validate() const
    {
        if (idx.empty() || idx.size() % 2 != 0)
            throw std::invalid_argument("index tuple must have even length >= 2");
        if (idx.front() < 1)
            throw std::invalid_argument("index tuple entries must be positive");
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i - 1] >= idx[i])
                throw std::invalid_argument("index tuple must be strictly increasing");
    }

    /// Checks entries against an ambient matrix size.
    void validate_against(int n) const
    {
        validate();
        if (idx.back() > n)
            throw std::invalid_argument("index tuple exceeds ambient size n=" + std::to_string(n));
    }

    int size() const { return static_cast<int>(idx.size()); }
    int half() const { return static_cast<int>(idx.size() / 2); }

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
    friend auto operator<=>(const IndexTuple& a, const IndexTuple& b) { return a.idx <=> b.idx; }
};

} // namespace pfaffians

#endif
