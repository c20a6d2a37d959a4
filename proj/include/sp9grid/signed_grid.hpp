#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sp9grid/sign.hpp"

namespace sp9grid {

struct GridVertex {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

std::ostream& operator<<(std::ostream& os, GridVertex v);

/// Unordered grid edge, stored smaller endpoint first.
using GridEdge = std::pair<GridVertex, GridVertex>;

/// Grid graph (Cartesian product of two paths) with a set of negative
/// edges; everything not listed is positive. Immutable once built.
class SignedGrid {
public:
    /// Validates bounds and unit distance, normalizes endpoint order,
    /// rejects duplicates.
    SignedGrid(int rows, int cols, const std::vector<GridEdge>& negative = {});

    /// Each edge goes negative independently with probability
    /// neg_probability, decided by a counter-based hash of (seed, edge),
    /// so the result is a pure function of the arguments on every
    /// platform.
    static SignedGrid random(int rows, int cols, double neg_probability, std::uint64_t seed);

    static SignedGrid from_json(const std::string& text);
    std::string to_json() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t edge_count() const;

    bool in_bounds(GridVertex v) const;
    bool is_grid_edge(GridVertex u, GridVertex v) const;

    /// Sign of the grid edge {u,v}; rejects non-adjacent pairs.
    Sign edge_sign(GridVertex u, GridVertex v) const;

    const std::set<GridEdge>& negative_edges() const { return negative_; }

    /// Every edge in canonical order: horizontal edges row-major, then
    /// vertical edges row-major. Signature sweeps index bits in this order.
    std::vector<GridEdge> all_edges() const;

    friend bool operator==(const SignedGrid&, const SignedGrid&) = default;

private:
    int rows_;
    int cols_;
    std::set<GridEdge> negative_;
};

}  // namespace sp9grid
