#pragma once

#include <string>
#include <vector>

#include "sp9grid/signed_grid.hpp"
#include "sp9grid/signed_paley.hpp"

namespace sp9grid {

/// Total map from grid vertices to vertices of the order-9 target,
/// row-major, colors under the canonical 0..8 encoding.
struct GridColoring {
    int rows = 0;
    int cols = 0;
    std::vector<int> colors;

    int at(int r, int c) const { return colors[static_cast<std::size_t>(r) * cols + c]; }

    static GridColoring from_json(const std::string& text);
    std::string to_json() const;

    friend bool operator==(const GridColoring&, const GridColoring&) = default;
};

/// Candidate color sets for the row under construction, one per column.
/// Each set has exactly 3 elements, is triangle-free, honours the
/// vertical constraint of its column and the horizontal constraint from
/// its left neighbour.
struct RowState {
    std::vector<VertexSet> sets;
};

/// Deterministic path coloring drawn entirely from the 4-set N+(0):
/// the first color is the smallest element, each next color the smallest
/// element continuing with the requested sign. signs has one entry per
/// path edge; a path on n vertices gets n colors.
std::vector<int> color_path(const std::vector<Sign>& signs,
                            const SignedPaleyGraph& target = sp9());

/// Forward pass for one row: S_1 from the vertical constraint of column
/// 1, then S_i = three smallest colors of N^h(i)(S_{i-1}) meet
/// N^v(i)(prev_row_colors[i]). Throws std::logic_error if a pool drops
/// below 3 colors or a set stops being triangle-free, which can only
/// happen on a corrupted target.
RowState propagate_sets(const std::vector<int>& prev_row_colors,
                        const std::vector<Sign>& vertical_signs,
                        const std::vector<Sign>& horizontal_signs,
                        const SignedPaleyGraph& target = sp9());

/// Backward pass: picks the smallest color of the last set, then walks
/// right-to-left choosing the smallest set member matching the sign
/// toward the already-colored right neighbour.
std::vector<int> select_backward(const RowState& state,
                                 const std::vector<Sign>& horizontal_signs,
                                 const SignedPaleyGraph& target = sp9());

/// Colors a signified grid row by row: first row via color_path, each
/// later row via propagate_sets + select_backward. Pure function of the
/// grid; the output always verifies against an uncorrupted target.
GridColoring color_grid(const SignedGrid& grid, const SignedPaleyGraph& target = sp9());

struct EdgeViolation {
    GridVertex u;
    GridVertex v;
    std::string reason;
};

struct VerifyResult {
    bool ok = false;
    std::vector<EdgeViolation> violations;
};

/// Checks that the coloring is a sign-preserving homomorphism: along
/// every grid edge the colors differ and the target edge between them
/// carries the grid edge's sign. Lists every violating edge.
VerifyResult verify_homomorphism(const SignedGrid& grid, const GridColoring& coloring,
                                 const SignedPaleyGraph& target = sp9());

}  // namespace sp9grid
