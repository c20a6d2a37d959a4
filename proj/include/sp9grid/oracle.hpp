#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp9grid/colorist.hpp"
#include "sp9grid/signed_grid.hpp"
#include "sp9grid/signed_paley.hpp"

namespace sp9grid {

/// Signed target graph for the brute-force search: a symmetric partial
/// sign table on distinct vertex pairs. An absent pair is a non-edge and
/// forbids both signs, so non-complete targets can refute homomorphisms.
class SignedTargetGraph {
public:
    explicit SignedTargetGraph(int order);

    static SignedTargetGraph from_paley(const SignedPaleyGraph& g);
    static SignedTargetGraph from_json(const std::string& text);
    /// Built-in names: "paley:5", "paley:9", "paley:13", ...
    static SignedTargetGraph named(const std::string& name);

    int order() const { return order_; }
    void set_sign(int u, int v, Sign s);
    /// nullopt when {u,v} is a non-edge; u and v must be distinct.
    std::optional<Sign> sign(int u, int v) const;

private:
    void check_pair(int u, int v) const;
    int order_;
    std::vector<std::optional<Sign>> table_;  // order x order, symmetric
};

struct OracleLimits {
    int max_vertices = 25;  // soft guard for the backtracking search
};

/// Depth-first backtracking search for a signified homomorphism from the
/// grid into the target: vertices in row-major order, candidate colors
/// ascending, constraints checked against already-assigned neighbours.
/// Deterministic; returns the first mapping found, or nullopt when none
/// exists. Throws when the instance exceeds the guard.
std::optional<GridColoring> find_homomorphism(const SignedGrid& grid,
                                              const SignedTargetGraph& target,
                                              OracleLimits limits = {});

/// verify_homomorphism adapted to a general target: colors landing on a
/// non-edge are violations.
VerifyResult verify_homomorphism(const SignedGrid& grid, const GridColoring& coloring,
                                 const SignedTargetGraph& target);

struct SweepReport {
    int rows = 0;
    int cols = 0;
    std::int64_t total = 0;
    std::int64_t colorist_failures = 0;
    std::int64_t oracle_failures = 0;
    bool cross_checked = false;
    std::optional<std::string> first_failure;
};

/// Iterates every signature of the rows x cols grid (edge count <= 16);
/// for each, colors via color_grid and verifies against sp9(), optionally
/// cross-checking with the brute-force search. Signatures are distributed
/// across worker threads with a deterministic merge.
SweepReport exhaustive_signature_sweep(int rows, int cols, bool cross_check = false);

}  // namespace sp9grid
