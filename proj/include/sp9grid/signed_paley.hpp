#pragma once

#include <string>
#include <vector>

#include "sp9grid/sign.hpp"
#include "sp9grid/vertex_set.hpp"

namespace sp9grid {

/// Complete signed graph on the field of order q: edge {u,v} carries '+'
/// exactly when v - u is a nonzero square. Supported orders are q = 9
/// (GF(9)) and primes q = 1 (mod 4); in both cases -1 is a square, so the
/// sign of a pair does not depend on which difference is taken.
class SignedPaleyGraph {
public:
    static SignedPaleyGraph build(int q);

    int order() const { return q_; }
    VertexSet vertices() const { return VertexSet::full(q_); }

    /// Sign of the edge {u,v}; u and v must be distinct.
    Sign sign(int u, int v) const;

    /// N^s(v): neighbours of v along edges of sign s.
    VertexSet neighbors(int v, Sign s) const;

    /// N^s(S): union of N^s(v) over v in S. S must be nonempty.
    VertexSet neighborhood(VertexSet set, Sign s) const;

    /// True iff no 3-subset of `set` induces three edges of one sign.
    bool is_triangle_free(VertexSet set) const;

    /// Copy with the sign of one pair reversed. Deliberately breaks the
    /// quadratic-character structure; used as a mutation fixture.
    SignedPaleyGraph with_flipped_sign(int u, int v) const;

    /// Polynomial name for q = 9, decimal otherwise.
    std::string vertex_name(int v) const;

private:
    SignedPaleyGraph(int q, std::vector<VertexSet> plus);
    void check_vertex(int v) const;

    int q_;
    std::vector<VertexSet> plus_;  // plus_[v] = N^+(v)
};

/// The canonical signed Paley graph on GF(9); built once, immutable.
const SignedPaleyGraph& sp9();

/// DOT text with vertices labelled by name, '+' edges solid and '-' edges
/// dashed. With positive_only, emits just the '+' subgraph (the plain
/// Paley graph).
std::string to_dot(const SignedPaleyGraph& g, bool positive_only = false);

}  // namespace sp9grid
