#include "doctest.h"
#include "sp9grid/signed_paley.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp9grid/gf9.hpp"
#include "sp9grid/vertex_set.hpp"

using namespace sp9grid;

TEST_CASE("positive neighborhoods of all nine vertices, frozen") {
    // derived by listing the differences that are nonzero squares
    const std::map<int, std::vector<int>> expected = {
        {0, {1, 2, 3, 6}}, {1, {0, 2, 4, 7}}, {2, {0, 1, 5, 8}},
        {3, {0, 4, 5, 6}}, {4, {1, 3, 5, 7}}, {5, {2, 3, 4, 8}},
        {6, {0, 3, 7, 8}}, {7, {1, 4, 6, 8}}, {8, {2, 5, 6, 7}},
    };
    for (const auto& [v, nbrs] : expected)
        CHECK(sp9().neighbors(v, Sign::Plus).to_vector() == nbrs);
}

TEST_CASE("edge signs agree with the quadratic character, recomputed here") {
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) {
            if (u == v) continue;
            Gf9 diff = Gf9::decode(v) - Gf9::decode(u);
            bool square = false;
            for (const Gf9& b : Gf9::all())
                if (b * b == diff) square = true;
            CHECK(sp9().sign(u, v) == (square ? Sign::Plus : Sign::Minus));
        }
}

TEST_CASE("signs are symmetric and loops are rejected") {
    for (int u = 0; u < 9; ++u) {
        CHECK_THROWS_AS(sp9().sign(u, u), std::invalid_argument);
        for (int v = u + 1; v < 9; ++v) CHECK(sp9().sign(u, v) == sp9().sign(v, u));
    }
    CHECK_THROWS_AS(sp9().sign(0, 9), std::out_of_range);
    CHECK_THROWS_AS(sp9().sign(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(sp9().neighbors(9, Sign::Plus), std::out_of_range);
}

TEST_CASE("each sign class holds 4 neighbors and they partition the rest") {
    for (int v = 0; v < 9; ++v) {
        VertexSet plus = sp9().neighbors(v, Sign::Plus);
        VertexSet minus = sp9().neighbors(v, Sign::Minus);
        CHECK(plus.size() == 4);
        CHECK(minus.size() == 4);
        CHECK((plus & minus).empty());
        CHECK((plus | minus) == (VertexSet::full(9) - VertexSet::of({v})));
    }
}

TEST_CASE("neighborhood of a set is the union over members") {
    VertexSet s = VertexSet::of({0, 1});
    VertexSet expect = sp9().neighbors(0, Sign::Plus) | sp9().neighbors(1, Sign::Plus);
    CHECK(sp9().neighborhood(s, Sign::Plus) == expect);
    CHECK_THROWS_AS(sp9().neighborhood(VertexSet(), Sign::Plus), std::invalid_argument);
}

TEST_CASE("one-sign triangle census: 6 positive, 6 negative, 72 free") {
    int all_plus = 0, all_minus = 0, free_sets = 0, total = 0;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c) {
                ++total;
                Sign ab = sp9().sign(a, b), bc = sp9().sign(b, c), ac = sp9().sign(a, c);
                if (ab == bc && bc == ac)
                    (ab == Sign::Plus ? all_plus : all_minus)++;
                else
                    ++free_sets;
                CHECK(sp9().is_triangle_free(VertexSet::of({a, b, c})) == !(ab == bc && bc == ac));
            }
    CHECK(total == 84);
    CHECK(all_plus == 6);
    CHECK(all_minus == 6);
    CHECK(free_sets == 72);
}

TEST_CASE("is_triangle_free on specific sets") {
    CHECK_FALSE(sp9().is_triangle_free(VertexSet::of({0, 1, 2})));  // 1,1,2: all squares
    CHECK(sp9().is_triangle_free(VertexSet::of({0, 1, 3})));
    CHECK(sp9().is_triangle_free(VertexSet::of({0})));
    CHECK(sp9().is_triangle_free(VertexSet()));
}

TEST_CASE("prime orders: 5 and 13 built from residues, bad orders rejected") {
    SignedPaleyGraph g5 = SignedPaleyGraph::build(5);
    CHECK(g5.order() == 5);
    CHECK(g5.neighbors(0, Sign::Plus).to_vector() == std::vector<int>{1, 4});
    CHECK(g5.vertex_name(3) == "3");

    SignedPaleyGraph g13 = SignedPaleyGraph::build(13);
    CHECK(g13.neighbors(0, Sign::Plus).to_vector() == std::vector<int>{1, 3, 4, 9, 10, 12});
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) CHECK(g13.sign(u, v) == g13.sign(v, u));

    CHECK_THROWS_AS(SignedPaleyGraph::build(7), std::invalid_argument);   // 7 = 3 mod 4
    CHECK_THROWS_AS(SignedPaleyGraph::build(8), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(SignedPaleyGraph::build(15), std::invalid_argument);  // composite
    CHECK_THROWS_AS(SignedPaleyGraph::build(0), std::invalid_argument);
}

TEST_CASE("with_flipped_sign flips exactly one pair, twice restores") {
    SignedPaleyGraph flipped = sp9().with_flipped_sign(2, 7);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) {
            bool is_target = (u == 2 && v == 7);
            CHECK((flipped.sign(u, v) != sp9().sign(u, v)) == is_target);
            CHECK(flipped.sign(v, u) == flipped.sign(u, v));
        }
    SignedPaleyGraph restored = flipped.with_flipped_sign(7, 2);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) CHECK(restored.sign(u, v) == sp9().sign(u, v));
}

TEST_CASE("vertex names are the polynomial names") {
    CHECK(sp9().vertex_name(0) == "0");
    CHECK(sp9().vertex_name(4) == "x+1");
    CHECK(sp9().vertex_name(8) == "2x+2");
    CHECK_THROWS_AS(sp9().vertex_name(9), std::out_of_range);
}

namespace {
int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}
}  // namespace

TEST_CASE("DOT export: 36 signed edges, 18 positive-only edges") {
    std::string signed_dot = to_dot(sp9());
    CHECK(signed_dot.find("graph SP9 {") == 0);
    CHECK(count_occurrences(signed_dot, " -- ") == 36);
    CHECK(count_occurrences(signed_dot, "style=solid") == 18);
    CHECK(count_occurrences(signed_dot, "style=dashed") == 18);
    CHECK(signed_dot.find("label=\"2x+1\"") != std::string::npos);

    std::string positive_dot = to_dot(sp9(), true);
    CHECK(positive_dot.find("graph P9 {") == 0);
    CHECK(count_occurrences(positive_dot, " -- ") == 18);
    CHECK(positive_dot.find("style=") == std::string::npos);
}

TEST_CASE("positive-only export matches the frozen 18-edge list") {
    // normalized pairs derived from the square differences
    const std::vector<std::pair<int, int>> expected = {
        {0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 2}, {1, 4}, {1, 7}, {2, 5}, {2, 8},
        {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
    };
    std::vector<std::pair<int, int>> got;
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (sp9().sign(u, v) == Sign::Plus) got.push_back({u, v});
    CHECK(got == expected);
}
