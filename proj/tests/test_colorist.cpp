#include "doctest.h"
#include "sp9grid/colorist.hpp"

#include <stdexcept>
#include <vector>

#include "sp9grid/vertex_set.hpp"

using namespace sp9grid;

namespace {

bool first_row_in_palette(const GridColoring& c) {
    VertexSet palette = sp9().neighbors(0, Sign::Plus);
    for (int col = 0; col < c.cols; ++col)
        if (!palette.contains(c.at(0, col))) return false;
    return true;
}

SignedGrid all_minus_grid(int rows, int cols) {
    return SignedGrid(rows, cols, SignedGrid(rows, cols).all_edges());
}

}  // namespace

TEST_CASE("path coloring starts at 1 and follows the requested signs") {
    CHECK(color_path({}) == std::vector<int>{1});
    CHECK(color_path({Sign::Plus}) == std::vector<int>{1, 2});
    CHECK(color_path({Sign::Minus, Sign::Minus}) == std::vector<int>{1, 3, 1});

    std::vector<Sign> signs;
    for (int i = 0; i < 40; ++i) signs.push_back(i % 3 == 0 ? Sign::Minus : Sign::Plus);
    std::vector<int> colors = color_path(signs);
    REQUIRE(colors.size() == 41);
    VertexSet palette = sp9().neighbors(0, Sign::Plus);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        CHECK(palette.contains(colors[i]));
        if (i > 0) CHECK(sp9().sign(colors[i - 1], colors[i]) == signs[i - 1]);
    }
}

TEST_CASE("forward propagation on the worked 2x2 example") {
    RowState state = propagate_sets({1, 2}, {Sign::Plus, Sign::Plus}, {Sign::Plus});
    REQUIRE(state.sets.size() == 2);
    CHECK(state.sets[0] == VertexSet::of({0, 2, 4}));
    CHECK(state.sets[1] == VertexSet::of({0, 1, 5}));
    CHECK(select_backward(state, {Sign::Plus}) == std::vector<int>{2, 0});
}

TEST_CASE("propagation validates its argument shapes") {
    CHECK_THROWS_AS(propagate_sets({}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(propagate_sets({1, 2}, {Sign::Plus}, {Sign::Plus}), std::invalid_argument);
    CHECK_THROWS_AS(propagate_sets({1, 2}, {Sign::Plus, Sign::Plus}, {}), std::invalid_argument);
    CHECK_THROWS_AS(propagate_sets({1, 9}, {Sign::Plus, Sign::Plus}, {Sign::Plus}),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_backward(RowState{}, {}), std::invalid_argument);
    CHECK_THROWS_AS(select_backward(RowState{{VertexSet::of({1})}}, {Sign::Plus}),
                    std::invalid_argument);
}

TEST_CASE("backward selection aborts loudly when no sign-consistent color exists") {
    // {x+1} cannot continue with '+' toward 2x+2: their difference is a non-square
    RowState impossible{{VertexSet::of({4}), VertexSet::of({8})}};
    CHECK_THROWS_AS(select_backward(impossible, {Sign::Plus}), std::logic_error);
}

TEST_CASE("grid coloring on the smallest grids, frozen traces") {
    GridColoring one = color_grid(SignedGrid(1, 1));
    CHECK(one.colors == std::vector<int>{1});

    GridColoring square = color_grid(SignedGrid(2, 2));
    CHECK(square.colors == std::vector<int>{1, 2, 2, 0});
    CHECK(verify_homomorphism(SignedGrid(2, 2), square).ok);
}

TEST_CASE("all-plus and all-minus grids color and verify") {
    SignedGrid plus(5, 7);
    CHECK(verify_homomorphism(plus, color_grid(plus)).ok);

    SignedGrid minus = all_minus_grid(4, 6);
    GridColoring colored = color_grid(minus);
    CHECK(verify_homomorphism(minus, colored).ok);
    CHECK(first_row_in_palette(colored));
}

TEST_CASE("random grids color, verify, and keep the first row inside N+(0)") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        SignedGrid grid = SignedGrid::random(1 + int(seed % 9), 1 + int(seed * 7 % 11),
                                             (seed % 5) * 0.25, seed);
        CAPTURE(seed);
        GridColoring coloring = color_grid(grid);
        CHECK(verify_homomorphism(grid, coloring).ok);
        CHECK(first_row_in_palette(coloring));
    }
}

TEST_CASE("repeated coloring of the same grid is identical") {
    SignedGrid grid = SignedGrid::random(12, 9, 0.5, 7);
    CHECK(color_grid(grid) == color_grid(grid));
    CHECK(color_grid(grid).to_json() == color_grid(grid).to_json());
}

TEST_CASE("verifier flags tampered colorings with located reasons") {
    SignedGrid grid(2, 2);
    GridColoring good = color_grid(grid);
    REQUIRE(verify_homomorphism(grid, good).ok);

    GridColoring equal_pair = good;
    equal_pair.colors[1] = equal_pair.colors[0];
    VerifyResult r1 = verify_homomorphism(grid, equal_pair);
    CHECK_FALSE(r1.ok);
    REQUIRE_FALSE(r1.violations.empty());
    CHECK(r1.violations[0].reason.find("both endpoints") != std::string::npos);

    GridColoring wrong_sign = good;  // [[1,2],[2,0]] -> [[1,3],[2,0]]: sign(1,x) is '-'
    wrong_sign.colors[1] = 3;
    VerifyResult r2 = verify_homomorphism(grid, wrong_sign);
    CHECK_FALSE(r2.ok);
    bool mentioned = false;
    for (const EdgeViolation& v : r2.violations)
        if (v.u == GridVertex{0, 0} && v.v == GridVertex{0, 1}) mentioned = true;
    CHECK(mentioned);
}

TEST_CASE("verifier validates shapes and color range") {
    SignedGrid grid(2, 3);
    GridColoring wrong_dims = color_grid(SignedGrid(3, 2));
    CHECK_THROWS_AS(verify_homomorphism(grid, wrong_dims), std::invalid_argument);

    GridColoring bad_color = color_grid(grid);
    bad_color.colors[0] = 9;
    CHECK_THROWS_AS(verify_homomorphism(grid, bad_color), std::invalid_argument);
}

TEST_CASE("coloring json round trip and validation") {
    GridColoring c = color_grid(SignedGrid::random(3, 4, 0.5, 5));
    CHECK(GridColoring::from_json(c.to_json()) == c);

    CHECK_THROWS_AS(GridColoring::from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(GridColoring::from_json(R"({"rows":1,"cols":1,"colors":[[9]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(GridColoring::from_json(R"({"rows":1,"cols":2,"colors":[[1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(GridColoring::from_json(R"({"rows":1,"cols":1,"colors":[[1]],"x":0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(GridColoring::from_json(R"({"rows":1,"cols":1,"colors":[[1.5]]})"),
                    std::invalid_argument);
}

TEST_CASE("some sign flip in the target derails coloring or verification somewhere") {
    // mirrors the mutation sensitivity property at unit scale
    int tripped = 0;
    SignedGrid base(2, 2);
    auto edges = base.all_edges();
    for (int u = 0; u < 9 && tripped == 0; ++u)
        for (int v = u + 1; v < 9 && tripped == 0; ++v) {
            SignedPaleyGraph mutant = sp9().with_flipped_sign(u, v);
            for (std::int64_t mask = 0; mask < 16; ++mask) {
                std::vector<GridEdge> negative;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (mask >> i & 1) negative.push_back(edges[i]);
                SignedGrid grid(2, 2, negative);
                try {
                    if (!verify_homomorphism(grid, color_grid(grid, mutant), mutant).ok) ++tripped;
                } catch (const std::logic_error&) {
                    ++tripped;
                }
            }
        }
    CHECK(tripped > 0);
}
