#include "doctest.h"
#include "sp9grid/gf9.hpp"

#include <set>
#include <stdexcept>

using sp9grid::Gf9;

TEST_CASE("encode/decode are inverse bijections on 0..8") {
    std::set<int> codes;
    for (const Gf9& a : Gf9::all()) {
        CHECK(Gf9::decode(a.encode()) == a);
        codes.insert(a.encode());
    }
    CHECK(codes.size() == 9);
    CHECK(*codes.begin() == 0);
    CHECK(*codes.rbegin() == 8);
    CHECK_THROWS_AS(Gf9::decode(-1), std::out_of_range);
    CHECK_THROWS_AS(Gf9::decode(9), std::out_of_range);
}

TEST_CASE("constructor reduces coefficients mod 3, negatives included") {
    CHECK(Gf9(3, 0) == Gf9(0, 0));
    CHECK(Gf9(-1, -2) == Gf9(2, 1));
    CHECK(Gf9(7, -4) == Gf9(1, 2));
}

TEST_CASE("field axioms hold on all pairs") {
    const Gf9 zero(0, 0), one(1, 0);
    for (const Gf9& a : Gf9::all()) {
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a * zero == zero);
        CHECK(a + (-a) == zero);
        CHECK(a + a + a == zero);  // characteristic 3
        for (const Gf9& b : Gf9::all()) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - b == a + (-b));
            for (const Gf9& c : Gf9::all()) CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("x*x = -1 and every nonzero element has an inverse") {
    const Gf9 x(0, 1), one(1, 0);
    CHECK(x * x == -one);
    for (const Gf9& a : Gf9::all()) {
        if (a == Gf9(0, 0)) continue;
        int inverses = 0;
        for (const Gf9& b : Gf9::all())
            if (a * b == one) ++inverses;
        CHECK(inverses == 1);
    }
}

TEST_CASE("squares are exactly {0,1,2,x,2x}") {
    // independent enumeration: a is a square iff some b gives b*b == a
    for (const Gf9& a : Gf9::all()) {
        bool hit = false;
        for (const Gf9& b : Gf9::all())
            if (b * b == a) hit = true;
        CHECK(a.is_square() == hit);
    }
    std::set<int> squares;
    for (const Gf9& a : Gf9::all())
        if (a.is_square()) squares.insert(a.encode());
    CHECK(squares == std::set<int>{0, 1, 2, 3, 6});
    CHECK((-Gf9(1, 0)).is_square());  // -1 = 2 is a square, so edge signs are symmetric
}

TEST_CASE("polynomial names round-trip through parse") {
    const char* expected[] = {"0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2"};
    for (const Gf9& a : Gf9::all()) {
        CHECK(a.name() == expected[a.encode()]);
        CHECK(Gf9::parse(a.name()) == a);
    }
    CHECK_THROWS_AS(Gf9::parse("y"), std::invalid_argument);
    CHECK_THROWS_AS(Gf9::parse("x+3"), std::invalid_argument);
    CHECK_THROWS_AS(Gf9::parse(""), std::invalid_argument);
}

TEST_CASE("ordering follows the integer encoding") {
    for (const Gf9& a : Gf9::all())
        for (const Gf9& b : Gf9::all()) CHECK((a < b) == (a.encode() < b.encode()));
}
