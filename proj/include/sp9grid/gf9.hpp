#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sp9grid {

/// Element of GF(9) = GF(3)[x]/(x^2 + 1), stored as a0 + a1*x with both
/// coefficients reduced mod 3. The canonical integer encoding
/// enc(a) = a0 + 3*a1 is a bijection onto 0..8 and fixes every
/// tie-breaking and file-format order used downstream.
class Gf9 {
public:
    constexpr Gf9() = default;
    constexpr Gf9(int c0, int c1) : a0_(reduce(c0)), a1_(reduce(c1)) {}

    /// Inverse of encode(); rejects codes outside 0..8.
    static Gf9 decode(int code);
    constexpr int encode() const { return a0_ + 3 * a1_; }

    constexpr int coeff0() const { return a0_; }
    constexpr int coeff1() const { return a1_; }

    friend constexpr Gf9 operator+(Gf9 a, Gf9 b) { return {a.a0_ + b.a0_, a.a1_ + b.a1_}; }
    friend constexpr Gf9 operator-(Gf9 a, Gf9 b) { return {a.a0_ - b.a0_, a.a1_ - b.a1_}; }
    constexpr Gf9 operator-() const { return {-a0_, -a1_}; }

    // x^2 = -1, so (a0 + a1 x)(b0 + b1 x) = a0 b0 - a1 b1 + (a0 b1 + a1 b0) x.
    friend constexpr Gf9 operator*(Gf9 a, Gf9 b) {
        return {a.a0_ * b.a0_ - a.a1_ * b.a1_, a.a0_ * b.a1_ + a.a1_ * b.a0_};
    }

    friend constexpr bool operator==(Gf9 a, Gf9 b) { return a.a0_ == b.a0_ && a.a1_ == b.a1_; }
    friend constexpr bool operator!=(Gf9 a, Gf9 b) { return !(a == b); }
    friend constexpr bool operator<(Gf9 a, Gf9 b) { return a.encode() < b.encode(); }

    /// True iff some b satisfies b*b == *this (0 counts: 0 = 0*0).
    /// Decided against the set of all nine squares, enumerated at first use.
    bool is_square() const;

    /// Polynomial name: "0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2".
    std::string name() const;
    static Gf9 parse(std::string_view text);

    /// The nine elements in encoding order.
    static const std::array<Gf9, 9>& all();

private:
    static constexpr std::uint8_t reduce(int v) {
        return static_cast<std::uint8_t>(((v % 3) + 3) % 3);
    }

    std::uint8_t a0_ = 0;
    std::uint8_t a1_ = 0;
};

std::ostream& operator<<(std::ostream& os, Gf9 a);

}  // namespace sp9grid
