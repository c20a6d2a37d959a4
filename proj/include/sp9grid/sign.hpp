#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

namespace sp9grid {

/// Edge mark of a signed graph: '+' or '-'.
enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline constexpr std::array<Sign, 2> both_signs = {Sign::Plus, Sign::Minus};

std::ostream& operator<<(std::ostream& os, Sign s);

}  // namespace sp9grid
