#include "sp9grid/gf9.hpp"

#include <ostream>
#include <stdexcept>

namespace sp9grid {

Gf9 Gf9::decode(int code) {
    if (code < 0 || code > 8)
        throw std::out_of_range("Gf9::decode: code " + std::to_string(code) + " outside 0..8");
    return {code % 3, code / 3};
}

bool Gf9::is_square() const {
    static const int square_mask = [] {
        int mask = 0;
        for (const Gf9& b : all()) mask |= 1 << (b * b).encode();
        return mask;
    }();
    return square_mask >> encode() & 1;
}

const std::array<Gf9, 9>& Gf9::all() {
    static const std::array<Gf9, 9> elems = [] {
        std::array<Gf9, 9> a{};
        for (int code = 0; code < 9; ++code) a[static_cast<std::size_t>(code)] = decode(code);
        return a;
    }();
    return elems;
}

std::string Gf9::name() const {
    std::string s;
    if (a1_ == 1) s = "x";
    if (a1_ == 2) s = "2x";
    if (a0_ != 0 || s.empty()) {
        if (!s.empty()) s += '+';
        s += static_cast<char>('0' + a0_);
    }
    return s;
}

Gf9 Gf9::parse(std::string_view text) {
    for (const Gf9& e : all())
        if (e.name() == text) return e;
    throw std::invalid_argument("Gf9::parse: \"" + std::string(text) + "\" is not an element name");
}

std::ostream& operator<<(std::ostream& os, Gf9 a) { return os << a.name(); }

}  // namespace sp9grid
