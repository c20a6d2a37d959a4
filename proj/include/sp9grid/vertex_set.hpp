#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sp9grid {

/// Set of vertex ids over a universe of at most 64, stored as a bitmask.
/// Unions, intersections and cardinalities are exact and independent of
/// insertion order, which keeps every tie-breaking rule reproducible.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    /// {0, 1, ..., n-1}.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v & 1); }

    VertexSet& add(int v) {
        if (v < 0 || v >= 64) throw std::out_of_range("VertexSet: id " + std::to_string(v) + " outside 0..63");
        bits_ |= 1ull << v;
        return *this;
    }

    VertexSet& remove(int v) {
        if (v >= 0 && v < 64) bits_ &= ~(1ull << v);
        return *this;
    }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    /// Smallest member; the set must be nonempty.
    int smallest() const {
        if (empty()) throw std::logic_error("VertexSet::smallest on an empty set");
        return std::countr_zero(bits_);
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace sp9grid
