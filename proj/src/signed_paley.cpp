#include "sp9grid/signed_paley.hpp"

#include <sstream>
#include <stdexcept>

#include "sp9grid/gf9.hpp"

namespace sp9grid {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Nonzero squares of Z/q as a bitmask, q an odd prime.
std::uint64_t prime_square_mask(int q) {
    std::uint64_t mask = 0;
    for (int k = 1; k < q; ++k) mask |= std::uint64_t{1} << (static_cast<long long>(k) * k % q);
    return mask & ~std::uint64_t{1};
}

}  // namespace

SignedPaleyGraph SignedPaleyGraph::build(int q) {
    if (q == 9) {
        std::vector<VertexSet> plus(9);
        for (const Gf9& u : Gf9::all())
            for (const Gf9& v : Gf9::all())
                if (u != v && (v - u).is_square())
                    plus[static_cast<std::size_t>(u.encode())].add(v.encode());
        return SignedPaleyGraph(9, std::move(plus));
    }
    if (q > 64) throw std::invalid_argument("SignedPaleyGraph::build: order above 64 unsupported");
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("SignedPaleyGraph::build: order " + std::to_string(q) +
                                    " is neither 9 nor a prime congruent to 1 mod 4");
    std::uint64_t squares = prime_square_mask(q);
    std::vector<VertexSet> plus(static_cast<std::size_t>(q));
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v)
            if (u != v && (squares >> ((v - u + q) % q) & 1))
                plus[static_cast<std::size_t>(u)].add(v);
    return SignedPaleyGraph(q, std::move(plus));
}

SignedPaleyGraph::SignedPaleyGraph(int q, std::vector<VertexSet> plus)
    : q_(q), plus_(std::move(plus)) {}

void SignedPaleyGraph::check_vertex(int v) const {
    if (v < 0 || v >= q_)
        throw std::out_of_range("SignedPaleyGraph: vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(q_ - 1));
}

Sign SignedPaleyGraph::sign(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("SignedPaleyGraph::sign: sign of a loop is undefined");
    return plus_[static_cast<std::size_t>(u)].contains(v) ? Sign::Plus : Sign::Minus;
}

VertexSet SignedPaleyGraph::neighbors(int v, Sign s) const {
    check_vertex(v);
    VertexSet p = plus_[static_cast<std::size_t>(v)];
    if (s == Sign::Plus) return p;
    return VertexSet::full(q_) - p - VertexSet::of({v});
}

VertexSet SignedPaleyGraph::neighborhood(VertexSet set, Sign s) const {
    if (set.empty())
        throw std::invalid_argument("SignedPaleyGraph::neighborhood of an empty set");
    VertexSet out;
    for (int v : set.to_vector()) out = out | neighbors(v, s);
    return out;
}

bool SignedPaleyGraph::is_triangle_free(VertexSet set) const {
    auto vs = set.to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                Sign a = sign(vs[i], vs[j]);
                if (a == sign(vs[j], vs[k]) && a == sign(vs[i], vs[k])) return false;
            }
    return true;
}

SignedPaleyGraph SignedPaleyGraph::with_flipped_sign(int u, int v) const {
    Sign old = sign(u, v);  // validates u, v and u != v
    std::vector<VertexSet> plus = plus_;
    auto flip = [&](int a, int b) {
        auto& row = plus[static_cast<std::size_t>(a)];
        if (old == Sign::Plus)
            row.remove(b);
        else
            row.add(b);
    };
    flip(u, v);
    flip(v, u);
    return SignedPaleyGraph(q_, std::move(plus));
}

std::string SignedPaleyGraph::vertex_name(int v) const {
    check_vertex(v);
    if (q_ == 9) return Gf9::decode(v).name();
    return std::to_string(v);
}

const SignedPaleyGraph& sp9() {
    static const SignedPaleyGraph g = SignedPaleyGraph::build(9);
    return g;
}

std::string to_dot(const SignedPaleyGraph& g, bool positive_only) {
    std::ostringstream os;
    os << "graph " << (positive_only ? "P9" : "SP9") << " {\n";
    for (int v = 0; v < g.order(); ++v)
        os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Sign s = g.sign(u, v);
            if (positive_only && s == Sign::Minus) continue;
            os << "  v" << u << " -- v" << v;
            if (!positive_only) os << " [style=" << (s == Sign::Plus ? "solid" : "dashed") << "]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, Sign s) { return os << to_char(s); }

}  // namespace sp9grid
