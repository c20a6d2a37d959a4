#include "sp9grid/signed_grid.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace sp9grid {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string vertex_str(GridVertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string edge_str(GridVertex u, GridVertex v) {
    return vertex_str(u) + "-" + vertex_str(v);
}

// Output function of the splitmix64 generator; with the state advanced by
// the golden-ratio gamma per counter step this gives random access into
// the stream by key.
std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, GridVertex v) { return os << vertex_str(v); }

SignedGrid::SignedGrid(int rows, int cols, const std::vector<GridEdge>& negative)
    : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("SignedGrid: dimensions must be at least 1x1, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    for (GridEdge e : negative) {
        if (!is_grid_edge(e.first, e.second))
            throw std::invalid_argument("SignedGrid: " + edge_str(e.first, e.second) +
                                        " is not an edge of the " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + " grid");
        if (e.second < e.first) std::swap(e.first, e.second);
        if (!negative_.insert(e).second)
            throw std::invalid_argument("SignedGrid: duplicate negative edge " +
                                        edge_str(e.first, e.second));
    }
}

SignedGrid SignedGrid::random(int rows, int cols, double neg_probability, std::uint64_t seed) {
    if (!(neg_probability >= 0.0 && neg_probability <= 1.0))
        throw std::invalid_argument("SignedGrid::random: probability " +
                                    std::to_string(neg_probability) + " outside [0,1]");
    SignedGrid grid(rows, cols);
    // 53-bit threshold test: exact at both endpoints, identical on every
    // platform because the hash depends only on (seed, edge).
    const double threshold = std::ldexp(neg_probability, 53);
    const std::uint64_t n = static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols);
    std::vector<GridEdge> negative;
    for (const GridEdge& e : grid.all_edges()) {
        std::uint64_t u1 = static_cast<std::uint64_t>(e.first.row) * static_cast<std::uint64_t>(cols) +
                           static_cast<std::uint64_t>(e.first.col);
        std::uint64_t u2 = static_cast<std::uint64_t>(e.second.row) * static_cast<std::uint64_t>(cols) +
                           static_cast<std::uint64_t>(e.second.col);
        std::uint64_t key = u1 * n + u2;
        std::uint64_t h = splitmix64(seed + key * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull);
        if (static_cast<double>(h >> 11) < threshold) negative.push_back(e);
    }
    return SignedGrid(rows, cols, negative);
}

SignedGrid SignedGrid::from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("grid json: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("grid json: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "rows" && key != "cols" && key != "negative_edges")
            throw std::invalid_argument("grid json: unknown field \"" + key + "\"");
    if (!doc.contains("rows") || !doc.contains("cols"))
        throw std::invalid_argument("grid json: \"rows\" and \"cols\" are required");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        throw std::invalid_argument("grid json: \"rows\" and \"cols\" must be integers");
    int rows = doc["rows"].get<int>();
    int cols = doc["cols"].get<int>();

    std::vector<GridEdge> negative;
    if (doc.contains("negative_edges")) {
        const auto& arr = doc["negative_edges"];
        if (!arr.is_array())
            throw std::invalid_argument("grid json: \"negative_edges\" must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& quad = arr[i];
            std::string where = "grid json: negative_edges[" + std::to_string(i) + "]";
            if (!quad.is_array() || quad.size() != 4)
                throw std::invalid_argument(where + " must be [r1, c1, r2, c2]");
            for (const auto& n : quad)
                if (!n.is_number_integer())
                    throw std::invalid_argument(where + " must hold integers");
            GridVertex a{quad[0].get<int>(), quad[1].get<int>()};
            GridVertex b{quad[2].get<int>(), quad[3].get<int>()};
            if (b < a)
                throw std::invalid_argument(where + ": endpoints must be ordered " +
                                            edge_str(b, a) + ", not " + edge_str(a, b));
            negative.push_back({a, b});
        }
    }
    return SignedGrid(rows, cols, negative);
}

std::string SignedGrid::to_json() const {
    ordered_json doc;
    doc["rows"] = rows_;
    doc["cols"] = cols_;
    auto& arr = doc["negative_edges"] = ordered_json::array();
    for (const GridEdge& e : negative_)
        arr.push_back({e.first.row, e.first.col, e.second.row, e.second.col});
    return doc.dump(2) + "\n";
}

std::int64_t SignedGrid::edge_count() const {
    return static_cast<std::int64_t>(rows_) * (cols_ - 1) +
           static_cast<std::int64_t>(rows_ - 1) * cols_;
}

bool SignedGrid::in_bounds(GridVertex v) const {
    return v.row >= 0 && v.row < rows_ && v.col >= 0 && v.col < cols_;
}

bool SignedGrid::is_grid_edge(GridVertex u, GridVertex v) const {
    return in_bounds(u) && in_bounds(v) &&
           std::abs(u.row - v.row) + std::abs(u.col - v.col) == 1;
}

Sign SignedGrid::edge_sign(GridVertex u, GridVertex v) const {
    if (!is_grid_edge(u, v))
        throw std::invalid_argument("SignedGrid::edge_sign: " + edge_str(u, v) +
                                    " is not an edge of the grid");
    if (v < u) std::swap(u, v);
    return negative_.contains({u, v}) ? Sign::Minus : Sign::Plus;
}

std::vector<GridEdge> SignedGrid::all_edges() const {
    std::vector<GridEdge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c + 1 < cols_; ++c) out.push_back({{r, c}, {r, c + 1}});
    for (int r = 0; r + 1 < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.push_back({{r, c}, {r + 1, c}});
    return out;
}

}  // namespace sp9grid
