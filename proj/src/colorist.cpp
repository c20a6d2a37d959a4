#include "sp9grid/colorist.hpp"

#include <stdexcept>

#include "json.hpp"

namespace sp9grid {

namespace {

using ordered_json = nlohmann::ordered_json;

VertexSet three_smallest(VertexSet pool) {
    VertexSet out;
    for (int v : pool.to_vector()) {
        out.add(v);
        if (out.size() == 3) break;
    }
    return out;
}

void check_color(int c, const SignedPaleyGraph& target, const char* who) {
    if (c < 0 || c >= target.order())
        throw std::invalid_argument(std::string(who) + ": color " + std::to_string(c) +
                                    " outside 0.." + std::to_string(target.order() - 1));
}

}  // namespace

std::vector<int> color_path(const std::vector<Sign>& signs, const SignedPaleyGraph& target) {
    const VertexSet palette = target.neighbors(0, Sign::Plus);
    std::vector<int> colors;
    colors.reserve(signs.size() + 1);
    colors.push_back(palette.smallest());
    for (Sign s : signs) {
        int prev = colors.back();
        int next = -1;
        for (int c : palette.to_vector())
            if (c != prev && target.sign(prev, c) == s) {
                next = c;
                break;
            }
        if (next < 0)
            throw std::logic_error("color_path: no continuation of sign " +
                                   std::string(1, to_char(s)) + " from color " +
                                   target.vertex_name(prev) + " inside N+(0)");
        colors.push_back(next);
    }
    return colors;
}

RowState propagate_sets(const std::vector<int>& prev_row_colors,
                        const std::vector<Sign>& vertical_signs,
                        const std::vector<Sign>& horizontal_signs,
                        const SignedPaleyGraph& target) {
    const std::size_t n = prev_row_colors.size();
    if (n == 0) throw std::invalid_argument("propagate_sets: previous row is empty");
    if (vertical_signs.size() != n)
        throw std::invalid_argument("propagate_sets: expected " + std::to_string(n) +
                                    " vertical signs, got " + std::to_string(vertical_signs.size()));
    if (horizontal_signs.size() != n - 1)
        throw std::invalid_argument("propagate_sets: expected " + std::to_string(n - 1) +
                                    " horizontal signs, got " +
                                    std::to_string(horizontal_signs.size()));
    for (int c : prev_row_colors) check_color(c, target, "propagate_sets");

    RowState state;
    state.sets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexSet pool = target.neighbors(prev_row_colors[i], vertical_signs[i]);
        if (i > 0) pool = pool & target.neighborhood(state.sets[i - 1], horizontal_signs[i - 1]);
        if (pool.size() < 3)
            throw std::logic_error("propagate_sets: candidate pool for column " +
                                   std::to_string(i) + " shrank to " +
                                   std::to_string(pool.size()) + " colors");
        VertexSet chosen = three_smallest(pool);
        if (!target.is_triangle_free(chosen))
            throw std::logic_error("propagate_sets: candidate set for column " +
                                   std::to_string(i) + " spans a one-sign triangle");
        state.sets.push_back(chosen);
    }
    return state;
}

std::vector<int> select_backward(const RowState& state, const std::vector<Sign>& horizontal_signs,
                                 const SignedPaleyGraph& target) {
    const std::size_t n = state.sets.size();
    if (n == 0) throw std::invalid_argument("select_backward: no candidate sets");
    if (horizontal_signs.size() != n - 1)
        throw std::invalid_argument("select_backward: expected " + std::to_string(n - 1) +
                                    " horizontal signs, got " +
                                    std::to_string(horizontal_signs.size()));

    std::vector<int> colors(n);
    colors[n - 1] = state.sets[n - 1].smallest();
    for (std::size_t i = n - 1; i-- > 0;) {
        int right = colors[i + 1];
        int chosen = -1;
        for (int c : state.sets[i].to_vector())
            if (c != right && target.sign(c, right) == horizontal_signs[i]) {
                chosen = c;
                break;
            }
        if (chosen < 0)
            throw std::logic_error("select_backward: no color in column " + std::to_string(i) +
                                   " continues with sign " +
                                   std::string(1, to_char(horizontal_signs[i])) + " toward " +
                                   target.vertex_name(right));
        colors[i] = chosen;
    }
    return colors;
}

GridColoring color_grid(const SignedGrid& grid, const SignedPaleyGraph& target) {
    GridColoring out;
    out.rows = grid.rows();
    out.cols = grid.cols();
    out.colors.reserve(static_cast<std::size_t>(grid.rows()) * grid.cols());

    auto horizontal = [&](int r) {
        std::vector<Sign> signs;
        signs.reserve(static_cast<std::size_t>(grid.cols() - 1));
        for (int c = 0; c + 1 < grid.cols(); ++c)
            signs.push_back(grid.edge_sign({r, c}, {r, c + 1}));
        return signs;
    };

    std::vector<int> row = color_path(horizontal(0), target);
    out.colors.insert(out.colors.end(), row.begin(), row.end());
    for (int r = 1; r < grid.rows(); ++r) {
        std::vector<Sign> vertical;
        vertical.reserve(static_cast<std::size_t>(grid.cols()));
        for (int c = 0; c < grid.cols(); ++c)
            vertical.push_back(grid.edge_sign({r - 1, c}, {r, c}));
        std::vector<Sign> h = horizontal(r);
        row = select_backward(propagate_sets(row, vertical, h, target), h, target);
        out.colors.insert(out.colors.end(), row.begin(), row.end());
    }
    return out;
}

GridColoring GridColoring::from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("coloring json: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("coloring json: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "rows" && key != "cols" && key != "colors")
            throw std::invalid_argument("coloring json: unknown field \"" + key + "\"");
    if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("colors"))
        throw std::invalid_argument("coloring json: \"rows\", \"cols\" and \"colors\" are required");
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer())
        throw std::invalid_argument("coloring json: \"rows\" and \"cols\" must be integers");

    GridColoring out;
    out.rows = doc["rows"].get<int>();
    out.cols = doc["cols"].get<int>();
    if (out.rows < 1 || out.cols < 1)
        throw std::invalid_argument("coloring json: dimensions must be at least 1x1");
    const auto& rows = doc["colors"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(out.rows))
        throw std::invalid_argument("coloring json: \"colors\" must hold " +
                                    std::to_string(out.rows) + " rows");
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::string where = "coloring json: colors[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != static_cast<std::size_t>(out.cols))
            throw std::invalid_argument(where + " must hold " + std::to_string(out.cols) +
                                        " entries");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number_integer())
                throw std::invalid_argument(where + "[" + std::to_string(c) +
                                            "] must be an integer");
            int color = row[c].get<int>();
            if (color < 0 || color > 8)
                throw std::invalid_argument(where + "[" + std::to_string(c) + "] = " +
                                            std::to_string(color) + " outside 0..8");
            out.colors.push_back(color);
        }
    }
    return out;
}

std::string GridColoring::to_json() const {
    ordered_json doc;
    doc["rows"] = rows;
    doc["cols"] = cols;
    auto& arr = doc["colors"] = ordered_json::array();
    for (int r = 0; r < rows; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < cols; ++c) row.push_back(at(r, c));
        arr.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

VerifyResult verify_homomorphism(const SignedGrid& grid, const GridColoring& coloring,
                                 const SignedPaleyGraph& target) {
    if (coloring.rows != grid.rows() || coloring.cols != grid.cols())
        throw std::invalid_argument("verify_homomorphism: coloring is " +
                                    std::to_string(coloring.rows) + "x" +
                                    std::to_string(coloring.cols) + " but the grid is " +
                                    std::to_string(grid.rows()) + "x" +
                                    std::to_string(grid.cols()));
    if (coloring.colors.size() !=
        static_cast<std::size_t>(grid.rows()) * static_cast<std::size_t>(grid.cols()))
        throw std::invalid_argument("verify_homomorphism: color table size mismatch");
    for (int c : coloring.colors) check_color(c, target, "verify_homomorphism");

    VerifyResult result;
    for (const GridEdge& e : grid.all_edges()) {
        int cu = coloring.at(e.first.row, e.first.col);
        int cv = coloring.at(e.second.row, e.second.col);
        if (cu == cv) {
            result.violations.push_back(
                {e.first, e.second,
                 "both endpoints get color " + target.vertex_name(cu)});
            continue;
        }
        Sign want = grid.edge_sign(e.first, e.second);
        Sign got = target.sign(cu, cv);
        if (got != want)
            result.violations.push_back(
                {e.first, e.second,
                 std::string("grid edge is '") + to_char(want) + "' but colors " +
                     target.vertex_name(cu) + "," + target.vertex_name(cv) + " join with '" +
                     to_char(got) + "'"});
    }
    result.ok = result.violations.empty();
    return result;
}

}  // namespace sp9grid
