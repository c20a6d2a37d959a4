#include "sp9grid/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace sp9grid {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

SignedTargetGraph::SignedTargetGraph(int order) : order_(order) {
    if (order < 1 || order > 256)
        throw std::invalid_argument("SignedTargetGraph: order " + std::to_string(order) +
                                    " outside 1..256");
    table_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
}

SignedTargetGraph SignedTargetGraph::from_paley(const SignedPaleyGraph& g) {
    SignedTargetGraph t(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) t.set_sign(u, v, g.sign(u, v));
    return t;
}

SignedTargetGraph SignedTargetGraph::from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("target json: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("target json: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "order" && key != "edges")
            throw std::invalid_argument("target json: unknown field \"" + key + "\"");
    if (!doc.contains("order") || !doc["order"].is_number_integer())
        throw std::invalid_argument("target json: integer \"order\" is required");
    SignedTargetGraph t(doc["order"].get<int>());
    if (doc.contains("edges")) {
        const auto& arr = doc["edges"];
        if (!arr.is_array()) throw std::invalid_argument("target json: \"edges\" must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& triple = arr[i];
            std::string where = "target json: edges[" + std::to_string(i) + "]";
            if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
                !triple[1].is_number_integer() || !triple[2].is_string())
                throw std::invalid_argument(where + " must be [u, v, \"+\"|\"-\"]");
            std::string s = triple[2].get<std::string>();
            if (s != "+" && s != "-")
                throw std::invalid_argument(where + ": sign must be \"+\" or \"-\", got \"" + s +
                                            "\"");
            int u = triple[0].get<int>();
            int v = triple[1].get<int>();
            if (t.sign(u, v))  // also validates the pair
                throw std::invalid_argument(where + ": pair listed twice");
            t.set_sign(u, v, s == "+" ? Sign::Plus : Sign::Minus);
        }
    }
    return t;
}

SignedTargetGraph SignedTargetGraph::named(const std::string& name) {
    const std::string prefix = "paley:";
    if (name.rfind(prefix, 0) == 0) {
        int q = 0;
        try {
            std::size_t used = 0;
            q = std::stoi(name.substr(prefix.size()), &used);
            if (used != name.size() - prefix.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown target \"" + name +
                                        "\": expected paley:<order> with a numeric order");
        }
        return from_paley(SignedPaleyGraph::build(q));
    }
    throw std::invalid_argument("unknown target \"" + name + "\": expected paley:<order>");
}

void SignedTargetGraph::check_pair(int u, int v) const {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        throw std::out_of_range("SignedTargetGraph: vertex outside 0.." +
                                std::to_string(order_ - 1));
    if (u == v)
        throw std::invalid_argument("SignedTargetGraph: sign of a loop is undefined");
}

void SignedTargetGraph::set_sign(int u, int v, Sign s) {
    check_pair(u, v);
    table_[static_cast<std::size_t>(u) * order_ + static_cast<std::size_t>(v)] = s;
    table_[static_cast<std::size_t>(v) * order_ + static_cast<std::size_t>(u)] = s;
}

std::optional<Sign> SignedTargetGraph::sign(int u, int v) const {
    check_pair(u, v);
    return table_[static_cast<std::size_t>(u) * order_ + static_cast<std::size_t>(v)];
}

std::optional<GridColoring> find_homomorphism(const SignedGrid& grid,
                                              const SignedTargetGraph& target,
                                              OracleLimits limits) {
    const int rows = grid.rows();
    const int cols = grid.cols();
    const std::int64_t n = static_cast<std::int64_t>(rows) * cols;
    if (n > limits.max_vertices)
        throw std::invalid_argument("find_homomorphism: " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " grid has " + std::to_string(n) +
                                    " vertices, above the guard of " +
                                    std::to_string(limits.max_vertices));

    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    // consistent(i, c): color c at row-major position i respects the edges
    // toward the already-assigned left and upper neighbours.
    auto consistent = [&](int i, int c) {
        int r = i / cols;
        int col = i % cols;
        auto edge_ok = [&](GridVertex u, GridVertex v, int cu) {
            if (cu == c) return false;
            std::optional<Sign> s = target.sign(cu, c);
            return s && *s == grid.edge_sign(u, v);
        };
        if (col > 0 && !edge_ok({r, col - 1}, {r, col}, assigned[static_cast<std::size_t>(i - 1)]))
            return false;
        if (r > 0 && !edge_ok({r - 1, col}, {r, col}, assigned[static_cast<std::size_t>(i - cols)]))
            return false;
        return true;
    };

    auto search = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < target.order(); ++c)
            if (consistent(i, c)) {
                assigned[static_cast<std::size_t>(i)] = c;
                if (self(self, i + 1)) return true;
                assigned[static_cast<std::size_t>(i)] = -1;
            }
        return false;
    };

    if (!search(search, 0)) return std::nullopt;
    GridColoring out;
    out.rows = rows;
    out.cols = cols;
    out.colors = std::move(assigned);
    return out;
}

VerifyResult verify_homomorphism(const SignedGrid& grid, const GridColoring& coloring,
                                 const SignedTargetGraph& target) {
    if (coloring.rows != grid.rows() || coloring.cols != grid.cols())
        throw std::invalid_argument("verify_homomorphism: coloring is " +
                                    std::to_string(coloring.rows) + "x" +
                                    std::to_string(coloring.cols) + " but the grid is " +
                                    std::to_string(grid.rows()) + "x" +
                                    std::to_string(grid.cols()));
    if (coloring.colors.size() !=
        static_cast<std::size_t>(grid.rows()) * static_cast<std::size_t>(grid.cols()))
        throw std::invalid_argument("verify_homomorphism: color table size mismatch");
    for (int c : coloring.colors)
        if (c < 0 || c >= target.order())
            throw std::invalid_argument("verify_homomorphism: color " + std::to_string(c) +
                                        " outside 0.." + std::to_string(target.order() - 1));

    VerifyResult result;
    for (const GridEdge& e : grid.all_edges()) {
        int cu = coloring.at(e.first.row, e.first.col);
        int cv = coloring.at(e.second.row, e.second.col);
        std::string head = "colors " + std::to_string(cu) + "," + std::to_string(cv);
        if (cu == cv) {
            result.violations.push_back({e.first, e.second, "both endpoints get color " +
                                                                std::to_string(cu)});
            continue;
        }
        std::optional<Sign> got = target.sign(cu, cv);
        Sign want = grid.edge_sign(e.first, e.second);
        if (!got)
            result.violations.push_back({e.first, e.second, head + " are not adjacent in the target"});
        else if (*got != want)
            result.violations.push_back({e.first, e.second,
                                         std::string("grid edge is '") + to_char(want) + "' but " +
                                             head + " join with '" + to_char(*got) + "'"});
    }
    result.ok = result.violations.empty();
    return result;
}

SweepReport exhaustive_signature_sweep(int rows, int cols, bool cross_check) {
    SignedGrid base(rows, cols);
    const auto edges = base.all_edges();
    if (edges.size() > 16)
        throw std::invalid_argument("exhaustive_signature_sweep: " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " grid has " +
                                    std::to_string(edges.size()) + " edges, above the sweep cap of 16");

    SweepReport report;
    report.rows = rows;
    report.cols = cols;
    report.total = std::int64_t{1} << edges.size();
    report.cross_checked = cross_check;

    const SignedPaleyGraph& target = sp9();
    const SignedTargetGraph oracle_target = SignedTargetGraph::from_paley(target);

    struct Partial {
        std::int64_t colorist_failures = 0;
        std::int64_t oracle_failures = 0;
        std::int64_t first_failure_mask = -1;
        std::string first_failure;
        void note(std::int64_t mask, const std::string& message) {
            if (first_failure_mask < 0 || mask < first_failure_mask) {
                first_failure_mask = mask;
                first_failure = message;
            }
        }
    };

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers == 0) workers = 1;
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            Partial& mine = partials[w];
            for (std::int64_t mask = w; mask < report.total; mask += workers) {
                std::vector<GridEdge> negative;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (mask >> i & 1) negative.push_back(edges[i]);
                SignedGrid grid(rows, cols, negative);
                try {
                    GridColoring coloring = color_grid(grid, target);
                    if (!verify_homomorphism(grid, coloring, target).ok) {
                        ++mine.colorist_failures;
                        mine.note(mask, "signature " + std::to_string(mask) +
                                            ": constructed coloring fails verification");
                    }
                } catch (const std::exception& e) {
                    ++mine.colorist_failures;
                    mine.note(mask, "signature " + std::to_string(mask) + ": " + e.what());
                }
                if (cross_check && !find_homomorphism(grid, oracle_target))
                    {
                        ++mine.oracle_failures;
                        mine.note(mask, "signature " + std::to_string(mask) +
                                            ": brute-force search found no homomorphism");
                    }
            }
        });
    for (std::thread& t : pool) t.join();

    std::int64_t best_mask = -1;
    for (const Partial& p : partials) {
        report.colorist_failures += p.colorist_failures;
        report.oracle_failures += p.oracle_failures;
        if (p.first_failure_mask >= 0 && (best_mask < 0 || p.first_failure_mask < best_mask)) {
            best_mask = p.first_failure_mask;
            report.first_failure = p.first_failure;
        }
    }
    return report;
}

}  // namespace sp9grid
