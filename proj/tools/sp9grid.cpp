// Command line front end: structural checks, grid coloring, verification,
// brute-force search and DOT export. Exit codes: 0 success / property
// holds, 1 usage or input error, 2 negative verdict.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sp9grid/colorist.hpp"
#include "sp9grid/oracle.hpp"
#include "sp9grid/signed_grid.hpp"
#include "sp9grid/signed_paley.hpp"
#include "sp9grid/structure_checks.hpp"

namespace {

using namespace sp9grid;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

struct GridArgs {
    std::string grid_file;
    int rows = 0;
    int cols = 0;
    double neg_prob = 0.0;
    std::uint64_t seed = 0;
};

void add_grid_options(CLI::App* cmd, GridArgs& args) {
    auto* file = cmd->add_option("--grid", args.grid_file, "signified grid json file");
    auto* rows = cmd->add_option("--rows", args.rows, "grid row count")->check(CLI::PositiveNumber);
    auto* cols = cmd->add_option("--cols", args.cols, "grid column count")->check(CLI::PositiveNumber);
    auto* prob = cmd->add_option("--neg-prob", args.neg_prob,
                                 "probability that a generated edge is negative (default 0)")
                     ->check(CLI::Range(0.0, 1.0));
    auto* seed = cmd->add_option("--seed", args.seed, "seed for the generated signature (default 0)");
    file->excludes(rows)->excludes(cols)->excludes(prob)->excludes(seed);
    rows->needs(cols);
    cols->needs(rows);
}

SignedGrid make_grid(const CLI::App* cmd, const GridArgs& args) {
    if (!args.grid_file.empty()) return SignedGrid::from_json(read_file(args.grid_file));
    if (cmd->count("--rows") == 0)
        throw CLI::RequiredError("--grid or --rows/--cols");
    return SignedGrid::random(args.rows, args.cols, args.neg_prob, args.seed);
}

int run_lemmas(const std::string& report_file, bool slow_l1) {
    std::vector<LemmaReport> reports = check_all();
    if (slow_l1) reports.push_back(check_lemma1_permutation_search());
    for (const LemmaReport& r : reports) {
        std::cout << "lemma " << r.lemma << ": " << (r.pass ? "pass" : "FAIL") << " ("
                  << r.cases_checked << " cases)";
        if (r.first_counterexample) std::cout << " " << *r.first_counterexample;
        std::cout << "\n";
    }
    bool ok = all_pass(reports);
    std::cout << (ok ? "all checks pass" : "structural checks FAILED") << "\n";
    if (!report_file.empty()) write_output(report_file, reports_to_json(reports));
    return ok ? 0 : 2;
}

int run_color(const CLI::App* cmd, const GridArgs& args, const std::string& out_file) {
    SignedGrid grid = make_grid(cmd, args);
    GridColoring coloring = color_grid(grid);
    if (!verify_homomorphism(grid, coloring).ok)
        throw std::logic_error("color: constructed coloring failed self-verification");
    write_output(out_file, coloring.to_json());
    return 0;
}

int run_verify(const std::string& grid_file, const std::string& coloring_file) {
    SignedGrid grid = SignedGrid::from_json(read_file(grid_file));
    GridColoring coloring = GridColoring::from_json(read_file(coloring_file));
    VerifyResult result = verify_homomorphism(grid, coloring);
    if (result.ok) {
        std::cout << "homomorphism verified: " << grid.rows() << "x" << grid.cols() << " grid, "
                  << grid.edge_count() << " edges\n";
        return 0;
    }
    for (const EdgeViolation& v : result.violations)
        std::cout << v.u << "-" << v.v << ": " << v.reason << "\n";
    std::cout << "NOT a homomorphism: " << result.violations.size() << " violating edge"
              << (result.violations.size() == 1 ? "" : "s") << "\n";
    return 2;
}

SignedTargetGraph load_target(const std::string& spec) {
    if (spec.rfind("paley:", 0) == 0) return SignedTargetGraph::named(spec);
    return SignedTargetGraph::from_json(read_file(spec));
}

int run_oracle(const CLI::App* cmd, const GridArgs& args, const std::string& target_spec,
               bool sweep, int cap, const std::string& out_file) {
    if (sweep) {
        if (cmd->count("--rows") == 0)
            throw CLI::RequiredError("--rows/--cols (sweep mode)");
        SweepReport report = exhaustive_signature_sweep(args.rows, args.cols, true);
        std::cout << "swept " << report.total << " signatures of the " << report.rows << "x"
                  << report.cols << " grid: " << report.colorist_failures
                  << " colorist failures, " << report.oracle_failures << " search failures\n";
        if (report.first_failure) std::cout << "first failure: " << *report.first_failure << "\n";
        return report.colorist_failures + report.oracle_failures == 0 ? 0 : 2;
    }
    SignedGrid grid = make_grid(cmd, args);
    SignedTargetGraph target = load_target(target_spec);
    std::optional<GridColoring> found = find_homomorphism(grid, target, {cap});
    if (!found) {
        std::cout << "no homomorphism into the target exists\n";
        return 2;
    }
    if (!verify_homomorphism(grid, *found, target).ok)
        throw std::logic_error("oracle: search returned a mapping that fails verification");
    write_output(out_file, found->to_json());
    return 0;
}

int run_export(const std::string& what, const std::string& format, const std::string& out_file) {
    if (format != "dot")
        throw std::runtime_error("unsupported format \"" + format + "\" (only dot)");
    if (what != "sp9" && what != "p9")
        throw std::runtime_error("unsupported graph \"" + what + "\" (sp9 or p9)");
    write_output(out_file, to_dot(sp9(), what == "p9"));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed Paley graph toolkit: order-9 structure checks, signified grid "
                 "coloring with 9 colors, verification and brute-force search"};
    app.require_subcommand(1);

    auto* lemmas = app.add_subcommand("lemmas", "run the six exhaustive structure checks");
    std::string report_file;
    bool slow_l1 = false;
    lemmas->add_option("--report", report_file, "write a json report to this file");
    lemmas->add_flag("--slow-l1", slow_l1,
                     "also confirm the sign-reversing symmetry by scanning all 9! permutations");

    auto* color = app.add_subcommand("color", "color a signified grid with 9 colors");
    GridArgs color_args;
    add_grid_options(color, color_args);
    std::string color_out;
    color->add_option("--out", color_out, "write the coloring here instead of stdout");

    auto* verify = app.add_subcommand("verify", "check a coloring file against a grid file");
    std::string verify_grid, verify_coloring;
    verify->add_option("--grid", verify_grid, "signified grid json file")->required();
    verify->add_option("--coloring", verify_coloring, "coloring json file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force homomorphism search");
    GridArgs oracle_args;
    add_grid_options(oracle, oracle_args);
    std::string target_spec = "paley:9";
    bool sweep = false;
    int cap = OracleLimits{}.max_vertices;
    oracle->add_option("--target", target_spec, "paley:<order> or a target json file (default paley:9)");
    auto* sweep_flag = oracle->add_flag(
        "--sweep", sweep, "run colorist and search over every signature of the --rows/--cols grid");
    oracle->add_option("--cap", cap, "vertex guard for the backtracking search (default 25)")
        ->check(CLI::PositiveNumber);
    sweep_flag->excludes("--grid")->excludes("--target");
    std::string oracle_out;
    oracle->add_option("--out", oracle_out, "write the found coloring here instead of stdout");

    auto* exporter = app.add_subcommand("export", "emit the target graph as DOT");
    std::string what = "sp9", format = "dot", export_out;
    exporter->add_option("--what", what, "sp9 (signed) or p9 (positive part only)");
    exporter->add_option("--format", format, "output format (dot)");
    exporter->add_option("--out", export_out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
        if (lemmas->parsed()) return run_lemmas(report_file, slow_l1);
        if (color->parsed()) return run_color(color, color_args, color_out);
        if (verify->parsed()) return run_verify(verify_grid, verify_coloring);
        if (oracle->parsed())
            return run_oracle(oracle, oracle_args, target_spec, sweep, cap, oracle_out);
        if (exporter->parsed()) return run_export(what, format, export_out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
