// Python bindings for the core operations: field arithmetic, the order-9
// signed Paley graph, the structure checks, the grid colorist and the
// brute-force search.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "sp9grid/colorist.hpp"
#include "sp9grid/gf9.hpp"
#include "sp9grid/oracle.hpp"
#include "sp9grid/signed_grid.hpp"
#include "sp9grid/signed_paley.hpp"
#include "sp9grid/structure_checks.hpp"
#include "sp9grid/vertex_set.hpp"

namespace py = pybind11;
using namespace sp9grid;

namespace {

std::vector<GridEdge> edges_from_tuples(const std::vector<std::tuple<int, int, int, int>>& quads) {
    std::vector<GridEdge> out;
    out.reserve(quads.size());
    for (const auto& [r1, c1, r2, c2] : quads) out.push_back({{r1, c1}, {r2, c2}});
    return out;
}

py::tuple vertex_tuple(GridVertex v) { return py::make_tuple(v.row, v.col); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "signed Paley graph toolkit: GF(9) arithmetic, structure checks, "
              "signified grid coloring and brute-force homomorphism search";

    py::enum_<Sign>(m, "Sign")
        .value("Plus", Sign::Plus)
        .value("Minus", Sign::Minus);
    m.def("negate", &negate, py::arg("sign"));

    py::class_<Gf9>(m, "Gf9")
        .def(py::init<int, int>(), py::arg("c0"), py::arg("c1"))
        .def_static("decode", &Gf9::decode, py::arg("code"))
        .def_static("parse", [](const std::string& s) { return Gf9::parse(s); }, py::arg("text"))
        .def_static("all", [] { return std::vector<Gf9>(Gf9::all().begin(), Gf9::all().end()); })
        .def("encode", &Gf9::encode)
        .def_property_readonly("coeff0", &Gf9::coeff0)
        .def_property_readonly("coeff1", &Gf9::coeff1)
        .def("is_square", &Gf9::is_square)
        .def("name", &Gf9::name)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__hash__", [](Gf9 a) { return a.encode(); })
        .def("__repr__", [](Gf9 a) { return "Gf9(" + a.name() + ")"; });

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init([](const std::vector<int>& vs) {
                 VertexSet s;
                 for (int v : vs) s.add(v);
                 return s;
             }),
             py::arg("members") = std::vector<int>{})
        .def("to_list", &VertexSet::to_vector)
        .def("__contains__", &VertexSet::contains)
        .def("__len__", &VertexSet::size)
        .def(py::self == py::self)
        .def("__repr__", [](VertexSet s) {
            std::string out = "VertexSet([";
            for (int v : s.to_vector()) {
                if (out.back() != '[') out += ", ";
                out += std::to_string(v);
            }
            return out + "])";
        });

    py::class_<SignedPaleyGraph>(m, "SignedPaleyGraph")
        .def_static("build", &SignedPaleyGraph::build, py::arg("q"))
        .def_property_readonly("order", &SignedPaleyGraph::order)
        .def("sign", &SignedPaleyGraph::sign, py::arg("u"), py::arg("v"))
        .def("neighbors", &SignedPaleyGraph::neighbors, py::arg("v"), py::arg("sign"))
        .def("neighborhood", &SignedPaleyGraph::neighborhood, py::arg("set"), py::arg("sign"))
        .def("is_triangle_free", &SignedPaleyGraph::is_triangle_free, py::arg("set"))
        .def("with_flipped_sign", &SignedPaleyGraph::with_flipped_sign, py::arg("u"), py::arg("v"))
        .def("vertex_name", &SignedPaleyGraph::vertex_name, py::arg("v"));

    m.def("sp9", &sp9, py::return_value_policy::reference);
    m.def("to_dot", &to_dot, py::arg("graph"), py::arg("positive_only") = false);

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("lemma", &LemmaReport::lemma)
        .def_readonly("pass_", &LemmaReport::pass)
        .def_readonly("cases_checked", &LemmaReport::cases_checked)
        .def_readonly("first_counterexample", &LemmaReport::first_counterexample)
        .def("__repr__", [](const LemmaReport& r) {
            return "LemmaReport(lemma=" + std::to_string(r.lemma) +
                   ", pass=" + (r.pass ? std::string("True") : std::string("False")) +
                   ", cases_checked=" + std::to_string(r.cases_checked) + ")";
        });

    m.def("check_lemma1", &check_lemma1, py::arg("graph") = sp9());
    m.def("check_lemma2", &check_lemma2, py::arg("graph") = sp9());
    m.def("check_lemma3", &check_lemma3, py::arg("graph") = sp9());
    m.def("check_lemma4", &check_lemma4, py::arg("graph") = sp9());
    m.def("check_lemma5", &check_lemma5, py::arg("graph") = sp9());
    m.def("check_lemma6", &check_lemma6, py::arg("graph") = sp9());
    m.def("check_all", &check_all, py::arg("graph") = sp9());
    m.def("all_pass", &all_pass, py::arg("reports"));
    m.def("check_lemma1_permutation_search", &check_lemma1_permutation_search,
          py::arg("graph") = sp9());
    m.def("reports_to_json", &reports_to_json, py::arg("reports"));

    py::class_<SignedGrid>(m, "SignedGrid")
        .def(py::init([](int rows, int cols,
                         const std::vector<std::tuple<int, int, int, int>>& negative) {
                 return SignedGrid(rows, cols, edges_from_tuples(negative));
             }),
             py::arg("rows"), py::arg("cols"),
             py::arg("negative_edges") = std::vector<std::tuple<int, int, int, int>>{})
        .def_static("random", &SignedGrid::random, py::arg("rows"), py::arg("cols"),
                    py::arg("neg_probability"), py::arg("seed"))
        .def_static("from_json", &SignedGrid::from_json, py::arg("text"))
        .def("to_json", &SignedGrid::to_json)
        .def_property_readonly("rows", &SignedGrid::rows)
        .def_property_readonly("cols", &SignedGrid::cols)
        .def_property_readonly("edge_count", &SignedGrid::edge_count)
        .def("edge_sign",
             [](const SignedGrid& g, std::pair<int, int> u, std::pair<int, int> v) {
                 return g.edge_sign({u.first, u.second}, {v.first, v.second});
             },
             py::arg("u"), py::arg("v"))
        .def("negative_edges",
             [](const SignedGrid& g) {
                 std::vector<std::tuple<int, int, int, int>> out;
                 for (const GridEdge& e : g.negative_edges())
                     out.emplace_back(e.first.row, e.first.col, e.second.row, e.second.col);
                 return out;
             })
        .def(py::self == py::self);

    py::class_<GridColoring>(m, "GridColoring")
        .def_static("from_json", &GridColoring::from_json, py::arg("text"))
        .def("to_json", &GridColoring::to_json)
        .def_readonly("rows", &GridColoring::rows)
        .def_readonly("cols", &GridColoring::cols)
        .def("at", &GridColoring::at, py::arg("row"), py::arg("col"))
        .def("as_lists",
             [](const GridColoring& c) {
                 std::vector<std::vector<int>> out;
                 for (int r = 0; r < c.rows; ++r) {
                     std::vector<int> row;
                     for (int col = 0; col < c.cols; ++col) row.push_back(c.at(r, col));
                     out.push_back(std::move(row));
                 }
                 return out;
             })
        .def(py::self == py::self);

    py::class_<RowState>(m, "RowState").def_readonly("sets", &RowState::sets);

    m.def("color_path", &color_path, py::arg("signs"),
          py::arg("target") = sp9());
    m.def("propagate_sets", &propagate_sets, py::arg("prev_row_colors"),
          py::arg("vertical_signs"), py::arg("horizontal_signs"),
          py::arg("target") = sp9());
    m.def("select_backward", &select_backward, py::arg("state"), py::arg("horizontal_signs"),
          py::arg("target") = sp9());
    m.def("color_grid", &color_grid, py::arg("grid"), py::arg("target") = sp9());

    py::class_<EdgeViolation>(m, "EdgeViolation")
        .def_property_readonly("u", [](const EdgeViolation& v) { return vertex_tuple(v.u); })
        .def_property_readonly("v", [](const EdgeViolation& v) { return vertex_tuple(v.v); })
        .def_readonly("reason", &EdgeViolation::reason);

    py::class_<VerifyResult>(m, "VerifyResult")
        .def_readonly("ok", &VerifyResult::ok)
        .def_readonly("violations", &VerifyResult::violations);

    m.def("verify_homomorphism",
          [](const SignedGrid& grid, const GridColoring& coloring) {
              return verify_homomorphism(grid, coloring);
          },
          py::arg("grid"), py::arg("coloring"));
    m.def("verify_homomorphism_against",
          [](const SignedGrid& grid, const GridColoring& coloring, const SignedTargetGraph& t) {
              return verify_homomorphism(grid, coloring, t);
          },
          py::arg("grid"), py::arg("coloring"), py::arg("target"));

    py::class_<SignedTargetGraph>(m, "SignedTargetGraph")
        .def(py::init<int>(), py::arg("order"))
        .def_static("from_paley", &SignedTargetGraph::from_paley, py::arg("graph"))
        .def_static("from_json", &SignedTargetGraph::from_json, py::arg("text"))
        .def_static("named", &SignedTargetGraph::named, py::arg("name"))
        .def_property_readonly("order", &SignedTargetGraph::order)
        .def("set_sign", &SignedTargetGraph::set_sign, py::arg("u"), py::arg("v"), py::arg("sign"))
        .def("sign", &SignedTargetGraph::sign, py::arg("u"), py::arg("v"));

    py::class_<OracleLimits>(m, "OracleLimits")
        .def(py::init<>())
        .def_readwrite("max_vertices", &OracleLimits::max_vertices);

    m.def("find_homomorphism", &find_homomorphism, py::arg("grid"), py::arg("target"),
          py::arg("limits") = OracleLimits{});

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("rows", &SweepReport::rows)
        .def_readonly("cols", &SweepReport::cols)
        .def_readonly("total", &SweepReport::total)
        .def_readonly("colorist_failures", &SweepReport::colorist_failures)
        .def_readonly("oracle_failures", &SweepReport::oracle_failures)
        .def_readonly("cross_checked", &SweepReport::cross_checked)
        .def_readonly("first_failure", &SweepReport::first_failure);

    m.def("exhaustive_signature_sweep", &exhaustive_signature_sweep, py::arg("rows"),
          py::arg("cols"), py::arg("cross_check") = false,
          py::call_guard<py::gil_scoped_release>());
}
