#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toruscolor/alon_tarsi.hpp"
#include "toruscolor/configs.hpp"
#include "toruscolor/discharging.hpp"
#include "toruscolor/dp_coloring.hpp"
#include "toruscolor/embedding.hpp"
#include "toruscolor/errors.hpp"
#include "toruscolor/graph.hpp"
#include "toruscolor/io.hpp"
#include "toruscolor/rational.hpp"
#include "toruscolor/structure.hpp"
#include "toruscolor/weak_degeneracy.hpp"

namespace py = pybind11;
using namespace toruscolor;

namespace {

using Matchings = std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<int, int>>>>;

py::object big_int(const BigInt& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

EmbeddedGraph embed(const std::vector<std::vector<int>>& rotations,
                    const std::optional<Graph>& graph) {
    RotationSystem r;
    r.n = static_cast<int>(rotations.size());
    r.rot = rotations;
    if (graph) return trace_faces(*graph, r);
    return trace_faces(r);
}

ConfigurationId config_id(const std::string& name) {
    auto id = configuration_from_name(name);
    if (!id) throw input_error("configuration name must be fig1, fig2 or fig3");
    return *id;
}

py::list trace_to_py(const OperationTrace& t) {
    py::list out;
    for (const Operation& op : t) {
        py::dict step;
        step["op"] = op.kind == OpKind::Delete ? "delete" : "deletesave";
        step["u"] = op.u;
        if (op.kind == OpKind::DeleteSave) step["w"] = op.w;
        out.append(step);
    }
    return out;
}

OperationTrace trace_from_py(const py::sequence& steps) {
    OperationTrace t;
    for (auto item : steps) {
        py::dict step = item.cast<py::dict>();
        Operation op;
        std::string kind = step["op"].cast<std::string>();
        op.u = step["u"].cast<int>();
        if (kind == "delete") {
            op.kind = OpKind::Delete;
        } else if (kind == "deletesave") {
            op.kind = OpKind::DeleteSave;
            op.w = step["w"].cast<int>();
        } else {
            throw input_error("unknown trace op \"" + kind + "\"");
        }
        t.push_back(op);
    }
    return t;
}

Cover build_cover(const Graph& g, const std::vector<int>& list_sizes, const Matchings& matchings) {
    Cover c;
    c.base = g;
    c.list_sizes = list_sizes;
    for (const auto& [edge, pairs] : matchings) c.matchings.push_back({edge, pairs});
    c.validate();
    return c;
}

py::object opt_vec(const std::optional<std::vector<int>>& v) {
    if (!v) return py::none();
    return py::cast(*v);
}

RuleParams params_from(const std::string& epsilon, const std::string& eta,
                       const std::string& rho) {
    RuleParams p;
    if (!epsilon.empty()) p.epsilon = parse_rational(epsilon);
    if (!eta.empty()) p.eta = parse_rational(eta);
    if (!rho.empty()) p.rho = parse_rational(rho);
    return p;
}

} // namespace

PYBIND11_MODULE(_toruscolor, m) {
    m.doc() = "exact certification routines for colorings of embedded graphs";

    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_RuntimeError);
    py::register_exception<bound_exceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("universe", &Graph::universe)
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("connected", &Graph::connected)
        .def("induced", &Graph::induced, py::arg("vertices"))
        .def("without_vertex", &Graph::without_vertex, py::arg("u"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.universe()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_edge_list(in);
        },
        py::arg("text"));
    m.def("edge_list_string", &edge_list_string, py::arg("graph"));

    m.def("contains_k5_minus", &contains_k5_minus, py::arg("graph"));
    m.def("has_cycle_of_length", &has_cycle_of_length, py::arg("graph"), py::arg("k"));
    m.def("is_gdp_tree", &is_gdp_tree, py::arg("graph"));

    m.def("degeneracy", &degeneracy, py::arg("graph"));
    m.def("weak_degeneracy", &weak_degeneracy, py::arg("graph"), py::arg("vertex_bound") = 14);
    m.def(
        "weak_degeneracy_trace",
        [](const Graph& g, const DegFunction& f, int vertex_bound) -> py::object {
            auto t = is_weakly_f_degenerate(g, f, vertex_bound);
            if (!t) return py::none();
            return trace_to_py(*t);
        },
        py::arg("graph"), py::arg("f"), py::arg("vertex_bound") = 14);
    m.def(
        "verify_trace",
        [](const Graph& g, const DegFunction& f, const py::sequence& trace) {
            return verify_trace(g, f, trace_from_py(trace));
        },
        py::arg("graph"), py::arg("f"), py::arg("trace"));

    m.def(
        "alon_tarsi_number",
        [](const Graph& g, int edge_bound) {
            auto [k, d] = alon_tarsi_number_witness(g, edge_bound);
            return py::make_tuple(k, d.arcs());
        },
        py::arg("graph"), py::arg("edge_bound") = 16);
    m.def(
        "eulerian_diff",
        [](const Graph& g, const std::vector<std::pair<int, int>>& arcs, int arc_bound) {
            DiffResult r = eulerian_census(Orientation(g, arcs), arc_bound);
            py::dict out;
            out["ee"] = big_int(r.ee);
            out["oe"] = big_int(r.oe);
            out["diff"] = big_int(r.diff);
            return out;
        },
        py::arg("graph"), py::arg("arcs"), py::arg("arc_bound") = 24);
    m.def(
        "verify_reducible",
        [](const std::string& config) {
            return verify_reducible_orientation(reducible_orientation(config_id(config)));
        },
        py::arg("config"));

    m.def(
        "configuration_graph",
        [](const std::string& config) { return configuration_graph(config_id(config)); },
        py::arg("config"));
    m.def(
        "find_configuration",
        [](const Graph& g, const std::string& config) {
            return opt_vec(find_induced_configuration(g, config_id(config)));
        },
        py::arg("graph"), py::arg("config"));
    m.def(
        "find_house_subgraph", [](const Graph& g) { return opt_vec(find_house_subgraph(g)); },
        py::arg("graph"));

    m.def(
        "embedding_report",
        [](const std::vector<std::vector<int>>& rotations, const std::optional<Graph>& graph) {
            EmbeddedGraph e = embed(rotations, graph);
            py::dict out;
            out["n"] = e.g.num_vertices();
            out["m"] = e.g.num_edges();
            out["genus"] = e.genus;
            py::list degrees;
            for (const Face& f : e.faces) degrees.append(f.degree());
            out["face_degrees"] = degrees;
            return out;
        },
        py::arg("rotations"), py::arg("graph") = py::none());

    m.def(
        "discharge_report_json",
        [](const std::vector<std::vector<int>>& rotations, const std::optional<Graph>& graph,
           const std::string& epsilon, const std::string& eta, const std::string& rho) {
            EmbeddedGraph e = embed(rotations, graph);
            ChargeState s = apply_rules(e, params_from(epsilon, eta, rho));
            return charge_report(e, s).dump();
        },
        py::arg("rotations"), py::arg("graph") = py::none(), py::arg("epsilon") = "",
        py::arg("eta") = "", py::arg("rho") = "");

    m.def(
        "hypothesis_violations",
        [](const std::vector<std::vector<int>>& rotations, const std::optional<Graph>& graph,
           bool include_min_degree) {
            return hypothesis_violations(embed(rotations, graph), include_min_degree);
        },
        py::arg("rotations"), py::arg("graph") = py::none(),
        py::arg("include_min_degree") = false);
    m.def(
        "check_theorem",
        [](const std::vector<std::vector<int>>& rotations, const std::optional<Graph>& graph,
           bool verify_hypotheses) {
            TheoremOutcome r = check_theorem(embed(rotations, graph), verify_hypotheses);
            py::dict out;
            out["outcome"] = outcome_name(r.kind);
            if (r.kind == TheoremOutcomeKind::MIN_DEGREE_LE_3)
                out["witness_vertex"] = r.witness_vertex;
            if (!r.witness_mapping.empty()) out["witness_mapping"] = py::cast(r.witness_mapping);
            return out;
        },
        py::arg("rotations"), py::arg("graph") = py::none(),
        py::arg("verify_hypotheses") = true);
    m.def(
        "lemma_scan",
        [](const std::vector<std::vector<int>>& rotations, const std::optional<Graph>& graph,
           bool verify_hypotheses) {
            py::list out;
            for (const LemmaViolation& v : lemma_scan(embed(rotations, graph), verify_hypotheses)) {
                py::dict row;
                row["item"] = v.item;
                row["witness_vertices"] = py::cast(v.witness_vertices);
                row["witness_faces"] = py::cast(v.witness_faces);
                out.append(row);
            }
            return out;
        },
        py::arg("rotations"), py::arg("graph") = py::none(),
        py::arg("verify_hypotheses") = true);

    m.def(
        "dp_color",
        [](const Graph& g, const std::vector<int>& list_sizes, const Matchings& matchings) {
            return opt_vec(dp_color(build_cover(g, list_sizes, matchings)));
        },
        py::arg("graph"), py::arg("list_sizes"), py::arg("matchings"));
    m.def(
        "strict_transversal",
        [](const Graph& g, const std::vector<int>& list_sizes, const Matchings& matchings,
           const CoverDegFunction& f) {
            return opt_vec(strictly_f_degenerate_transversal(build_cover(g, list_sizes, matchings), f));
        },
        py::arg("graph"), py::arg("list_sizes"), py::arg("matchings"), py::arg("f"));
    m.def(
        "list_color",
        [](const Graph& g, const std::vector<std::vector<int>>& lists) {
            return opt_vec(is_L_colorable(g, lists));
        },
        py::arg("graph"), py::arg("lists"));
    m.def("chromatic_number", &chromatic_number, py::arg("graph"));
    m.def("dp_chromatic_number", &dp_chromatic_number, py::arg("graph"), py::arg("max_k") = 6);
    m.def("is_k_choosable", &is_k_choosable, py::arg("graph"), py::arg("k"));
    m.def(
        "vertex_arboricity_at_most",
        [](const Graph& g, int k) -> py::object {
            auto parts = vertex_arboricity_at_most(g, k);
            if (!parts) return py::none();
            return py::cast(*parts);
        },
        py::arg("graph"), py::arg("k"));
}
