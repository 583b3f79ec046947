// Python bindings. Geometries, networks and variable maps cross the boundary
// as their JSON text, the same documents the command-line tool reads and
// writes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>

#include "cdc/errors.hpp"
#include "cdc/io.hpp"
#include "cdc/reduction.hpp"
#include "cdc/solver.hpp"
#include "cdc/svg.hpp"
#include "cdc/witness.hpp"

namespace py = pybind11;

namespace {

cdc::CalculusMode mode_from(const std::string& s) {
    const auto m = cdc::parse_mode(s);
    if (!m) throw cdc::ParseError("unknown mode '" + s + "'");
    return *m;
}

cdc::CnfFormula load_formula(const std::string& dimacs, bool normalize) {
    return normalize ? cdc::normalize_to_3sat(cdc::parse_dimacs_raw(dimacs)) : cdc::parse_dimacs(dimacs);
}

cdc::Assignment assignment_from(const py::object& value, int num_vars) {
    if (py::isinstance<py::str>(value)) return cdc::parse_assignment(value.cast<std::string>(), num_vars);
    auto a = value.cast<std::vector<bool>>();
    if (static_cast<int>(a.size()) != num_vars)
        throw cdc::PreconditionViolation("assignment has " + std::to_string(a.size()) + " values, formula has " +
                                         std::to_string(num_vars) + " variables");
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cardinal direction calculus: relations, 3-SAT reduction, witnesses and bounded solving";

    auto base = py::register_exception<cdc::Error>(m, "CdcError", PyExc_ValueError);
    py::register_exception<cdc::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<cdc::NotThreeSat>(m, "NotThreeSat", base.ptr());
    py::register_exception<cdc::TooLarge>(m, "TooLarge", base.ptr());
    py::register_exception<cdc::MissingVariable>(m, "MissingVariable", base.ptr());

    m.attr("FORMAT_VERSION") = cdc::kFormatVersion;

    m.def(
        "relations", [](const std::string& mode) {
            std::vector<std::string> out;
            for (cdc::TileSet s : cdc::enumerate_basic_relations(mode_from(mode))) out.push_back(s.str());
            return out;
        },
        py::arg("mode") = "connected", "Canonical names of every basic relation of a mode.");

    m.def(
        "is_basic", [](const std::string& rel, const std::string& mode) {
            return cdc::is_basic_relation(cdc::TileSet::parse(rel), mode_from(mode));
        },
        py::arg("relation"), py::arg("mode") = "connected");

    m.def(
        "drm", [](const std::string& geometry, const std::string& a, const std::string& b) {
            const cdc::Configuration g = cdc::read_geometry(geometry);
            for (const std::string& name : {a, b})
                if (!g.contains(name)) throw cdc::MissingVariable("no region named '" + name + "'");
            return cdc::drm(g.at(a), g.at(b)).str();
        },
        py::arg("geometry"), py::arg("a"), py::arg("b"), "Direction relation of region a to reference b.");

    m.def(
        "check", [](const std::string& network, const std::string& geometry) {
            const cdc::ViolationReport r = cdc::check_configuration(cdc::read_network(network), cdc::read_geometry(geometry));
            py::list violations;
            for (const auto& v : r.constraint_violations)
                violations.append(py::make_tuple(v.from, v.to, v.expected.str(), v.actual.str()));
            py::dict out;
            out["ok"] = r.ok();
            out["violations"] = violations;
            out["disconnected"] = r.disconnected;
            return out;
        },
        py::arg("network"), py::arg("geometry"));

    m.def(
        "reduce", [](const std::string& dimacs, bool normalize, const std::string& mode) {
            const cdc::Reduction red = cdc::compile_formula(load_formula(dimacs, normalize), mode_from(mode));
            return py::make_tuple(cdc::write_network(red.network), cdc::write_variable_map(red.map));
        },
        py::arg("dimacs"), py::arg("normalize") = false, py::arg("mode") = "connected",
        "Compile a 3-CNF formula; returns (network, variable map) as JSON text.");

    m.def(
        "witness", [](const std::string& dimacs, const py::object& assignment, bool normalize, const std::string& scale) {
            const cdc::CnfFormula f = load_formula(dimacs, normalize);
            const cdc::Reduction red = cdc::compile_formula(f);
            cdc::Configuration c = cdc::build_witness(f, assignment_from(assignment, f.num_vars), red.map);
            const cdc::Rational factor = cdc::Rational::parse(scale);
            if (factor <= cdc::Rational(0)) throw cdc::ParseError("scale must be positive");
            if (factor != cdc::Rational(1)) c = cdc::scale_configuration(c, factor);
            return cdc::write_geometry(c);
        },
        py::arg("dimacs"), py::arg("assignment"), py::arg("normalize") = false, py::arg("scale") = "1",
        "Witness geometry for an assignment given as '1=T,2=F' or a list of bools.");

    m.def(
        "witness_decides", [](const std::string& dimacs, const py::object& assignment) {
            const cdc::CnfFormula f = cdc::parse_dimacs(dimacs);
            return cdc::witness_decides(f, assignment_from(assignment, f.num_vars));
        },
        py::arg("dimacs"), py::arg("assignment"));

    m.def(
        "brute_force_sat", [](const std::string& dimacs) { return cdc::brute_force_sat(cdc::parse_dimacs(dimacs)); },
        py::arg("dimacs"));

    m.def(
        "solve",
        [](const std::string& network, int grid, std::optional<int> cells, long budget_ms, std::uint64_t nodes,
           bool rectangles, std::optional<std::string> mode) {
            cdc::Network n = cdc::read_network(network);
            if (mode) n.set_mode(mode_from(*mode));
            cdc::SolveResult r;
            {
                py::gil_scoped_release release;
                if (cells) {
                    r = cdc::solve_regions(n, cdc::CellSearchParams{*cells, n.mode()});
                } else {
                    cdc::RectSearchParams p;
                    p.grid = grid;
                    p.node_budget = nodes;
                    p.time_budget = std::chrono::milliseconds(budget_ms);
                    p.shape = rectangles ? cdc::RegionShape::Rectangle : cdc::RegionShape::Maximal;
                    r = cdc::solve_rectangles(n, p);
                }
            }
            std::optional<std::string> geometry;
            if (r.configuration) geometry = cdc::write_geometry(*r.configuration);
            return py::make_tuple(std::string(cdc::to_string(r.status)), geometry, r.nodes);
        },
        py::arg("network"), py::arg("grid") = 0, py::arg("cells") = py::none(), py::arg("budget_ms") = 0,
        py::arg("nodes") = 0, py::arg("rectangles") = false, py::arg("mode") = py::none(),
        "Bounded search; returns (status, geometry or None, nodes explored).");

    m.def(
        "render",
        [](const std::string& geometry, std::optional<std::string> network, double scale, bool mbr) {
            std::optional<cdc::Network> n;
            if (network) n = cdc::read_network(*network);
            cdc::SvgOptions opts;
            opts.scale = scale;
            opts.mbr_outlines = mbr;
            return cdc::render_svg(cdc::read_geometry(geometry), opts, n ? &*n : nullptr);
        },
        py::arg("geometry"), py::arg("network") = py::none(), py::arg("scale") = 100.0, py::arg("mbr") = false);
}
