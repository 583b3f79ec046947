// cdc: command-line front end for the cardinal direction toolkit.
//
// Exit status: 0 success / consistent / verified, 1 negative answer,
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/io.hpp"
#include "cdc/network.hpp"
#include "cdc/reduction.hpp"
#include "cdc/solver.hpp"
#include "cdc/svg.hpp"
#include "cdc/witness.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cdc::ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cdc::ParseError("cannot write '" + path + "'");
    out << text;
}

cdc::CalculusMode mode_from(const std::string& s) {
    auto m = cdc::parse_mode(s);
    if (!m) throw cdc::ParseError("mode must be 'connected' or 'disconnected'");
    return *m;
}

cdc::CnfFormula load_formula(const std::string& path, bool normalize) {
    const std::string text = slurp(path);
    return normalize ? cdc::normalize_to_3sat(cdc::parse_dimacs_raw(text)) : cdc::parse_dimacs(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cardinal direction calculus toolkit"};
    app.require_subcommand(1);

    std::string mode = "connected";
    std::string out_path;

    // drm
    std::string drm_geometry, drm_a, drm_b;
    auto* drm = app.add_subcommand("drm", "Print the direction relation of region A to reference B");
    drm->add_option("geometry", drm_geometry, "Geometry file")->required();
    drm->add_option("a", drm_a, "Primary variable")->required();
    drm->add_option("b", drm_b, "Reference variable")->required();

    // check
    std::string check_network, check_geometry;
    auto* check = app.add_subcommand("check", "Verify a geometry against a network");
    check->add_option("network", check_network, "Network file")->required();
    check->add_option("geometry", check_geometry, "Geometry file")->required();

    // reduce
    std::string reduce_cnf, reduce_map;
    bool normalize = false;
    auto* reduce = app.add_subcommand("reduce", "Compile a 3-CNF formula into a network");
    reduce->add_option("cnf", reduce_cnf, "DIMACS file")->required();
    reduce->add_option("-o,--out", out_path, "Network output (default stdout)");
    reduce->add_option("--map", reduce_map, "Variable-map output");
    reduce->add_flag("--normalize", normalize, "Rewrite the input into exact 3-SAT first");
    reduce->add_option("--mode", mode, "connected|disconnected");

    // witness
    std::string witness_cnf, assign, witness_scale = "1";
    auto* witness = app.add_subcommand("witness", "Build the witness configuration for an assignment");
    witness->add_option("cnf", witness_cnf, "DIMACS file")->required();
    witness->add_option("--assign", assign, "Assignment such as 1=T,2=F,3=T")->required();
    witness->add_option("--scale", witness_scale, "Uniform scaling factor, e.g. 20");
    witness->add_flag("--normalize", normalize, "Rewrite the input into exact 3-SAT first");
    witness->add_option("-o,--out", out_path, "Geometry output (default stdout)");

    // solve
    std::string solve_network;
    int grid = 0, cells = 0;
    std::int64_t budget_ms = 0;
    std::uint64_t node_budget = 0;
    bool rectangles = false;
    auto* solve = app.add_subcommand("solve", "Bounded search for a solution of a network");
    solve->add_option("network", solve_network, "Network file")->required();
    solve->add_option("--grid", grid, "Rectangle search: coordinates in 0..K (default 2 x variables)");
    solve->add_option("--cells", cells, "Cell search on a k x k grid instead of rectangle search");
    solve->add_option("--budget", budget_ms, "Wall-clock budget in milliseconds (0 = none)");
    solve->add_option("--nodes", node_budget, "Search-node budget (0 = none)");
    solve->add_flag("--rectangles", rectangles, "Require every region to be its own bounding box");
    auto* solve_mode = solve->add_option("--mode", mode, "Override the network's mode");
    solve->add_option("-o,--out", out_path, "Geometry output (default stdout)");

    // relations
    auto* relations = app.add_subcommand("relations", "List the basic relations of a mode");
    relations->add_option("--mode", mode, "connected|disconnected");

    // render
    std::string render_geometry, render_network;
    double px_scale = 100.0;
    bool mbr_outlines = false;
    auto* render = app.add_subcommand("render", "Render a geometry as SVG");
    render->add_option("geometry", render_geometry, "Geometry file")->required();
    render->add_option("network", render_network, "Optional network file");
    render->add_option("--scale", px_scale, "Pixels per unit")->check(CLI::PositiveNumber);
    render->add_flag("--mbr", mbr_outlines, "Draw bounding boxes");
    render->add_option("-o,--out", out_path, "SVG output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*drm) {
            const cdc::Configuration g = cdc::read_geometry(slurp(drm_geometry));
            auto a = g.find(drm_a), b = g.find(drm_b);
            if (a == g.end() || b == g.end())
                throw cdc::MissingVariable("no region named '" + (a == g.end() ? drm_a : drm_b) + "'");
            std::cout << cdc::drm(a->second, b->second).str() << "\n";
            return kOk;
        }
        if (*check) {
            const cdc::Network n = cdc::read_network(slurp(check_network));
            const cdc::Configuration g = cdc::read_geometry(slurp(check_geometry));
            const cdc::ViolationReport r = cdc::check_configuration(n, g);
            for (const auto& v : r.constraint_violations)
                std::cout << "violation " << v.from << " " << v.to << " expected " << v.expected.str() << " actual "
                          << v.actual.str() << "\n";
            for (const auto& v : r.disconnected) std::cout << "disconnected " << v << "\n";
            if (r.ok()) std::cout << "ok\n";
            return r.ok() ? kOk : kNegative;
        }
        if (*reduce) {
            const cdc::Reduction red = cdc::compile_formula(load_formula(reduce_cnf, normalize), mode_from(mode));
            emit(out_path, cdc::write_network(red.network));
            if (!reduce_map.empty()) emit(reduce_map, cdc::write_variable_map(red.map));
            return kOk;
        }
        if (*witness) {
            const cdc::CnfFormula f = load_formula(witness_cnf, normalize);
            const cdc::Reduction red = cdc::compile_formula(f);
            const cdc::Rational factor = cdc::Rational::parse(witness_scale);
            if (factor <= cdc::Rational(0)) throw cdc::ParseError("--scale must be positive");
            cdc::Configuration c = cdc::build_witness(f, cdc::parse_assignment(assign, f.num_vars), red.map);
            if (factor != cdc::Rational(1)) c = cdc::scale_configuration(c, factor);
            emit(out_path, cdc::write_geometry(c));
            return kOk;
        }
        if (*solve) {
            cdc::Network n = cdc::read_network(slurp(solve_network));
            if (solve_mode->count() > 0) n.set_mode(mode_from(mode));
            cdc::SolveResult r;
            if (cells > 0) {
                r = cdc::solve_regions(n, cdc::CellSearchParams{cells, n.mode()});
            } else {
                if (grid != 0 && grid < 2) throw cdc::ParseError("--grid must be at least 2");
                cdc::RectSearchParams p;
                p.grid = grid;
                p.node_budget = node_budget;
                p.time_budget = std::chrono::milliseconds(budget_ms);
                p.shape = rectangles ? cdc::RegionShape::Rectangle : cdc::RegionShape::Maximal;
                r = cdc::solve_rectangles(n, p);
            }
            std::cerr << cdc::to_string(r.status) << " after " << r.nodes << " nodes\n";
            if (r.status != cdc::SolveStatus::Solved) return kNegative;
            emit(out_path, cdc::write_geometry(*r.configuration));
            return kOk;
        }
        if (*relations) {
            for (cdc::TileSet s : cdc::enumerate_basic_relations(mode_from(mode))) std::cout << s.str() << "\n";
            return kOk;
        }
        if (*render) {
            const cdc::Configuration g = cdc::read_geometry(slurp(render_geometry));
            std::optional<cdc::Network> n;
            if (!render_network.empty()) n = cdc::read_network(slurp(render_network));
            cdc::SvgOptions opts;
            opts.scale = px_scale;
            opts.mbr_outlines = mbr_outlines;
            emit(out_path, cdc::render_svg(g, opts, n ? &*n : nullptr));
            return kOk;
        }
    } catch (const cdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
