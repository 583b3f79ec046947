#include <doctest.h>

#include "cdc/errors.hpp"
#include "cdc/io.hpp"
#include "cdc/svg.hpp"
#include "cdc/witness.hpp"

using namespace cdc;

namespace {

Clause clause(int a, int b, int c) {
    auto lit = [](int v) { return Literal{std::abs(v), v > 0}; };
    return {lit(a), lit(b), lit(c)};
}

}  // namespace

TEST_CASE("geometry round trip keeps exact values") {
    Configuration c;
    c.insert_or_assign("a", Region{Box::from(Rational(1, 3), 1, Rational(-1, 20), 2), Box::from(0, 1, 0, 1)});
    c.insert_or_assign("b", Region{Box::from(0, Rational(17, 20), 0, 1)});
    const std::string text = write_geometry(c);
    CHECK(text.find("\"0.85\"") != std::string::npos);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(read_geometry(text) == c);
    CHECK(write_geometry(read_geometry(text)) == text);

    const Configuration g = read_geometry(
        R"({"format":"cdc-geometry","version":1,"regions":{"x":[[0,"0.5","9/10",1]]}})");
    CHECK(g.at("x") == Region{Box::from(0, Rational(1, 2), Rational(9, 10), 1)});
}

TEST_CASE("geometry reader rejects malformed documents") {
    for (const char* bad : {
             "not json",
             "[]",
             R"({"format":"cdc-network","version":1,"regions":{"x":[[0,1,0,1]]}})",
             R"({"format":"cdc-geometry","version":2,"regions":{"x":[[0,1,0,1]]}})",
             R"({"format":"cdc-geometry","version":1})",
             R"({"format":"cdc-geometry","version":1,"regions":{}})",
             R"({"format":"cdc-geometry","version":1,"regions":{"x":[]}})",
             R"({"format":"cdc-geometry","version":1,"regions":{"x":[[0,1,0]]}})",
             R"({"format":"cdc-geometry","version":1,"regions":{"x":[[1,0,0,1]]}})",
             R"({"format":"cdc-geometry","version":1,"regions":{"x":[[0,0.5,0,1]]}})",
             R"({"format":"cdc-geometry","version":1,"regions":{"x":[["a",1,0,1]]}})",
         })
        CHECK_THROWS_AS(read_geometry(bad), ParseError);
}

TEST_CASE("network round trip") {
    const Reduction red = compile_formula(CnfFormula{3, {clause(1, -2, 3)}});
    const std::string text = write_network(red.network);
    const Network n = read_network(text);
    CHECK(n.variables() == red.network.variables());
    CHECK(n.constraints() == red.network.constraints());
    CHECK(write_network(n) == text);

    CHECK_THROWS_AS(read_network(R"({"format":"cdc-network","version":1,"variables":["a","b"],
        "constraints":[["a","b","N:Q"]]})"),
                    ParseError);
    CHECK_THROWS_AS(read_network(R"({"format":"cdc-network","version":1,"mode":"weird","variables":[],
        "constraints":[]})"),
                    ParseError);
    CHECK_THROWS_AS(read_network(R"({"format":"cdc-network","version":1,"variables":["a","b"],
        "constraints":[["a","b","N"],["a","b","S"]]})"),
                    DuplicateConstraint);
    CHECK_THROWS_AS(read_network(R"({"format":"cdc-network","version":1,"variables":["a"],
        "constraints":[["a","b","N"]]})"),
                    InvalidNetwork);
    const Network d = read_network(R"({"format":"cdc-network","version":1,"mode":"disconnected",
        "variables":["a","b"],"constraints":[["a","b","N:S"]]})");
    CHECK(d.mode() == CalculusMode::Disconnected);
}

TEST_CASE("variable map round trip") {
    const CnfFormula f{4, {clause(1, -2, 3), clause(-2, 3, 4)}};
    const Reduction red = compile_formula(f);
    const std::string text = write_variable_map(red.map);
    const VariableMap vm = read_variable_map(text);
    CHECK(write_variable_map(vm) == text);
    // The reloaded map drives the witness just as well.
    const Assignment pi{true, false, true, true};
    CHECK(build_witness(f, pi, vm) == build_witness(f, pi, red.map));
    CHECK_THROWS_AS(read_variable_map(R"({"format":"cdc-variable-map","version":1})"), ParseError);
}

TEST_CASE("svg rendering") {
    const CnfFormula f{2, {}};
    const Reduction red = compile_formula(f);
    const Configuration c = build_witness(f, {true, false}, red.map);
    const std::string svg = render_svg(c);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<g id=\"var-f1\"") != std::string::npos);
    CHECK(svg.find("<g id=\"var-f2\"") != std::string::npos);
    CHECK(svg.find(">f1</text>") != std::string::npos);
    CHECK(render_svg(c) == svg);

    std::size_t groups = 0;
    for (std::size_t at = svg.find("<g "); at != std::string::npos; at = svg.find("<g ", at + 1)) ++groups;
    CHECK(groups == c.size());

    SvgOptions opts;
    opts.mbr_outlines = true;
    const std::string with_net = render_svg(c, opts, &red.network);
    CHECK(with_net.find("class=\"mbr\"") != std::string::npos);
    CHECK(with_net.find("<desc>") != std::string::npos);
    // Declaration order: u1 is declared first.
    CHECK(with_net.find("var-u1") < with_net.find("var-f1"));

    // North is up: a box higher in the plane has a smaller document y.
    Configuration two;
    two.insert_or_assign("low", Region{Box::from(0, 1, 0, 1)});
    two.insert_or_assign("high", Region{Box::from(0, 1, 2, 3)});
    const std::string s = render_svg(two);
    CHECK(s.find("id=\"var-high\"") < s.find("id=\"var-low\""));
    CHECK(s.find("<rect x=\"20\" y=\"20\"") != std::string::npos);   // high
    CHECK(s.find("<rect x=\"20\" y=\"220\"") != std::string::npos);  // low
    CHECK_THROWS_AS(render_svg(Configuration{}), PreconditionViolation);

    Configuration odd;
    odd.insert_or_assign("a<b&\"c\"", Region{Box::from(0, 1, 0, 1)});
    CHECK(render_svg(odd).find("a&lt;b&amp;&quot;c&quot;") != std::string::npos);
}
