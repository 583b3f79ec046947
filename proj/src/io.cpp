#include "cdc/io.hpp"

#include <json.hpp>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

using nlohmann::json;

json parse_document(std::string_view text, std::string_view format) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document is not a JSON object");
    if (!doc.contains("format") || doc["format"] != format)
        throw ParseError("expected format '" + std::string(format) + "'");
    if (!doc.contains("version") || doc["version"] != kFormatVersion)
        throw ParseError("unsupported " + std::string(format) + " version");
    return doc;
}

json header(std::string_view format) {
    json doc = json::object();
    doc["format"] = format;
    doc["version"] = kFormatVersion;
    return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return obj[key];
}

std::string text_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Rational number(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw ParseError("coordinates must be strings or integers, got " + v.dump());
}

std::vector<std::string> string_list(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const json& e : v) {
        if (!e.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

std::string write_geometry(const Configuration& c) {
    json doc = header("cdc-geometry");
    json regions = json::object();
    for (const auto& [name, region] : c) {
        json boxes = json::array();
        for (const Box& b : region.boxes())
            boxes.push_back({b.x.lo().decimal_str(), b.x.hi().decimal_str(), b.y.lo().decimal_str(),
                             b.y.hi().decimal_str()});
        regions[name] = std::move(boxes);
    }
    doc["regions"] = std::move(regions);
    return dump(doc);
}

Configuration read_geometry(std::string_view text) {
    const json doc = parse_document(text, "cdc-geometry");
    const json& regions = field(doc, "regions");
    if (!regions.is_object()) throw ParseError("'regions' must be an object");
    if (regions.empty()) throw ParseError("geometry has no regions");
    Configuration out;
    for (const auto& [name, boxes] : regions.items()) {
        if (!boxes.is_array() || boxes.empty()) throw ParseError("region '" + name + "' needs a nonempty box list");
        std::vector<Box> parsed;
        for (const json& b : boxes) {
            if (!b.is_array() || b.size() != 4) throw ParseError("box of '" + name + "' needs four bounds");
            try {
                parsed.push_back(Box::from(number(b[0]), number(b[1]), number(b[2]), number(b[3])));
            } catch (const InvalidGeometry& e) {
                throw ParseError("region '" + name + "': " + e.what());
            }
        }
        out.insert_or_assign(name, Region(std::move(parsed)));
    }
    return out;
}

std::string write_network(const Network& n) {
    json doc = header("cdc-network");
    doc["mode"] = to_string(n.mode());
    doc["variables"] = n.variables();
    json constraints = json::array();
    for (const Constraint& k : n.constraints()) constraints.push_back({k.from, k.to, k.relation.str()});
    doc["constraints"] = std::move(constraints);
    return dump(doc);
}

Network read_network(std::string_view text) {
    const json doc = parse_document(text, "cdc-network");
    const std::string mode_text = doc.contains("mode") ? text_field(doc, "mode") : "connected";
    const auto mode = parse_mode(mode_text);
    if (!mode) throw ParseError("unknown mode '" + mode_text + "'");
    Network n(*mode);
    for (std::string& v : string_list(field(doc, "variables"), "'variables'")) n.add_variable(std::move(v));
    const json& constraints = field(doc, "constraints");
    if (!constraints.is_array()) throw ParseError("'constraints' must be an array");
    for (const json& k : constraints) {
        if (!k.is_array() || k.size() != 3) throw ParseError("constraint must be [from, to, relation]");
        const auto parts = string_list(k, "constraint");
        n.add_constraint(parts[0], parts[1], TileSet::parse(parts[2]));
    }
    return n;
}

std::string write_variable_map(const VariableMap& vm) {
    json doc = header("cdc-variable-map");
    json vars = json::array();
    for (std::size_t i = 0; i < vm.variables.size(); ++i) {
        const VariableNames& v = vm.variables[i];
        vars.push_back({{"index", i + 1}, {"u", v.u}, {"nu", v.nu}, {"f", v.f}, {"nf", v.nf}, {"f0", v.f0}});
    }
    doc["variables"] = std::move(vars);
    if (vm.frame)
        doc["frame"] = {{"w_ref", vm.frame->w_ref}, {"f_ref", vm.frame->f_ref}, {"nf_ref", vm.frame->nf_ref},
                        {"f0_ref", vm.frame->f0_ref}};
    else
        doc["frame"] = nullptr;
    json clauses = json::array();
    for (std::size_t j = 0; j < vm.clauses.size(); ++j) {
        const ClauseNames& c = vm.clauses[j];
        clauses.push_back({{"index", j + 1}, {"v", c.v}, {"w0", c.w0}, {"w_rs", c.w_rs}, {"w_st", c.w_st},
                           {"w1", c.w1}, {"blockers", c.blockers}});
    }
    doc["clauses"] = std::move(clauses);
    json ulc = json::array();
    for (const UlcLink& l : vm.ulc_links) ulc.push_back({{"u", l.u}, {"v", l.v}, {"w1", l.w1}, {"w2", l.w2}});
    doc["ulc"] = std::move(ulc);
    json parallel = json::array();
    for (const ParallelLink& l : vm.parallel_links)
        parallel.push_back({{"primary", l.primary}, {"reference", l.reference}, {"aux", l.aux}});
    doc["parallel"] = std::move(parallel);
    return dump(doc);
}

VariableMap read_variable_map(std::string_view text) {
    const json doc = parse_document(text, "cdc-variable-map");
    VariableMap vm;
    const json& vars = field(doc, "variables");
    if (!vars.is_array()) throw ParseError("'variables' must be an array");
    for (const json& v : vars)
        vm.variables.push_back({text_field(v, "u"), text_field(v, "nu"), text_field(v, "f"), text_field(v, "nf"),
                                text_field(v, "f0")});
    if (doc.contains("frame") && !doc["frame"].is_null()) {
        const json& f = doc["frame"];
        vm.frame = FrameNames{text_field(f, "w_ref"), text_field(f, "f_ref"), text_field(f, "nf_ref"),
                              text_field(f, "f0_ref")};
    }
    const json& clauses = field(doc, "clauses");
    if (!clauses.is_array()) throw ParseError("'clauses' must be an array");
    for (const json& c : clauses) {
        ClauseNames cn{text_field(c, "v"), text_field(c, "w0"), text_field(c, "w_rs"), text_field(c, "w_st"),
                       text_field(c, "w1"), {}};
        const auto blockers = string_list(field(c, "blockers"), "'blockers'");
        if (blockers.size() != cn.blockers.size()) throw ParseError("a clause has exactly seven blockers");
        std::copy(blockers.begin(), blockers.end(), cn.blockers.begin());
        vm.clauses.push_back(std::move(cn));
    }
    const json& ulc = field(doc, "ulc");
    if (!ulc.is_array()) throw ParseError("'ulc' must be an array");
    for (const json& l : ulc)
        vm.ulc_links.push_back({text_field(l, "u"), text_field(l, "v"), text_field(l, "w1"), text_field(l, "w2")});
    const json& parallel = field(doc, "parallel");
    if (!parallel.is_array()) throw ParseError("'parallel' must be an array");
    for (const json& l : parallel)
        vm.parallel_links.push_back({text_field(l, "primary"), text_field(l, "reference"), text_field(l, "aux")});
    return vm;
}

}  // namespace cdc
