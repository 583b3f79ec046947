#include "cdc/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

using enum TileName;

std::string idx(int i) { return std::to_string(i); }

const VariableNames& names_of(const VariableMap& vm, int variable) {
    if (variable < 1 || static_cast<std::size_t>(variable) > vm.variables.size())
        throw InvalidNetwork("clause refers to uncompiled variable " + idx(variable));
    return vm.variables[static_cast<std::size_t>(variable - 1)];
}

void link_parallel(std::string primary, std::string reference, NetworkBuilder& b, VariableMap& vm) {
    std::string aux = emit_parallel(primary, reference, b);
    vm.parallel_links.push_back({std::move(primary), std::move(reference), std::move(aux)});
}

void link_ulc(const std::string& u, const std::string& v, NetworkBuilder& b, VariableMap& vm) {
    auto [w1, w2] = emit_ulc(u, v, b);
    vm.ulc_links.push_back({u, v, std::move(w1), std::move(w2)});
}

}  // namespace

Clause::Clause(Literal a, Literal b, Literal c) : literals_{a, b, c} {
    std::sort(literals_.begin(), literals_.end(),
              [](const Literal& x, const Literal& y) { return x.variable < y.variable; });
    for (const Literal& l : literals_)
        if (l.variable < 1) throw NotThreeSat("literal over non-positive variable index");
    if (literals_[0].variable == literals_[1].variable || literals_[1].variable == literals_[2].variable)
        throw NotThreeSat("clause needs three distinct variables");
}

RawCnf parse_dimacs_raw(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    RawCnf out;
    bool have_header = false;
    long declared_clauses = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == 'c') continue;
        if (first == "%") break;
        if (first == "p") {
            std::string fmt;
            long n = -1;
            if (have_header || !(ls >> fmt >> n >> declared_clauses) || fmt != "cnf" || n < 0 || declared_clauses < 0)
                throw ParseError("malformed DIMACS header: '" + line + "'");
            out.num_vars = static_cast<int>(n);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("clause data before 'p cnf' header");
        std::istringstream data(line);
        std::string token;
        while (data >> token) {
            char* end = nullptr;
            const long lit = std::strtol(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0') throw ParseError("bad literal '" + token + "'");
            if (lit == 0) {
                out.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(lit) > out.num_vars)
                throw ParseError("literal " + token + " exceeds declared variable count");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) throw ParseError("last clause is not terminated by 0");
    if (static_cast<long>(out.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(out.clauses.size()));
    return out;
}

CnfFormula parse_dimacs(std::string_view text) {
    const RawCnf raw = parse_dimacs_raw(text);
    CnfFormula f{raw.num_vars, {}};
    for (const auto& c : raw.clauses) {
        if (c.size() != 3) throw NotThreeSat("clause with " + std::to_string(c.size()) + " literals");
        auto lit = [](int v) { return Literal{std::abs(v), v > 0}; };
        f.clauses.emplace_back(lit(c[0]), lit(c[1]), lit(c[2]));
    }
    return f;
}

CnfFormula normalize_to_3sat(const RawCnf& raw) {
    CnfFormula f{raw.num_vars, {}};
    auto fresh = [&f] { return ++f.num_vars; };
    auto lit = [](int v) { return Literal{std::abs(v), v > 0}; };
    auto emit = [&](int a, int b, int c) { f.clauses.emplace_back(lit(a), lit(b), lit(c)); };

    for (const auto& clause : raw.clauses) {
        std::vector<int> lits;
        std::set<int> seen;
        bool tautology = false;
        for (int l : clause) {
            if (seen.contains(-l)) tautology = true;
            if (seen.insert(l).second) lits.push_back(l);
        }
        if (tautology) continue;
        switch (lits.size()) {
            case 0: {
                const int a = fresh(), b = fresh(), c = fresh();
                for (int mask = 0; mask < 8; ++mask)
                    emit(mask & 1 ? -a : a, mask & 2 ? -b : b, mask & 4 ? -c : c);
                break;
            }
            case 1: {
                const int a = fresh(), b = fresh();
                for (int mask = 0; mask < 4; ++mask) emit(lits[0], mask & 1 ? -a : a, mask & 2 ? -b : b);
                break;
            }
            case 2: {
                const int a = fresh();
                emit(lits[0], lits[1], a);
                emit(lits[0], lits[1], -a);
                break;
            }
            case 3: emit(lits[0], lits[1], lits[2]); break;
            default: {
                int link = fresh();
                emit(lits[0], lits[1], link);
                for (std::size_t k = 2; k + 2 < lits.size(); ++k) {
                    const int next = fresh();
                    emit(-link, lits[k], next);
                    link = next;
                }
                emit(-link, lits[lits.size() - 2], lits.back());
                break;
            }
        }
    }
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& l : c.literals()) out << (l.positive ? l.variable : -l.variable) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(f.num_vars))
        throw PreconditionViolation("assignment size differs from variable count");
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
        return std::any_of(c.literals().begin(), c.literals().end(), [&](const Literal& l) {
            return a[static_cast<std::size_t>(l.variable - 1)] == l.positive;
        });
    });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    if (f.num_vars > 24) throw TooLarge("brute-force SAT limited to 24 variables");
    const std::uint32_t total = 1U << f.num_vars;
    Assignment a(static_cast<std::size_t>(f.num_vars));
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < f.num_vars; ++i) a[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

Assignment parse_assignment(std::string_view text, int num_vars) {
    Assignment a(static_cast<std::size_t>(num_vars));
    std::vector<bool> set(static_cast<std::size_t>(num_vars), false);
    std::string buf(text);
    std::istringstream in(buf);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("assignment item '" + item + "' lacks '='");
        char* end = nullptr;
        const long var = std::strtol(item.c_str(), &end, 10);
        if (end != item.c_str() + eq || var < 1 || var > num_vars)
            throw ParseError("bad variable in assignment item '" + item + "'");
        const std::string value = item.substr(eq + 1);
        bool truth;
        if (value == "T" || value == "t" || value == "true" || value == "1") truth = true;
        else if (value == "F" || value == "f" || value == "false" || value == "0") truth = false;
        else throw ParseError("bad truth value in assignment item '" + item + "'");
        const auto k = static_cast<std::size_t>(var - 1);
        if (set[k]) throw ParseError("variable " + std::to_string(var) + " assigned twice");
        set[k] = true;
        a[k] = truth;
    }
    for (std::size_t k = 0; k < set.size(); ++k)
        if (!set[k]) throw ParseError("variable " + std::to_string(k + 1) + " is unassigned");
    return a;
}

void compile_variable(int i, NetworkBuilder& b, VariableMap& vm) {
    if (i != static_cast<int>(vm.variables.size()) + 1)
        throw AlreadyCompiled("variable " + idx(i) + " compiled out of order or twice");
    VariableNames v{"u" + idx(i), "nu" + idx(i), "f" + idx(i), "nf" + idx(i), "f0_" + idx(i)};
    for (const std::string* name : {&v.u, &v.nu, &v.f, &v.nf, &v.f0}) b.declare(*name);

    b.add(v.u, v.nf, {O});
    b.add(v.f, v.nu, {O});
    link_ulc(v.u, v.f, b, vm);
    link_ulc(v.nu, v.nf, b, vm);
    link_ulc(v.u, v.nu, b, vm);
    emit_ra(RaGadget::StartsFinishes, v.f, v.nf, b);
    emit_ra(RaGadget::StartsFinishes, v.nu, v.f0, b);
    emit_ra(RaGadget::StartsFinishes, v.nf, v.f0, b);
    vm.variables.push_back(std::move(v));
}

void compile_frame(int n, NetworkBuilder& b, VariableMap& vm) {
    if (vm.frame) throw AlreadyCompiled("reference frame compiled twice");
    if (static_cast<int>(vm.variables.size()) != n)
        throw PreconditionViolation("reference frame needs all " + idx(n) + " variables compiled first");
    FrameNames fr{"w_ref", "f_ref", "nf_ref", "f0_ref"};
    for (const std::string* name : {&fr.w_ref, &fr.f_ref, &fr.nf_ref, &fr.f0_ref}) b.declare(*name);

    b.add(fr.w_ref, fr.f_ref, {O});
    b.add(fr.f_ref, fr.nf_ref, {O});
    b.add(fr.nf_ref, fr.f0_ref, {O});
    b.add(fr.f0_ref, fr.nf_ref, {S, O});
    b.add(fr.nf_ref, fr.f_ref, {S, O});
    b.add(fr.f_ref, fr.w_ref, {S, O});

    if (n >= 1) {
        const VariableNames& first = vm.variables.front();
        link_parallel(first.f, fr.f_ref, b, vm);
        link_parallel(first.nf, fr.nf_ref, b, vm);
        link_parallel(first.f0, fr.f0_ref, b, vm);
    }
    for (int i = 1; i < n; ++i) {
        const VariableNames prev = vm.variables[static_cast<std::size_t>(i - 1)];
        const VariableNames next = vm.variables[static_cast<std::size_t>(i)];
        link_parallel(next.f, prev.f, b, vm);
        link_parallel(next.nf, prev.nf, b, vm);
        link_parallel(next.f0, prev.f0, b, vm);
    }
    vm.frame = std::move(fr);
}

void compile_clause(const Clause& c, NetworkBuilder& b, VariableMap& vm) {
    if (!vm.frame) throw PreconditionViolation("clause gadgets need the reference frame");
    const std::string j = idx(static_cast<int>(vm.clauses.size()) + 1);
    ClauseNames cn;
    cn.v = "v_c" + j;
    cn.w0 = "w0_c" + j;
    cn.w_rs = "wrs_c" + j;
    cn.w_st = "wst_c" + j;
    cn.w1 = "w1_c" + j;
    for (const std::string* name : {&cn.v, &cn.w0, &cn.w_rs, &cn.w_st, &cn.w1}) b.declare(*name);

    const VariableNames& r = names_of(vm, c[0].variable);
    const VariableNames& s = names_of(vm, c[1].variable);
    const VariableNames& t = names_of(vm, c[2].variable);

    // Piers and their bridging frames.
    link_parallel(cn.w0, vm.frame->w_ref, b, vm);
    link_parallel(cn.w1, vm.frame->w_ref, b, vm);
    emit_ra(RaGadget::OverlapsFinishes, cn.w0, r.f, b);
    if (c[0].positive) emit_ra(RaGadget::OverlapsEquals, r.f, cn.w_rs, b);
    else emit_ra(RaGadget::OverlapsFinishedBy, r.nf, cn.w_rs, b);
    emit_ra(RaGadget::OverlapsEquals, cn.w_rs, s.f, b);
    if (c[1].positive) emit_ra(RaGadget::OverlapsEquals, s.f, cn.w_st, b);
    else emit_ra(RaGadget::OverlapsFinishedBy, s.nf, cn.w_st, b);
    emit_ra(RaGadget::OverlapsEquals, cn.w_st, t.f, b);
    emit_ra(RaGadget::OverlapsFinishedBy, c[2].positive ? t.f : t.nf, cn.w1, b);

    // Gap condition.
    auto dual = [](const VariableNames& names, const Literal& l) { return l.positive ? names.u : names.nu; };
    cn.blockers = {cn.w0, dual(r, c[0]), cn.w_rs, dual(s, c[1]), cn.w_st, dual(t, c[2]), cn.w1};
    for (const std::string& x : cn.blockers) b.add(x, cn.v, {O});
    b.add(cn.v, cn.w0, {E, SE, S});
    b.add(cn.v, cn.w1, {S, SW, W});
    for (std::size_t k = 1; k + 1 < cn.blockers.size(); ++k) b.add(cn.v, cn.blockers[k], {E, SE, S, SW, W});

    vm.clauses.push_back(std::move(cn));
}

Reduction compile_formula(const CnfFormula& f, CalculusMode mode) {
    for (const Clause& c : f.clauses)
        for (const Literal& l : c.literals())
            if (l.variable > f.num_vars) throw NotThreeSat("literal over undeclared variable " + idx(l.variable));
    NetworkBuilder b(mode);
    VariableMap vm;
    for (int i = 1; i <= f.num_vars; ++i) compile_variable(i, b, vm);
    compile_frame(f.num_vars, b, vm);
    for (const Clause& c : f.clauses) compile_clause(c, b, vm);
    return Reduction{std::move(b).release(), std::move(vm)};
}

std::size_t expected_variable_count(int n, std::size_t m) {
    return 14 * static_cast<std::size_t>(n) + 4 + 7 * m;
}

std::size_t expected_constraint_count(int n, std::size_t m) {
    return 41 * static_cast<std::size_t>(n) + 32 * m + 6;
}

}  // namespace cdc
