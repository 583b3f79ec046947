#include "cdc/witness.hpp"

#include "cdc/errors.hpp"
#include "cdc/gadgets.hpp"

namespace cdc {
namespace {

Rational hundredths(std::int64_t h) { return {h, 100}; }

// [lo, hi] x [y_lo, 1], all bounds in hundredths.
Region top_box(Rational lo, Rational hi, std::int64_t y_lo) {
    return Region{Box{Interval(lo, hi), Interval(hundredths(y_lo), 1)}};
}

const Region& at(const Configuration& c, const std::string& name) {
    auto it = c.find(name);
    if (it == c.end()) throw MissingVariable("witness has no region for '" + name + "'");
    return it->second;
}

}  // namespace

Configuration build_witness(const CnfFormula& f, const Assignment& pi, const VariableMap& vm) {
    if (pi.size() != static_cast<std::size_t>(f.num_vars))
        throw PreconditionViolation("assignment size differs from variable count");
    if (vm.variables.size() != pi.size() || !vm.frame || vm.clauses.size() != f.clauses.size())
        throw PreconditionViolation("variable map does not belong to this formula");

    Configuration c;
    const FrameNames& fr = *vm.frame;
    c.insert_or_assign(fr.w_ref, top_box(0, hundredths(50), 90));
    c.insert_or_assign(fr.f_ref, top_box(0, hundredths(50), 70));
    c.insert_or_assign(fr.nf_ref, top_box(0, hundredths(50), 40));
    c.insert_or_assign(fr.f0_ref, top_box(0, hundredths(50), 20));

    for (std::size_t k = 0; k < vm.variables.size(); ++k) {
        const VariableNames& v = vm.variables[k];
        const Rational i = static_cast<std::int64_t>(k + 1);
        c.insert_or_assign(v.f, top_box(i, i + hundredths(30), 70));
        c.insert_or_assign(v.nf, top_box(i, i + hundredths(60), 40));
        c.insert_or_assign(v.f0, top_box(i, i + hundredths(80), 20));
        if (pi[k]) {
            c.insert_or_assign(v.u, top_box(i, i + hundredths(20), 50));
            c.insert_or_assign(v.nu, top_box(i, i + hundredths(70), 60));
        } else {
            c.insert_or_assign(v.u, top_box(i, i + hundredths(50), 80));
            c.insert_or_assign(v.nu, top_box(i, i + hundredths(40), 30));
        }
    }

    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& clause = f.clauses[j];
        const ClauseNames& cn = vm.clauses[j];
        const Rational r = clause[0].variable, s = clause[1].variable, t = clause[2].variable;
        c.insert_or_assign(cn.w0, top_box(r - hundredths(5), r + hundredths(5), 90));
        c.insert_or_assign(cn.w_rs, top_box(r + hundredths(clause[0].positive ? 25 : 55), s + hundredths(5), 70));
        c.insert_or_assign(cn.w_st, top_box(s + hundredths(clause[1].positive ? 25 : 55), t + hundredths(5), 70));
        c.insert_or_assign(cn.w1, top_box(t + hundredths(clause[2].positive ? 25 : 55), t + hundredths(85), 90));

        std::vector<Region> holes;
        for (const std::string& x : cn.blockers) holes.push_back(at(c, x));
        const Box outer{Interval(r - hundredths(5), t + hundredths(85)), Interval(0, 1)};
        c.insert_or_assign(cn.v, region_subtract(outer, holes));
    }

    for (const UlcLink& link : vm.ulc_links) {
        auto [w1, w2] = witness_ulc_aux(at(c, link.u), at(c, link.v));
        c.insert_or_assign(link.w1, std::move(w1));
        c.insert_or_assign(link.w2, std::move(w2));
    }
    for (const ParallelLink& link : vm.parallel_links)
        c.insert_or_assign(link.aux, witness_parallel_aux(at(c, link.primary), at(c, link.reference)));
    return c;
}

bool witness_decides(const CnfFormula& f, const Assignment& pi) {
    const Reduction red = compile_formula(f);
    return check_configuration(red.network, build_witness(f, pi, red.map)).ok();
}

Assignment read_assignment(const Configuration& c, const VariableMap& vm) {
    Assignment pi;
    for (const VariableNames& v : vm.variables)
        pi.push_back(orientation(at(c, v.u), at(c, v.f)) == Orientation::Vertical);
    return pi;
}

Configuration scale_configuration(const Configuration& c, const Rational& factor) {
    Configuration out;
    for (const auto& [name, region] : c) out.insert_or_assign(name, scale(region, factor));
    return out;
}

}  // namespace cdc
