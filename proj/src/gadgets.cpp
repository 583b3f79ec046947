#include "cdc/gadgets.hpp"

#include <array>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

using enum TileName;

void require_pair(const NetworkBuilder& b, std::string_view u, std::string_view v) {
    const Network& n = b.network();
    if (!n.has_variable(u) || !n.has_variable(v))
        throw InvalidNetwork("gadget over undeclared variable (" + std::string(u) + ", " + std::string(v) + ")");
    if (u == v) throw InvalidNetwork("gadget over identical variables '" + std::string(u) + "'");
}

void require_free(const NetworkBuilder& b, std::string_view u, std::string_view v) {
    if (b.network().constraint(u, v))
        throw DuplicateConstraint("pair (" + std::string(u) + ", " + std::string(v) + ") already constrained");
}

}  // namespace

void NetworkBuilder::declare(std::string name) {
    if (name.starts_with(kAuxPrefix)) throw InvalidNetwork("'" + name + "' uses the reserved auxiliary prefix");
    network_.add_variable(std::move(name));
}

std::string NetworkBuilder::fresh() {
    std::string name = std::string(kAuxPrefix) + std::to_string(next_aux_++);
    network_.add_variable(name);
    return name;
}

RARelation relation_of(RaGadget g) {
    switch (g) {
        case RaGadget::StartsFinishes: return {IARelation::s, IARelation::f};
        case RaGadget::OverlapsFinishes: return {IARelation::o, IARelation::f};
        case RaGadget::OverlapsFinishedBy: return {IARelation::o, IARelation::fi};
        case RaGadget::OverlapsEquals: return {IARelation::o, IARelation::eq};
    }
    return {};
}

std::string_view to_string(RaGadget g) {
    switch (g) {
        case RaGadget::StartsFinishes: return "s*f";
        case RaGadget::OverlapsFinishes: return "o*f";
        case RaGadget::OverlapsFinishedBy: return "o*fi";
        case RaGadget::OverlapsEquals: return "o*eq";
    }
    return "?";
}

void emit_ra(RaGadget g, std::string_view u, std::string_view v, NetworkBuilder& b) {
    require_pair(b, u, v);
    require_free(b, u, v);
    require_free(b, v, u);
    TileSet forward, backward;
    switch (g) {
        case RaGadget::StartsFinishes: forward = {O}; backward = {E, SE, S, O}; break;
        case RaGadget::OverlapsFinishes: forward = {W, O}; backward = {E, SE, S, O}; break;
        case RaGadget::OverlapsFinishedBy: forward = {S, SW, W, O}; backward = {E, O}; break;
        case RaGadget::OverlapsEquals: forward = {W, O}; backward = {E, O}; break;
    }
    b.add(u, v, forward);
    b.add(v, u, backward);
}

std::string emit_parallel(std::string_view u, std::string_view v, NetworkBuilder& b) {
    require_pair(b, u, v);
    require_free(b, v, u);
    std::string w = b.fresh();
    b.add(u, w, {E});
    b.add(w, v, {E});
    b.add(v, u, {W});
    return w;
}

std::pair<std::string, std::string> emit_ulc(std::string_view u, std::string_view v, NetworkBuilder& b) {
    require_pair(b, u, v);
    std::string w1 = b.fresh();
    std::string w2 = b.fresh();
    b.add(u, w1, {O});
    b.add(w1, u, {E, SE, S, O});
    b.add(v, w1, {O});
    b.add(w1, v, {E, SE, S});
    b.add(v, w2, {O});
    b.add(w2, v, {E, SE, S, O});
    b.add(u, w2, {O});
    b.add(w2, u, {E, SE, S});
    return {std::move(w1), std::move(w2)};
}

std::string_view to_string(Orientation o) { return o == Orientation::Horizontal ? "horizontal" : "vertical"; }

bool holds_parallel(const Region& a, const Region& b) {
    return ra_relation(mbr(a), mbr(b)) == RARelation{IARelation::pi, IARelation::eq};
}

bool holds_ulc(const Region& a, const Region& b) {
    const RARelation r = ra_relation(mbr(a), mbr(b));
    return r == RARelation{IARelation::s, IARelation::fi} || r == RARelation{IARelation::si, IARelation::f};
}

Orientation orientation(const Region& a, const Region& b) {
    const RARelation r = ra_relation(mbr(a), mbr(b));
    if (r == RARelation{IARelation::s, IARelation::fi}) return Orientation::Vertical;
    if (r == RARelation{IARelation::si, IARelation::f}) return Orientation::Horizontal;
    throw NotUlc("regions are not in the upper-left-corner relation (" + std::string(to_string(r.x)) + "*" +
                 std::string(to_string(r.y)) + ")");
}

Region witness_parallel_aux(const Region& a, const Region& b) {
    if (!holds_parallel(a, b)) throw PreconditionViolation("witness_parallel_aux needs a parallel pair");
    const Box ma = mbr(a), mb = mbr(b);
    const Rational gap = ma.x.lo() - mb.x.hi();
    // keep the usual margin when the gap is wide enough, so witness
    // coordinates stay on the 1/20 lattice
    const Rational m = gap > kAuxMargin * 2 ? kAuxMargin : gap / 3;
    return Region{Box{Interval(mb.x.hi() + m, ma.x.lo() - m), mb.y}};
}

std::pair<Region, Region> witness_ulc_aux(const Region& a, const Region& b) {
    if (!holds_ulc(a, b)) throw PreconditionViolation("witness_ulc_aux needs a pair in the upper-left-corner relation");
    const Box ma = mbr(a), mb = mbr(b);
    const Box frame = Box::from(ma.x.lo(), max(ma.x.hi(), mb.x.hi()) + kAuxMargin,
                                min(ma.y.lo(), mb.y.lo()) - kAuxMargin, ma.y.hi());
    const std::array<Region, 1> hole_b = {Region{mb}};
    const std::array<Region, 1> hole_a = {Region{ma}};
    return {region_subtract(frame, hole_b), region_subtract(frame, hole_a)};
}

}  // namespace cdc
