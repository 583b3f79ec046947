#include "cdc/network.hpp"

#include <algorithm>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

constexpr bool edge_connected_mask(unsigned bits) {
    if (bits == 0) return false;
    unsigned seen = bits & (~bits + 1);
    for (int step = 0; step < 9; ++step) {
        unsigned grow = seen;
        for (int i = 0; i < 9; ++i) {
            if (!((seen >> i) & 1U)) continue;
            if (i % 3 > 0) grow |= 1U << (i - 1);
            if (i % 3 < 2) grow |= 1U << (i + 1);
            if (i >= 3) grow |= 1U << (i - 3);
            if (i < 6) grow |= 1U << (i + 3);
        }
        seen = grow & bits;
    }
    return seen == bits;
}

constexpr int count_connected_relations() {
    int count = 0;
    for (unsigned bits = 1; bits < 512; ++bits) count += edge_connected_mask(bits) ? 1 : 0;
    return count;
}

// The connected universe is taken to be the edge-connected tile sets of the
// 3x3 grid; that hypothesis must reproduce the known count of 218.
static_assert(count_connected_relations() == 218,
              "edge-connected tile sets do not number 218; connected-universe characterization is wrong");

}  // namespace

std::string_view to_string(CalculusMode m) {
    return m == CalculusMode::Connected ? "connected" : "disconnected";
}

std::optional<CalculusMode> parse_mode(std::string_view s) {
    if (s == "connected") return CalculusMode::Connected;
    if (s == "disconnected") return CalculusMode::Disconnected;
    return std::nullopt;
}

void Network::set_mode(CalculusMode mode) {
    for (const Constraint& k : constraints_)
        if (!is_basic_relation(k.relation, mode))
            throw InvalidNetwork("'" + k.relation.str() + "' is not a basic relation in " +
                                 std::string(to_string(mode)) + " mode");
    mode_ = mode;
}

void Network::add_variable(std::string name) {
    if (name.empty()) throw InvalidNetwork("empty variable name");
    if (index_.contains(name)) throw InvalidNetwork("duplicate variable '" + name + "'");
    index_.emplace(name, variables_.size());
    variables_.push_back(std::move(name));
}

bool Network::has_variable(std::string_view name) const { return index_.contains(std::string(name)); }

std::size_t Network::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw MissingVariable("unknown variable '" + std::string(name) + "'");
    return it->second;
}

void Network::add_constraint(std::string_view from, std::string_view to, TileSet relation) {
    if (from == to) throw InvalidNetwork("constraint on identical variables '" + std::string(from) + "'");
    if (!has_variable(from) || !has_variable(to))
        throw InvalidNetwork("constraint on undeclared variable (" + std::string(from) + ", " + std::string(to) + ")");
    if (!is_basic_relation(relation, mode_))
        throw InvalidNetwork("'" + relation.str() + "' is not a basic relation in " + std::string(to_string(mode_)) +
                             " mode");
    const auto key = std::make_pair(index_of(from), index_of(to));
    if (by_pair_.contains(key))
        throw DuplicateConstraint("pair (" + std::string(from) + ", " + std::string(to) + ") already constrained");
    by_pair_.emplace(key, constraints_.size());
    constraints_.push_back(Constraint{std::string(from), std::string(to), relation});
}

std::optional<TileSet> Network::constraint(std::string_view from, std::string_view to) const {
    if (!has_variable(from) || !has_variable(to)) return std::nullopt;
    auto it = by_pair_.find(std::make_pair(index_of(from), index_of(to)));
    if (it == by_pair_.end()) return std::nullopt;
    return constraints_[it->second].relation;
}

TileSet drm(const Region& a, const Region& b) {
    const auto reference_tiles = tiles(mbr(b));
    TileSet out;
    for (const Box& box : a.boxes()) {
        const GeneralizedBox g = GeneralizedBox::from(box);
        for (TileName t : kAllTiles)
            if (open_overlap(g, reference_tiles[static_cast<std::size_t>(t)])) out.insert(t);
    }
    return out;
}

TileSet drm_rect(const Box& a, const Box& b) {
    const RARelation ra = ra_relation(a, b);
    return TileSet::product(columns_of(ra.x), rows_of(ra.y));
}

bool is_basic_relation(TileSet s, CalculusMode mode) {
    if (s.empty()) return false;
    return mode == CalculusMode::Disconnected || s.is_edge_connected();
}

std::vector<TileSet> enumerate_basic_relations(CalculusMode mode) {
    std::vector<TileSet> out;
    for (unsigned bits = 1; bits < 512; ++bits) {
        TileSet s(static_cast<std::uint16_t>(bits));
        if (is_basic_relation(s, mode)) out.push_back(s);
    }
    return out;
}

Region realize_relation(TileSet s, const Box& reference, CalculusMode mode) {
    if (!is_basic_relation(s, mode))
        throw Unrealizable("'" + s.str() + "' is not a basic relation in " + std::string(to_string(mode)) + " mode");
    // One bounded cell per tile, as wide/tall as the reference. Edge-adjacent
    // selected cells share a full side, so an edge-connected selection yields
    // a connected region.
    const Rational w = reference.x.length(), h = reference.y.length();
    const std::array<Interval, 3> cols = {Interval(reference.x.lo() - w, reference.x.lo()), reference.x,
                                          Interval(reference.x.hi(), reference.x.hi() + w)};
    const std::array<Interval, 3> rows = {Interval(reference.y.hi(), reference.y.hi() + h), reference.y,
                                          Interval(reference.y.lo() - h, reference.y.lo())};
    std::vector<Box> boxes;
    for (TileName t : kAllTiles)
        if (s.contains(t))
            boxes.push_back(Box{cols[static_cast<std::size_t>(tile_column(t))],
                                rows[static_cast<std::size_t>(tile_row(t))]});
    return Region(std::move(boxes));
}

ViolationReport check_configuration(const Network& n, const Configuration& c) {
    auto region_of = [&](const std::string& name) -> const Region& {
        auto it = c.find(name);
        if (it == c.end()) throw MissingVariable("configuration has no region for '" + name + "'");
        return it->second;
    };

    std::vector<const Constraint*> ordered;
    ordered.reserve(n.constraints().size());
    for (const Constraint& k : n.constraints()) ordered.push_back(&k);
    std::sort(ordered.begin(), ordered.end(), [&](const Constraint* a, const Constraint* b) {
        return std::make_pair(n.index_of(a->from), n.index_of(a->to)) <
               std::make_pair(n.index_of(b->from), n.index_of(b->to));
    });

    ViolationReport report;
    for (const Constraint* k : ordered) {
        const TileSet actual = drm(region_of(k->from), region_of(k->to));
        if (actual != k->relation) report.constraint_violations.push_back({k->from, k->to, k->relation, actual});
    }
    if (n.mode() == CalculusMode::Connected) {
        for (const std::string& v : n.variables()) {
            auto it = c.find(v);
            if (it != c.end() && !is_interior_connected(it->second)) report.disconnected.push_back(v);
        }
    }
    return report;
}

}  // namespace cdc
