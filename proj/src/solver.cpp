#include "cdc/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint16_t;
constexpr Mask kAnyRelation = 0x1FFF;

template <class T>
struct IBox {
    T x0, x1, y0, y1;
};

template <class T>
int ia_code(T a, T b, T c, T d) {
    IARelation r;
    if (b < c) r = IARelation::p;
    else if (b == c) r = IARelation::m;
    else if (a > d) r = IARelation::pi;
    else if (a == d) r = IARelation::mi;
    else if (a == c) r = b == d ? IARelation::eq : (b < d ? IARelation::s : IARelation::si);
    else if (a < c) r = b == d ? IARelation::fi : (b < d ? IARelation::o : IARelation::di);
    else r = b == d ? IARelation::f : (b < d ? IARelation::d : IARelation::oi);
    return static_cast<int>(r);
}

Mask bit(IARelation r) { return static_cast<Mask>(1U << static_cast<int>(r)); }

Mask converse_mask(Mask m) {
    Mask out = 0;
    for (IARelation r : kAllIARelations)
        if (m & bit(r)) out |= bit(converse(r));
    return out;
}

// A connected region projects onto a dense subset of its mbr's projection,
// so it touches exactly the bands the IA relation spans. A disconnected one
// may skip the middle band but still reaches both extremes.
bool bands_fit(std::uint8_t span, std::uint8_t touched, CalculusMode mode) {
    if (mode == CalculusMode::Connected) return span == touched;
    const auto low = static_cast<std::uint8_t>(span & -span);
    const auto high = static_cast<std::uint8_t>(span & 4U ? 4U : span & 2U ? 2U : 1U);
    return (touched & ~span) == 0 && (touched & low) && (touched & high);
}

Mask relations_with_columns(std::uint8_t columns, CalculusMode mode) {
    Mask out = 0;
    for (IARelation r : kAllIARelations)
        if (bands_fit(columns_of(r), columns, mode)) out |= bit(r);
    return out;
}

Mask relations_with_rows(std::uint8_t rows, CalculusMode mode) {
    Mask out = 0;
    for (IARelation r : kAllIARelations)
        if (bands_fit(rows_of(r), rows, mode)) out |= bit(r);
    return out;
}

struct OutgoingConstraint {
    std::size_t reference;
    TileSet relation;
};

// Index-based view of a network plus the projection masks every pair must
// respect: the columns (rows) a region touches in a reference's tiles
// constrain the IA relation of the x (y) projections.
struct Problem {
    std::size_t n = 0;
    CalculusMode mode = CalculusMode::Connected;
    RegionShape shape = RegionShape::Maximal;
    std::vector<std::vector<OutgoingConstraint>> outgoing;
    std::vector<Mask> xmask, ymask;  // n*n, relation of i to j
    std::vector<std::vector<std::size_t>> neighbors;
    bool trivially_unsat = false;

    Mask& x(std::size_t i, std::size_t j) { return xmask[i * n + j]; }
    Mask& y(std::size_t i, std::size_t j) { return ymask[i * n + j]; }
    [[nodiscard]] Mask x(std::size_t i, std::size_t j) const { return xmask[i * n + j]; }
    [[nodiscard]] Mask y(std::size_t i, std::size_t j) const { return ymask[i * n + j]; }
};

Problem build_problem(const Network& net, CalculusMode mode, RegionShape shape,
                      const std::vector<RaSideConstraint>& side) {
    Problem p;
    p.n = net.variables().size();
    p.mode = mode;
    p.shape = shape;
    p.outgoing.resize(p.n);
    p.xmask.assign(p.n * p.n, kAnyRelation);
    p.ymask.assign(p.n * p.n, kAnyRelation);
    p.neighbors.resize(p.n);

    auto restrict = [&](std::size_t a, std::size_t b, Mask xm, Mask ym) {
        p.x(a, b) &= xm;
        p.y(a, b) &= ym;
        p.x(b, a) &= converse_mask(xm);
        p.y(b, a) &= converse_mask(ym);
        if (p.x(a, b) == 0 || p.y(a, b) == 0) p.trivially_unsat = true;
    };
    for (const Constraint& k : net.constraints()) {
        const std::size_t a = net.index_of(k.from), b = net.index_of(k.to);
        p.outgoing[a].push_back({b, k.relation});
        restrict(a, b, relations_with_columns(k.relation.columns(), mode), relations_with_rows(k.relation.rows(), mode));
        if (shape == RegionShape::Rectangle && !k.relation.is_product()) p.trivially_unsat = true;
    }
    for (const RaSideConstraint& s : side) {
        const std::size_t a = net.index_of(s.from), b = net.index_of(s.to);
        if (a == b) throw InvalidNetwork("side constraint on identical variables '" + s.from + "'");
        restrict(a, b, bit(s.relation.x), bit(s.relation.y));
    }
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = 0; j < p.n; ++j)
            if (i != j && (p.x(i, j) != kAnyRelation || p.y(i, j) != kAnyRelation)) p.neighbors[i].push_back(j);
    return p;
}

// Largest region with mbr `box` whose interior stays inside the allowed tiles
// of every reference. Returns its cells (in box coordinates) when some part of
// it (a connected component in Connected mode) spans the whole box and meets
// every required tile; std::nullopt otherwise.
template <class T>
std::optional<std::vector<IBox<T>>> realize(const IBox<T>& box, const std::vector<IBox<T>>& refs,
                                            const std::vector<TileSet>& relations, CalculusMode mode,
                                            RegionShape shape) {
    std::vector<T> xs = {box.x0, box.x1}, ys = {box.y0, box.y1};
    for (const IBox<T>& r : refs) {
        for (T v : {r.x0, r.x1})
            if (box.x0 < v && v < box.x1) xs.push_back(v);
        for (T v : {r.y0, r.y1})
            if (box.y0 < v && v < box.y1) ys.push_back(v);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const std::size_t nx = xs.size() - 1, ny = ys.size() - 1, k = refs.size();

    // tile[cell * k + r] = tile index of the cell with respect to reference r.
    std::vector<std::uint8_t> tile(nx * ny * k);
    std::vector<char> allowed(nx * ny, 1);
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t cell = j * nx + i;
            for (std::size_t r = 0; r < k; ++r) {
                const IBox<T>& ref = refs[r];
                const int col = xs[i + 1] <= ref.x0 ? 0 : (xs[i] >= ref.x1 ? 2 : 1);
                const int row = ys[j] >= ref.y1 ? 0 : (ys[j + 1] <= ref.y0 ? 2 : 1);
                const auto t = static_cast<std::uint8_t>(row * 3 + col);
                tile[cell * k + r] = t;
                if (!relations[r].contains(static_cast<TileName>(t))) allowed[cell] = 0;
            }
        }
    }
    if (shape == RegionShape::Rectangle && std::find(allowed.begin(), allowed.end(), 0) != allowed.end())
        return std::nullopt;

    std::vector<int> label(nx * ny, -1);
    int components = 0;
    if (mode == CalculusMode::Disconnected) {
        for (std::size_t c = 0; c < label.size(); ++c)
            if (allowed[c]) label[c] = 0;
        components = 1;
    } else {
        std::vector<std::size_t> stack;
        for (std::size_t start = 0; start < label.size(); ++start) {
            if (!allowed[start] || label[start] >= 0) continue;
            label[start] = components;
            stack.push_back(start);
            while (!stack.empty()) {
                const std::size_t c = stack.back();
                stack.pop_back();
                const std::size_t i = c % nx, j = c / nx;
                auto visit = [&](std::size_t d) {
                    if (allowed[d] && label[d] < 0) {
                        label[d] = components;
                        stack.push_back(d);
                    }
                };
                if (i > 0) visit(c - 1);
                if (i + 1 < nx) visit(c + 1);
                if (j > 0) visit(c - nx);
                if (j + 1 < ny) visit(c + nx);
            }
            ++components;
        }
    }

    for (int comp = 0; comp < components; ++comp) {
        std::vector<std::uint16_t> seen(k, 0);
        bool west = false, east = false, south = false, north = false, any = false;
        for (std::size_t c = 0; c < label.size(); ++c) {
            if (label[c] != comp) continue;
            any = true;
            const std::size_t i = c % nx, j = c / nx;
            west |= i == 0;
            east |= i + 1 == nx;
            south |= j == 0;
            north |= j + 1 == ny;
            for (std::size_t r = 0; r < k; ++r) seen[r] |= static_cast<std::uint16_t>(1U << tile[c * k + r]);
        }
        if (!any || !west || !east || !south || !north) continue;
        bool covers = true;
        for (std::size_t r = 0; r < k && covers; ++r) covers = seen[r] == relations[r].bits();
        if (!covers) continue;
        std::vector<IBox<T>> cells;
        for (std::size_t c = 0; c < label.size(); ++c)
            if (label[c] == comp) cells.push_back({xs[c % nx], xs[c % nx + 1], ys[c / nx], ys[c / nx + 1]});
        return cells;
    }
    return std::nullopt;
}

template <class T>
bool realizable(const Problem& p, std::size_t z, const std::vector<IBox<T>>& boxes) {
    std::vector<IBox<T>> refs;
    std::vector<TileSet> rels;
    for (const OutgoingConstraint& k : p.outgoing[z]) {
        refs.push_back(boxes[k.reference]);
        rels.push_back(k.relation);
    }
    if (refs.empty()) return true;
    return realize(boxes[z], refs, rels, p.mode, p.shape).has_value();
}

// Turns solved mbrs into a verified configuration.
template <class T>
Configuration materialize(const Network& net, const Problem& p, const std::vector<IBox<T>>& boxes,
                          auto&& to_rational) {
    Configuration out;
    for (std::size_t z = 0; z < p.n; ++z) {
        std::vector<IBox<T>> refs;
        std::vector<TileSet> rels;
        for (const OutgoingConstraint& k : p.outgoing[z]) {
            refs.push_back(boxes[k.reference]);
            rels.push_back(k.relation);
        }
        std::vector<IBox<T>> cells = {boxes[z]};
        if (!refs.empty()) {
            auto realized = realize(boxes[z], refs, rels, p.mode, p.shape);
            if (!realized) throw std::logic_error("solver produced an unrealizable variable");
            cells = std::move(*realized);
        }
        std::vector<Box> region;
        for (const IBox<T>& c : cells)
            region.push_back(Box::from(to_rational(c.x0), to_rational(c.x1), to_rational(c.y0), to_rational(c.y1)));
        out.insert_or_assign(net.variables()[z], Region(canonical_boxes(Region(std::move(region)))));
    }
    return out;
}

void require_sound(const Network& net, const Configuration& c) {
    if (!check_configuration(net, c).ok()) throw std::logic_error("solver produced a configuration that fails verification");
}

// ---------------------------------------------------------------------------
// Scenario search for solve_rectangles.
//
// Only pairs that matter are branched on: constrained pairs and pairs of
// variables that serve as references of the same primary (the realization of
// a primary depends on how its references are ordered among themselves). For
// each such pair an atomic IA relation is chosen per axis; global consistency
// of the chosen relations is decided exactly on the endpoint order graph.

// Endpoints 2v (low) and 2v+1 (high) of variable v on one axis.
class PointOrder {
public:
    explicit PointOrder(std::size_t variables) : points_(2 * variables) {}

    void push_interval(std::size_t v) { edges_.push_back({2 * v, 2 * v + 1, true}); }
    void push_relation(std::size_t a, std::size_t b, IARelation r) {
        const std::size_t a0 = 2 * a, a1 = 2 * a + 1, b0 = 2 * b, b1 = 2 * b + 1;
        auto lt = [&](std::size_t x, std::size_t y) { edges_.push_back({x, y, true}); };
        auto eq = [&](std::size_t x, std::size_t y) { edges_.push_back({x, y, false}); };
        switch (r) {
            case IARelation::p: lt(a1, b0); break;
            case IARelation::m: eq(a1, b0); break;
            case IARelation::o: lt(a0, b0); lt(b0, a1); lt(a1, b1); break;
            case IARelation::s: eq(a0, b0); lt(a1, b1); break;
            case IARelation::d: lt(b0, a0); lt(a1, b1); break;
            case IARelation::f: lt(b0, a0); eq(a1, b1); break;
            case IARelation::eq: eq(a0, b0); eq(a1, b1); break;
            case IARelation::pi: lt(b1, a0); break;
            case IARelation::mi: eq(a0, b1); break;
            case IARelation::oi: lt(b0, a0); lt(a0, b1); lt(b1, a1); break;
            case IARelation::si: eq(a0, b0); lt(b1, a1); break;
            case IARelation::di: lt(a0, b0); lt(b1, a1); break;
            case IARelation::fi: lt(a0, b0); eq(a1, b1); break;
        }
    }
    [[nodiscard]] std::size_t mark() const { return edges_.size(); }
    void pop_to(std::size_t mark) { edges_.resize(mark); }

    // Assigns each endpoint the length of the longest strict chain below it,
    // which is the tightest solution. Returns the number of distinct values
    // used, or 0 when the constraints are contradictory.
    std::size_t solve(std::vector<std::int64_t>& level) {
        parent_.resize(points_);
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        for (const Edge& e : edges_)
            if (!e.strict) parent_[find(e.a)] = find(e.b);
        indegree_.assign(points_, 0);
        adj_.assign(points_, {});
        for (const Edge& e : edges_) {
            if (!e.strict) continue;
            const std::size_t a = find(e.a), b = find(e.b);
            if (a == b) return 0;
            adj_[a].push_back(b);
            ++indegree_[b];
        }
        std::vector<std::int64_t> depth(points_, 0);
        std::vector<std::size_t> queue;
        std::size_t roots = 0;
        for (std::size_t p = 0; p < points_; ++p)
            if (find(p) == p) {
                ++roots;
                if (indegree_[p] == 0) queue.push_back(p);
            }
        std::size_t seen = 0;
        std::int64_t top = 0;
        while (seen < queue.size()) {
            const std::size_t p = queue[seen++];
            top = std::max(top, depth[p]);
            for (std::size_t q : adj_[p]) {
                depth[q] = std::max(depth[q], depth[p] + 1);
                if (--indegree_[q] == 0) queue.push_back(q);
            }
        }
        if (seen != roots) return 0;
        level.resize(points_);
        for (std::size_t p = 0; p < points_; ++p) level[p] = depth[find(p)];
        return static_cast<std::size_t>(top) + 1;
    }

private:
    struct Edge {
        std::size_t a, b;
        bool strict;
    };
    std::size_t find(std::size_t p) {
        while (parent_[p] != p) p = parent_[p] = parent_[parent_[p]];
        return p;
    }

    std::size_t points_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> parent_, indegree_;
    std::vector<std::vector<std::size_t>> adj_;
};

// Pairs whose relative position is branched on.
std::vector<std::vector<std::size_t>> linked_pairs(const Problem& p) {
    std::vector<std::vector<bool>> linked(p.n, std::vector<bool>(p.n, false));
    auto link = [&](std::size_t a, std::size_t b) {
        if (a != b) linked[a][b] = linked[b][a] = true;
    };
    for (std::size_t a = 0; a < p.n; ++a) {
        for (std::size_t b : p.neighbors[a]) link(a, b);
        for (const OutgoingConstraint& x : p.outgoing[a])
            for (const OutgoingConstraint& y : p.outgoing[a]) link(x.reference, y.reference);
    }
    std::vector<std::vector<std::size_t>> out(p.n);
    for (std::size_t a = 0; a < p.n; ++a)
        for (std::size_t b = 0; b < p.n; ++b)
            if (linked[a][b]) out[a].push_back(b);
    return out;
}

class ScenarioSearch {
public:
    ScenarioSearch(const Problem& p, const std::vector<std::vector<std::size_t>>& links, std::vector<std::size_t> order,
                   int grid, std::uint64_t node_budget, std::chrono::milliseconds time_budget, std::uint64_t& nodes)
        : p_(p), links_(links), order_(std::move(order)), max_values_(static_cast<std::size_t>(grid) + 1),
          node_budget_(node_budget), time_budget_(time_budget), nodes_(nodes), start_(Clock::now()),
          xs_(p.n), ys_(p.n), boxes_(p.n), placed_(p.n, false) {
        std::vector<std::size_t> depth_of(p.n, 0);
        for (std::size_t d = 0; d < order_.size(); ++d) depth_of[order_[d]] = d;
        finalize_at_.resize(order_.size());
        for (std::size_t z : order_) {
            std::size_t ready = depth_of[z];
            for (const OutgoingConstraint& k : p_.outgoing[z]) ready = std::max(ready, depth_of[k.reference]);
            finalize_at_[ready].push_back(z);
        }
    }

    enum class Outcome { Found, Exhausted, OutOfBudget };

    Outcome run() {
        const bool found = place(0);
        if (out_of_budget_) return Outcome::OutOfBudget;
        return found ? Outcome::Found : Outcome::Exhausted;
    }

    // Tightest integer boxes of the solution (valid after Found).
    [[nodiscard]] const std::vector<IBox<std::int64_t>>& boxes() const { return boxes_; }

private:
    bool tick() {
        ++nodes_;
        if (node_budget_ != 0 && nodes_ > node_budget_) out_of_budget_ = true;
        if (time_budget_.count() != 0 && (nodes_ & 1023U) == 0 && Clock::now() - start_ > time_budget_)
            out_of_budget_ = true;
        return !out_of_budget_;
    }

    bool consistent(PointOrder& axis, std::vector<std::int64_t>& level) {
        const std::size_t used = axis.solve(level);
        return used != 0 && used <= max_values_;
    }

    bool place(std::size_t depth) {
        if (depth == order_.size()) return true;
        const std::size_t v = order_[depth];
        std::vector<std::size_t> earlier;
        for (std::size_t u : links_[v])
            if (placed_[u]) earlier.push_back(u);
        const std::size_t xm = xs_.mark(), ym = ys_.mark();
        xs_.push_interval(v);
        ys_.push_interval(v);
        placed_[v] = true;
        const bool found = branch_x(depth, v, earlier, 0);
        placed_[v] = false;
        xs_.pop_to(xm);
        ys_.pop_to(ym);
        return found;
    }

    bool branch_x(std::size_t depth, std::size_t v, const std::vector<std::size_t>& earlier, std::size_t i) {
        if (i == earlier.size()) return branch_y(depth, v, earlier, 0);
        const std::size_t u = earlier[i];
        for (IARelation r : kAllIARelations) {
            if (!((p_.x(v, u) >> static_cast<int>(r)) & 1U)) continue;
            if (!tick()) return false;
            const std::size_t m = xs_.mark();
            xs_.push_relation(v, u, r);
            if (consistent(xs_, xlevel_) && branch_x(depth, v, earlier, i + 1)) return true;
            xs_.pop_to(m);
            if (out_of_budget_) return false;
        }
        return false;
    }

    bool branch_y(std::size_t depth, std::size_t v, const std::vector<std::size_t>& earlier, std::size_t i) {
        if (i == earlier.size()) return finalize(depth);
        const std::size_t u = earlier[i];
        for (IARelation r : kAllIARelations) {
            if (!((p_.y(v, u) >> static_cast<int>(r)) & 1U)) continue;
            if (!tick()) return false;
            const std::size_t m = ys_.mark();
            ys_.push_relation(v, u, r);
            if (consistent(ys_, ylevel_) && branch_y(depth, v, earlier, i + 1)) return true;
            ys_.pop_to(m);
            if (out_of_budget_) return false;
        }
        return false;
    }

    bool finalize(std::size_t depth) {
        if (!consistent(xs_, xlevel_) || !consistent(ys_, ylevel_)) return false;
        if (!finalize_at_[depth].empty()) {
            load_boxes();
            for (std::size_t z : finalize_at_[depth])
                if (!realizable(p_, z, boxes_)) return false;
        }
        if (depth + 1 == order_.size()) {
            load_boxes();
            return true;
        }
        return place(depth + 1);
    }

    void load_boxes() {
        for (std::size_t v : order_) {
            if (!placed_[v]) continue;
            boxes_[v] = {xlevel_[2 * v], xlevel_[2 * v + 1], ylevel_[2 * v], ylevel_[2 * v + 1]};
        }
    }

    const Problem& p_;
    const std::vector<std::vector<std::size_t>>& links_;
    std::vector<std::size_t> order_;
    std::size_t max_values_;
    std::uint64_t node_budget_;
    std::chrono::milliseconds time_budget_;
    std::uint64_t& nodes_;
    Clock::time_point start_;
    bool out_of_budget_ = false;

    PointOrder xs_, ys_;
    std::vector<std::int64_t> xlevel_, ylevel_;
    std::vector<IBox<std::int64_t>> boxes_;
    std::vector<bool> placed_;
    std::vector<std::vector<std::size_t>> finalize_at_;
};

// Connected components of the link graph, each listed in search order:
// hinted variables first, then repeatedly the variable with most links to
// those already ordered (declaration order breaks ties).
std::vector<std::vector<std::size_t>> search_orders(const Network& net, const std::vector<std::vector<std::size_t>>& links,
                                                    const std::vector<std::string>& hint) {
    const std::size_t n = links.size();
    std::vector<std::size_t> comp(n, n);
    std::size_t ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != n) continue;
        std::vector<std::size_t> stack = {s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : links[v])
                if (comp[u] == n) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }

    std::vector<std::vector<std::size_t>> orders(ncomp);
    std::vector<bool> ordered(n, false);
    std::vector<std::size_t> weight(n, 0);
    auto take = [&](std::size_t v) {
        ordered[v] = true;
        orders[comp[v]].push_back(v);
        for (std::size_t u : links[v]) ++weight[u];
    };
    for (const std::string& name : hint) {
        const std::size_t v = net.index_of(name);
        if (!ordered[v]) take(v);
    }
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::size_t members = 0;
        for (std::size_t v = 0; v < n; ++v) members += comp[v] == c ? 1 : 0;
        while (orders[c].size() < members) {
            std::size_t best = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (comp[v] != c || ordered[v]) continue;
                const bool better = best == n || weight[v] > weight[best] ||
                                    (weight[v] == weight[best] && links[v].size() > links[best].size());
                if (better) best = v;
            }
            take(best);
        }
    }
    return orders;
}

}  // namespace

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::NoRectSolution: return "no-rect-solution";
        case SolveStatus::NoSolutionAtScale: return "no-solution-at-scale";
        case SolveStatus::Timeout: return "timeout";
    }
    return "?";
}

SolveResult solve_rectangles(const Network& net, const RectSearchParams& params) {
    const int grid = params.grid > 0 ? params.grid : std::max(2, 2 * static_cast<int>(net.variables().size()));
    if (grid < 2) throw InvalidNetwork("grid bound must be at least 2");
    const Problem p = build_problem(net, net.mode(), params.shape, params.side_constraints);
    SolveResult result;
    if (p.trivially_unsat) {
        result.status = SolveStatus::NoRectSolution;
        return result;
    }

    const auto links = linked_pairs(p);
    std::vector<IBox<std::int64_t>> solution(p.n);
    for (const std::vector<std::size_t>& order : search_orders(net, links, params.order_hint)) {
        ScenarioSearch search(p, links, order, grid, params.node_budget, params.time_budget, result.nodes);
        switch (search.run()) {
            case ScenarioSearch::Outcome::OutOfBudget: result.status = SolveStatus::Timeout; return result;
            case ScenarioSearch::Outcome::Exhausted: result.status = SolveStatus::NoRectSolution; return result;
            case ScenarioSearch::Outcome::Found: break;
        }
        for (std::size_t v : order) solution[v] = search.boxes()[v];
    }
    Configuration c = materialize(net, p, solution, [](std::int64_t v) { return Rational(v); });
    require_sound(net, c);
    result.status = SolveStatus::Solved;
    result.configuration = std::move(c);
    return result;
}

SolveResult solve_regions(const Network& net, const CellSearchParams& params) {
    if (net.variables().size() > 3) throw TooLarge("cell search handles at most 3 variables");
    if (params.cells < 1 || params.cells > 6) throw TooLarge("cell search handles grids of 1 to 6 cells per side");
    const CalculusMode mode = params.mode.value_or(net.mode());
    const Problem p = build_problem(net, mode, RegionShape::Maximal, {});
    SolveResult result;
    result.status = SolveStatus::NoSolutionAtScale;
    if (p.trivially_unsat) return result;

    using I = std::int64_t;
    const I k = params.cells;
    std::vector<std::pair<I, I>> spans;
    for (I lo = 0; lo < k; ++lo)
        for (I hi = lo + 1; hi <= k; ++hi) spans.emplace_back(lo, hi);

    std::vector<IBox<I>> boxes(p.n);
    // Depth-first over variables in declaration order; each variable is
    // realized once every variable up to it is placed.
    auto search = [&](auto&& self, std::size_t v) -> bool {
        if (v == p.n) return true;
        for (const auto& [x0, x1] : spans) {
            bool xok = true;
            for (std::size_t u = 0; u < v && xok; ++u)
                xok = (p.x(v, u) >> ia_code(x0, x1, boxes[u].x0, boxes[u].x1)) & 1U;
            if (!xok) continue;
            for (const auto& [y0, y1] : spans) {
                ++result.nodes;
                bool ok = true;
                for (std::size_t u = 0; u < v && ok; ++u)
                    ok = (p.y(v, u) >> ia_code(y0, y1, boxes[u].y0, boxes[u].y1)) & 1U;
                if (!ok) continue;
                boxes[v] = {x0, x1, y0, y1};
                for (std::size_t z = 0; z <= v && ok; ++z) {
                    bool ready = true;
                    for (const OutgoingConstraint& c : p.outgoing[z]) ready = ready && c.reference <= v;
                    const bool newly = z == v || std::any_of(p.outgoing[z].begin(), p.outgoing[z].end(),
                                                             [&](const OutgoingConstraint& c) { return c.reference == v; });
                    if (ready && newly) ok = realizable(p, z, boxes);
                }
                if (ok && self(self, v + 1)) return true;
            }
        }
        return false;
    };
    if (!search(search, 0)) return result;

    Network copy = net;
    copy.set_mode(mode);
    Configuration c = materialize(net, p, boxes, [](I v) { return Rational(v); });
    require_sound(copy, c);
    result.status = SolveStatus::Solved;
    result.configuration = std::move(c);
    return result;
}

}  // namespace cdc
