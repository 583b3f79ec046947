#include "cdc/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "cdc/errors.hpp"

namespace cdc {

Interval::Interval(Rational lo, Rational hi) : lo_(lo), hi_(hi) {
    if (!(lo_ < hi_)) throw InvalidGeometry("degenerate interval [" + lo_.str() + ", " + hi_.str() + "]");
}

Region::Region(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    if (boxes_.empty()) throw InvalidGeometry("region needs at least one box");
}

namespace {

constexpr std::array<std::string_view, 13> kIANames = {"p", "m", "o", "s", "d", "f", "eq",
                                                        "pi", "mi", "oi", "si", "di", "fi"};

// Occupancy grid over the distinct box coordinates. Cell (i, j) spans
// [xs[i], xs[i+1]] x [ys[j], ys[j+1]].
struct CellGrid {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    std::vector<char> filled;

    [[nodiscard]] std::size_t nx() const { return xs.size() - 1; }
    [[nodiscard]] std::size_t ny() const { return ys.size() - 1; }
    char& at(std::size_t i, std::size_t j) { return filled[j * nx() + i]; }
    [[nodiscard]] char at(std::size_t i, std::size_t j) const { return filled[j * nx() + i]; }

    [[nodiscard]] Box cell(std::size_t i, std::size_t j) const {
        return Box{Interval(xs[i], xs[i + 1]), Interval(ys[j], ys[j + 1])};
    }
};

void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t index_of(const std::vector<Rational>& v, const Rational& value) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), value) - v.begin());
}

CellGrid grid_over(std::span<const Box> boxes, std::span<const Box> extra_cuts = {}) {
    CellGrid g;
    for (auto list : {boxes, extra_cuts}) {
        for (const Box& b : list) {
            g.xs.push_back(b.x.lo());
            g.xs.push_back(b.x.hi());
            g.ys.push_back(b.y.lo());
            g.ys.push_back(b.y.hi());
        }
    }
    sort_unique(g.xs);
    sort_unique(g.ys);
    g.filled.assign(g.nx() * g.ny(), 0);
    return g;
}

void paint(CellGrid& g, const Box& b, char value) {
    const std::size_t i0 = index_of(g.xs, b.x.lo()), i1 = index_of(g.xs, b.x.hi());
    const std::size_t j0 = index_of(g.ys, b.y.lo()), j1 = index_of(g.ys, b.y.hi());
    for (std::size_t j = j0; j < j1 && j < g.ny(); ++j)
        for (std::size_t i = i0; i < i1 && i < g.nx(); ++i) g.at(i, j) = value;
}

// Horizontal runs per row, merged vertically when consecutive rows carry an
// identical run.
std::vector<Box> merge_cells(const CellGrid& g) {
    struct Open {
        std::size_t i0, i1, j0;
    };
    std::vector<Box> out;
    std::vector<Open> open;
    for (std::size_t j = 0; j <= g.ny(); ++j) {
        std::vector<std::pair<std::size_t, std::size_t>> runs;
        if (j < g.ny()) {
            for (std::size_t i = 0; i < g.nx();) {
                if (!g.at(i, j)) { ++i; continue; }
                std::size_t k = i;
                while (k < g.nx() && g.at(k, j)) ++k;
                runs.emplace_back(i, k);
                i = k;
            }
        }
        std::vector<Open> next;
        for (const Open& o : open) {
            auto it = std::find(runs.begin(), runs.end(), std::make_pair(o.i0, o.i1));
            if (it != runs.end()) {
                next.push_back(o);
                runs.erase(it);
            } else {
                out.push_back(Box{Interval(g.xs[o.i0], g.xs[o.i1]), Interval(g.ys[o.j0], g.ys[j])});
            }
        }
        for (auto [i0, i1] : runs) next.push_back({i0, i1, j});
        open = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
        if (a.y.lo() != b.y.lo()) return a.y.lo() < b.y.lo();
        return a.x.lo() < b.x.lo();
    });
    return out;
}

// Labels edge-connected components of filled cells; returns labels (-1 for
// empty cells) and the component count.
std::pair<std::vector<int>, int> label_components(const CellGrid& g) {
    std::vector<int> label(g.filled.size(), -1);
    int count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t j = 0; j < g.ny(); ++j) {
        for (std::size_t i = 0; i < g.nx(); ++i) {
            if (!g.at(i, j) || label[j * g.nx() + i] >= 0) continue;
            label[j * g.nx() + i] = count;
            stack.emplace_back(i, j);
            while (!stack.empty()) {
                auto [ci, cj] = stack.back();
                stack.pop_back();
                auto visit = [&](std::size_t ni, std::size_t nj) {
                    const std::size_t idx = nj * g.nx() + ni;
                    if (g.at(ni, nj) && label[idx] < 0) {
                        label[idx] = count;
                        stack.emplace_back(ni, nj);
                    }
                };
                if (ci > 0) visit(ci - 1, cj);
                if (ci + 1 < g.nx()) visit(ci + 1, cj);
                if (cj > 0) visit(ci, cj - 1);
                if (cj + 1 < g.ny()) visit(ci, cj + 1);
            }
            ++count;
        }
    }
    return {std::move(label), count};
}

CellGrid occupancy(const Region& r) {
    CellGrid g = grid_over(r.boxes());
    for (const Box& b : r.boxes()) paint(g, b, 1);
    return g;
}

// Strict lower < upper where either side may be infinite.
bool bound_less(const std::optional<Rational>& lower, const std::optional<Rational>& upper) {
    if (!lower || !upper) return true;
    return *lower < *upper;
}

}  // namespace

std::string_view to_string(IARelation r) { return kIANames[static_cast<std::size_t>(r)]; }

std::optional<IARelation> parse_ia_relation(std::string_view s) {
    for (std::size_t i = 0; i < kIANames.size(); ++i)
        if (kIANames[i] == s) return static_cast<IARelation>(i);
    return std::nullopt;
}

IARelation converse(IARelation r) {
    switch (r) {
        case IARelation::p: return IARelation::pi;
        case IARelation::m: return IARelation::mi;
        case IARelation::o: return IARelation::oi;
        case IARelation::s: return IARelation::si;
        case IARelation::d: return IARelation::di;
        case IARelation::f: return IARelation::fi;
        case IARelation::eq: return IARelation::eq;
        case IARelation::pi: return IARelation::p;
        case IARelation::mi: return IARelation::m;
        case IARelation::oi: return IARelation::o;
        case IARelation::si: return IARelation::s;
        case IARelation::di: return IARelation::d;
        case IARelation::fi: return IARelation::f;
    }
    return r;
}

IARelation ia_relation(const Interval& i, const Interval& j) {
    const Rational &a = i.lo(), &b = i.hi(), &c = j.lo(), &d = j.hi();
    if (b < c) return IARelation::p;
    if (b == c) return IARelation::m;
    if (a > d) return IARelation::pi;
    if (a == d) return IARelation::mi;
    if (a == c) return b == d ? IARelation::eq : (b < d ? IARelation::s : IARelation::si);
    if (a < c) return b == d ? IARelation::fi : (b < d ? IARelation::o : IARelation::di);
    return b == d ? IARelation::f : (b < d ? IARelation::d : IARelation::oi);
}

RARelation ra_relation(const Box& a, const Box& b) { return {ia_relation(a.x, b.x), ia_relation(a.y, b.y)}; }

std::uint8_t columns_of(IARelation r) {
    constexpr std::uint8_t W = 1, M = 2, E = 4;
    switch (r) {
        case IARelation::p:
        case IARelation::m: return W;
        case IARelation::o:
        case IARelation::fi: return W | M;
        case IARelation::s:
        case IARelation::d:
        case IARelation::f:
        case IARelation::eq: return M;
        case IARelation::pi:
        case IARelation::mi: return E;
        case IARelation::oi:
        case IARelation::si: return M | E;
        case IARelation::di: return W | M | E;
    }
    return 0;
}

std::uint8_t rows_of(IARelation r) {
    const std::uint8_t c = columns_of(r);
    return static_cast<std::uint8_t>(((c & 1U) << 2) | (c & 2U) | ((c >> 2) & 1U));
}

Box mbr(const Region& r) {
    auto boxes = r.boxes();
    Rational x_lo = boxes[0].x.lo(), x_hi = boxes[0].x.hi();
    Rational y_lo = boxes[0].y.lo(), y_hi = boxes[0].y.hi();
    for (const Box& b : boxes.subspan(1)) {
        x_lo = min(x_lo, b.x.lo());
        x_hi = max(x_hi, b.x.hi());
        y_lo = min(y_lo, b.y.lo());
        y_hi = max(y_hi, b.y.hi());
    }
    return Box::from(x_lo, x_hi, y_lo, y_hi);
}

std::array<GeneralizedBox, 9> tiles(const Box& b) {
    using Bound = std::optional<Rational>;
    const std::array<std::pair<Bound, Bound>, 3> cols = {
        std::pair<Bound, Bound>{std::nullopt, b.x.lo()}, {b.x.lo(), b.x.hi()}, {b.x.hi(), std::nullopt}};
    // Row 0 is north.
    const std::array<std::pair<Bound, Bound>, 3> rows = {
        std::pair<Bound, Bound>{b.y.hi(), std::nullopt}, {b.y.lo(), b.y.hi()}, {std::nullopt, b.y.lo()}};
    std::array<GeneralizedBox, 9> out;
    for (TileName t : kAllTiles) {
        const auto& [x_lo, x_hi] = cols[static_cast<std::size_t>(tile_column(t))];
        const auto& [y_lo, y_hi] = rows[static_cast<std::size_t>(tile_row(t))];
        out[static_cast<std::size_t>(t)] = GeneralizedBox{x_lo, x_hi, y_lo, y_hi};
    }
    return out;
}

bool open_overlap(const GeneralizedBox& a, const GeneralizedBox& b) {
    return bound_less(a.x_lo, b.x_hi) && bound_less(b.x_lo, a.x_hi) && bound_less(a.y_lo, b.y_hi) &&
           bound_less(b.y_lo, a.y_hi);
}

std::vector<Box> canonical_boxes(const Region& r) { return merge_cells(occupancy(r)); }

Rational area(const Region& r) {
    Rational total = 0;
    for (const Box& b : canonical_boxes(r)) total += b.area();
    return total;
}

bool is_interior_connected(const Region& r) {
    return label_components(occupancy(r)).second == 1;
}

std::vector<Region> interior_components(const Region& r) {
    const CellGrid g = occupancy(r);
    auto [label, count] = label_components(g);
    std::vector<Region> out;
    for (int c = 0; c < count; ++c) {
        CellGrid part = g;
        for (std::size_t k = 0; k < part.filled.size(); ++k) part.filled[k] = label[k] == c ? 1 : 0;
        out.emplace_back(merge_cells(part));
    }
    return out;
}

Region region_subtract(const Box& outer, std::span<const Region> holes) {
    std::vector<Box> cuts;
    for (const Region& h : holes) {
        for (const Box& b : h.boxes()) {
            // Only the part of a hole inside outer matters.
            const Rational x_lo = max(b.x.lo(), outer.x.lo()), x_hi = min(b.x.hi(), outer.x.hi());
            const Rational y_lo = max(b.y.lo(), outer.y.lo()), y_hi = min(b.y.hi(), outer.y.hi());
            if (x_lo < x_hi && y_lo < y_hi) cuts.push_back(Box::from(x_lo, x_hi, y_lo, y_hi));
        }
    }
    const std::array<Box, 1> base = {outer};
    CellGrid g = grid_over(base, cuts);
    paint(g, outer, 1);
    for (const Box& c : cuts) paint(g, c, 0);
    if (std::none_of(g.filled.begin(), g.filled.end(), [](char c) { return c != 0; }))
        throw EmptyDifference("subtraction leaves no region with positive area");
    return Region(merge_cells(g));
}

Box translate(const Box& b, const Rational& dx, const Rational& dy) {
    return Box::from(b.x.lo() + dx, b.x.hi() + dx, b.y.lo() + dy, b.y.hi() + dy);
}

Box scale(const Box& b, const Rational& factor) {
    if (!(factor > Rational(0))) throw InvalidGeometry("scale factor must be positive");
    return Box::from(b.x.lo() * factor, b.x.hi() * factor, b.y.lo() * factor, b.y.hi() * factor);
}

Region translate(const Region& r, const Rational& dx, const Rational& dy) {
    std::vector<Box> out;
    for (const Box& b : r.boxes()) out.push_back(translate(b, dx, dy));
    return Region(std::move(out));
}

Region scale(const Region& r, const Rational& factor) {
    std::vector<Box> out;
    for (const Box& b : r.boxes()) out.push_back(scale(b, factor));
    return Region(std::move(out));
}

}  // namespace cdc
