#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cdc/rational.hpp"
#include "cdc/tiles.hpp"

namespace cdc {

/// Closed interval [lo, hi] with lo < hi.
class Interval {
public:
    Interval(Rational lo, Rational hi);

    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational length() const { return hi_ - lo_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_;
    Rational hi_;
};

/// Axis-aligned box with positive area.
struct Box {
    Interval x;
    Interval y;

    static Box from(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi) {
        return Box{Interval(x_lo, x_hi), Interval(y_lo, y_hi)};
    }
    [[nodiscard]] Rational area() const { return x.length() * y.length(); }
    friend bool operator==(const Box&, const Box&) = default;
};

/// Box whose bounds may be infinite; std::nullopt stands for -inf on a lower
/// bound and +inf on an upper bound.
struct GeneralizedBox {
    std::optional<Rational> x_lo, x_hi, y_lo, y_hi;

    static GeneralizedBox from(const Box& b) { return {b.x.lo(), b.x.hi(), b.y.lo(), b.y.hi()}; }
    friend bool operator==(const GeneralizedBox&, const GeneralizedBox&) = default;
};

/// Finite union of boxes. Boxes may overlap; the union is regular closed.
class Region {
public:
    explicit Region(std::vector<Box> boxes);
    Region(std::initializer_list<Box> boxes) : Region(std::vector<Box>(boxes)) {}

    [[nodiscard]] std::span<const Box> boxes() const { return boxes_; }

    friend bool operator==(const Region&, const Region&) = default;

private:
    std::vector<Box> boxes_;
};

/// The thirteen basic interval-algebra relations.
enum class IARelation : std::uint8_t { p, m, o, s, d, f, eq, pi, mi, oi, si, di, fi };

inline constexpr std::array<IARelation, 13> kAllIARelations = {
    IARelation::p,  IARelation::m,  IARelation::o,  IARelation::s,  IARelation::d,
    IARelation::f,  IARelation::eq, IARelation::pi, IARelation::mi, IARelation::oi,
    IARelation::si, IARelation::di, IARelation::fi};

std::string_view to_string(IARelation r);
std::optional<IARelation> parse_ia_relation(std::string_view s);
IARelation converse(IARelation r);

/// Rectangle-algebra relation: IA relation on x-projections, then on y.
struct RARelation {
    IARelation x;
    IARelation y;
    friend bool operator==(const RARelation&, const RARelation&) = default;
};

IARelation ia_relation(const Interval& i, const Interval& j);
RARelation ra_relation(const Box& a, const Box& b);

/// Columns (W, middle, E as bits 0..2) of the reference interval that a
/// primary interval related by `r` overlaps with positive length.
std::uint8_t columns_of(IARelation r);
/// Rows (N, middle, S as bits 0..2) of the reference interval that a primary
/// y-interval related by `r` overlaps with positive length.
std::uint8_t rows_of(IARelation r);

Box mbr(const Region& r);

/// The nine closed tiles of b, indexed by TileName.
std::array<GeneralizedBox, 9> tiles(const Box& b);

/// True iff the interiors of a and b intersect.
bool open_overlap(const GeneralizedBox& a, const GeneralizedBox& b);

/// Decomposition of r into boxes with pairwise disjoint interiors covering the
/// same set.
std::vector<Box> canonical_boxes(const Region& r);

Rational area(const Region& r);

bool is_interior_connected(const Region& r);

/// Edge-connected components of the interior, each as its own region.
std::vector<Region> interior_components(const Region& r);

/// closure(interior(outer) minus the union of holes). Throws EmptyDifference
/// when nothing with positive area remains.
Region region_subtract(const Box& outer, std::span<const Region> holes);

Box translate(const Box& b, const Rational& dx, const Rational& dy);
Box scale(const Box& b, const Rational& factor);
Region translate(const Region& r, const Rational& dx, const Rational& dy);
Region scale(const Region& r, const Rational& factor);

}  // namespace cdc
