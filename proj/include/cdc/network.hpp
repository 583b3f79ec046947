#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdc/geometry.hpp"
#include "cdc/tiles.hpp"

namespace cdc {

/// Connected admits the 218 relations between connected regions; Disconnected
/// admits all 511 nonempty tile sets.
enum class CalculusMode { Connected, Disconnected };

std::string_view to_string(CalculusMode m);
std::optional<CalculusMode> parse_mode(std::string_view s);

struct Constraint {
    std::string from;
    std::string to;
    TileSet relation;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Possibly incomplete network of basic constraints. Pairs without a
/// constraint carry the universal relation.
class Network {
public:
    explicit Network(CalculusMode mode = CalculusMode::Connected) : mode_(mode) {}

    [[nodiscard]] CalculusMode mode() const { return mode_; }
    /// Throws InvalidNetwork if an existing constraint leaves the new universe.
    void set_mode(CalculusMode mode);

    /// Throws InvalidNetwork on a repeated name.
    void add_variable(std::string name);
    [[nodiscard]] bool has_variable(std::string_view name) const;
    [[nodiscard]] std::size_t index_of(std::string_view name) const;
    [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }

    /// Throws InvalidNetwork for self-loops, undeclared endpoints, relations
    /// outside the mode's universe; DuplicateConstraint if the ordered pair is
    /// already constrained.
    void add_constraint(std::string_view from, std::string_view to, TileSet relation);
    [[nodiscard]] std::optional<TileSet> constraint(std::string_view from, std::string_view to) const;
    /// In insertion order.
    [[nodiscard]] const std::vector<Constraint>& constraints() const { return constraints_; }

private:
    CalculusMode mode_;
    std::vector<std::string> variables_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Constraint> constraints_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair_;
};

using Configuration = std::map<std::string, Region, std::less<>>;

struct ConstraintViolation {
    std::string from;
    std::string to;
    TileSet expected;
    TileSet actual;
};

struct ViolationReport {
    std::vector<ConstraintViolation> constraint_violations;
    /// Variables whose region has a disconnected interior (Connected mode only).
    std::vector<std::string> disconnected;

    [[nodiscard]] bool ok() const { return constraint_violations.empty() && disconnected.empty(); }
};

/// Direction relation of primary region a to reference region b: tile t of
/// mbr(b) is included iff the interior of a meets it.
TileSet drm(const Region& a, const Region& b);

/// Rectangle fast path, computed from the RA relation of the two boxes.
TileSet drm_rect(const Box& a, const Box& b);

/// Membership in the basic-relation universe of a mode.
bool is_basic_relation(TileSet s, CalculusMode mode);

/// Sorted by bit pattern. 218 entries for Connected, 511 for Disconnected.
std::vector<TileSet> enumerate_basic_relations(CalculusMode mode);

/// A region r with drm(r, {reference}) == s; connected in Connected mode.
/// Throws Unrealizable when s is outside the mode's universe.
Region realize_relation(TileSet s, const Box& reference, CalculusMode mode = CalculusMode::Connected);

/// Checks every constrained pair and, in Connected mode, interior
/// connectivity of every assigned network variable. Violations are ordered by
/// (from, to) declaration index. Throws MissingVariable if a constrained
/// variable has no region.
ViolationReport check_configuration(const Network& n, const Configuration& c);

}  // namespace cdc
