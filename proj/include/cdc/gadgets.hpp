#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "cdc/geometry.hpp"
#include "cdc/network.hpp"

namespace cdc {

/// Names beginning with this prefix are reserved for auxiliary variables.
inline constexpr std::string_view kAuxPrefix = "_aux";

/// Accumulates a network while handing out collision-free auxiliary names.
class NetworkBuilder {
public:
    explicit NetworkBuilder(CalculusMode mode = CalculusMode::Connected) : network_(mode) {}

    /// Declares a user variable; rejects names in the reserved namespace.
    void declare(std::string name);
    /// Declares and returns a fresh auxiliary variable.
    std::string fresh();

    void add(std::string_view from, std::string_view to, TileSet relation) {
        network_.add_constraint(from, to, relation);
    }

    [[nodiscard]] const Network& network() const { return network_; }
    [[nodiscard]] Network release() && { return std::move(network_); }

private:
    Network network_;
    int next_aux_ = 0;
};

/// Rectangle-algebra relations that have a two-constraint defining network.
enum class RaGadget { StartsFinishes, OverlapsFinishes, OverlapsFinishedBy, OverlapsEquals };

RARelation relation_of(RaGadget g);
std::string_view to_string(RaGadget g);

/// Adds the two basic constraints whose rectangle solutions are exactly the
/// given RA relation:
///   s⊗f:  u O v,          v E:SE:S:O u
///   o⊗f:  u W:O v,        v E:SE:S:O u
///   o⊗fi: u S:SW:W:O v,   v E:O u
///   o⊗eq: u W:O v,        v E:O u
void emit_ra(RaGadget g, std::string_view u, std::string_view v, NetworkBuilder& b);

/// u E w, w E v, v W u for a fresh w: u lies east of v with a gap and the
/// same y-projection. Returns w.
std::string emit_parallel(std::string_view u, std::string_view v, NetworkBuilder& b);

/// Upper-left-corner gadget with two fresh variables (w1, w2):
///   u O w1, w1 E:SE:S:O u, v O w1, w1 E:SE:S v,
///   v O w2, w2 E:SE:S:O v, u O w2, w2 E:SE:S u.
std::pair<std::string, std::string> emit_ulc(std::string_view u, std::string_view v, NetworkBuilder& b);

enum class Orientation { Horizontal, Vertical };
std::string_view to_string(Orientation o);

/// mbr(a) pi⊗eq mbr(b).
bool holds_parallel(const Region& a, const Region& b);
/// mbr(a) s⊗fi or si⊗f mbr(b).
bool holds_ulc(const Region& a, const Region& b);
/// Vertical for s⊗fi, Horizontal for si⊗f; throws NotUlc otherwise.
Orientation orientation(const Region& a, const Region& b);

/// Margin used by the auxiliary-region constructors.
inline const Rational kAuxMargin{1, 20};

/// The box strictly between b and a (middle third of the gap) with b's
/// y-projection. Requires holds_parallel(a, b).
Region witness_parallel_aux(const Region& a, const Region& b);

/// L-shaped (c1, c2) completing (a, b) to a solution of the ULC gadget:
/// c1 and c2 are the box from the shared corner to past both mbrs, minus
/// mbr(b) and mbr(a) respectively. Requires holds_ulc(a, b).
std::pair<Region, Region> witness_ulc_aux(const Region& a, const Region& b);

}  // namespace cdc
