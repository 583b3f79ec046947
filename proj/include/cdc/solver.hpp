#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/geometry.hpp"
#include "cdc/network.hpp"

namespace cdc {

/// Extra requirement that mbr(from) relates to mbr(to) by a basic RA relation.
/// Used only to phrase orientation-forcing experiments.
struct RaSideConstraint {
    std::string from;
    std::string to;
    RARelation relation;
};

enum class RegionShape {
    /// Each variable is the largest region inside its mbr that is consistent
    /// with the constraints it is the primary object of.
    Maximal,
    /// Each variable is exactly its mbr.
    Rectangle,
};

struct RectSearchParams {
    /// Coordinates range over 0..grid on each axis; 0 means 2 x variable count.
    int grid = 0;
    std::vector<RaSideConstraint> side_constraints;
    /// Variables to place first, in this order.
    std::vector<std::string> order_hint;
    RegionShape shape = RegionShape::Maximal;
    /// 0 disables the corresponding budget.
    std::uint64_t node_budget = 0;
    std::chrono::milliseconds time_budget{0};
};

struct CellSearchParams {
    /// The grid is cells x cells unit squares.
    int cells = 5;
    /// Defaults to the network's mode.
    std::optional<CalculusMode> mode;
};

enum class SolveStatus { Solved, NoRectSolution, NoSolutionAtScale, Timeout };
std::string_view to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Timeout;
    std::optional<Configuration> configuration;
    std::uint64_t nodes = 0;
};

/// Backtracking over bounding boxes with integer endpoints in [0, grid].
/// Boxes are enumerated up to endpoint order (every order type with at most
/// grid + 1 distinct values per axis is visited once), so NoRectSolution is
/// an exhaustive answer at that resolution. Pairs are pruned by the x/y
/// projection conditions implied by each constraint, and each variable is
/// realized as soon as all of its reference variables are placed. A returned
/// configuration always passes check_configuration.
SolveResult solve_rectangles(const Network& n, const RectSearchParams& p = {});

/// Exhaustive search over regions made of unit cells of a cells x cells grid
/// (connected in Connected mode). At most 3 variables and 6 cells per side;
/// throws TooLarge beyond that. Returns NoSolutionAtScale when exhausted.
SolveResult solve_regions(const Network& n, const CellSearchParams& p = {});

}  // namespace cdc
