#pragma once

#include <string>
#include <string_view>

#include "cdc/network.hpp"
#include "cdc/reduction.hpp"

namespace cdc {

/// Versioned JSON documents. Every document carries "format" and "version"
/// fields; readers reject unknown formats and versions with ParseError.
///
///   geometry:     {"format": "cdc-geometry", "version": 1,
///                  "regions": {"a": [["0", "1/2", "9/10", "1"], ...], ...}}
///   network:      {"format": "cdc-network", "version": 1, "mode": "connected",
///                  "variables": ["a", ...], "constraints": [["a", "b", "N:NE:E"], ...]}
///   variable map: {"format": "cdc-variable-map", "version": 1, ...}
///
/// Box bounds are [x_lo, x_hi, y_lo, y_hi]. Numbers are written as exact
/// decimals when possible and as "p/q" otherwise; readers also accept JSON
/// integers. Output is deterministic (sorted keys, fixed indentation).
inline constexpr int kFormatVersion = 1;

std::string write_geometry(const Configuration& c);
Configuration read_geometry(std::string_view text);

std::string write_network(const Network& n);
Network read_network(std::string_view text);

std::string write_variable_map(const VariableMap& vm);
VariableMap read_variable_map(std::string_view text);

}  // namespace cdc
