#pragma once

#include <string>

#include "cdc/network.hpp"

namespace cdc {

struct SvgOptions {
    /// Pixels per unit of plane coordinates.
    double scale = 100.0;
    bool mbr_outlines = false;
    double margin = 20.0;
};

/// One <g id="var-NAME"> per variable holding its boxes and a text label.
/// The y-axis is flipped so that north is up. When a network is given,
/// groups follow its declaration order (geometry-only names come after, by
/// name) and its constraints are listed in the document's <desc>.
std::string render_svg(const Configuration& c, const SvgOptions& opts = {}, const Network* network = nullptr);

}  // namespace cdc
