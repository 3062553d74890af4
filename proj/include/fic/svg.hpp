#ifndef FIC_SVG_HPP
#define FIC_SVG_HPP

#include <string>
#include <vector>

#include "fic/geometry.hpp"

namespace fic {

// One labeled boundary polyline in rate space.
struct BoundaryCurve {
    std::string name;
    std::string color;      // CSS color
    bool dashed = false;
    std::vector<RatePoint> points;
};

// Self-contained SVG (inline styles, no external assets) overlaying the
// given boundary curves with axes, ticks and a legend.
std::string render_region_svg(const std::vector<BoundaryCurve>& curves,
                              const std::string& title);

}  // namespace fic

#endif
