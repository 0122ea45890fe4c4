#ifndef BIGRADE_REPORT_HPP
#define BIGRADE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigrade/regularity.hpp"

namespace bigrade {

// JSON building blocks; nlohmann::json keeps keys sorted, so reports
// serialize deterministically as long as arrays are emitted sorted.
nlohmann::json to_json(Bidegree d);
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const Certificate& c, const RingDescriptor& ring);

// Lattice plot: bidegree a rightwards, b upwards, origin bottom-left,
// 24-pixel cells. Regions are shaded staircases, generators are dots.
struct PlotSpec {
    Bidegree box{10, 10};
    std::vector<Bidegree> generator_dots;
    std::vector<std::pair<std::string, Region>> regions;
};

std::string render_svg(const PlotSpec& spec);

} // namespace bigrade

#endif
