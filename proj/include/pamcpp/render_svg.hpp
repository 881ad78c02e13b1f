#pragma once

#include <string>

#include "pamcpp/residual_planner.hpp"

namespace pamcpp {

// Static SVG depiction: obstacles black, free cells white, zones tinted with
// their weight printed, robot paths as polylines with the residual portion
// dashed. Pass plan = nullptr to render the bare instance.
std::string render_svg(const Instance& instance, const FullPlan* plan);

}  // namespace pamcpp
