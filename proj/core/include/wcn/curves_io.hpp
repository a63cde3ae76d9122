#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wcn/arrangement.hpp"
#include "wcn/geometry.hpp"

namespace wcn {

// JSON: a list of curves, each a list of [x, y] pairs. Every curve is
// validated; errors name the curve index.
std::vector<ClosedPolyline> parse_curves(std::string_view json);
std::vector<ClosedPolyline> load_curves(const std::string& path);
std::string curves_to_json(const std::vector<ClosedPolyline>& curves);

// SVG 1.1: the curves as closed polylines plus one text label per bounded
// face (generator and area) at its representative point.
std::string render_svg(const Arrangement& arr, const std::vector<ClosedPolyline>& curves);

}  // namespace wcn
