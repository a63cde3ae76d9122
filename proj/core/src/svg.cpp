#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "wcn/curves_io.hpp"

namespace wcn {

namespace {
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
}

std::string render_svg(const Arrangement& arr, const std::vector<ClosedPolyline>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const Point& p : arr.vertices()) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  const double scale = 800.0 / span;
  const double pad = 20.0;
  auto X = [&](double x) { return pad + (x - x0) * scale; };
  auto Y = [&](double y) { return pad + (y1 - y) * scale; };  // SVG y grows downward

  std::ostringstream os;
  os.precision(10);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << 2 * pad + (x1 - x0) * scale << "\" height=\"" << 2 * pad + (y1 - y0) * scale << "\">\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    os << "  <polygon fill=\"none\" stroke-width=\"1\" stroke=\"" << kPalette[c % 5]
       << "\" points=\"";
    for (const Point& p : curves[c].vertices) os << X(p.x) << ',' << Y(p.y) << ' ';
    os << "\"/>\n";
  }
  const auto& faces = arr.faces();
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const Point r = faces[k].representative;
    char label[64];
    std::snprintf(label, sizeof label, "x%zu: %.6g", k, faces[k].area);
    os << "  <circle r=\"1.5\" cx=\"" << X(r.x) << "\" cy=\"" << Y(r.y) << "\"/>\n"
       << "  <text font-size=\"10\" x=\"" << X(r.x) + 3 << "\" y=\"" << Y(r.y) - 3 << "\">"
       << label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wcn
