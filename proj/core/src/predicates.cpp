#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "wcn/error.hpp"
#include "wcn/geometry.hpp"

namespace wcn {

void validate(const ClosedPolyline& curve) {
  const auto& v = curve.vertices;
  if (v.size() < 3) {
    throw DomainError("curve needs at least 3 vertices (got " + std::to_string(v.size()) + ")");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].x) || !std::isfinite(v[i].y)) {
      throw DomainError("vertex " + std::to_string(i) + " is not finite");
    }
    if (v[i] == curve.end(i)) {
      throw DomainError("vertex " + std::to_string(i) + " repeats the next vertex");
    }
  }
}

namespace {

int sign_exact(Point a, Point b, Point c) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const cpp_rational det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return det.sign();
}

}  // namespace

int orient2d(Point a, Point b, Point c) {
  // Error bound from Shewchuk's orient2d stage A.
  constexpr double kBound = (3.0 + 16.0 * 0x1p-53) * 0x1p-53;
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double sum = std::abs(left) + std::abs(right);
  if (std::abs(det) > kBound * sum) return det > 0 ? 1 : -1;
  if (sum == 0.0) return 0;
  return sign_exact(a, b, c);
}

double cross(Point a, Point b, Point c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double distance_to_segment(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool segments_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double crossing_parameter(Point a, Point b, Point c, Point d) {
  const double rx = b.x - a.x, ry = b.y - a.y;
  const double sx = d.x - c.x, sy = d.y - c.y;
  const double denom = rx * sy - ry * sx;
  return ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
}

double signed_area(const std::vector<Point>& polygon) {
  double twice = 0.0;
  for (std::size_t i = 0, n = polygon.size(); i < n; ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[i + 1 == n ? 0 : i + 1];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

}  // namespace wcn
