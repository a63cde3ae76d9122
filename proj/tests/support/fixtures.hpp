#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "wcn/geometry.hpp"

namespace wcn::fixtures {

inline ClosedPolyline square(double x0, double y0, double side) {
  return {{{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}}};
}

inline ClosedPolyline unit_square() { return square(0, 0, 1); }

inline ClosedPolyline reversed(ClosedPolyline c) {
  std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

inline ClosedPolyline rotated(ClosedPolyline c, std::size_t k) {
  std::rotate(c.vertices.begin(), c.vertices.begin() + static_cast<long>(k % c.size()),
              c.vertices.end());
  return c;
}

// Two loops joined by one crossing at (1.5, 0.5): the left one
// counterclockwise, the right one clockwise. Each face has area 1.25.
inline ClosedPolyline figure_eight() {
  return {{{0, 0}, {1, 0}, {2, 1}, {3, 1}, {3, 0}, {2, 0}, {1, 1}, {0, 1}}};
}

// The unit square traversed twice counterclockwise, the second pass
// shifted by (delta, 0.7 delta).
inline ClosedPolyline doubled_square(double delta) {
  const double dx = delta, dy = 0.7 * delta;
  return {{{0, 0}, {1, 0}, {1, 1}, {0, 1},
           {dx, dy}, {1 + dx, dy}, {1 + dx, 1 + dy}, {dx, 1 + dy}}};
}

inline ClosedPolyline star_polygon(std::mt19937_64& rng, std::size_t k) {
  // Angles jittered within their slot keep every gap below pi, so the
  // polygon is star-shaped about its center.
  const double slot = 2 * std::numbers::pi / static_cast<double>(k);
  std::uniform_real_distribution<double> jitter(-0.2 * slot, 0.2 * slot);
  std::uniform_real_distribution<double> radius(0.3, 2.0);
  std::uniform_real_distribution<double> center(-5, 5);
  std::vector<double> angles(k);
  for (std::size_t i = 0; i < k; ++i) angles[i] = slot * static_cast<double>(i) + jitter(rng);
  const double cx = center(rng), cy = center(rng);
  ClosedPolyline c;
  for (double a : angles) {
    const double r = radius(rng);
    c.vertices.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
  }
  return c;
}

// Random points in the unit box; usually self-intersecting.
inline ClosedPolyline scribble(std::mt19937_64& rng, std::size_t k) {
  std::uniform_real_distribution<double> u(0, 1);
  ClosedPolyline c;
  for (std::size_t i = 0; i < k; ++i) c.vertices.push_back({u(rng), u(rng)});
  return c;
}

}  // namespace wcn::fixtures
