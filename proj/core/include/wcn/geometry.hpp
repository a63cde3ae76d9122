#pragma once

#include <cstddef>
#include <vector>

namespace wcn {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// A closed plane curve; the last vertex connects back to the first.
struct ClosedPolyline {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& start(std::size_t segment) const { return vertices[segment]; }
  const Point& end(std::size_t segment) const {
    return vertices[segment + 1 == vertices.size() ? 0 : segment + 1];
  }
};

// At least three vertices, finite coordinates, no two consecutive vertices
// equal (first and last included). Throws DomainError.
void validate(const ClosedPolyline& curve);

// Sign of the determinant |b-a, c-a|: +1 when c lies left of a->b, -1 when
// right, 0 when collinear. Exact for all finite doubles.
int orient2d(Point a, Point b, Point c);

// Twice the signed area of the triangle, in plain floating point.
double cross(Point a, Point b, Point c);

double distance_to_segment(Point p, Point a, Point b);

// True when the open segments cross at a single interior point of both.
bool segments_cross(Point a, Point b, Point c, Point d);

// Intersection of the lines through a-b and c-d, as a parameter along a-b.
// Meaningful only when segments_cross holds.
double crossing_parameter(Point a, Point b, Point c, Point d);

// Signed shoelace area; positive for counterclockwise vertex order.
double signed_area(const std::vector<Point>& polygon);

}  // namespace wcn
