#pragma once

// Planar arrangement of closed polylines and the reduction of homotopy area
// to the cancellation distance: each bounded face becomes a generator whose
// weight is the face area, and a curve becomes the word of its crossings
// with one downward ray per face.

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "wcn/geometry.hpp"
#include "wcn/norm.hpp"
#include "wcn/word.hpp"

namespace wcn {

inline constexpr double kDefaultEps = 1e-9;

struct HalfEdge {
  std::size_t origin = 0;
  std::size_t twin = 0;
  std::size_t next = 0;
  // Index into faces(), or Arrangement::kUnbounded.
  std::size_t face = 0;
};

struct Face {
  double area = 0.0;
  Point representative;
  // One half-edge per boundary cycle: the outer cycle first, then holes.
  std::vector<std::size_t> cycles;
};

class Arrangement {
 public:
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  std::size_t edge_count() const { return half_edges_.size() / 2; }
  // Bounded faces only; face k is generator x_k.
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t component_count() const { return components_; }
  double eps() const { return eps_; }

  // Vertex positions along one boundary cycle, starting at its half-edge.
  std::vector<Point> cycle_points(std::size_t half_edge) const;

  // Whether a-b is (in either direction) an input segment.
  bool has_segment(Point a, Point b) const;

  WeightTable face_weights() const;

 private:
  friend Arrangement build_arrangement(const std::vector<ClosedPolyline>&, double);

  std::vector<Point> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::size_t components_ = 0;
  double eps_ = kDefaultEps;
  std::set<std::pair<std::size_t, std::size_t>> segments_;
  std::map<std::pair<double, double>, std::size_t> vertex_ids_;
};

// Throws DegeneracyError when two segments come within eps of each other
// anywhere except at a proper transversal crossing or a shared endpoint,
// and DomainError for eps <= 0 or invalid curves. Segments repeated exactly
// (in either direction, by any curves) are shared.
Arrangement build_arrangement(const std::vector<ClosedPolyline>& curves, double eps = kDefaultEps);

struct Crossing {
  double parameter;  // segment index plus position along that segment
  std::size_t face;
  int sign;
};

struct ExtractionResult {
  Word word;
  WeightTable weights;
  std::vector<Crossing> crossings;
};

// Letters in curve order from vertex 0: a crossing of face k's ray gives
// x_k when the curve moves in +x there and X_k otherwise.
ExtractionResult extract_word(const ClosedPolyline& curve, const Arrangement& arr);

// Throws DomainError when the point lies within eps of the curve.
int winding_number(const ClosedPolyline& curve, Point p, double eps = kDefaultEps);

double homotopy_area(const ClosedPolyline& a, const ClosedPolyline& b, double eps = kDefaultEps,
                     const NormOptions& options = {});
double null_homotopy_area(const ClosedPolyline& curve, double eps = kDefaultEps,
                          const NormOptions& options = {});

}  // namespace wcn
