#include "wcn/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "wcn/distance.hpp"
#include "wcn/error.hpp"

namespace wcn {

std::vector<Point> Arrangement::cycle_points(std::size_t half_edge) const {
  std::vector<Point> pts;
  std::size_t h = half_edge;
  do {
    pts.push_back(vertices_[half_edges_[h].origin]);
    h = half_edges_[h].next;
  } while (h != half_edge);
  return pts;
}

bool Arrangement::has_segment(Point a, Point b) const {
  auto ia = vertex_ids_.find({a.x, a.y});
  auto ib = vertex_ids_.find({b.x, b.y});
  if (ia == vertex_ids_.end() || ib == vertex_ids_.end()) return false;
  return segments_.contains(std::minmax(ia->second, ib->second));
}

WeightTable Arrangement::face_weights() const {
  WeightTable wt;
  for (std::size_t k = 0; k < faces_.size(); ++k) wt.set(static_cast<Generator>(k), faces_[k].area);
  return wt;
}

namespace {

struct SegmentOrigin {
  std::size_t curve;
  std::size_t index;
};

std::string describe(const SegmentOrigin& s) {
  return "curve " + std::to_string(s.curve) + " segment " + std::to_string(s.index);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Even-odd containment; p must not lie on the polygon.
bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    Point a = poly[i], b = poly[i + 1 == n ? 0 : i + 1];
    if ((a.y > p.y) != (b.y > p.y)) {
      if (a.y > b.y) std::swap(a, b);
      if (orient2d(a, b, p) > 0) in = !in;
    }
  }
  return in;
}

// Grid hash used to merge crossing points closer than eps.
class Snapper {
 public:
  explicit Snapper(double eps) : eps_(eps) {}

  std::size_t insert(Point p, std::vector<Point>& vertices) {
    const long long cx = cell(p.x), cy = cell(p.y);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (std::size_t v : it->second) {
          if (std::hypot(vertices[v].x - p.x, vertices[v].y - p.y) < eps_) return v;
        }
      }
    }
    vertices.push_back(p);
    cells_[key(cx, cy)].push_back(vertices.size() - 1);
    return vertices.size() - 1;
  }

 private:
  long long cell(double c) const { return static_cast<long long>(std::floor(c / eps_)); }
  static std::uint64_t key(long long x, long long y) {
    return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(y);
  }
  double eps_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

}  // namespace

Arrangement build_arrangement(const std::vector<ClosedPolyline>& curves, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (curves.empty()) throw DomainError("no curves given");
  Arrangement arr;
  arr.eps_ = eps;

  // Input vertices and distinct segments.
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  std::vector<SegmentOrigin> origin;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    validate(curves[c]);
    for (const Point& p : curves[c].vertices) {
      if (arr.vertex_ids_.emplace(std::pair{p.x, p.y}, arr.vertices_.size()).second) {
        arr.vertices_.push_back(p);
      }
    }
    for (std::size_t i = 0; i < curves[c].size(); ++i) {
      const std::size_t a = arr.vertex_ids_[{curves[c].start(i).x, curves[c].start(i).y}];
      const std::size_t b = arr.vertex_ids_[{curves[c].end(i).x, curves[c].end(i).y}];
      if (arr.segments_.insert(std::minmax(a, b)).second) {
        segs.emplace_back(a, b);
        origin.push_back({c, i});
      }
    }
  }
  auto P = [&](std::size_t v) { return arr.vertices_[v]; };

  // Pairwise tests, pruned by x-extent.
  std::vector<std::size_t> order(segs.size());
  std::iota(order.begin(), order.end(), 0);
  auto xmin = [&](std::size_t s) { return std::min(P(segs[s].first).x, P(segs[s].second).x); };
  auto xmax = [&](std::size_t s) { return std::max(P(segs[s].first).x, P(segs[s].second).x); };
  auto ymin = [&](std::size_t s) { return std::min(P(segs[s].first).y, P(segs[s].second).y); };
  auto ymax = [&](std::size_t s) { return std::max(P(segs[s].first).y, P(segs[s].second).y); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xmin(a) < xmin(b); });

  std::vector<std::vector<std::pair<double, std::size_t>>> hits(segs.size());
  Snapper snap(eps);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    const Point a = P(segs[i].first), b = P(segs[i].second);
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t j = order[oj];
      if (xmin(j) > xmax(i) + eps) break;
      if (ymin(j) > ymax(i) + eps || ymin(i) > ymax(j) + eps) continue;
      const Point c = P(segs[j].first), d = P(segs[j].second);
      const auto [si, ti] = segs[i];
      const auto [sj, tj] = segs[j];
      const bool shares = si == sj || si == tj || ti == sj || ti == tj;
      auto fail = [&](const char* what) {
        throw DegeneracyError(describe(origin[i]) + " and " + describe(origin[j]) + " " + what +
                              " (eps " + std::to_string(eps) + ")");
      };
      if (shares) {
        const Point far_i = (si == sj || si == tj) ? b : a;
        const Point far_j = (sj == si || sj == ti) ? d : c;
        if (distance_to_segment(far_i, c, d) <= eps || distance_to_segment(far_j, a, b) <= eps) {
          fail("overlap near their shared vertex");
        }
        continue;
      }
      if (distance_to_segment(a, c, d) <= eps || distance_to_segment(b, c, d) <= eps ||
          distance_to_segment(c, a, b) <= eps || distance_to_segment(d, a, b) <= eps) {
        fail("touch without crossing transversally");
      }
      if (!segments_cross(a, b, c, d)) continue;
      const double t = crossing_parameter(a, b, c, d);
      const double u = crossing_parameter(c, d, a, b);
      const Point x{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      const std::size_t v = snap.insert(x, arr.vertices_);
      hits[i].emplace_back(t, v);
      hits[j].emplace_back(u, v);
    }
  }

  // Split segments into edges.
  std::set<std::pair<std::size_t, std::size_t>> edge_keys;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    auto& h = hits[s];
    std::sort(h.begin(), h.end());
    std::size_t prev = segs[s].first;
    auto add = [&](std::size_t v) {
      if (v == prev) return;
      if (edge_keys.insert(std::minmax(prev, v)).second) edges.emplace_back(prev, v);
      prev = v;
    };
    for (const auto& [t, v] : h) add(v);
    add(segs[s].second);
  }

  // Half-edges with angular order at every vertex.
  const std::size_t nv = arr.vertices_.size();
  auto& he = arr.half_edges_;
  he.resize(2 * edges.size());
  std::vector<std::vector<std::size_t>> out(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    he[2 * e] = {edges[e].first, 2 * e + 1, 0, Arrangement::kUnbounded};
    he[2 * e + 1] = {edges[e].second, 2 * e, 0, Arrangement::kUnbounded};
    out[edges[e].first].push_back(2 * e);
    out[edges[e].second].push_back(2 * e + 1);
  }
  std::vector<std::size_t> slot(he.size());
  for (std::size_t v = 0; v < nv; ++v) {
    auto angle = [&](std::size_t h) {
      const Point p = P(he[h].origin), q = P(he[he[h].twin].origin);
      return std::atan2(q.y - p.y, q.x - p.x);
    };
    std::sort(out[v].begin(), out[v].end(),
              [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    for (std::size_t k = 0; k < out[v].size(); ++k) slot[out[v][k]] = k;
  }
  for (std::size_t h = 0; h < he.size(); ++h) {
    const std::size_t t = he[h].twin;
    const auto& ring = out[he[t].origin];
    // Next edge clockwise from the twin keeps the face on the left.
    he[h].next = ring[(slot[t] + ring.size() - 1) % ring.size()];
  }

  // Boundary cycles.
  std::vector<std::size_t> cycle_of(he.size(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> cycle_start;
  std::vector<double> cycle_area;
  for (std::size_t h = 0; h < he.size(); ++h) {
    if (cycle_of[h] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = cycle_start.size();
    std::size_t g = h;
    do {
      cycle_of[g] = id;
      g = he[g].next;
    } while (g != h);
    cycle_start.push_back(h);
    cycle_area.push_back(signed_area(arr.cycle_points(h)));
  }

  UnionFind uf(nv);
  for (const auto& [a, b] : edges) uf.unite(a, b);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < nv; ++v) roots.insert(uf.find(v));
  arr.components_ = roots.size();

  std::vector<std::size_t> face_of_cycle(cycle_start.size(), Arrangement::kUnbounded);
  for (std::size_t c = 0; c < cycle_start.size(); ++c) {
    if (cycle_area[c] > 0) {
      face_of_cycle[c] = arr.faces_.size();
      arr.faces_.push_back({cycle_area[c], {}, {cycle_start[c]}});
    }
  }
  for (std::size_t c = 0; c < cycle_start.size(); ++c) {
    if (cycle_area[c] > 0) continue;
    const std::size_t root = uf.find(he[cycle_start[c]].origin);
    const Point probe = P(he[cycle_start[c]].origin);
    double best_area = 0.0;
    std::size_t best = Arrangement::kUnbounded;
    for (std::size_t d = 0; d < cycle_start.size(); ++d) {
      if (cycle_area[d] <= 0 || uf.find(he[cycle_start[d]].origin) == root) continue;
      if (best != Arrangement::kUnbounded && cycle_area[d] >= best_area) continue;
      if (inside(arr.cycle_points(cycle_start[d]), probe)) {
        best = face_of_cycle[d];
        best_area = cycle_area[d];
      }
    }
    face_of_cycle[c] = best;
    if (best != Arrangement::kUnbounded) {
      arr.faces_[best].cycles.push_back(cycle_start[c]);
      arr.faces_[best].area += cycle_area[c];
    }
  }
  for (std::size_t h = 0; h < he.size(); ++h) he[h].face = face_of_cycle[cycle_of[h]];

  const long long euler = static_cast<long long>(nv) - static_cast<long long>(edges.size()) +
                          static_cast<long long>(arr.faces_.size()) + 1;
  if (euler != 1 + static_cast<long long>(arr.components_)) {
    throw Error("arrangement failed the Euler check: V - E + F = " + std::to_string(euler) +
                ", components " + std::to_string(arr.components_));
  }

  // Representative points.
  std::vector<double> vertex_x(nv);
  for (std::size_t v = 0; v < nv; ++v) vertex_x[v] = arr.vertices_[v].x;
  std::sort(vertex_x.begin(), vertex_x.end());
  std::set<double> chosen_x;

  for (std::size_t f = 0; f < arr.faces_.size(); ++f) {
    Face& face = arr.faces_[f];
    std::vector<std::pair<Point, Point>> boundary;
    std::vector<double> ys;
    for (std::size_t start : face.cycles) {
      std::size_t h = start;
      do {
        const Point p = P(he[h].origin), q = P(he[he[h].next].origin);
        boundary.emplace_back(p, q);
        ys.push_back(p.y);
        h = he[h].next;
      } while (h != start);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const double mid = 0.5 * (ys.front() + ys.back());

    // Gaps between boundary vertex heights: the one holding the middle
    // height first, then by decreasing width.
    std::vector<std::pair<double, double>> gaps;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) gaps.emplace_back(ys[k], ys[k + 1]);
    std::stable_sort(gaps.begin(), gaps.end(), [&](const auto& g1, const auto& g2) {
      const bool m1 = g1.first <= mid && mid <= g1.second;
      const bool m2 = g2.first <= mid && mid <= g2.second;
      if (m1 != m2) return m1;
      return g1.second - g1.first > g2.second - g2.first;
    });
    if (gaps.size() > 8) gaps.resize(8);

    double best_clear = 0.0;
    Point best_point;
    for (const auto& [y0, y1] : gaps) {
      const double y = 0.5 * (y0 + y1);
      std::vector<double> xs;
      for (const auto& [p, q] : boundary) {
        if ((p.y < y) != (q.y < y)) xs.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
      }
      if (xs.size() % 2 != 0) continue;
      std::sort(xs.begin(), xs.end());
      for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        std::vector<double> cuts{xs[k]};
        auto lo = std::upper_bound(vertex_x.begin(), vertex_x.end(), xs[k]);
        auto hi = std::lower_bound(vertex_x.begin(), vertex_x.end(), xs[k + 1]);
        cuts.insert(cuts.end(), lo, hi);
        for (auto it = chosen_x.upper_bound(xs[k]); it != chosen_x.end() && *it < xs[k + 1]; ++it) {
          cuts.push_back(*it);
        }
        cuts.push_back(xs[k + 1]);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
          const double clear = 0.5 * (cuts[c + 1] - cuts[c]);
          if (clear > best_clear) {
            best_clear = clear;
            best_point = {0.5 * (cuts[c] + cuts[c + 1]), y};
          }
        }
      }
    }
    if (!(best_clear > eps)) {
      throw DegeneracyError("face " + std::to_string(f) + " (area " + std::to_string(face.area) +
                            ") has no ray-safe interior point at eps " + std::to_string(eps));
    }
    face.representative = best_point;
    chosen_x.insert(best_point.x);
  }
  return arr;
}

ExtractionResult extract_word(const ClosedPolyline& curve, const Arrangement& arr) {
  validate(curve);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!arr.has_segment(curve.start(i), curve.end(i))) {
      throw DomainError("segment " + std::to_string(i) + " of the curve is not in the arrangement");
    }
  }
  const auto& faces = arr.faces();
  std::vector<std::pair<double, std::size_t>> rays;
  for (std::size_t k = 0; k < faces.size(); ++k) rays.emplace_back(faces[k].representative.x, k);
  std::sort(rays.begin(), rays.end());

  ExtractionResult res;
  res.weights = arr.face_weights();
  std::vector<Crossing> local;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point p = curve.start(i), q = curve.end(i);
    if (p.x == q.x) continue;
    const Point left = p.x < q.x ? p : q, right = p.x < q.x ? q : p;
    const int sign = q.x > p.x ? 1 : -1;
    local.clear();
    auto it = std::upper_bound(rays.begin(), rays.end(), std::pair{left.x, arr.faces().size()});
    for (; it != rays.end() && it->first < right.x; ++it) {
      if (it->first <= left.x) continue;
      const Point r = faces[it->second].representative;
      if (orient2d(left, right, r) > 0) {
        local.push_back({static_cast<double>(i) + (r.x - p.x) / (q.x - p.x), it->second, sign});
      }
    }
    std::sort(local.begin(), local.end(),
              [](const Crossing& a, const Crossing& b) { return a.parameter < b.parameter; });
    res.crossings.insert(res.crossings.end(), local.begin(), local.end());
  }
  for (const Crossing& c : res.crossings) {
    res.word.push_back(Letter(static_cast<Generator>(c.face), c.sign));
  }
  return res;
}

int winding_number(const ClosedPolyline& curve, Point p, double eps) {
  validate(curve);
  int w = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point a = curve.start(i), b = curve.end(i);
    if (distance_to_segment(p, a, b) <= eps) {
      throw DomainError("point lies within eps of segment " + std::to_string(i));
    }
    if (a.y <= p.y && b.y > p.y && orient2d(a, b, p) > 0) ++w;
    if (b.y <= p.y && a.y > p.y && orient2d(a, b, p) < 0) --w;
  }
  return w;
}

double homotopy_area(const ClosedPolyline& a, const ClosedPolyline& b, double eps,
                     const NormOptions& options) {
  const Arrangement arr = build_arrangement({a, b}, eps);
  const Word wa = cyclic_reduce(extract_word(a, arr).word).core;
  const Word wb = cyclic_reduce(extract_word(b, arr).word).core;
  return distance(wa, wb, arr.face_weights(), options);
}

double null_homotopy_area(const ClosedPolyline& curve, double eps, const NormOptions& options) {
  const Arrangement arr = build_arrangement({curve}, eps);
  const Word w = cyclic_reduce(extract_word(curve, arr).word).core;
  return norm(w, arr.face_weights(), options);
}

}  // namespace wcn
