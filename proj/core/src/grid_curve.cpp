// Drawing a word as a closed curve on a ladder of unit squares.
//
// The word becomes a closed edge path on the ladder graph (bottom row,
// top row, rungs), reduced so that it never backtracks. Each traversal of
// a graph edge is a strand. Strands on an edge are ordered left to right by
// comparing their futures: the strand that turns left first is leftmost.
// Around each graph vertex sits a small box; strands enter and leave it
// through ports on the box sides and are joined inside by straight chords,
// which never cross because chords between the same pair of sides are
// nested. Between the two ends of an edge the lanes are permuted by rounds
// of disjoint adjacent swaps, so lanes cross exactly at the inversions and
// each crossing sits alone in its own column.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "wcn/construction.hpp"
#include "wcn/error.hpp"

namespace wcn {

namespace {

// Compass directions; counterclockwise order.
enum Dir : int { kEast = 0, kNorth = 1, kWest = 2, kSouth = 3 };

struct Trav {
  std::size_t edge;
  int dir;  // +1 along the canonical direction (east or north), -1 against
  bool operator==(const Trav&) const = default;
};

class Ladder {
 public:
  explicit Ladder(std::size_t squares) : s_(squares) {}

  std::size_t vertex_count() const { return 2 * (s_ + 1); }
  std::size_t edge_count() const { return 3 * s_ + 1; }

  std::size_t bottom(std::size_t i) const { return i - 1; }
  std::size_t top(std::size_t i) const { return s_ + i; }
  std::size_t b_edge(std::size_t i) const { return i - 1; }
  std::size_t t_edge(std::size_t i) const { return s_ + i - 1; }
  std::size_t v_edge(std::size_t i) const { return 2 * s_ + i - 1; }

  Point position(std::size_t v) const {
    return v <= s_ ? Point{static_cast<double>(v + 1), 0.0}
                   : Point{static_cast<double>(v - s_), 1.0};
  }

  std::size_t tail(std::size_t e) const {
    if (e < s_) return bottom(e + 1);
    if (e < 2 * s_) return top(e - s_ + 1);
    return bottom(e - 2 * s_ + 1);
  }
  std::size_t head(std::size_t e) const {
    if (e < s_) return bottom(e + 2);
    if (e < 2 * s_) return top(e - s_ + 2);
    return top(e - 2 * s_ + 1);
  }
  int canonical(std::size_t e) const { return e < 2 * s_ ? kEast : kNorth; }

  int compass(Trav t) const { return t.dir > 0 ? canonical(t.edge) : (canonical(t.edge) + 2) % 4; }
  std::size_t from(Trav t) const { return t.dir > 0 ? tail(t.edge) : head(t.edge); }
  std::size_t to(Trav t) const { return t.dir > 0 ? head(t.edge) : tail(t.edge); }

  // Incident edges keyed by the compass side they leave v on; -1 if none.
  std::array<long, 4> sides(std::size_t v) const {
    std::array<long, 4> out{-1, -1, -1, -1};
    const bool is_top = v > s_;
    const std::size_t i = is_top ? v - s_ : v + 1;
    if (i <= s_) out[kEast] = static_cast<long>(is_top ? t_edge(i) : b_edge(i));
    if (i >= 2) out[kWest] = static_cast<long>(is_top ? t_edge(i - 1) : b_edge(i - 1));
    out[is_top ? kSouth : kNorth] = static_cast<long>(v_edge(i));
    return out;
  }

 private:
  std::size_t s_;
};

std::vector<Trav> loop_path(const Ladder& g, const Word& w, std::size_t squares) {
  std::vector<Trav> path;
  auto push = [&](Trav t) {
    if (!path.empty() && path.back().edge == t.edge && path.back().dir == -t.dir) {
      path.pop_back();
    } else {
      path.push_back(t);
    }
  };
  for (Letter l : w) {
    const std::size_t k = l.generator() + 1;
    if (k > squares) {
      throw DomainError("generator x" + std::to_string(l.generator()) + " needs square " +
                        std::to_string(k) + " but the ladder has " + std::to_string(squares));
    }
    std::vector<Trav> loop;
    for (std::size_t i = 1; i < k; ++i) loop.push_back({g.b_edge(i), +1});
    loop.push_back({g.b_edge(k), +1});
    loop.push_back({g.v_edge(k + 1), +1});
    loop.push_back({g.t_edge(k), -1});
    loop.push_back({g.v_edge(k), -1});
    for (std::size_t i = k - 1; i >= 1; --i) loop.push_back({g.b_edge(i), -1});
    if (l.is_positive()) {
      for (const Trav& t : loop) push(t);
    } else {
      for (auto it = loop.rbegin(); it != loop.rend(); ++it) push({it->edge, -it->dir});
    }
  }
  // Cyclic reduction; the path is closed at the base vertex.
  std::size_t lo = 0, hi = path.size();
  while (hi - lo >= 2 && path[lo].edge == path[hi - 1].edge && path[lo].dir == -path[hi - 1].dir) {
    ++lo;
    --hi;
  }
  return {path.begin() + static_cast<long>(lo), path.begin() + static_cast<long>(hi)};
}

// 2 for a left turn, 1 straight on, 0 right.
int leftness(int from_dir, int to_dir) {
  switch ((to_dir - from_dir + 4) % 4) {
    case 1: return 2;
    case 0: return 1;
    default: return 0;
  }
}

}  // namespace

ClosedPolyline emit_word_curve(const Word& w, std::size_t squares, double delta) {
  if (!(delta > 0.0 && delta < 0.1)) {
    throw DomainError("delta must lie in (0, 0.1)");
  }
  if (squares == 0) throw DomainError("the ladder needs at least one square");
  const double spacing = delta / 4;
  const Ladder g(squares);
  const std::vector<Trav> path = loop_path(g, w, squares);
  const std::size_t n = path.size();
  if (n == 0) throw DomainError("the word is freely trivial; there is no curve to draw");

  // Strands seen in the canonical direction of their edge: a traversal
  // against it is read on the reversed path.
  auto seq = [&](bool reversed, std::size_t k) -> Trav {
    k %= n;
    if (!reversed) return path[k];
    const Trav t = path[n - 1 - k];
    return {t.edge, -t.dir};
  };
  struct Strand {
    bool reversed;
    std::size_t pos;
    std::size_t index;  // position in path
  };
  auto strand_of = [&](std::size_t p) -> Strand {
    return path[p].dir > 0 ? Strand{false, p, p} : Strand{true, n - 1 - p, p};
  };
  auto more_left = [&](const Strand& a, const Strand& b) {
    for (std::size_t t = 1; t <= n; ++t) {
      const Trav na = seq(a.reversed, a.pos + t);
      const Trav nb = seq(b.reversed, b.pos + t);
      if (!(na == nb)) {
        const int cur = g.compass(seq(a.reversed, a.pos + t - 1));
        return leftness(cur, g.compass(na)) > leftness(cur, g.compass(nb));
      }
    }
    // Identical futures only happen for a proper power.
    return a.index < b.index;
  };

  std::vector<std::vector<std::size_t>> on_edge(g.edge_count());
  for (std::size_t p = 0; p < n; ++p) on_edge[path[p].edge].push_back(p);
  std::vector<std::size_t> rank(n);
  for (auto& list : on_edge) {
    std::sort(list.begin(), list.end(),
              [&](std::size_t a, std::size_t b) { return more_left(strand_of(a), strand_of(b)); });
    for (std::size_t r = 0; r < list.size(); ++r) rank[list[r]] = r;
  }

  // Ports: counterclockwise slot on the box side, per traversal end.
  std::vector<std::size_t> start_slot(n), end_slot(n);
  std::vector<std::vector<std::size_t>> turns_at(g.vertex_count());
  for (std::size_t t = 0; t < n; ++t) turns_at[g.to(path[t])].push_back(t);

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (turns_at[v].empty()) continue;
    const auto sides = g.sides(v);
    // A chord group joins side a to side b, where b is the next incident
    // side counterclockwise from a; its ports sit at the end of a and the
    // start of b.
    auto ccw_next = [&](int s) {
      for (int d = 1; d < 4; ++d) {
        if (sides[(s + d) % 4] >= 0) return (s + d) % 4;
      }
      return s;
    };
    struct Chord {
      std::size_t turn;
      long key;
    };
    std::array<std::vector<Chord>, 4> groups;  // keyed by side a
    std::array<bool, 4> keyed_on_a{};
    for (int a = 0; a < 4; ++a) {
      if (sides[a] < 0) continue;
      const int b = ccw_next(a);
      const bool a_head = g.head(static_cast<std::size_t>(sides[a])) == v;
      const bool b_head = g.head(static_cast<std::size_t>(sides[b])) == v;
      keyed_on_a[a] = a_head || !b_head;
    }
    for (std::size_t t : turns_at[v]) {
      const Trav in = path[t];
      const Trav out = path[(t + 1) % n];
      const int s_in = (g.compass(in) + 2) % 4;
      const int s_out = g.compass(out);
      const int a = ccw_next(s_in) == s_out && (ccw_next(s_out) != s_in || (s_out - s_in + 4) % 4 == 1)
                        ? s_in
                        : s_out;
      const bool key_side_in = keyed_on_a[a] == (a == s_in);
      const std::size_t p = key_side_in ? t : (t + 1) % n;
      const bool is_head = g.head(path[p].edge) == v;
      const long r = static_cast<long>(rank[p]);
      groups[a].push_back({t, is_head ? r : -r});
    }
    std::array<std::vector<std::pair<std::size_t, bool>>, 4> slots;  // (turn, is in-side)
    std::array<std::vector<std::pair<std::size_t, bool>>, 4> tails;
    for (int a = 0; a < 4; ++a) {
      auto& grp = groups[a];
      if (grp.empty()) continue;
      const int b = ccw_next(a);
      std::sort(grp.begin(), grp.end(), [](const Chord& x, const Chord& y) { return x.key < y.key; });
      // Order along side a; side b sees the nested reverse.
      if (!keyed_on_a[a]) std::reverse(grp.begin(), grp.end());
      std::vector<std::pair<std::size_t, bool>> on_a, on_b;
      for (const Chord& c : grp) {
        const bool a_is_in = (g.compass(path[c.turn]) + 2) % 4 == a;
        on_a.push_back({c.turn, a_is_in});
        on_b.push_back({c.turn, !a_is_in});
      }
      std::reverse(on_b.begin(), on_b.end());
      tails[a].insert(tails[a].end(), on_a.begin(), on_a.end());
      slots[b].insert(slots[b].end(), on_b.begin(), on_b.end());
    }
    for (int s = 0; s < 4; ++s) {
      slots[s].insert(slots[s].end(), tails[s].begin(), tails[s].end());
      for (std::size_t k = 0; k < slots[s].size(); ++k) {
        const auto [turn, is_in] = slots[s][k];
        if (is_in) {
          end_slot[turn] = k;
        } else {
          start_slot[(turn + 1) % n] = k;
        }
      }
    }
  }

  // Box sizes from the busiest incident edge.
  std::vector<double> box(g.vertex_count(), 0.0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t busiest = 0;
    for (long e : g.sides(v)) {
      if (e >= 0) busiest = std::max(busiest, on_edge[static_cast<std::size_t>(e)].size());
    }
    box[v] = spacing * (static_cast<double>(busiest) / 2.0 + 2.0);
    if (box[v] >= 0.2) {
      throw DomainError("delta = " + std::to_string(delta) + " is too large for " +
                        std::to_string(busiest) + " parallel strands on one edge");
    }
  }

  // Lateral offset of lane j (0 = leftmost) on an edge with `count` strands.
  auto lane_offset = [&](std::size_t e, std::size_t j) {
    const double lane = static_cast<double>(j) - (static_cast<double>(on_edge[e].size()) - 1.0) / 2.0;
    return g.canonical(e) == kEast ? -spacing * lane : spacing * lane;
  };
  // Point at distance u along edge e from its tail, in lane j.
  auto at = [&](std::size_t e, double u, std::size_t j) {
    const Point c = g.position(g.tail(e));
    const double off = lane_offset(e, j);
    return g.canonical(e) == kEast ? Point{c.x + u, c.y + off} : Point{c.x + off, c.y + u};
  };

  // Per traversal, the points along its edge from tail to head: the two
  // ports and the corners of its diagonal moves (odd-even transposition
  // rounds, one column each).
  std::vector<std::vector<Point>> route(n);
  auto add = [](std::vector<Point>& r, Point q) {
    if (r.empty() || !(r.back() == q)) r.push_back(q);
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& list = on_edge[e];
    if (list.empty()) continue;
    const std::size_t count = list.size();
    const std::size_t tv = g.tail(e), hv = g.head(e);
    auto tail_lane = [&](std::size_t p) {
      const std::size_t slot = path[p].dir > 0 ? start_slot[p] : end_slot[p];
      return count - 1 - slot;
    };
    auto head_lane = [&](std::size_t p) { return path[p].dir > 0 ? end_slot[p] : start_slot[p]; };

    std::vector<std::size_t> lanes(count);  // strand (path index) per lane
    for (std::size_t p : list) lanes[tail_lane(p)] = p;
    auto in_head_order = [&] {
      return std::is_sorted(lanes.begin(), lanes.end(),
                            [&](std::size_t x, std::size_t y) { return head_lane(x) < head_lane(y); });
    };
    // rounds[r] = upper lane index of each swap in round r.
    std::vector<std::vector<std::size_t>> rounds;
    for (std::size_t r = 0; !in_head_order(); ++r) {
      std::vector<std::size_t> swaps;
      for (std::size_t k = r % 2; k + 1 < count; k += 2) {
        if (head_lane(lanes[k]) > head_lane(lanes[k + 1])) {
          std::swap(lanes[k], lanes[k + 1]);
          swaps.push_back(k);
        }
      }
      rounds.push_back(std::move(swaps));
    }

    const double u0 = box[tv];
    const double u1 = 1.0 - box[hv];
    const double step = (u1 - u0) / static_cast<double>(rounds.size() + 1);
    for (std::size_t p : list) {
      route[p] = {at(e, u0, tail_lane(p))};
    }
    for (std::size_t p : list) lanes[tail_lane(p)] = p;
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      const double ua = u0 + step * (static_cast<double>(r) + 0.5);
      const double ub = u0 + step * (static_cast<double>(r) + 1.5);
      for (std::size_t k : rounds[r]) {
        const std::size_t a = lanes[k], b = lanes[k + 1];
        add(route[a], at(e, ua, k));
        add(route[a], at(e, ub, k + 1));
        add(route[b], at(e, ua, k + 1));
        add(route[b], at(e, ub, k));
        std::swap(lanes[k], lanes[k + 1]);
      }
    }
    for (std::size_t p : list) {
      add(route[p], at(e, u1, head_lane(p)));
    }
  }

  ClosedPolyline curve;
  curve.vertices.reserve(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    if (path[p].dir > 0) {
      curve.vertices.insert(curve.vertices.end(), route[p].begin(), route[p].end());
    } else {
      curve.vertices.insert(curve.vertices.end(), route[p].rbegin(), route[p].rend());
    }
  }
  return curve;
}

}  // namespace wcn
