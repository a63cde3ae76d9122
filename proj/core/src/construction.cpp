#include "wcn/construction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "wcn/error.hpp"

namespace wcn {

namespace {

void require_m(std::size_t m) {
  if (m < 2) throw DomainError("construction needs m >= 2 (got " + std::to_string(m) + ")");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

BoundCheck upper(std::string name, double value, double bound) {
  return {std::move(name), value, bound, true, value <= bound};
}

BoundCheck lower(std::string name, double value, double bound) {
  return {std::move(name), value, bound, false, value >= bound};
}

void guard(std::size_t length, bool force) {
  if (length > kConstructionGuard && !force) {
    throw DomainError("word of length " + std::to_string(length) + " exceeds the DP guard of " +
                      std::to_string(kConstructionGuard) + " letters; pass --force to run anyway");
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Word twist(std::size_t i, std::size_t m) {
  require_m(m);
  if (i > 2 * m) {
    throw DomainError("twist index " + std::to_string(i) + " outside 0.." + std::to_string(2 * m));
  }
  Word w;
  w.reserve(4 * m);
  for (std::size_t r = 0; r < m; ++r) {
    w.push_back(pos(x_gen(i)));
    w.push_back(pos(y_gen(i)));
  }
  for (std::size_t r = 0; r < m; ++r) {
    w.push_back(neg(x_gen(i)));
    w.push_back(neg(y_gen(i)));
  }
  return w;
}

Word f_step(std::size_t j, std::size_t m, const Word& w) {
  require_m(m);
  if (j > 2 * m) {
    throw DomainError("f index " + std::to_string(j) + " outside 0.." + std::to_string(2 * m));
  }
  const Word t = twist(j, m);
  const Word t_inv = inverse(t);
  HomomorphismImages images;
  for (std::size_t i = 0; i <= 2 * m; ++i) {
    for (Generator g : {x_gen(i), y_gen(i)}) {
      images[g] = (i % 2 == 1 && j % 2 == 1) ? concat(t_inv, {pos(g)}) : concat({pos(g)}, t);
    }
  }
  for (Letter l : w) {
    if (!images.contains(l.generator())) {
      throw DomainError("generator x" + std::to_string(l.generator()) +
                        " is outside the alphabet for m = " + std::to_string(m));
    }
  }
  return apply_homomorphism(images, w);
}

Word f_chain(std::size_t j, std::size_t m, const Word& w) {
  require_m(m);
  if (j < 2 || j > 2 * m) {
    throw DomainError("f^(j) needs 2 <= j <= 2m (got j = " + std::to_string(j) + ")");
  }
  Word out = w;
  for (std::size_t s = j + 1; s <= 2 * m; ++s) out = f_step(s, m, out);
  return out;
}

Word build_wbar(std::size_t m) { return f_chain(2, m, {pos(x_gen(0))}); }

Word collapse_h(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    const std::size_t i = l.generator() / 2;
    out.push_back(Letter(i % 2 == 0 ? x_gen(0) : x_gen(1), l.sign()));
  }
  return out;
}

MainBoundsReport verify_main_bounds(std::size_t m, bool force, const NormOptions& options) {
  require_m(m);
  const std::size_t expected = ipow(4 * m + 1, 2 * m - 2);
  guard(2 * expected, force);
  MainBoundsReport r;
  r.m = m;
  const Word w = build_wbar(m);
  r.length = w.size();
  const WeightTable unit = WeightTable::unit();
  r.norm_w = norm(w, unit, options);
  r.norm_w2 = norm(power(w, 2), unit, options);
  const double md = static_cast<double>(m);
  r.checks.push_back({"|wbar| = (4m+1)^(2m-2) = " + std::to_string(expected),
                      static_cast<double>(r.length), static_cast<double>(expected), true,
                      r.length == expected});
  r.checks.push_back(lower("||wbar|| >= m^2-3m+5", r.norm_w, md * md - 3 * md + 5));
  r.checks.push_back(upper("||wbar|| <= 4m^2-8m+5", r.norm_w, 4 * md * md - 8 * md + 5));
  r.checks.push_back(lower("||wbar^2|| >= 2m-2", r.norm_w2, 2 * md - 2));
  r.checks.push_back(upper("||wbar^2|| <= 8m-4", r.norm_w2, 8 * md - 4));
  r.ok = std::all_of(r.checks.begin(), r.checks.end(), [](const BoundCheck& c) { return c.ok; });
  return r;
}

std::vector<BoundCheck> verify_upper_bounds(std::size_t m, std::size_t k, bool force,
                                            const NormOptions& options) {
  require_m(m);
  if (k + 1 > m) {
    throw DomainError("k must satisfy 0 <= k <= m-1 (got k = " + std::to_string(k) + ")");
  }
  guard(2 * ipow(4 * m + 1, 2 * k), force);
  const std::size_t j = 2 * m - 2 * k;
  const WeightTable unit = WeightTable::unit();
  const std::string g = "||f^(" + std::to_string(j) + ")(";
  auto image_norm = [&](const char* text) {
    return norm(f_chain(j, m, parse_word(text)), unit, options);
  };
  const double kd = static_cast<double>(k);
  const double x0x1 = image_norm("x0 x2");
  const double x0X1 = image_norm("x0 X2");
  const double x0x0 = image_norm("x0 x0");
  const double x0 = image_norm("x0");

  std::vector<BoundCheck> out;
  out.push_back(upper(g + "x0 x1)|| <= 4k+2", x0x1, 4 * kd + 2));
  out.push_back(upper(g + "x0 X1)|| <= 4k+2", x0X1, 4 * kd + 2));
  out.push_back(upper(g + "x0 x1)|| <= (4k+2)*2", x0x1, (4 * kd + 2) * 2));
  out.push_back(upper(g + "x0 x0)|| <= (4k+2)*2", x0x0, (4 * kd + 2) * 2));
  out.push_back(upper(g + "x0)|| <= 4k^2+1", x0, 4 * kd * kd + 1));
  if (k >= 1) {
    out.push_back(lower(g + "x0 x1)|| >= 2k", x0x1, 2 * kd));
    out.push_back(lower(g + "x0 x0)|| >= 2k", x0x0, 2 * kd));
    out.push_back(lower(g + "x0)|| >= k^2-k+3", x0, kd * kd - kd + 3));
  }
  for (auto& c : out) c.name += " [k=" + std::to_string(k) + ", bound " + fmt(c.bound) + "]";
  return out;
}

ReversedReport check_reversed(const Word& w, const WeightTable& wt, const NormOptions& options) {
  ReversedReport r;
  const std::size_t n = std::max<std::size_t>(1, w.size());
  r.m_min = static_cast<std::size_t>(std::bit_width(n - 1));  // ceil(log2 n)
  r.norm_w = norm(w, wt, options);
  r.norm_w2 = norm(power(w, 2), wt, options);
  const double rhs = 0.5 * static_cast<double>(r.m_min + 1) * r.norm_w2;
  r.ok = r.norm_w <= rhs + 1e-9 * std::max(1.0, rhs);
  return r;
}

std::vector<std::size_t> split_sizes(std::size_t n, const Folding& f) {
  std::vector<std::size_t> partner(2 * n + 1, 0);
  for (const FoldPair& p : f.pairs) {
    if (p.first < 1 || p.second > 2 * n) throw DomainError("folding index outside 1..2n");
    partner[p.first] = p.second;
    partner[p.second] = p.first;
  }
  std::vector<std::size_t> sizes;
  for (std::size_t t = 1; t <= n; ++t) {
    std::size_t count = 0;
    for (std::size_t i = t; i < n + t; ++i) {
      if (partner[i] != 0 && (partner[i] < t || partner[i] >= n + t)) ++count;
    }
    sizes.push_back(count);
  }
  return sizes;
}

SplitReport check_split_bound(const Word& w) {
  const std::size_t n = w.size();
  if (2 * n > kBruteForceMaxLength) {
    throw DomainError("split bound check limited to 2n <= " +
                      std::to_string(kBruteForceMaxLength));
  }
  SplitReport r;
  if (n > 0) {
    for_each_folding(power(w, 2), [&](const Folding& f) {
      ++r.foldings;
      const auto sizes = split_sizes(n, f);
      r.worst = std::max(r.worst, *std::min_element(sizes.begin(), sizes.end()));
    });
  }
  const double nd = static_cast<double>(n);
  r.ok_third = static_cast<double>(r.worst) <= (nd + 2) / 3;
  r.ok_half = static_cast<double>(r.worst) <= (nd + 1) / 2;
  return r;
}

ClosedPolyline emit_grid_curve(std::size_t m, double delta) {
  require_m(m);
  return emit_word_curve(build_wbar(m), 4 * m + 2, delta);
}

}  // namespace wcn
