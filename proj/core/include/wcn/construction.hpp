#pragma once

// Twist homomorphisms over the alphabet x_0..x_{2m}, y_0..y_{2m}, the word
// wbar = f^(2)(x_0) whose square is much cheaper to fold than itself, and
// numerical checks of the norm bounds around it.
//
// Encoding: x_i is generator 2i, y_i is generator 2i+1.

#include <cstddef>
#include <string>
#include <vector>

#include "wcn/folding.hpp"
#include "wcn/geometry.hpp"
#include "wcn/norm.hpp"
#include "wcn/word.hpp"

namespace wcn {

constexpr Generator x_gen(std::size_t i) { return static_cast<Generator>(2 * i); }
constexpr Generator y_gen(std::size_t i) { return static_cast<Generator>(2 * i + 1); }

// (x_i y_i)^m (y_i x_i)^-m, 4m letters. Requires m >= 2 and i <= 2m.
Word twist(std::size_t i, std::size_t m);

// f_j: a_i -> T_j^-1 a_i when i and j are both odd, a_i T_j otherwise,
// for a_i in {x_i, y_i}. Every letter becomes 4m+1 letters.
Word f_step(std::size_t j, std::size_t m, const Word& w);

// f^(j) = f_2m o ... o f_{j+1}; f_{j+1} is applied first. j = 2m is the
// identity.
Word f_chain(std::size_t j, std::size_t m, const Word& w);

// f^(2)(x_0), of length (4m+1)^(2m-2).
Word build_wbar(std::size_t m);

// h: x_i, y_i -> x_0 for even i, x_1 for odd i. Kills every twist.
Word collapse_h(const Word& w);

// The DP refuses construction words longer than this unless forced.
inline constexpr std::size_t kConstructionGuard = 5000;

struct BoundCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool upper = true;  // value <= bound, otherwise value >= bound
  bool ok = false;
};

struct MainBoundsReport {
  std::size_t m = 0;
  std::size_t length = 0;
  double norm_w = 0.0;
  double norm_w2 = 0.0;
  std::vector<BoundCheck> checks;
  bool ok = false;
};

// Unit weights. ||wbar|| in [m^2-3m+5, 4m^2-8m+5], ||wbar^2|| in
// [2m-2, 8m-4] and the exact length.
MainBoundsReport verify_main_bounds(std::size_t m, bool force = false,
                                   const NormOptions& options = {});

// For 0 <= k <= m-1 and g = f^(2m-2k):
//   ||g(x0 x1)||, ||g(x0 X1)|| <= 4k+2     ||g(x0 x1)||, ||g(x0 x0)|| <= 2(4k+2)
//   ||g(x0)|| <= 4k^2+1
// and, for k >= 1, ||g(x0 x1)||, ||g(x0 x0)|| >= 2k, ||g(x0)|| >= k^2-k+3.
std::vector<BoundCheck> verify_upper_bounds(std::size_t m, std::size_t k, bool force = false,
                                            const NormOptions& options = {});

struct ReversedReport {
  double norm_w = 0.0;
  double norm_w2 = 0.0;
  std::size_t m_min = 0;  // smallest m with length(w) <= 2^m
  bool ok = false;        // ||w|| <= (m_min + 1) / 2 * ||w^2||
};
ReversedReport check_reversed(const Word& w, const WeightTable& wt,
                              const NormOptions& options = {});

// For a folding of w w (n = length(w)), the sizes |A_t| for t = 1..n, where
// A_t holds the paired positions i in [t, n+t) whose partner lies outside
// that window.
std::vector<std::size_t> split_sizes(std::size_t n, const Folding& f);

struct SplitReport {
  std::size_t foldings = 0;
  std::size_t worst = 0;   // max over foldings of min_t |A_t|
  bool ok_third = false;   // worst <= (n+2)/3
  bool ok_half = false;    // worst <= (n+1)/2
};
// Exhaustive over all foldings of w w; requires 2 length(w) <= 16.
SplitReport check_split_bound(const Word& w);

// A closed polyline on the ladder of unit squares (k, k+1) x (0, 1),
// k = 1..squares, representing w with generator g around square g+1.
// Strands travel along the square boundaries in lanes spaced delta/4 apart;
// the excess area over the word's norm grows linearly with that spacing.
// Throws DomainError when delta is outside (0, 0.1), when the lanes would
// leave the corridor around the ladder, or when w is freely trivial.
ClosedPolyline emit_word_curve(const Word& w, std::size_t squares, double delta);

// emit_word_curve(build_wbar(m), 4m+2, delta).
ClosedPolyline emit_grid_curve(std::size_t m, double delta);

}  // namespace wcn
