#include "wcn/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "wcn/error.hpp"

namespace wcn {

Word mixed_word(const Word& w1, const Word& w2, std::size_t p, std::size_t q) {
  const std::size_t n = w1.size();
  const std::size_t m = w2.size();
  if (n == 0 || m == 0) throw DomainError("mixed_word needs two nonempty words");
  if (p >= n) {
    throw DomainError("rotation p = " + std::to_string(p) + " outside 0.." + std::to_string(n - 1));
  }
  if (q >= m) {
    throw DomainError("rotation q = " + std::to_string(q) + " outside 0.." + std::to_string(m - 1));
  }
  Word out;
  out.reserve(n + m);
  for (std::size_t i = p; i < n; ++i) out.push_back(w1[i]);
  for (std::size_t i = 0; i < p; ++i) out.push_back(w1[i]);
  for (std::size_t j = q; j > 0; --j) out.push_back(w2[j - 1].inverse());
  for (std::size_t j = m; j > q; --j) out.push_back(w2[j - 1].inverse());
  return out;
}

Word witness_word(const Word& w1, const Word& w2, std::size_t p, std::size_t q) {
  if (!w1.empty() && !w2.empty()) return mixed_word(w1, w2, p, q);
  if (w1.empty() && w2.empty()) return {};
  if (w2.empty()) {
    if (p >= w1.size()) throw DomainError("rotation p out of range");
    return rotate(w1, p);
  }
  if (q >= w2.size()) throw DomainError("rotation q out of range");
  // inv(l'_q)..inv(l'_1) inv(l'_m)..inv(l'_{q+1}) is inverse(w2) rotated.
  return rotate(inverse(w2), (w2.size() - q) % w2.size());
}

double mixed_folding_cost(const Word& w1, const Word& w2, const WeightTable& wt,
                          const MixedFolding& mf) {
  return folding_cost(witness_word(w1, w2, mf.p, mf.q), wt, mf.folding);
}

namespace {

struct Sweep {
  std::vector<double> values;  // row-major over (p, q)
  std::size_t n = 0, m = 0;
};

Sweep sweep(const Word& w1, const Word& w2, const WeightTable& wt, const NormOptions& options) {
  Sweep s;
  s.n = w1.size();
  s.m = w2.size();
  // Resolve weights up front so a missing one fails once, on the caller's thread.
  (void)wt.letter_weights(w1);
  (void)wt.letter_weights(w2);
  s.values.assign(s.n * s.m, 0.0);
  const unsigned threads = detail::resolve_threads(options.threads);
  detail::parallel_for(threads, s.values.size(), [&](std::size_t cell) {
    const std::size_t p = cell / s.m;
    const std::size_t q = cell % s.m;
    const Word reduced = free_reduce(mixed_word(w1, w2, p, q));
    s.values[cell] = NormTable(reduced, wt).value();
  });
  return s;
}

}  // namespace

double distance(const Word& w1, const Word& w2, const WeightTable& wt,
                const NormOptions& options) {
  if (w1.empty() && w2.empty()) return 0.0;
  if (w2.empty()) return norm(w1, wt, options);
  if (w1.empty()) return norm(w2, wt, options);
  const Sweep s = sweep(w1, w2, wt, options);
  return *std::min_element(s.values.begin(), s.values.end());
}

MixedFolding optimal_mixed_folding(const Word& w1, const Word& w2, const WeightTable& wt,
                                   const NormOptions& options) {
  MixedFolding out;
  if (w1.empty() && w2.empty()) return out;
  if (w2.empty() || w1.empty()) {
    out.folding = optimal_folding(witness_word(w1, w2, 0, 0), wt, options);
    return out;
  }
  const Sweep s = sweep(w1, w2, wt, options);
  // min_element returns the first minimum: smallest p, then smallest q.
  const auto best = static_cast<std::size_t>(
      std::min_element(s.values.begin(), s.values.end()) - s.values.begin());
  out.p = best / s.m;
  out.q = best % s.m;
  const ReductionTrace trace = reduce_with_trace(mixed_word(w1, w2, out.p, out.q));
  out.folding = lift_folding(trace, NormTable(trace.reduced, wt).traceback());
  return out;
}

double distance_bruteforce(const Word& w1, const Word& w2, const WeightTable& wt) {
  if (w1.size() + w2.size() > kBruteForceMaxLength) {
    throw DomainError("brute-force distance limited to total length <= " +
                      std::to_string(kBruteForceMaxLength));
  }
  if (w1.empty() && w2.empty()) return 0.0;
  if (w2.empty()) return norm_bruteforce(w1, wt);
  if (w1.empty()) return norm_bruteforce(w2, wt);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < w1.size(); ++p) {
    for (std::size_t q = 0; q < w2.size(); ++q) {
      best = std::min(best, norm_bruteforce(mixed_word(w1, w2, p, q), wt));
    }
  }
  return best;
}

}  // namespace wcn
