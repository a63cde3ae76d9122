#include "wcn/norm.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "wcn/error.hpp"

namespace wcn {

NormTable::NormTable(const Word& w, const WeightTable& wt, const NormOptions& options)
    : NormTable(w, wt.letter_weights(w), options) {}

NormTable::NormTable(const Word& w, std::vector<double> letter_weights,
                     const NormOptions& options)
    : word_(w), weights_(std::move(letter_weights)), n_(w.size()) {
  if (weights_.size() != n_) throw DomainError("one weight per letter required");

  offsets_.resize(n_ + 1);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    offsets_[i] = total;
    total += n_ - i;
  }
  offsets_[n_] = total;
  cells_.assign(total, 0.0);

  std::unordered_map<std::uint32_t, std::size_t> slot;
  for (Letter l : w) {
    if (slot.emplace(l.code(), positions_.size()).second) positions_.emplace_back();
  }
  for (std::size_t j = 0; j < n_; ++j) positions_[slot[w[j].code()]].push_back(j);
  partner_slot_.assign(n_, kNoPartner);
  partner_count_.assign(n_, 0);
  std::unordered_map<std::uint32_t, std::size_t> seen_count;
  for (std::size_t j = 0; j < n_; ++j) {
    if (auto it = slot.find(w[j].inverse().code()); it != slot.end()) {
      partner_slot_[j] = it->second;
      partner_count_[j] = seen_count[w[j].inverse().code()];
    }
    ++seen_count[w[j].code()];
  }

  fill(detail::resolve_threads(options.threads));
}

double NormTable::cell(std::size_t i, std::size_t j) const {
  if (i < 1 || j > n_ || i > j) {
    throw DomainError("norm table cell (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") outside 1 <= i <= j <= " + std::to_string(n_));
  }
  return at(i - 1, j - i + 1);
}

// ||l_s..l_e|| = min( ||l_s..l_{e-1}|| + wt(l_e),
//                     min_{k : l_k = inv(l_e)} ||l_s..l_{k-1}|| + ||l_{k+1}..l_{e-1}|| )
double NormTable::compute(std::size_t start, std::size_t len) const {
  const std::size_t end = start + len - 1;
  double best = weights_[end] + (len > 1 ? at(start, len - 1) : 0.0);
  for_each_partner(end, start, [&](std::size_t k) {
    const double left = k > start ? at(start, k - start) : 0.0;
    const double right = end - k > 1 ? at(k + 1, end - k - 1) : 0.0;
    const double cand = left + right;
    if (cand < best) best = cand;
    return true;
  });
  return best;
}

void NormTable::fill(unsigned threads) {
  if (n_ == 0) return;
  // Short diagonals are not worth a synchronization round each.
  const bool parallel = threads > 1 && n_ >= 256;
  auto body = [this](std::size_t round, std::size_t start) {
    const std::size_t len = round + 1;
    cells_[offsets_[start] + len - 1] = compute(start, len);
  };
  detail::run_rounds(parallel ? threads : 1, n_,
                     [this](std::size_t round) { return n_ - round; }, body);
}

Folding NormTable::traceback() const {
  Folding f;
  struct Range {
    std::size_t start, len;
  };
  std::vector<Range> todo;
  if (n_ > 0) todo.push_back({0, n_});
  while (!todo.empty()) {
    auto [start, len] = todo.back();
    todo.pop_back();
    if (len == 0) continue;
    const std::size_t end = start + len - 1;
    const double target = at(start, len);
    const double exposed = weights_[end] + (len > 1 ? at(start, len - 1) : 0.0);
    if (exposed == target) {
      todo.push_back({start, len - 1});
      continue;
    }
    bool found = false;
    for_each_partner(end, start, [&](std::size_t k) {
      const double left = k > start ? at(start, k - start) : 0.0;
      const double right = end - k > 1 ? at(k + 1, end - k - 1) : 0.0;
      if (left + right != target) return true;
      f.pairs.push_back({k + 1, end + 1});
      todo.push_back({start, k - start});
      todo.push_back({k + 1, end - k - 1});
      found = true;
      return false;
    });
    if (!found) throw Error("norm table traceback failed");
  }
  f.normalize();
  return f;
}

double norm(const Word& w, const WeightTable& wt, const NormOptions& options) {
  return NormTable(w, wt, options).value();
}

Folding optimal_folding(const Word& w, const WeightTable& wt, const NormOptions& options) {
  return NormTable(w, wt, options).traceback();
}

double norm_bruteforce(const Word& w, const WeightTable& wt) {
  if (w.size() > kBruteForceMaxLength) {
    throw DomainError("brute-force norm limited to words of length <= " +
                      std::to_string(kBruteForceMaxLength) + " (got " +
                      std::to_string(w.size()) + ")");
  }
  const auto weights = wt.letter_weights(w);
  double best = std::numeric_limits<double>::infinity();
  for_each_folding(w, [&](const Folding& f) {
    auto mask = f.paired_mask(w.size());
    double cost = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!mask[i]) cost += weights[i];
    }
    best = std::min(best, cost);
  });
  return best;
}

std::vector<ConjugateFactor> decompose(const Word& w, const WeightTable& wt,
                                       const NormOptions& options) {
  const Folding f = optimal_folding(w, wt, options);
  const auto mask = f.paired_mask(w.size());
  // w = h_0 s_1 h_1 ... s_m h_m with h_0 h_1 ... h_m = 1; the j-th factor
  // is conjugated by h_0 ... h_{j-1}.
  std::vector<ConjugateFactor> out;
  Word prefix;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (mask[i]) {
      prefix.push_back(w[i]);
    } else {
      prefix = free_reduce(prefix);
      out.push_back({prefix, w[i]});
    }
  }
  return out;
}

Word reassemble(const std::vector<ConjugateFactor>& factors) {
  Word out;
  for (const auto& fct : factors) {
    out.insert(out.end(), fct.conjugator.begin(), fct.conjugator.end());
    out.push_back(fct.letter);
    Word inv = inverse(fct.conjugator);
    out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

}  // namespace wcn
