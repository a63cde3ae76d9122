#include "wcn/folding.hpp"

#include <algorithm>
#include <string>

#include "wcn/error.hpp"

namespace wcn {

void Folding::normalize() {
  for (auto& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
}

std::vector<bool> Folding::paired_mask(std::size_t n) const {
  std::vector<bool> mask(n, false);
  for (const auto& p : pairs) {
    if (p.first >= 1 && p.first <= n) mask[p.first - 1] = true;
    if (p.second >= 1 && p.second <= n) mask[p.second - 1] = true;
  }
  return mask;
}

bool linked(const FoldPair& a, const FoldPair& b) {
  const auto [i, j] = std::minmax(a.first, a.second);
  const auto [k, m] = std::minmax(b.first, b.second);
  return (i < k && k < j && j < m) || (k < i && i < m && m < j);
}

bool is_valid_folding(const Word& w, const Folding& f) {
  const std::size_t n = w.size();
  for (const auto& p : f.pairs) {
    for (std::size_t idx : {p.first, p.second}) {
      if (idx < 1 || idx > n) {
        throw DomainError("folding index " + std::to_string(idx) + " outside 1.." +
                          std::to_string(n));
      }
    }
  }
  std::vector<bool> used(n, false);
  for (const auto& p : f.pairs) {
    if (p.first == p.second) return false;
    if (used[p.first - 1] || used[p.second - 1]) return false;
    used[p.first - 1] = used[p.second - 1] = true;
    if (w[p.first - 1] != w[p.second - 1].inverse()) return false;
  }
  for (std::size_t a = 0; a < f.pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < f.pairs.size(); ++b) {
      if (linked(f.pairs[a], f.pairs[b])) return false;
    }
  }
  return true;
}

double folding_cost(const Word& w, const WeightTable& wt, const Folding& f) {
  if (!is_valid_folding(w, f)) throw DomainError("not a valid folding of the word");
  auto mask = f.paired_mask(w.size());
  double cost = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!mask[i]) cost += wt(w[i]);
  }
  return cost;
}

namespace {

// Position-by-position enumeration. Each position is either left unpaired,
// closes an earlier open position, or is opened to be closed later. Open
// positions form a stack; closing anything but the top would link pairs.
struct FoldingEnumerator {
  const Word& w;
  const std::function<void(const Folding&)>& visit;
  std::vector<std::size_t> open;
  Folding current;

  void run(std::size_t pos) {
    if (pos == w.size()) {
      if (open.empty()) visit(current);
      return;
    }
    // Pruning: enough positions must remain to close what is open.
    if (open.size() > w.size() - pos) return;

    run(pos + 1);  // unpaired

    if (!open.empty() && w[open.back()] == w[pos].inverse()) {
      std::size_t top = open.back();
      open.pop_back();
      current.pairs.push_back({top + 1, pos + 1});
      run(pos + 1);
      current.pairs.pop_back();
      open.push_back(top);
    }

    open.push_back(pos);
    run(pos + 1);
    open.pop_back();
  }
};

}  // namespace

void for_each_folding(const Word& w, const std::function<void(const Folding&)>& visit) {
  FoldingEnumerator e{w, visit, {}, {}};
  e.run(0);
}

ReductionTrace reduce_with_trace(const Word& w) {
  ReductionTrace t;
  std::vector<std::size_t> stack;  // 0-based original indices
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!stack.empty() && w[stack.back()] == w[i].inverse()) {
      t.cancelled.push_back({stack.back() + 1, i + 1});
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  t.reduced.reserve(stack.size());
  for (std::size_t i : stack) {
    t.reduced.push_back(w[i]);
    t.kept.push_back(i + 1);
  }
  return t;
}

Folding lift_folding(const ReductionTrace& trace, const Folding& reduced_folding) {
  Folding out;
  out.pairs = trace.cancelled;
  for (const auto& p : reduced_folding.pairs) {
    out.pairs.push_back({trace.kept.at(p.first - 1), trace.kept.at(p.second - 1)});
  }
  out.normalize();
  return out;
}

}  // namespace wcn
