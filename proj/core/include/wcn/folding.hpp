#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wcn/word.hpp"

namespace wcn {

// An unordered index pair, stored with first < second. Indices are 1-based
// positions into the word the folding belongs to.
struct FoldPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const FoldPair&, const FoldPair&) = default;
  friend auto operator<=>(const FoldPair&, const FoldPair&) = default;
};

// A set of pairwise non-linked pairs matching letters to their inverses.
// Positions not covered by any pair are the exposed (unpaired) positions.
struct Folding {
  std::vector<FoldPair> pairs;  // kept sorted by first index

  void normalize();
  std::vector<bool> paired_mask(std::size_t n) const;
  friend bool operator==(const Folding&, const Folding&) = default;
};

// Two pairs {i<j}, {k<m} are linked when they interleave.
bool linked(const FoldPair& a, const FoldPair& b);

// Throws DomainError when an index lies outside 1..length(w).
bool is_valid_folding(const Word& w, const Folding& f);

// Sum of weights over unpaired positions. Throws DomainError on an invalid
// folding.
double folding_cost(const Word& w, const WeightTable& wt, const Folding& f);

// Visits every valid folding of w (including the empty one). Exponential;
// intended for oracles on short words.
void for_each_folding(const Word& w, const std::function<void(const Folding&)>& visit);

// Free reduction that remembers which original positions survived and which
// pairs cancelled. The cancelled pairs always form a valid folding.
struct ReductionTrace {
  Word reduced;
  std::vector<std::size_t> kept;    // 1-based original index of each reduced letter
  std::vector<FoldPair> cancelled;  // 1-based original pairs
};
ReductionTrace reduce_with_trace(const Word& w);

// Lifts a folding of trace.reduced back to the original word, adding the
// cancelled pairs. Cost is preserved.
Folding lift_folding(const ReductionTrace& trace, const Folding& reduced_folding);

}  // namespace wcn
