#pragma once

// Weighted cancellation distance between two words: the least exposed weight
// over mixed foldings, i.e. foldings of a rotation of w1 followed by a
// rotation of w2^-1. Equivalently min over u of ||u w1 u^-1 w2^-1||.

#include <cstddef>

#include "wcn/folding.hpp"
#include "wcn/norm.hpp"
#include "wcn/word.hpp"

namespace wcn {

struct MixedFolding {
  Folding folding;  // folding of mixed_word(w1, w2, p, q)
  std::size_t p = 0;
  std::size_t q = 0;
};

// l_{p+1}..l_n l_1..l_p inv(l'_q)..inv(l'_1) inv(l'_m)..inv(l'_{q+1}).
// Requires both words nonempty, p < length(w1), q < length(w2).
Word mixed_word(const Word& w1, const Word& w2, std::size_t p, std::size_t q);

// The word a mixed folding refers to. Beyond mixed_word this also covers
// the empty-word convention: with w2 empty it is the rotation of w1 by p,
// with w1 empty the rotation of inverse(w2) matching q.
Word witness_word(const Word& w1, const Word& w2, std::size_t p, std::size_t q);

double mixed_folding_cost(const Word& w1, const Word& w2, const WeightTable& wt,
                          const MixedFolding& mf);

// d(w, empty) = ||w|| and d(empty, empty) = 0. Otherwise the minimum over
// every rotation pair (p, q) of the norm of the freely reduced mixed word.
double distance(const Word& w1, const Word& w2, const WeightTable& wt,
                const NormOptions& options = {});

// The optimum with the smallest p, then the smallest q.
MixedFolding optimal_mixed_folding(const Word& w1, const Word& w2, const WeightTable& wt,
                                   const NormOptions& options = {});

// Exhaustive over all (p, q) and all foldings; length(w1) + length(w2) must
// not exceed kBruteForceMaxLength.
double distance_bruteforce(const Word& w1, const Word& w2, const WeightTable& wt);

}  // namespace wcn
