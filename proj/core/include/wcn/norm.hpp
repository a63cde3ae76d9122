#pragma once

// Weighted cancellation norm: the least total weight of exposed letters over
// all foldings of a word. Computed by an interval dynamic program over
// subwords in O(n^3) time and O(n^2) memory.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wcn/folding.hpp"
#include "wcn/word.hpp"

namespace wcn {

struct NormOptions {
  // Worker threads for filling the table; 0 picks the hardware count.
  // Results do not depend on this value.
  unsigned threads = 1;
};

// Minimal folding cost of every subword l_i..l_j. Cells are 1-based and
// inclusive. Storage is upper-triangular and row-major by start index; each
// row holds the lengths 1..n-i+1 contiguously. The table is filled by
// increasing length, so all cells of one length can be computed in parallel.
class NormTable {
 public:
  NormTable(const Word& w, const WeightTable& wt, const NormOptions& options = {});
  NormTable(const Word& w, std::vector<double> letter_weights, const NormOptions& options = {});

  std::size_t size() const { return n_; }
  double cell(std::size_t i, std::size_t j) const;
  double value() const { return n_ == 0 ? 0.0 : at(0, n_); }

  // An optimal folding of the whole word, recovered from the table. When
  // leaving the last letter exposed is optimal, that branch is taken.
  Folding traceback() const;

 private:
  // 0-based start, length >= 1.
  double at(std::size_t start, std::size_t len) const {
    return cells_[offsets_[start] + len - 1];
  }
  void fill(unsigned threads);
  double compute(std::size_t start, std::size_t len) const;

  static constexpr std::size_t kNoPartner = static_cast<std::size_t>(-1);

  Word word_;
  std::vector<double> weights_;
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<double> cells_;
  // Ascending positions of each letter code, and for each position j the
  // list holding inv(l_j) plus how many of its entries precede j.
  std::vector<std::vector<std::size_t>> positions_;
  std::vector<std::size_t> partner_slot_;  // index into positions_, or npos
  std::vector<std::size_t> partner_count_;

  template <typename Fn>
  void for_each_partner(std::size_t end, std::size_t start, Fn fn) const {
    if (partner_slot_[end] == kNoPartner) return;
    const auto& list = positions_[partner_slot_[end]];
    for (std::size_t c = partner_count_[end]; c > 0; --c) {
      const std::size_t k = list[c - 1];
      if (k < start || !fn(k)) return;
    }
  }
};

double norm(const Word& w, const WeightTable& wt, const NormOptions& options = {});
Folding optimal_folding(const Word& w, const WeightTable& wt, const NormOptions& options = {});

// Minimum over an exhaustive enumeration of foldings. Refuses words longer
// than kBruteForceMaxLength.
inline constexpr std::size_t kBruteForceMaxLength = 16;
double norm_bruteforce(const Word& w, const WeightTable& wt);

// Writes w as a product of conjugates of single letters,
//   w = prod_j  c_j * s_j * c_j^-1   (up to free reduction),
// with the summed weight of the s_j equal to norm(w). Conjugators are
// freely reduced.
struct ConjugateFactor {
  Word conjugator;
  Letter letter;
};
std::vector<ConjugateFactor> decompose(const Word& w, const WeightTable& wt,
                                       const NormOptions& options = {});
Word reassemble(const std::vector<ConjugateFactor>& factors);

}  // namespace wcn
