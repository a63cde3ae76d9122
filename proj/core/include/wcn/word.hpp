#pragma once

// Letters, words and weights over a free group.
//
// A letter is a generator id together with a sign; the formal inverse of a
// letter flips its sign. A word is a plain sequence of letters: nothing here
// reduces implicitly, so a word is exactly what was written. Group elements
// are words taken up to free reduction.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wcn {

using Generator = std::uint32_t;

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator generator, int sign)
      : code_((generator << 1) | (sign < 0 ? 1u : 0u)) {}

  // Packed form: 2 * generator + (1 if inverse). inverse() is code ^ 1.
  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr Generator generator() const { return code_ >> 1; }
  constexpr int sign() const { return (code_ & 1u) != 0 ? -1 : 1; }
  constexpr bool is_positive() const { return (code_ & 1u) == 0; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

constexpr Letter pos(Generator g) { return Letter(g, +1); }
constexpr Letter neg(Generator g) { return Letter(g, -1); }

using Word = std::vector<Letter>;

// Tokens are `x<k>` for generator k and `X<k>` for its inverse; `1` alone
// denotes the empty word. Tokens are separated by whitespace.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::string format_letter(Letter l);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::size_t n);
Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1 after reduction
};
CyclicReduction cyclic_reduce(const Word& w);

// Rotates w left by k positions (k taken modulo length).
Word rotate(const Word& w, std::size_t k);

// Exponent sum of generator g in w.
long exponent_sum(const Word& w, Generator g);

using HomomorphismImages = std::unordered_map<Generator, Word>;

// Substitutes each positive letter by its image and each negative letter by
// the inverse of the image. The output is not reduced.
Word apply_homomorphism(const HomomorphismImages& images, const Word& w);

// Nonnegative weights attached to generators, so a letter and its inverse
// always weigh the same. Lookups for generators without an entry either fail
// or return the fallback weight when one is configured.
class WeightTable {
 public:
  WeightTable() = default;

  // A table where every generator weighs 1 unless set otherwise.
  static WeightTable unit();
  static WeightTable with_fallback(double weight);

  void set(Generator g, double weight);
  bool contains(Generator g) const { return weights_.contains(g); }
  double at(Generator g) const;
  double operator()(Letter l) const { return at(l.generator()); }

  std::optional<double> fallback() const { return fallback_; }
  const std::map<Generator, double>& entries() const { return weights_; }

  // Weight of every letter of w, in order. Fails on the first generator
  // without a weight.
  std::vector<double> letter_weights(const Word& w) const;

 private:
  std::map<Generator, double> weights_;
  std::optional<double> fallback_;
};

// Line-oriented `x<k> <weight>` entries. Blank lines and lines starting with
// `#` are ignored. Generators not listed default to weight 1.
WeightTable parse_weights(std::string_view text);
WeightTable load_weights(const std::string& path);

std::ostream& operator<<(std::ostream& os, Letter l);

}  // namespace wcn
