#include "wcn/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wcn/error.hpp"

namespace wcn {

namespace {

std::optional<Letter> parse_token(std::string_view tok) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X')) {
    return std::nullopt;
  }
  Generator g = 0;
  const char* first = tok.data() + 1;
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, g);
  if (ec != std::errc() || ptr != last) {
    return std::nullopt;
  }
  return Letter(g, tok[0] == 'x' ? +1 : -1);
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "1") {
    return {};
  }
  Word w;
  w.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto letter = parse_token(tokens[i]);
    if (!letter) {
      throw ParseError("malformed token '" + std::string(tokens[i]) + "' at position " +
                       std::to_string(i + 1));
    }
    w.push_back(*letter);
  }
  return w;
}

std::string format_letter(Letter l) {
  return (l.is_positive() ? "x" : "X") + std::to_string(l.generator());
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, Letter l) { return os << format_letter(l); }

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.conjugator.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lo));
  out.core.assign(r.begin() + static_cast<std::ptrdiff_t>(lo),
                  r.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out(w);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % w.size()), out.end());
  return out;
}

long exponent_sum(const Word& w, Generator g) {
  long s = 0;
  for (Letter l : w) {
    if (l.generator() == g) s += l.sign();
  }
  return s;
}

Word apply_homomorphism(const HomomorphismImages& images, const Word& w) {
  Word out;
  for (Letter l : w) {
    auto it = images.find(l.generator());
    if (it == images.end()) {
      throw DomainError("no image for generator x" + std::to_string(l.generator()));
    }
    const Word& img = it->second;
    if (l.is_positive()) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto r = img.rbegin(); r != img.rend(); ++r) out.push_back(r->inverse());
    }
  }
  return out;
}

WeightTable WeightTable::unit() { return with_fallback(1.0); }

WeightTable WeightTable::with_fallback(double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw DomainError("fallback weight must be a finite nonnegative number");
  }
  WeightTable t;
  t.fallback_ = weight;
  return t;
}

void WeightTable::set(Generator g, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw DomainError("weight of x" + std::to_string(g) + " must be finite and nonnegative");
  }
  weights_[g] = weight;
}

double WeightTable::at(Generator g) const {
  if (auto it = weights_.find(g); it != weights_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw DomainError("missing weight for generator x" + std::to_string(g));
}

std::vector<double> WeightTable::letter_weights(const Word& w) const {
  std::vector<double> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(at(l.generator()));
  return out;
}

WeightTable parse_weights(std::string_view text) {
  WeightTable table = WeightTable::unit();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    auto letter = parse_token(tokens[0]);
    if (tokens.size() != 2 || !letter || !letter->is_positive()) {
      throw ParseError("weights line " + std::to_string(line_no) + ": expected `x<k> <weight>`");
    }
    double value = 0.0;
    std::string num(tokens[1]);
    std::size_t used = 0;
    try {
      value = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != num.size()) {
      throw ParseError("weights line " + std::to_string(line_no) + ": bad number '" + num + "'");
    }
    table.set(letter->generator(), value);
  }
  return table;
}

WeightTable load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weights file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_weights(ss.str());
}

}  // namespace wcn
