// Words in a free group, stored freely reduced as signed 1-based generator
// indices: +i is generator i-1, -i its inverse.
#pragma once

#include <string>
#include <vector>

#include "sslab/errors.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) { reduce(); }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  Word inverse() const {
    std::vector<int> inv(letters_.rbegin(), letters_.rend());
    for (int& l : inv) l = -l;
    Word w;
    w.letters_ = std::move(inv);  // already reduced
    return w;
  }

  Word operator*(const Word& other) const {
    std::vector<int> cat = letters_;
    cat.insert(cat.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(cat));
  }

  Word pow(long e) const {
    Word base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Word out;
    for (long i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Word pow(const Int& e) const { return pow(to_long(e)); }

  Word conjugated_by(const Word& g) const { return g * (*this) * g.inverse(); }

  static Word commutator(const Word& u, const Word& v) {
    return u * v * u.inverse() * v.inverse();
  }

  Word cyclically_reduced() const {
    std::vector<int> w = letters_;
    while (w.size() >= 2 && w.front() == -w.back()) {
      w.erase(w.begin());
      w.pop_back();
    }
    Word out;
    out.letters_ = std::move(w);
    return out;
  }

  /// Exponent-sum vector over gen_count generators.
  IVec exponent_vector(long gen_count) const {
    IVec v = IVec::Zero(gen_count);
    for (int l : letters_) {
      long idx = (l > 0 ? l : -l) - 1;
      if (idx >= gen_count) throw ValidationError("word letter out of range");
      v(idx) += (l > 0 ? 1 : -1);
    }
    return v;
  }

 private:
  void reduce() {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (int l : letters_) {
      if (l == 0) throw ValidationError("word letter 0 is not allowed");
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    letters_ = std::move(out);
  }

  std::vector<int> letters_;
};

// Words print and parse with single-letter generator names: a lowercase
// letter is the generator, the matching uppercase letter its inverse, and
// "[u,v]" is the commutator of two plain subwords.  "1" is the empty word.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  auto index_of = [&](char c) -> int {
    std::string key(1, static_cast<char>(std::tolower(c)));
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == key) return static_cast<int>(i) + 1;
    throw ParseError(std::string("unknown generator letter '") + c + "'");
  };
  std::vector<int> letters;
  size_t i = 0;
  auto parse_plain = [&](const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '1') continue;
      int idx = index_of(c);
      out.push_back(std::isupper(static_cast<unsigned char>(c)) ? -idx : idx);
    }
    return out;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '1' || c == '*') {
      ++i;
      continue;
    }
    if (c == '[') {
      size_t comma = text.find(',', i);
      size_t close = text.find(']', i);
      if (comma == std::string::npos || close == std::string::npos || comma > close)
        throw ParseError("malformed commutator in word: " + text);
      Word u(parse_plain(text.substr(i + 1, comma - i - 1)));
      Word v(parse_plain(text.substr(comma + 1, close - comma - 1)));
      Word k = Word::commutator(u, v);
      letters.insert(letters.end(), k.letters().begin(), k.letters().end());
      i = close + 1;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected character '") + c + "' in word: " + text);
    int idx = index_of(c);
    letters.push_back(std::isupper(static_cast<unsigned char>(c)) ? -idx : idx);
    ++i;
  }
  return Word(std::move(letters));
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    size_t idx = static_cast<size_t>((l > 0 ? l : -l) - 1);
    if (idx >= names.size() || names[idx].size() != 1)
      throw ValidationError("word formatting needs single-letter generator names");
    char c = names[idx][0];
    out += (l > 0) ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace sslab
