// Integer Laurent polynomials in one variable t, with the gcd machinery the
// Alexander polynomial needs.  Units are ±t^k; the normal form shifts the
// lowest exponent to 0 and makes the lowest coefficient positive.
#pragma once

#include <string>
#include <vector>
#include <ostream>

#include "sslab/errors.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long c) { *this = LaurentPolynomial(Int(c), 0); }
  LaurentPolynomial(const Int& c, long exponent = 0) {
    if (c != 0) {
      lo_ = exponent;
      coeffs_.push_back(c);
    }
  }

  static LaurentPolynomial t(long exponent = 1) { return LaurentPolynomial(Int(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  long low() const { return lo_; }
  long high() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }

  Int coeff(long e) const {
    if (is_zero() || e < lo_ || e > high()) return 0;
    return coeffs_[static_cast<size_t>(e - lo_)];
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_), hi = std::max(a.high(), b.high());
    LaurentPolynomial r;
    r.lo_ = lo;
    r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
    for (long e = lo; e <= hi; ++e)
      r.coeffs_[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    r.trim();
    return r;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPolynomial r;
    r.lo_ = a.lo_ + b.lo_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  /// Unit normalization: lowest exponent 0, lowest coefficient positive.
  LaurentPolynomial normal_form() const {
    if (is_zero()) return {};
    LaurentPolynomial r = *this;
    r.lo_ = 0;
    if (r.coeffs_.front() < 0)
      for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Int content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = sslab::gcd(g, c);
    return g;
  }

  /// Value at t = 1 (sum of coefficients).
  Int evaluate_at_one() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = high(); e >= lo_; --e) {
      Int c = coeff(e);
      if (c == 0) continue;
      if (!out.empty()) {
        out += (c > 0) ? " + " : " - ";
      } else if (c < 0) {
        out += "-";
      }
      Int a = abs(c);
      if (e == 0) {
        out += a.get_str();
      } else {
        if (a != 1) out += a.get_str() + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
    return os << p.str();
  }

 private:
  void trim() {
    size_t begin = 0, end = coeffs_.size();
    while (begin < end && coeffs_[begin] == 0) ++begin;
    while (end > begin && coeffs_[end - 1] == 0) --end;
    lo_ += static_cast<long>(begin);
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<long>(begin),
                               coeffs_.begin() + static_cast<long>(end));
    if (coeffs_.empty()) lo_ = 0;
  }

  long lo_ = 0;
  std::vector<Int> coeffs_;  // ascending exponents from lo_, trimmed
};

namespace detail {

// Ordinary polynomials as ascending coefficient vectors, trimmed.
using Poly = std::vector<Int>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int poly_content(const Poly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

inline Poly poly_primitive(const Poly& p) {
  Int g = poly_content(p);
  if (g == 0) return p;
  Poly out = p;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), Int(c).get_mpz_t(), g.get_mpz_t());
  return out;
}

/// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
inline Poly poly_prem(Poly a, const Poly& b) {
  long db = static_cast<long>(b.size()) - 1;
  const Int& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    long da = static_cast<long>(a.size()) - 1;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (long i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
    poly_trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.empty() || b.empty()) {
    Poly out = a.empty() ? b : a;  // gcd with 0 keeps content
    if (!out.empty() && out.back() < 0)
      for (auto& c : out) c = -c;
    return out;
  }
  Int cont = gcd(poly_content(a), poly_content(b));
  a = poly_primitive(a);
  b = poly_primitive(b);
  while (!b.empty()) {
    Poly r = poly_prem(a, b);
    a = b;
    b = poly_primitive(r);
  }
  Poly out = a;
  for (auto& c : out) c *= cont;
  if (out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

}  // namespace detail

/// gcd in Z[t^(±1)], in Laurent normal form.  Content is included, not just
/// the primitive part, so regression values are pinned exactly.
inline LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto to_poly = [](const LaurentPolynomial& l) {
    detail::Poly p;
    if (l.is_zero()) return p;
    for (long e = l.low(); e <= l.high(); ++e) p.push_back(l.coeff(e));
    return p;
  };
  detail::Poly g = detail::poly_gcd(to_poly(a), to_poly(b));
  LaurentPolynomial out;
  for (size_t i = 0; i < g.size(); ++i) out += LaurentPolynomial(g[i], static_cast<long>(i));
  return out.normal_form();
}

}  // namespace sslab
