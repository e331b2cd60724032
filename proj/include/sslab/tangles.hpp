// Rational tangles, their two-bridge closures, and lens spaces as double
// branched covers.  Conventions: the slope (p,q) is the fraction p/q, the
// numerator closure of the p/q-tangle is the two-bridge link b(p,q), and its
// double branched cover is L(p,q).  b(0,q) is the two-component unlink
// (cover S^2 x S^1, recorded as L(0,1)) and b(1,q) the unknot (cover S^3,
// recorded as L(1,0)).
#pragma once

#include <string>
#include <vector>
#include <ostream>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/slope.hpp"

namespace sslab {

/// All-positive-tail continued fraction of p/q: [a0; a1, ...] with
/// a0 = floor(p/q) and a_i >= 1 afterwards.  Empty for the 1/0 tangle.
inline std::vector<Int> continued_fraction(const Int& p, const Int& q) {
  std::vector<Int> cf;
  if (q == 0) return cf;
  Int num = p, den = q;
  if (den < 0) { num = -num; den = -den; }
  while (true) {
    Int a = fdiv(num, den);
    cf.push_back(a);
    Int r = num - a * den;
    if (r == 0) break;
    num = den;
    den = r;
  }
  return cf;
}

inline Rat evaluate_continued_fraction(const std::vector<Int>& cf) {
  if (cf.empty()) throw ValidationError("cannot evaluate an empty continued fraction");
  Rat v(cf.back());
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    v = Rat(*it) + Rat(1) / v;
    v.canonicalize();
  }
  return v;
}

struct RationalTangle {
  Int num, den;          // fraction num/den, den = 0 for the infinity tangle
  std::vector<Int> cf;   // re-evaluates to num/den when den != 0

  std::string str() const {
    std::string s = num.get_str() + "/" + den.get_str();
    if (!cf.empty()) {
      s += " = [";
      for (size_t i = 0; i < cf.size(); ++i) s += (i ? ", " : "") + cf[i].get_str();
      s += "]";
    }
    return s;
  }
};

/// The tangle attached by filling along alpha = (p,q) in the (mu, phi)
/// framing of the knot boundary.
inline RationalTangle tangle_from_slope(const Slope& alpha) {
  return RationalTangle{alpha.p(), alpha.q(), continued_fraction(alpha.p(), alpha.q())};
}

struct TwoBridgeLink {
  Int p, q;  // normalized: p >= 2 with 0 < q < p, or (0,1) unlink, (1,0) unknot

  bool is_unlink() const { return p == 0; }
  bool is_unknot() const { return p == 1; }

  std::string str() const {
    if (is_unlink()) return "unlink";
    if (is_unknot()) return "unknot";
    return "b(" + p.get_str() + "," + q.get_str() + ")";
  }
};

/// Numerator closure of the tangle as a normalized two-bridge fraction.
inline TwoBridgeLink two_bridge(const RationalTangle& t) {
  Int p = abs(t.num);
  if (p == 0) return {0, 1};
  if (p == 1) return {1, 0};
  Int q = mod_floor(t.den, p);
  return {p, q};
}

struct LensSpace {
  Int p, q;  // L(0,1) = S^2 x S^1, L(1,0) = S^3

  std::string str() const {
    if (p == 0) return "S^2 x S^1";
    if (p == 1) return "S^3";
    return "L(" + p.get_str() + "," + q.get_str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const LensSpace& l) { return os << l.str(); }
};

inline LensSpace double_branched_cover(const TwoBridgeLink& l) {
  if (l.p == 0) return {0, 1};
  if (l.p == 1) return {1, 0};
  return {l.p, l.q};
}

/// The homeomorphism relation: L(p,q) = L(p',q') iff p = p' and
/// q' = ±q^(±1) mod p.
inline bool lens_homeo_equal(const LensSpace& a, const LensSpace& b) {
  if (abs(a.p) != abs(b.p)) return false;
  Int p = abs(a.p);
  if (p == 0 || p == 1) return true;
  Int qa = mod_floor(a.q, p), qb = mod_floor(b.q, p);
  if (mod_floor(qa - qb, p) == 0) return true;
  if (mod_floor(qa + qb, p) == 0) return true;
  if (mod_floor(qa * qb - 1, p) == 0) return true;
  if (mod_floor(qa * qb + 1, p) == 0) return true;
  return false;
}

inline json to_json(const RationalTangle& t) {
  return json{{"fraction", json::array({int_to_json(t.num), int_to_json(t.den)})},
              {"continued_fraction", int_list_to_json(t.cf)}};
}

inline json to_json(const TwoBridgeLink& l) {
  return json{{"p", int_to_json(l.p)}, {"q", int_to_json(l.q)}, {"name", l.str()}};
}

inline json to_json(const LensSpace& l) {
  return json{{"p", int_to_json(l.p)}, {"q", int_to_json(l.q)}, {"name", l.str()}};
}

}  // namespace sslab
