// Slopes on a torus: primitive classes in H_1(T^2;Z)/{±1}, stored in a
// declared ordered basis.  The normal form fixes the sign ambiguity by
// requiring p > 0, or (p,q) = (0,1).
#pragma once

#include <string>
#include <ostream>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

class Slope {
 public:
  /// Normalizes ±(p,q) to the canonical representative.  The input must be
  /// primitive: gcd(|p|,|q|) = 1 and (p,q) != (0,0).
  Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) throw ZeroSlopeError("slope (0,0) is not defined");
    if (gcd(p_, q_) != 1)
      throw NonPrimitiveError("slope (" + p_.get_str() + "," + q_.get_str() +
                              ") is not primitive");
    if (p_ < 0 || (p_ == 0 && q_ < 0)) {
      p_ = -p_;
      q_ = -q_;
    }
  }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

  std::string str() const { return p_.get_str() + "/" + q_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

 private:
  Int p_, q_;
};

inline Slope normalize(const Int& p, const Int& q) { return Slope(p, q); }

/// Δ(a,b) = |a.p b.q − b.p a.q|; the geometric intersection number of the two
/// slopes.  Zero iff the slopes are equal.
inline Int distance(const Slope& a, const Slope& b) {
  Int d = a.p() * b.q() - b.p() * a.q();
  return abs(d);
}

inline Slope change_basis(const Slope& s, const BasisChange& m) {
  if (!is_unimodular(m)) throw NotUnimodularError("basis change must have determinant ±1");
  return Slope(m(0, 0) * s.p() + m(0, 1) * s.q(),
               m(1, 0) * s.p() + m(1, 1) * s.q());
}

/// Parses "p/q" with optional signs, e.g. "2/1", "-1/3", "0/1".
inline Slope parse_slope(const std::string& text) {
  auto cut = text.find('/');
  if (cut == std::string::npos) throw ParseError("slope must be written p/q: " + text);
  try {
    Int p(text.substr(0, cut));
    Int q(text.substr(cut + 1));
    return Slope(p, q);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad slope literal: " + text);
  }
}

inline json to_json(const Slope& s) { return json::array({int_to_json(s.p()), int_to_json(s.q())}); }

inline Slope slope_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("slope JSON must be [p, q]");
  return Slope(int_from_json(j[0]), int_from_json(j[1]));
}

}  // namespace sslab
