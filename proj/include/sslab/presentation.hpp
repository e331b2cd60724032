// Finitely presented groups with peripheral structure, and the three
// operations the surgery calculus needs: abelianization, Dehn-filling
// quotients, and the rational longitude of a framed boundary torus.
#pragma once

#include <string>
#include <vector>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/slope.hpp"
#include "sslab/snf.hpp"
#include "sslab/word.hpp"

namespace sslab {

/// Two commuting words framing a boundary torus.  The pair is declared data:
/// mu plays the role of the section slope (1,0) and lambda of the fiber
/// slope (0,1) of the corresponding Seifert framing.  Commutativity is
/// trusted input; in H_1 it holds identically, and the full normal-closure
/// check is out of reach.
struct PeripheralPair {
  Word mu, lambda;
  std::string label;
};

class Presentation {
 public:
  Presentation(std::vector<std::string> names, std::vector<Word> relators,
               std::vector<PeripheralPair> peripherals = {})
      : names_(std::move(names)), peripherals_(std::move(peripherals)) {
    for (const auto& n : names_)
      if (n.empty()) throw ValidationError("empty generator name");
    relators_.reserve(relators.size());
    for (auto& r : relators) relators_.push_back(r.cyclically_reduced());
  }

  long gens() const { return static_cast<long>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<PeripheralPair>& peripherals() const { return peripherals_; }

  Word parse(const std::string& text) const { return parse_word(text, names_); }
  std::string format(const Word& w) const { return format_word(w, names_); }

  /// Relator exponent-sum matrix, one row per relator.
  IMat relation_matrix() const {
    IMat m(static_cast<Eigen::Index>(relators_.size()), gens());
    for (size_t i = 0; i < relators_.size(); ++i)
      m.row(static_cast<Eigen::Index>(i)) = relators_[i].exponent_vector(gens()).transpose();
    return m;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<PeripheralPair> peripherals_;
};

inline AbelianGroup abelianization(const Presentation& p) {
  return abelian_group_of(p.relation_matrix());
}

/// Appends the relator mu^p lambda^q for the slope (p,q) in that boundary's
/// declared (mu, lambda) basis and discards the used peripheral pair.
inline Presentation fill_quotient(const Presentation& p, long boundary, const Slope& alpha) {
  if (boundary < 0 || boundary >= static_cast<long>(p.peripherals().size()))
    throw BadBoundaryIndexError("no peripheral pair with index " + std::to_string(boundary));
  const PeripheralPair& pair = p.peripherals()[static_cast<size_t>(boundary)];
  Word relator = pair.mu.pow(alpha.p()) * pair.lambda.pow(alpha.q());
  std::vector<Word> relators = p.relators();
  relators.push_back(relator);
  std::vector<PeripheralPair> rest = p.peripherals();
  rest.erase(rest.begin() + boundary);
  return Presentation(p.names(), std::move(relators), std::move(rest));
}

/// The unique slope (p,q) with p[mu] + q[lambda] torsion in H_1.  Fails with
/// NotUniqueError when both peripheral classes are torsion and with
/// NoTorsionSlopeError when the classes are independent in the free quotient.
inline Slope rational_longitude(const Presentation& p, long boundary) {
  if (boundary < 0 || boundary >= static_cast<long>(p.peripherals().size()))
    throw BadBoundaryIndexError("no peripheral pair with index " + std::to_string(boundary));
  const PeripheralPair& pair = p.peripherals()[static_cast<size_t>(boundary)];
  CokernelDecomposition h1 = cokernel(p.relation_matrix());
  IVec u = h1.free_image(pair.mu.exponent_vector(p.gens()));
  IVec v = h1.free_image(pair.lambda.exponent_vector(p.gens()));
  bool u_zero = u.isZero(), v_zero = v.isZero();
  if (u_zero && v_zero)
    throw NotUniqueError("both peripheral classes are torsion; no unique longitude");
  if (u_zero) return Slope(1, 0);
  if (v_zero) return Slope(0, 1);
  Eigen::Index k = -1;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (u(i) != 0 || v(i) != 0) { k = i; break; }
  Int g = gcd(v(k), u(k));
  Int cp = v(k) / g, cq = -u(k) / g;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (cp * u(i) + cq * v(i) != 0)
      throw NoTorsionSlopeError("peripheral classes are independent in H_1 mod torsion");
  return Slope(cp, cq);
}

inline json to_json(const Presentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators()) rel.push_back(p.format(r));
  json per = json::array();
  for (const auto& pp : p.peripherals()) {
    json o{{"mu", p.format(pp.mu)}, {"lambda", p.format(pp.lambda)}};
    if (!pp.label.empty()) o["label"] = pp.label;
    per.push_back(o);
  }
  return json{{"generators", p.names()}, {"relators", rel}, {"peripherals", per}};
}

inline Presentation presentation_from_json(const json& j) {
  std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> relators;
  for (const auto& r : j.at("relators")) relators.push_back(parse_word(r.get<std::string>(), names));
  std::vector<PeripheralPair> peripherals;
  if (j.contains("peripherals")) {
    for (const auto& o : j.at("peripherals")) {
      PeripheralPair pp;
      pp.mu = parse_word(o.at("mu").get<std::string>(), names);
      pp.lambda = parse_word(o.at("lambda").get<std::string>(), names);
      if (o.contains("label")) pp.label = o.at("label").get<std::string>();
      peripherals.push_back(std::move(pp));
    }
  }
  return Presentation(std::move(names), std::move(relators), std::move(peripherals));
}

}  // namespace sslab
