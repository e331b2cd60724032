// L-space certification for closed Seifert fibered rational homology spheres.
//
// Rules, dispatched most specific first:
//   * NonOrientableBase: a Seifert QHS over a non-orientable base orbifold
//     is an L-space.
//   * LensSpace: S^2 base with at most two cone points.
//   * Elliptic: S^2 base with cone triple (a,b,c), 1/a + 1/b + 1/c > 1.
//   * SphereBaseCriterion: S^2 base, three or more cone points: the
//     manifold is an L-space iff it carries no foliation transverse to the
//     fibers, decided through the classical realizability criterion.
//
// Realizability.  Write the e < 0 orientation of the manifold in normal form
// M(0; b0; r_1..r_n) with r_i in (0,1).  A transverse foliation exists iff
//   -b0 = 1      and (r_i) is realizable,
//   -b0 = n-1    and (1 - r_i) is realizable, or
//   2 <= -b0 <= n-2   (always).
// A tuple is realizable iff there are coprime 0 < a < m with, after
// permuting, r_1 < a/m, r_2 < (m-a)/m and r_i < 1/m for i >= 3.  The strict
// inequalities force m < 1/r for every entry in a small slot, so m is
// bounded and the search is exhaustive.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/seifert.hpp"

namespace sslab {

inline bool is_qhs(const SeifertClosed& m) { return h1(m).free_rank == 0; }

struct FoliationSearch {
  bool realizable = false;
  Int a = 0, m = 0;   // witness when realizable
  Int bound = 0;      // highest m examined
};

inline FoliationSearch foliation_search(const std::vector<Rat>& r,
                                        const Int& budget = Int(1) << 24) {
  for (const auto& x : r)
    if (!(x > 0 && x < 1)) throw ValidationError("realizability entries must lie in (0,1)");
  FoliationSearch out;
  const size_t n = r.size();
  if (n < 3) return out;

  std::vector<Rat> sorted = r;
  std::sort(sorted.begin(), sorted.end());
  // Small slots take the n-2 smallest entries; need r < 1/m for each, so
  // m < 1/sorted[n-3].
  const Rat& pivot = sorted[n - 3];
  Int m_max = (pivot.get_den() - 1) / pivot.get_num();  // largest m < 1/pivot
  if (m_max > budget)
    throw BudgetExceededError("realizability search needs m up to " + m_max.get_str() +
                              ", budget " + budget.get_str());
  out.bound = m_max;
  for (Int m = 2; m <= m_max; ++m) {
    for (Int a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      Rat big1(a, m), big2(m - a, m), small(1, m);
      big1.canonicalize();
      big2.canonicalize();
      small.canonicalize();
      for (size_t i = 0; i < n; ++i) {
        if (!(r[i] < big1)) continue;
        for (size_t j = 0; j < n; ++j) {
          if (j == i || !(r[j] < big2)) continue;
          bool rest_ok = true;
          for (size_t k = 0; k < n && rest_ok; ++k)
            if (k != i && k != j && !(r[k] < small)) rest_ok = false;
          if (rest_ok) {
            out.realizable = true;
            out.a = a;
            out.m = m;
            return out;
          }
        }
      }
    }
  }
  return out;
}

/// True iff coprime 0 < a < m realize the strict inequality pattern for the
/// given normalized interior slopes.
inline bool foliation_realizable(const std::vector<Rat>& r,
                                 const Int& budget = Int(1) << 24) {
  return foliation_search(r, budget).realizable;
}

struct SphereDecision {
  bool lspace = false;
  json detail;
};

/// The general S^2-base decision through transverse-foliation realizability,
/// independent of the lens/elliptic shortcuts.
inline SphereDecision sphere_base_lspace(const SeifertClosed& input) {
  SeifertClosed m = normalize_invariants(input);
  Rat e = euler_number(m);
  if (e == 0) throw NotQHSError("euler number zero: not a rational homology sphere");
  bool reversed = false;
  if (e > 0) {
    m = normalize_invariants(orientation_reversed(m));
    reversed = true;
  }
  const long n = static_cast<long>(m.fibers.size());
  const Int minus_b0 = -m.b0;  // >= 1 once e < 0

  SphereDecision out;
  json detail{{"b0", int_to_json(m.b0)}, {"cones", static_cast<long>(n)}, {"reversed_orientation", reversed}};
  std::vector<Rat> r;
  for (const auto& f : m.fibers) {
    Rat x(f.b, f.a);
    x.canonicalize();
    r.push_back(x);
  }

  bool foliated;
  if (minus_b0 == 1) {
    FoliationSearch s = foliation_search(r);
    foliated = s.realizable;
    detail["branch"] = "realizability";
    if (s.realizable) detail["witness"] = json::array({int_to_json(s.a), int_to_json(s.m)});
    else detail["search_bound"] = int_to_json(s.bound);
  } else if (minus_b0 == n - 1) {
    std::vector<Rat> rr;
    for (const auto& x : r) rr.push_back(1 - x);
    FoliationSearch s = foliation_search(rr);
    foliated = s.realizable;
    detail["branch"] = "realizability (reversed data)";
    if (s.realizable) detail["witness"] = json::array({int_to_json(s.a), int_to_json(s.m)});
    else detail["search_bound"] = int_to_json(s.bound);
  } else if (minus_b0 >= 2 && minus_b0 <= n - 2) {
    foliated = true;
    detail["branch"] = "interior (always foliates)";
  } else {
    foliated = false;
    detail["branch"] = "outside foliating range";
  }
  out.lspace = !foliated;
  detail["transverse_foliation"] = foliated;
  out.detail = std::move(detail);
  return out;
}

enum class LVerdict { LSpace, NotLSpace, Undetermined };
enum class LRule { NonOrientableBase, LensSpace, Elliptic, SphereBaseCriterion };

inline std::string to_string(LVerdict v) {
  switch (v) {
    case LVerdict::LSpace: return "LSpace";
    case LVerdict::NotLSpace: return "NotLSpace";
    default: return "Undetermined";
  }
}

inline std::string to_string(LRule r) {
  switch (r) {
    case LRule::NonOrientableBase: return "NonOrientableBase";
    case LRule::LensSpace: return "LensSpace";
    case LRule::Elliptic: return "Elliptic";
    default: return "SphereBaseCriterion";
  }
}

/// A checkable verdict: the witness records the data that fired the rule.
struct LSpaceCertificate {
  LVerdict verdict = LVerdict::Undetermined;
  LRule rule = LRule::SphereBaseCriterion;
  json witness;
};

inline LSpaceCertificate certify(const SeifertClosed& input) {
  AbelianGroup homology = h1(input);
  if (homology.free_rank != 0)
    throw NotQHSError("not a rational homology sphere: H_1 = " + homology.str());
  SeifertClosed m = normalize_invariants(input);

  LSpaceCertificate cert;
  if (!m.base.orientable) {
    cert.verdict = LVerdict::LSpace;
    cert.rule = LRule::NonOrientableBase;
    cert.witness = json{{"genus", m.base.genus},
                        {"cones", int_list_to_json(m.base.cone_points)},
                        {"h1_order", int_to_json(homology.torsion_order())}};
    return cert;
  }
  const size_t k = m.fibers.size();
  if (k <= 2) {
    cert.verdict = LVerdict::LSpace;
    cert.rule = LRule::LensSpace;
    cert.witness = to_json(lens_space_of(m));
    return cert;
  }
  if (k == 3) {
    const Int &a = m.fibers[0].a, &b = m.fibers[1].a, &c = m.fibers[2].a;
    if (b * c + a * c + a * b > a * b * c) {
      cert.verdict = LVerdict::LSpace;
      cert.rule = LRule::Elliptic;
      cert.witness = json{{"triple", int_list_to_json({a, b, c})}};
      return cert;
    }
  }
  SphereDecision d = sphere_base_lspace(m);
  cert.verdict = d.lspace ? LVerdict::LSpace : LVerdict::NotLSpace;
  cert.rule = LRule::SphereBaseCriterion;
  cert.witness = d.detail;
  return cert;
}

/// Re-checks a certificate's witness against its rule.
inline bool validate(const LSpaceCertificate& cert, const SeifertClosed& input) {
  try {
    if (!is_qhs(input)) return false;
    SeifertClosed m = normalize_invariants(input);
    switch (cert.rule) {
      case LRule::NonOrientableBase:
        return !m.base.orientable && cert.verdict == LVerdict::LSpace;
      case LRule::LensSpace:
        return m.base.orientable && m.base.genus == 0 && m.fibers.size() <= 2 &&
               cert.verdict == LVerdict::LSpace;
      case LRule::Elliptic: {
        if (!(m.base.orientable && m.base.genus == 0 && m.fibers.size() == 3)) return false;
        const Int &a = m.fibers[0].a, &b = m.fibers[1].a, &c = m.fibers[2].a;
        return b * c + a * c + a * b > a * b * c && cert.verdict == LVerdict::LSpace;
      }
      case LRule::SphereBaseCriterion: {
        SphereDecision d = sphere_base_lspace(m);
        return (d.lspace ? LVerdict::LSpace : LVerdict::NotLSpace) == cert.verdict;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

inline json to_json(const LSpaceCertificate& c) {
  return json{{"verdict", to_string(c.verdict)},
              {"rule", to_string(c.rule)},
              {"witness", c.witness}};
}

}  // namespace sslab
