// Seifert fibered spaces as data, Dehn filling, homology, and recognition of
// the small pieces (lens, elliptic, reducible).
//
// Conventions.  A bounded space is (base, unnormalized pairs (a_i, b_i),
// framed boundaries); each boundary framing is an ordered basis
// (section sigma, fiber phi), so slopes on that torus are written
// alpha = p*sigma + q*phi = (p,q).  Filling along alpha != phi extends the
// fibration and adjoins the pair (p,q); the new fiber has multiplicity
// p = d(alpha, phi).  Filling along phi leaves the Seifert world and is
// returned as data.  A closed space carries the integer invariant b0; its
// fundamental group is
//   < x_i,y_i (or v_i), q_j, h | [x_i,h],[y_i,h] (or v_i h v_i^-1 h),
//     [q_j,h], q_j^{a_j} h^{b_j}, q_1...q_k (surface word) h^{-b0} >
// and all homology here is computed from that presentation's relation
// matrix.  Fillings close with b0 = 0; multiplicity-1 pairs absorb into b0.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/presentation.hpp"
#include "sslab/slope.hpp"
#include "sslab/snf.hpp"
#include "sslab/tangles.hpp"

namespace sslab {

struct BaseOrbifold {
  long genus = 0;          // cross-cap count when non-orientable
  bool orientable = true;
  long boundary_count = 0;
  std::vector<Int> cone_points;  // multiplicities >= 2, sorted

  BaseOrbifold() = default;
  BaseOrbifold(long g, bool orient, long boundaries, std::vector<Int> cones = {})
      : genus(g), orientable(orient), boundary_count(boundaries) {
    if (genus < 0) throw ValidationError("negative genus");
    if (!orientable && genus < 1)
      throw ValidationError("non-orientable base needs at least one cross-cap");
    if (boundary_count < 0) throw ValidationError("negative boundary count");
    for (auto& c : cones) {
      if (c < 1) throw ValidationError("cone multiplicities must be positive");
      if (c >= 2) cone_points.push_back(c);  // multiplicity-1 points are regular
    }
    std::sort(cone_points.begin(), cone_points.end());
  }

  friend bool operator==(const BaseOrbifold& a, const BaseOrbifold& b) {
    return a.genus == b.genus && a.orientable == b.orientable &&
           a.boundary_count == b.boundary_count && a.cone_points == b.cone_points;
  }

  std::string str() const {
    std::string s;
    if (orientable)
      s = (genus == 0) ? (boundary_count ? "D2-like genus 0" : "S2") : "or. genus " + std::to_string(genus);
    else
      s = (genus == 1) ? (boundary_count ? "Mobius-like" : "RP2") : "nonor. genus " + std::to_string(genus);
    if (!cone_points.empty()) {
      s += "(";
      for (size_t i = 0; i < cone_points.size(); ++i)
        s += (i ? "," : "") + cone_points[i].get_str();
      s += ")";
    }
    if (boundary_count) s += " with " + std::to_string(boundary_count) + " boundary";
    return s;
  }
};

/// Unnormalized Seifert pair: multiplicity a >= 1 and section twist b,
/// coprime.  Pairs with a = 1 are regular-fiber bookkeeping twists; they
/// never show up as cone points and absorb into b0 on closure.
struct SeifertPair {
  Int a, b;
  friend bool operator==(const SeifertPair& x, const SeifertPair& y) {
    return x.a == y.a && x.b == y.b;
  }
};

/// A boundary framing is declared data naming the working basis
/// (section (1,0), fiber (0,1)) for slopes on that torus.
struct BoundaryFraming {
  std::string label;
  friend bool operator==(const BoundaryFraming& a, const BoundaryFraming& b) {
    return a.label == b.label;
  }
};

namespace detail {
inline void check_pairs(const std::vector<SeifertPair>& fibers) {
  for (const auto& f : fibers) {
    if (f.a < 1) throw ValidationError("Seifert pair multiplicity must be >= 1");
    if (gcd(f.a, f.b) != 1) throw ValidationError("Seifert pair must be coprime");
  }
}
inline std::vector<Int> cones_of(const std::vector<SeifertPair>& fibers) {
  std::vector<Int> cones;
  for (const auto& f : fibers)
    if (f.a >= 2) cones.push_back(f.a);
  std::sort(cones.begin(), cones.end());
  return cones;
}
}  // namespace detail

struct SeifertBounded {
  BaseOrbifold base;
  std::vector<SeifertPair> fibers;
  std::vector<BoundaryFraming> framings;

  SeifertBounded(BaseOrbifold b, std::vector<SeifertPair> f, std::vector<BoundaryFraming> fr)
      : base(std::move(b)), fibers(std::move(f)), framings(std::move(fr)) {
    if (base.boundary_count < 1) throw ValidationError("bounded space needs boundary");
    if (static_cast<long>(framings.size()) != base.boundary_count)
      throw ValidationError("one framing per boundary torus required");
    detail::check_pairs(fibers);
    base.cone_points = detail::cones_of(fibers);
  }

  friend bool operator==(const SeifertBounded& a, const SeifertBounded& b) {
    return a.base == b.base && a.fibers == b.fibers && a.framings == b.framings;
  }
};

struct SeifertClosed {
  BaseOrbifold base;
  Int b0 = 0;
  std::vector<SeifertPair> fibers;

  SeifertClosed(BaseOrbifold b, Int b0_, std::vector<SeifertPair> f)
      : base(std::move(b)), b0(std::move(b0_)), fibers(std::move(f)) {
    if (base.boundary_count != 0) throw ValidationError("closed space cannot have boundary");
    detail::check_pairs(fibers);
    base.cone_points = detail::cones_of(fibers);
  }

  friend bool operator==(const SeifertClosed& a, const SeifertClosed& b) {
    return a.base == b.base && a.b0 == b.b0 && a.fibers == b.fibers;
  }
};

/// Produced exactly when the filling slope equals the fiber slope of the
/// framing; such a filling does not extend the Seifert structure.
struct FiberFilling {
  SeifertBounded unfilled;
  long boundary;
};

using FillOutcome = std::variant<SeifertClosed, SeifertBounded, FiberFilling>;

/// Dehn filling along alpha in the declared (sigma, phi) basis of the given
/// boundary.  See the file header for the bookkeeping rules.
inline FillOutcome fill(const SeifertBounded& m, long boundary, const Slope& alpha) {
  if (boundary < 0 || boundary >= m.base.boundary_count)
    throw BadBoundaryIndexError("boundary index " + std::to_string(boundary) +
                                " out of range");
  if (alpha == Slope(0, 1)) return FiberFilling{m, boundary};

  std::vector<SeifertPair> fibers = m.fibers;
  fibers.push_back({alpha.p(), alpha.q()});
  BaseOrbifold base(m.base.genus, m.base.orientable, m.base.boundary_count - 1);

  if (base.boundary_count == 0) {
    Int b0 = 0;
    std::vector<SeifertPair> kept;
    for (auto& f : fibers) {
      if (f.a == 1)
        b0 += f.b;
      else
        kept.push_back(f);
    }
    return SeifertClosed(std::move(base), b0, std::move(kept));
  }

  // Still bounded: fold multiplicity-1 twists into an existing pair when one
  // exists, otherwise keep a single combined twist pair.
  std::vector<SeifertPair> kept;
  Int twist = 0;
  for (auto& f : fibers) {
    if (f.a == 1)
      twist += f.b;
    else
      kept.push_back(f);
  }
  if (twist != 0) {
    if (!kept.empty())
      kept.front().b += twist * kept.front().a;
    else
      kept.push_back({1, twist});
  }
  std::vector<BoundaryFraming> framings = m.framings;
  framings.erase(framings.begin() + boundary);
  return SeifertBounded(std::move(base), std::move(kept), std::move(framings));
}

/// e = b0 + sum b_i/a_i; invariant under normalization.
inline Rat euler_number(const SeifertClosed& m) {
  Rat e(m.b0);
  for (const auto& f : m.fibers) {
    Rat t(f.b, f.a);
    t.canonicalize();
    e += t;
  }
  return e;
}

inline bool is_normalized(const SeifertClosed& m) {
  for (const auto& f : m.fibers)
    if (!(f.a >= 2 && f.b > 0 && f.b < f.a)) return false;
  return true;
}

/// Unique normal form with 0 < b_i < a_i, excess carried into b0.
inline SeifertClosed normalize_invariants(const SeifertClosed& m) {
  Int b0 = m.b0;
  std::vector<SeifertPair> fibers;
  for (const auto& f : m.fibers) {
    if (f.a == 1) {
      b0 += f.b;
      continue;
    }
    Int r = mod_floor(f.b, f.a);
    b0 += (f.b - r) / f.a;
    fibers.push_back({f.a, r});  // r != 0 since gcd(a,b) = 1 and a >= 2
  }
  std::sort(fibers.begin(), fibers.end(),
            [](const SeifertPair& x, const SeifertPair& y) {
              return x.a < y.a || (x.a == y.a && x.b < y.b);
            });
  return SeifertClosed(m.base, b0, std::move(fibers));
}

/// Same manifold with reversed orientation: negate b0 and all b_i.
inline SeifertClosed orientation_reversed(const SeifertClosed& m) {
  std::vector<SeifertPair> fibers;
  for (const auto& f : m.fibers) fibers.push_back({f.a, Int(-f.b)});
  return SeifertClosed(m.base, Int(-m.b0), std::move(fibers));
}

/// Relation matrix of the abelianized standard presentation; columns are
/// [handles | pairs | fiber h] (handle columns are relation-free).
inline IMat h1_matrix(const SeifertClosed& m) {
  const long k = static_cast<long>(m.fibers.size());
  const long handles = m.base.orientable ? 2 * m.base.genus : m.base.genus;
  const long cols = handles + k + 1;
  const long crosscap_rows = m.base.orientable ? 0 : m.base.genus;
  IMat r = IMat::Zero(crosscap_rows + k + 1, cols);
  for (long i = 0; i < crosscap_rows; ++i) r(i, cols - 1) = 2;  // v h v^-1 h
  for (long j = 0; j < k; ++j) {
    r(crosscap_rows + j, handles + j) = m.fibers[static_cast<size_t>(j)].a;
    r(crosscap_rows + j, cols - 1) = m.fibers[static_cast<size_t>(j)].b;
  }
  long last = crosscap_rows + k;
  if (!m.base.orientable)
    for (long i = 0; i < m.base.genus; ++i) r(last, i) = 2;
  for (long j = 0; j < k; ++j) r(last, handles + j) = 1;
  r(last, cols - 1) = -m.b0;
  return r;
}

inline AbelianGroup h1(const SeifertClosed& m) { return abelian_group_of(h1_matrix(m)); }

/// The standard presentation itself, as a Presentation over generated
/// single-letter names; abelianizing it must reproduce h1.
inline Presentation seifert_presentation(const SeifertClosed& m) {
  const long k = static_cast<long>(m.fibers.size());
  const long handles = m.base.orientable ? 2 * m.base.genus : m.base.genus;
  static const std::string handle_pool = "vwuxyzcde";
  static const std::string pair_pool = "qprsonmlkjigf";
  if (handles > static_cast<long>(handle_pool.size()) || k > static_cast<long>(pair_pool.size()))
    throw ValidationError("presentation name pool exhausted");
  std::vector<std::string> names;
  for (long i = 0; i < handles; ++i) names.emplace_back(1, handle_pool[static_cast<size_t>(i)]);
  for (long j = 0; j < k; ++j) names.emplace_back(1, pair_pool[static_cast<size_t>(j)]);
  names.emplace_back("h");
  const int h = static_cast<int>(handles + k) + 1;

  std::vector<Word> relators;
  auto gen = [](int i) { return Word({i}); };
  if (m.base.orientable) {
    for (long i = 0; i < handles; ++i)
      relators.push_back(Word::commutator(gen(static_cast<int>(i) + 1), gen(h)));
  } else {
    for (long i = 0; i < m.base.genus; ++i) {
      Word v = gen(static_cast<int>(i) + 1);
      relators.push_back(v * gen(h) * v.inverse() * gen(h));
    }
  }
  for (long j = 0; j < k; ++j) {
    int qj = static_cast<int>(handles + j) + 1;
    relators.push_back(Word::commutator(gen(qj), gen(h)));
    relators.push_back(gen(qj).pow(m.fibers[static_cast<size_t>(j)].a) *
                       gen(h).pow(m.fibers[static_cast<size_t>(j)].b));
  }
  Word closing;
  for (long j = 0; j < k; ++j) closing = closing * gen(static_cast<int>(handles + j) + 1);
  if (m.base.orientable) {
    for (long i = 0; i < m.base.genus; ++i)
      closing = closing * Word::commutator(gen(2 * static_cast<int>(i) + 1),
                                           gen(2 * static_cast<int>(i) + 2));
  } else {
    for (long i = 0; i < m.base.genus; ++i)
      closing = closing * gen(static_cast<int>(i) + 1).pow(2L);
  }
  closing = closing * gen(h).pow(-m.b0);
  relators.push_back(closing);
  return Presentation(std::move(names), std::move(relators));
}

enum class RecognitionKind { Lens, Elliptic, Reducible, Other };

struct Recognition {
  RecognitionKind kind = RecognitionKind::Other;
  std::optional<LensSpace> lens;          // set for Lens and for reducible S2xS1
  std::vector<Int> elliptic_witness;      // cone triple, or RP2 cone list
  std::string note;

  bool irreducible() const { return kind != RecognitionKind::Reducible; }

  std::string str() const {
    switch (kind) {
      case RecognitionKind::Lens: return "lens " + lens->str();
      case RecognitionKind::Elliptic: return "elliptic";
      case RecognitionKind::Reducible: return "reducible (" + note + ")";
      default: return "other (irreducible)";
    }
  }
};

/// L(p,q) parameters of a normalized S^2-base datum with at most two pairs.
/// Derivation: the complement of the second exceptional fiber is a solid
/// torus whose meridian is a_1 sigma_2 - (a_1 b0 + b_1) h; expressing the
/// second filling slope in a meridian/longitude basis gives
///   p = c_1 a_2 + a_1 b_2,  q = y a_2 - x b_2,
/// where c_1 = a_1 b0 + b_1 and a_1 y + c_1 x = 1.
inline LensSpace lens_space_of(const SeifertClosed& m) {
  if (m.base.orientable != true || m.base.genus != 0 || m.fibers.size() > 2)
    throw ValidationError("lens parameters need an S^2 base with at most two pairs");
  SeifertPair f1 = m.fibers.size() >= 1 ? m.fibers[0] : SeifertPair{1, 0};
  SeifertPair f2 = m.fibers.size() >= 2 ? m.fibers[1] : SeifertPair{1, 0};
  Int c1 = f1.a * m.b0 + f1.b;
  Int y, x;
  Int g = gcdext(f1.a, c1, y, x);
  if (g != 1 && g != -1) throw ValidationError("non-coprime lens data");
  if (g == -1) { y = -y; x = -x; }
  Int p = c1 * f2.a + f1.a * f2.b;
  Int q = y * f2.a - x * f2.b;
  if (p < 0) { p = -p; q = -q; }
  if (p == 0) return {0, 1};
  if (p == 1) return {1, 0};
  return {p, mod_floor(q, p)};
}

/// Tagged verdict for a normalized closed datum; reports the most specific
/// of Lens / Elliptic / Reducible / Other.  Irreducible is derivable as
/// "not Reducible".
inline Recognition recognize(const SeifertClosed& m) {
  if (!is_normalized(m))
    throw NotNormalizedError("recognize expects normalized invariants");
  Recognition r;
  const size_t k = m.fibers.size();
  if (m.base.orientable && m.base.genus == 0) {
    if (k <= 2) {
      LensSpace l = lens_space_of(m);
      if (l.p == 0) {
        r.kind = RecognitionKind::Reducible;
        r.lens = l;
        r.note = "S2 x S1";
      } else {
        r.kind = RecognitionKind::Lens;
        r.lens = l;
      }
      return r;
    }
    if (k == 3) {
      const Int &a = m.fibers[0].a, &b = m.fibers[1].a, &c = m.fibers[2].a;
      // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
      if (b * c + a * c + a * b > a * b * c) {
        r.kind = RecognitionKind::Elliptic;
        r.elliptic_witness = {a, b, c};
        return r;
      }
    }
    return r;  // Other
  }
  if (!m.base.orientable && m.base.genus == 1) {
    if (k == 0) {
      if (euler_number(m) == 0) {
        r.kind = RecognitionKind::Reducible;
        r.note = "RP3 # RP3";
      } else {
        r.kind = RecognitionKind::Elliptic;
        r.note = "prism";
      }
      return r;
    }
    if (k == 1) {
      // RP^2 with one cone point always has e != 0, hence finite pi_1.
      r.kind = RecognitionKind::Elliptic;
      r.elliptic_witness = {m.fibers[0].a};
      r.note = "RP2 base, one cone";
      return r;
    }
    return r;  // Other; irreducible
  }
  return r;  // Other
}

// --- JSON -----------------------------------------------------------------

inline json to_json(const BaseOrbifold& b) {
  return json{{"genus", b.genus},
              {"orientable", b.orientable},
              {"boundaries", b.boundary_count},
              {"cones", int_list_to_json(b.cone_points)}};
}

inline BaseOrbifold base_from_json(const json& j) {
  std::vector<Int> cones;
  if (j.contains("cones")) cones = int_list_from_json(j.at("cones"));
  return BaseOrbifold(j.at("genus").get<long>(), j.at("orientable").get<bool>(),
                      j.at("boundaries").get<long>(), std::move(cones));
}

inline json pairs_to_json(const std::vector<SeifertPair>& fibers) {
  json a = json::array();
  for (const auto& f : fibers)
    a.push_back(json::array({int_to_json(f.a), int_to_json(f.b)}));
  return a;
}

inline std::vector<SeifertPair> pairs_from_json(const json& j) {
  std::vector<SeifertPair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("fiber pair must be [a, b]");
    out.push_back({int_from_json(e[0]), int_from_json(e[1])});
  }
  return out;
}

inline json to_json(const SeifertClosed& m) {
  return json{{"base", to_json(m.base)},
              {"b0", int_to_json(m.b0)},
              {"fibers", pairs_to_json(m.fibers)}};
}

inline json to_json(const SeifertBounded& m) {
  json fr = json::array();
  for (const auto& f : m.framings) fr.push_back(f.label);
  return json{{"base", to_json(m.base)}, {"fibers", pairs_to_json(m.fibers)}, {"framings", fr}};
}

inline SeifertClosed closed_from_json(const json& j) {
  BaseOrbifold base = base_from_json(j.at("base"));
  std::vector<SeifertPair> fibers;
  if (j.contains("fibers")) fibers = pairs_from_json(j.at("fibers"));
  Int b0 = j.contains("b0") ? int_from_json(j.at("b0")) : Int(0);
  SeifertClosed m(std::move(base), b0, std::move(fibers));
  if (j.at("base").contains("cones")) {
    auto declared = int_list_from_json(j.at("base").at("cones"));
    std::sort(declared.begin(), declared.end());
    if (declared != m.base.cone_points)
      throw ValidationError("declared cone points disagree with fiber multiplicities");
  }
  return m;
}

inline SeifertBounded bounded_from_json(const json& j) {
  BaseOrbifold base = base_from_json(j.at("base"));
  std::vector<SeifertPair> fibers;
  if (j.contains("fibers")) fibers = pairs_from_json(j.at("fibers"));
  std::vector<BoundaryFraming> framings;
  if (j.contains("framings"))
    for (const auto& f : j.at("framings"))
      framings.push_back({f.is_string() ? f.get<std::string>() : f.dump()});
  while (static_cast<long>(framings.size()) < base.boundary_count)
    framings.push_back({"T" + std::to_string(framings.size() + 1)});
  SeifertBounded m(std::move(base), std::move(fibers), std::move(framings));
  if (j.at("base").contains("cones")) {
    auto declared = int_list_from_json(j.at("base").at("cones"));
    std::sort(declared.begin(), declared.end());
    if (declared != m.base.cone_points)
      throw ValidationError("declared cone points disagree with fiber multiplicities");
  }
  return m;
}

inline json to_json(const FillOutcome& o) {
  if (std::holds_alternative<SeifertClosed>(o))
    return json{{"kind", "closed"}, {"manifold", to_json(std::get<SeifertClosed>(o))}};
  if (std::holds_alternative<SeifertBounded>(o))
    return json{{"kind", "bounded"}, {"manifold", to_json(std::get<SeifertBounded>(o))}};
  const auto& f = std::get<FiberFilling>(o);
  return json{{"kind", "fiber_filling"},
              {"boundary", f.boundary},
              {"unfilled", to_json(f.unfilled)}};
}

inline json to_json(const Recognition& r) {
  json o;
  switch (r.kind) {
    case RecognitionKind::Lens: o["kind"] = "lens"; break;
    case RecognitionKind::Elliptic: o["kind"] = "elliptic"; break;
    case RecognitionKind::Reducible: o["kind"] = "reducible"; break;
    default: o["kind"] = "other";
  }
  if (r.lens) o["lens"] = to_json(*r.lens);
  if (!r.elliptic_witness.empty()) o["witness"] = int_list_to_json(r.elliptic_witness);
  if (!r.note.empty()) o["note"] = r.note;
  o["irreducible"] = r.irreducible();
  return o;
}

}  // namespace sslab
