#pragma once

#include <numeric>
#include <string>
#include <vector>
#include <ostream>

#include "sslab/errors.hpp"
#include "sslab/json_util.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  AbelianGroup() = default;
  AbelianGroup(long rank, std::vector<Int> tor)
      : free_rank(rank), torsion(std::move(tor)) {
    if (free_rank < 0) throw ValidationError("negative free rank");
    for (size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2) throw ValidationError("torsion coefficients must be >= 2");
      if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
        throw ValidationError("torsion coefficients must form a divisibility chain");
    }
  }

  static AbelianGroup free(long rank) { return AbelianGroup(rank, {}); }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int torsion_order() const {
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

  std::string str() const {
    if (is_trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + d.get_str();
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) {
    return os << g.str();
  }
};

inline json to_json(const AbelianGroup& g) {
  return json{{"free_rank", g.free_rank}, {"torsion", int_list_to_json(g.torsion)}};
}

inline AbelianGroup abelian_from_json(const json& j) {
  return AbelianGroup(j.at("free_rank").get<long>(), int_list_from_json(j.at("torsion")));
}

}  // namespace sslab
