#pragma once

#include <json.hpp>

#include "sslab/errors.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

using nlohmann::json;

/// Big integers serialize as JSON numbers when they fit in a signed long and
/// as decimal strings otherwise.
inline json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer literal: " + j.dump());
    }
  }
  throw ParseError("expected integer, got " + j.dump());
}

inline json int_list_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

inline std::vector<Int> int_list_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected array, got " + j.dump());
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

}  // namespace sslab
