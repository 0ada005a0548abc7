#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "hspin/horosphere.hpp"
#include "hspin/minkowski.hpp"

namespace hspin {

// Wire formats:
//   quaternion        [a, b, c, d]
//   paravector        [a, b, c]
//   extended one      [a, b, c] or "inf"
//   spinor            {"xi": [..], "eta": [..]}
//   clifford          {"a": [..], "b": [..], "c": [..], "d": [..]}
//   minkowski point   [T, W, X, Y, Z]
// Parsing throws ArgumentError on shape mismatches. Writing goes through
// fmt_double (printf %.17g) so output is byte-stable and round-trips
// doubles exactly; the writers emit fixed key order.

Quaternion quaternion_from_json(const nlohmann::json& j);
Paravector paravector_from_json(const nlohmann::json& j);
ExtendedParavector extended_from_json(const nlohmann::json& j);
// Raw component pair; validation is the caller's business.
std::pair<Quaternion, Quaternion> spinor_pair_from_json(const nlohmann::json& j);
CliffordMatrix clifford_raw_from_json(const nlohmann::json& j);
MinkowskiPoint point_from_json(const nlohmann::json& j);
std::array<double, 4> disc_point_from_json(const nlohmann::json& j);

std::string fmt_double(double x);
std::string json_quaternion(const Quaternion& q);
std::string json_paravector(const Paravector& v);
std::string json_extended(const ExtendedParavector& v);
std::string json_spinor(const Quaternion& xi, const Quaternion& eta);
std::string json_spinor(const Spinor& k);
std::string json_clifford(const CliffordMatrix& m);
std::string json_point(const MinkowskiPoint& p);
std::string json_disc_point(const std::array<double, 4>& q);
std::string json_escape(const std::string& s);

}  // namespace hspin
