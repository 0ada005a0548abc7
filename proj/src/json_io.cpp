#include "hspin/json_io.hpp"

#include <cstdio>

namespace hspin {

namespace {

double number_at(const nlohmann::json& j, std::size_t i, const char* what) {
    if (!j[i].is_number())
        throw ArgumentError(std::string(what) + ": element " + std::to_string(i) +
                            " is not a number");
    return j[i].get<double>();
}

void require_array(const nlohmann::json& j, std::size_t n, const char* what) {
    if (!j.is_array() || j.size() != n)
        throw ArgumentError(std::string(what) + ": expected an array of " +
                            std::to_string(n) + " numbers");
}

const nlohmann::json& member(const nlohmann::json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ArgumentError(std::string(what) + ": missing key \"" + key + "\"");
    return j.at(key);
}

}  // namespace

Quaternion quaternion_from_json(const nlohmann::json& j) {
    require_array(j, 4, "quaternion");
    return {number_at(j, 0, "quaternion"), number_at(j, 1, "quaternion"),
            number_at(j, 2, "quaternion"), number_at(j, 3, "quaternion")};
}

Paravector paravector_from_json(const nlohmann::json& j) {
    require_array(j, 3, "paravector");
    return {number_at(j, 0, "paravector"), number_at(j, 1, "paravector"),
            number_at(j, 2, "paravector")};
}

ExtendedParavector extended_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ExtendedParavector::infinity();
        throw ArgumentError("extended paravector: the only string form is \"inf\"");
    }
    return ExtendedParavector::finite(paravector_from_json(j));
}

std::pair<Quaternion, Quaternion> spinor_pair_from_json(const nlohmann::json& j) {
    return {quaternion_from_json(member(j, "xi", "spinor")),
            quaternion_from_json(member(j, "eta", "spinor"))};
}

CliffordMatrix clifford_raw_from_json(const nlohmann::json& j) {
    return {quaternion_from_json(member(j, "a", "clifford matrix")),
            quaternion_from_json(member(j, "b", "clifford matrix")),
            quaternion_from_json(member(j, "c", "clifford matrix")),
            quaternion_from_json(member(j, "d", "clifford matrix"))};
}

MinkowskiPoint point_from_json(const nlohmann::json& j) {
    require_array(j, 5, "minkowski point");
    return {number_at(j, 0, "minkowski point"), number_at(j, 1, "minkowski point"),
            number_at(j, 2, "minkowski point"), number_at(j, 3, "minkowski point"),
            number_at(j, 4, "minkowski point")};
}

std::array<double, 4> disc_point_from_json(const nlohmann::json& j) {
    require_array(j, 4, "disc point");
    return {number_at(j, 0, "disc point"), number_at(j, 1, "disc point"),
            number_at(j, 2, "disc point"), number_at(j, 3, "disc point")};
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_quaternion(const Quaternion& q) {
    return "[" + fmt_double(q.a) + "," + fmt_double(q.b) + "," + fmt_double(q.c) + "," +
           fmt_double(q.d) + "]";
}

std::string json_paravector(const Paravector& v) {
    return "[" + fmt_double(v.a) + "," + fmt_double(v.b) + "," + fmt_double(v.c) + "]";
}

std::string json_extended(const ExtendedParavector& v) {
    return v.inf ? "\"inf\"" : json_paravector(v.v);
}

std::string json_spinor(const Quaternion& xi, const Quaternion& eta) {
    return "{\"xi\":" + json_quaternion(xi) + ",\"eta\":" + json_quaternion(eta) + "}";
}

std::string json_spinor(const Spinor& k) { return json_spinor(k.xi, k.eta); }

std::string json_clifford(const CliffordMatrix& m) {
    return "{\"a\":" + json_quaternion(m.a) + ",\"b\":" + json_quaternion(m.b) +
           ",\"c\":" + json_quaternion(m.c) + ",\"d\":" + json_quaternion(m.d) + "}";
}

std::string json_point(const MinkowskiPoint& p) {
    return "[" + fmt_double(p.T) + "," + fmt_double(p.W) + "," + fmt_double(p.X) + "," +
           fmt_double(p.Y) + "," + fmt_double(p.Z) + "]";
}

std::string json_disc_point(const std::array<double, 4>& q) {
    return "[" + fmt_double(q[0]) + "," + fmt_double(q[1]) + "," + fmt_double(q[2]) + "," +
           fmt_double(q[3]) + "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

}  // namespace hspin
