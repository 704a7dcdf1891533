#pragma once

#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "sfl/obstruct.hpp"

namespace sfl {

// Insertion-ordered objects keep every report byte-stable across runs.
using Json = nlohmann::ordered_json;

namespace detail {

inline long long to_ll(const Integer& x) {
    if (x > Integer(std::numeric_limits<long long>::max()) ||
        x < Integer(std::numeric_limits<long long>::min()))
        throw std::domain_error("serialize: integer out of 64-bit range");
    return static_cast<long long>(x);
}

}  // namespace detail

/// Exact rationals always serialize as "p/q" strings, never floats.
inline Json json_rational(const Rational& x) { return Json(x.str_exact()); }

inline Json json_rotation(const RotationVector& rot) {
    Json a = Json::array();
    for (const Integer& x : rot) a.push_back(detail::to_ll(x));
    return a;
}

inline Json json_construction(const FillingConstruction& c) {
    Json j = Json::object();
    j["kind"] = c.kind;
    for (const auto& [k, v] : c.data) j[k] = v;
    return j;
}

/// One structure row: rotation (omitted on aggregate rows), theta (omitted
/// when the presentation carries none), consistency class, status, and a
/// "rule: reason" justification.
inline Json json_structure(const StructureVerdict& v) {
    Json j = Json::object();
    if (v.rotation) j["rotation"] = json_rotation(*v.rotation);
    if (v.theta) j["theta"] = json_rational(*v.theta);
    j["class"] = v.structure_class;
    j["status"] = fill_status_name(v.status);
    j["justification"] = v.rule + ": " + v.reason;
    if (v.construction) j["construction"] = json_construction(*v.construction);
    return j;
}

inline Json json_verdict(const VerdictReport& rep) {
    Json j = Json::object();
    j["input"] = rep.input;
    Json rows = Json::array();
    for (const auto& v : rep.structures) rows.push_back(json_structure(v));
    j["structures"] = rows;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline Json json_seifert(const SeifertData& s) {
    Json j = Json::object();
    j["seifert"] = s.str();
    j["e0"] = detail::to_ll(s.e0);
    j["multipliers"] = Json::array({s.r[0].str_exact(), s.r[1].str_exact(), s.r[2].str_exact()});
    return j;
}

inline Json json_qhb_matches(const std::string& input, const std::vector<QhbMatch>& ms) {
    Json j = Json::object();
    j["input"] = input;
    Json arr = Json::array();
    for (const auto& m : ms) {
        Json e = Json::object();
        e["family"] = m.id;
        Json a = Json::object();
        for (const auto& [k, v] : m.assignment) a[std::string(1, k)] = detail::to_ll(v);
        e["assignment"] = a;
        arr.push_back(e);
    }
    j["matches"] = arr;
    return j;
}

/// Canonical dump used by every emitter: two-space indent plus newline.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sfl
