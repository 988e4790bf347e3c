#pragma once

#include <nlohmann/json.hpp>

#include "kleinian/catalog.hpp"
#include "kleinian/characters.hpp"
#include "kleinian/inequalities.hpp"
#include "kleinian/mobius.hpp"
#include "kleinian/oracle.hpp"
#include "kleinian/sympoly.hpp"

namespace kleinian {

// Stable key order everywhere: CLI output is diffed byte-for-byte in tests.
using Json = nlohmann::ordered_json;

inline Json to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

inline Cplx complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

// {"gamma":[re,im],"beta_f":[re,im],"beta_g":[re,im]} - field names are fixed.
inline Json to_json(const PrincipalCharacter& ch) {
  Json j;
  j["gamma"] = to_json(ch.gamma);
  j["beta_f"] = to_json(ch.beta_f);
  j["beta_g"] = to_json(ch.beta_g);
  return j;
}

inline PrincipalCharacter character_from_json(const Json& j) {
  return {complex_from_json(j.at("gamma")), complex_from_json(j.at("beta_f")),
          complex_from_json(j.at("beta_g"))};
}

inline Json to_json(const Matrix2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}),
                      Json::array({to_json(m.c), to_json(m.d)})});
}

inline Json to_json(const InequalityReport& r) {
  Json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["bound"] = r.bound;
  j["margin"] = r.margin;
  j["satisfied"] = r.satisfied;
  Json ex = Json::array();
  for (const auto& note : r.exceptions) ex.push_back(note.text);
  j["exceptions"] = ex;
  j["applicability"] = to_string(r.applicability);
  return j;
}

inline Json to_json(const BatteryResult& b) {
  Json j;
  j["verdict"] = to_string(b.verdict);
  Json reports = Json::array();
  for (const auto& r : b.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  return j;
}

inline Json to_json(const Realization& r) {
  Json j;
  j["f"] = to_json(r.f);
  j["g"] = to_json(r.g);
  j["character"] = to_json(r.source);
  j["residual"] = r.residual;
  return j;
}

inline Json to_json(const std::vector<IdentityCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["identity"] = c.identity;
    j["status"] = c.pass ? "pass" : "fail";
    arr.push_back(j);
  }
  return arr;
}

inline Json to_json(const KnownGroup& e) {
  Json j;
  j["name"] = e.name;
  j["character"] = to_json(e.character);
  Json formulas;
  formulas["gamma"] = e.gamma_formula;
  formulas["beta_f"] = e.beta_f_formula;
  formulas["beta_g"] = e.beta_g_formula;
  j["formulas"] = formulas;
  j["sharp_for"] = e.sharp_for;
  j["provenance"] = e.provenance;
  j["kind"] = to_string(e.kind);
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

} // namespace kleinian
