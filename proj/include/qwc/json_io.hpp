#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qwc/genus0.hpp"
#include "qwc/ifun.hpp"
#include "qwc/invariant_table.hpp"
#include "qwc/zpoly.hpp"

namespace qwc {

using Json = nlohmann::json;

// All emission goes through canonical_dump so that identical inputs yield
// byte-identical output: two-space indent, keys sorted (nlohmann::json keeps
// objects sorted by key), canonical rational strings, trailing newline.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] inline void bad_payload(const std::string& what) {
  fail(ErrorKind::Parse, "malformed payload: " + what);
}

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_payload("not valid JSON");
  return j;
}

// ---- Rationals -------------------------------------------------------------

inline Json rat_to_json(const Rat& r) { return Json(r.str()); }

inline Rat rat_from_json(const Json& j) {
  if (!j.is_string()) bad_payload("rational values are strings like \"p/q\"");
  return Rat::parse(j.get<std::string>());
}

// ---- Target ----------------------------------------------------------------

inline Json target_to_json(const CompleteIntersection& X) {
  Json j;
  j["degrees"] = X.degrees;
  j["n"] = X.n;
  return j;
}

inline CompleteIntersection target_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("degrees"))
    bad_payload("target needs {\"n\": ..., \"degrees\": [...]}");
  if (!j["n"].is_number_integer() || !j["degrees"].is_array())
    bad_payload("target fields have the wrong types");
  std::vector<int> degs;
  for (const Json& e : j["degrees"]) {
    if (!e.is_number_integer()) bad_payload("degrees must be integers");
    degs.push_back(e.get<int>());
  }
  return CompleteIntersection(j["n"].get<int>(), std::move(degs));
}

// ---- Series ----------------------------------------------------------------

inline Json series_to_json(const RatSeries& s) {
  Json coeffs = Json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k).str());
  Json j;
  j["coeffs"] = std::move(coeffs);
  j["order"] = s.order();
  return j;
}

inline RatSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    bad_payload("series needs {\"order\": D, \"coeffs\": [...]}");
  if (!j["order"].is_number_integer() || !j["coeffs"].is_array())
    bad_payload("series fields have the wrong types");
  int order = j["order"].get<int>();
  if (order < 0) bad_payload("series order must be >= 0");
  const Json& coeffs = j["coeffs"];
  if (coeffs.size() != static_cast<size_t>(order) + 1)
    bad_payload("series must carry exactly order+1 coefficients");
  RatSeries s(order);
  for (int k = 0; k <= order; ++k) s.set_coeff(k, rat_from_json(coeffs[static_cast<size_t>(k)]));
  return s;
}

// ---- Cohomology classes and z-polynomials ----------------------------------

inline Json coh_to_json(const CohClass& c) {
  Json j = Json::array();
  for (int k = 0; k <= c.dim(); ++k) j.push_back(c.coeff(k).str());
  return j;  // the universal zero serializes as []
}

inline CohClass coh_from_json(const Json& j) {
  if (!j.is_array()) bad_payload("cohomology class must be an array of rationals");
  if (j.empty()) return CohClass();
  std::vector<Rat> c;
  for (const Json& e : j) c.push_back(rat_from_json(e));
  return CohClass(std::move(c));
}

/// z-polynomials are objects keyed "z<exp>", e.g. {"z-1": [...], "z0": [...]},
/// each value a cohomology-class array.
inline Json zpoly_to_json(const ZPolyClass& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j["z" + std::to_string(e)] = coh_to_json(c);
  return j;
}

inline ZPolyClass zpoly_from_json(const Json& j) {
  if (!j.is_object()) bad_payload("z-polynomial must be an object keyed by z-exponent");
  ZPolyClass p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key.size() < 2 || key[0] != 'z') bad_payload("z-polynomial key '" + key + "'");
    int e = 0;
    try {
      size_t used = 0;
      e = std::stoi(key.substr(1), &used);
      if (used != key.size() - 1) bad_payload("z-polynomial key '" + key + "'");
    } catch (const std::exception&) {
      bad_payload("z-polynomial key '" + key + "'");
    }
    p.add(e, coh_from_json(it.value()));
  }
  return p;
}

// ---- Stability -------------------------------------------------------------

inline Json stability_to_json(const Stability& s) { return Json(s.str()); }

inline Stability stability_from_json(const Json& j) {
  if (!j.is_string()) bad_payload("stability must be a string");
  return Stability::parse(j.get<std::string>());
}

// ---- Invariant tables ------------------------------------------------------

/// Where a table produced by a transform came from; attached to emitted
/// tables so downstream consumers can audit the provenance.  Ignored (and
/// preserved nowhere) on ingestion.
struct TableProvenance {
  std::string transform;
  std::string epsilon;
  std::string source_stability;
};

inline Json table_to_json(const InvariantTable& t,
                          const std::optional<TableProvenance>& prov = {}) {
  Json j;
  if (prov) j["epsilon"] = prov->epsilon;
  j["genus"] = t.genus;
  if (prov) j["source_stability"] = prov->source_stability;
  j["stability"] = t.stability.str();
  j["target"] = target_to_json(t.target);
  if (prov) j["transform"] = prov->transform;
  Json values = Json::array();
  for (int d = 1; d <= t.depth(); ++d) {
    Json row;
    row["d"] = d;
    row["value"] = t.value(d).str();
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  return j;
}

inline InvariantTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("genus") ||
      !j.contains("stability") || !j.contains("values"))
    bad_payload("table needs target, genus, stability, values");
  if (!j["genus"].is_number_integer() || !j["values"].is_array())
    bad_payload("table fields have the wrong types");
  CompleteIntersection X = target_from_json(j["target"]);
  int genus = j["genus"].get<int>();
  Stability stab = stability_from_json(j["stability"]);
  std::vector<std::pair<int, Rat>> rows;
  for (const Json& row : j["values"]) {
    if (!row.is_object() || !row.contains("d") || !row.contains("value") ||
        !row["d"].is_number_integer())
      bad_payload("table rows are {\"d\": k, \"value\": \"p/q\"}");
    rows.emplace_back(row["d"].get<int>(), rat_from_json(row["value"]));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rat> values;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != static_cast<int>(i) + 1)
      bad_payload("table degrees must cover 1..depth exactly once");
    values.push_back(std::move(rows[i].second));
  }
  return InvariantTable(std::move(X), genus, std::move(stab), std::move(values));
}

// ---- Genus-0 bundle --------------------------------------------------------

inline Json genus0_to_json(const CompleteIntersection& X, const YukawaData& y) {
  Json j;
  j["genus"] = 0;
  Json instanton = Json::array();
  for (size_t i = 0; i < y.instanton.size(); ++i) {
    Json row;
    row["d"] = static_cast<int>(i) + 1;
    row["n"] = y.instanton[i].str();
    instanton.push_back(std::move(row));
  }
  j["instanton"] = std::move(instanton);
  j["stability"] = Stability::infinity().str();
  j["target"] = target_to_json(X);
  Json three = Json::array();
  Json values = Json::array();
  for (size_t i = 0; i < y.three_point.size(); ++i) {
    int d = static_cast<int>(i) + 1;
    Json row;
    row["d"] = d;
    row["value"] = y.three_point[i].str();
    three.push_back(row);
    row["value"] = (y.three_point[i] / (Rat(d) * Rat(d) * Rat(d))).str();
    values.push_back(std::move(row));
  }
  j["three_point"] = std::move(three);
  j["values"] = std::move(values);
  j["yukawa"] = series_to_json(y.coupling);
  return j;
}

}  // namespace qwc
