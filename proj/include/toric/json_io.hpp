#pragma once

// JSON wire formats. Integers stay integers; non-integral rationals travel as
// ["num","den"] string pairs so nothing ever goes through floating point.
// Emission uses alphabetically sorted keys, so byte-identical inputs and
// flags give byte-identical outputs.

#include "toric/cone.hpp"
#include "toric/index.hpp"
#include "toric/oracle.hpp"
#include "toric/series.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace jio {

using nlohmann::json;

inline json rat_to_json(const Rat& q) {
  if (denominator(q) == 1) {
    return json(numerator(q).convert_to<long long>());
  }
  return json::array({numerator(q).str(), denominator(q).str()});
}

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
    Int num(j[0].get<std::string>());
    Int den(j[1].get<std::string>());
    if (den <= 0) throw parse_error("fraction with nonpositive denominator");
    return Rat(num, den);
  }
  throw parse_error("expected an integer or a [\"num\",\"den\"] fraction pair");
}

inline json int_vec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& a : v) out.push_back(a.convert_to<long long>());
  return out;
}

inline IntVec int_vec_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected an integer vector");
  IntVec v;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw parse_error("expected an integer vector entry");
    v.emplace_back(e.get<long long>());
  }
  return v;
}

inline json rat_vec_to_json(const RatVec& v) {
  bool integral = true;
  for (const Rat& q : v)
    if (denominator(q) != 1) integral = false;
  json out = json::array();
  for (const Rat& q : v) {
    if (integral)
      out.push_back(numerator(q).convert_to<long long>());
    else
      out.push_back(json::array({numerator(q).str(), denominator(q).str()}));
  }
  return out;
}

inline RatVec rat_vec_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("expected a vector");
  RatVec v;
  for (const json& e : j) v.push_back(rat_from_json(e));
  return v;
}

// {"dim": 3, "normals": [[1,0,0],...], "reeb": [0,0,1]}; reeb entries may be
// ["num","den"] pairs and the key may be absent.
inline MomentCone cone_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("cone spec: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw parse_error("cone spec: missing integer \"dim\"");
  if (!j.contains("normals") || !j["normals"].is_array())
    throw parse_error("cone spec: missing \"normals\" array");
  int dim = j["dim"].get<int>();
  std::vector<IntVec> normals;
  for (const json& row : j["normals"]) normals.push_back(int_vec_from_json(row));
  std::optional<RatVec> reeb;
  if (j.contains("reeb") && !j["reeb"].is_null()) reeb = rat_vec_from_json(j["reeb"]);
  try {
    return make_cone(dim, std::move(normals), std::move(reeb));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("cone spec: ") + e.what());
  }
}

inline MomentCone cone_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed JSON in " + path + ": " + e.what());
  }
  return cone_from_json(j);
}

inline json cone_to_json(const MomentCone& c) {
  json j;
  j["dim"] = c.dim;
  json normals = json::array();
  for (const IntVec& v : c.normals) normals.push_back(int_vec_to_json(v));
  j["normals"] = normals;
  if (c.reeb) j["reeb"] = rat_vec_to_json(*c.reeb);
  return j;
}

inline json goodness_to_json(const GoodnessReport& rep) {
  json j;
  j["strictly_convex"] = rep.strictly_convex;
  j["normals_primitive"] = rep.normals_primitive;
  j["normals_minimal"] = rep.normals_minimal;
  j["faces_simple"] = rep.faces_simple;
  j["faces_unimodular"] = rep.faces_unimodular;
  j["good"] = rep.good;
  j["issues"] = rep.issues;
  return j;
}

inline json window_to_json(const LatticeWindow& w) {
  json box = json::array();
  for (std::size_t i = 0; i < w.lower.size(); ++i)
    box.push_back(json::array({w.lower[i], w.upper[i]}));
  return box;
}

inline json series_to_json(const IndexSeries& s) {
  json j;
  j["box"] = window_to_json(s.window);
  json entries = json::array();
  for (const auto& [mu, m] : s.coefficients) {
    json e;
    e["mu"] = int_vec_to_json(mu);
    e["m"] = m;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

inline json comparison_to_json(const IndexComparison& cmp) {
  json j;
  j["localized"] = series_to_json(cmp.localized);
  j["lattice"] = series_to_json(cmp.lattice);
  j["equal"] = cmp.equal;
  j["first_mismatch"] = cmp.first_mismatch ? int_vec_to_json(*cmp.first_mismatch) : json(nullptr);
  return j;
}

// VerificationReport; elapsed time is emitted only on request since it is
// the one run-dependent field.
inline json report_to_json(const oracle::VerificationReport& rep, bool with_timing = false) {
  json j;
  j["identity"] = rep.identity;
  j["window"] = window_to_json(rep.window);
  j["points_checked"] = rep.points_checked;
  json ms = json::array();
  for (const oracle::Mismatch& m : rep.mismatches) {
    json e;
    e["point"] = int_vec_to_json(m.point);
    e["lhs"] = m.lhs;
    e["rhs"] = m.rhs;
    ms.push_back(e);
  }
  j["mismatches"] = ms;
  j["pass"] = rep.pass();
  if (with_timing) j["elapsed_seconds"] = rep.elapsed_seconds;
  return j;
}

inline json edge_frame_to_json(const EdgeFrame& f) {
  json j;
  j["facets"] = f.facet_indices;
  json normals = json::array();
  for (const IntVec& v : f.normals) normals.push_back(int_vec_to_json(v));
  j["normals"] = normals;
  j["v0"] = int_vec_to_json(f.completion);
  j["mu"] = int_vec_to_json(f.mu);
  json ws = json::array();
  for (const IntVec& v : f.weights) ws.push_back(int_vec_to_json(v));
  j["weights"] = ws;
  j["mu_of_reeb"] = rat_to_json(f.reeb_pairing);
  return j;
}

// Twist file: {"twists": [{"edge": 0, "weights": [{"mu": [...], "m": 1}]}]}.
// Edges are indexed as in the edge table; unlisted edges keep the trivial
// twist.
inline void apply_twist_file(std::vector<IndexTerm>& terms, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open twist file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("malformed JSON in twist file: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("twists") || !j["twists"].is_array())
    throw parse_error("twist file: expected {\"twists\": [...]}");
  for (const json& t : j["twists"]) {
    if (!t.contains("edge") || !t["edge"].is_number_integer())
      throw parse_error("twist file: entry without integer \"edge\"");
    std::size_t e = t["edge"].get<std::size_t>();
    if (e >= terms.size()) throw parse_error("twist file: edge index out of range");
    if (!t.contains("weights") || !t["weights"].is_array() || t["weights"].empty())
      throw parse_error("twist file: entry without \"weights\"");
    terms[e].twist_weights.clear();
    for (const json& wj : t["weights"]) {
      if (!wj.contains("mu") || !wj.contains("m") || !wj["m"].is_number_integer())
        throw parse_error("twist file: weight entries need \"mu\" and integer \"m\"");
      terms[e].twist_weights[int_vec_from_json(wj["mu"])] += wj["m"].get<long long>();
    }
  }
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace jio
}  // namespace toric
