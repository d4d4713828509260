// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omcube/codec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "omcube/errors.hpp"

namespace omcube {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::kParse, path + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "." + key, "missing key");
  return *it;
}

void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      schema_error(path + "." + it.key(), "unknown key");
    }
  }
}

const Json& array_at(const Json& j, const std::string& key, const std::string& path) {
  const Json& a = member(j, key, path);
  if (!a.is_array()) schema_error(path + "." + key, "expected an array");
  return a;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& path, std::vector<std::string>* notes) {
  if (j.is_number_integer()) {
    if (notes) notes->push_back(path + ": integer number converted to a string");
    return Rational(j.dump());
  }
  const std::string s = string_at(j, path);
  try {
    Rational q = parse_rational(s);
    if (notes && to_string(q) != s) notes->push_back(path + ": rational normalized to " + to_string(q));
    return q;
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

Json labels_json(const Ground& ground, Mask m) {
  Json out = Json::array();
  for (const auto& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

Mask mask_from(const Json& j, const Ground& ground, const std::string& path,
               std::vector<std::string>* notes) {
  if (!j.is_array()) schema_error(path, "expected an array of labels");
  Mask m = 0;
  std::size_t prev = 0;
  bool sorted = true;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    auto idx = ground.find(string_at(j[k], p));
    if (!idx) schema_error(p, "label '" + j[k].get<std::string>() + "' is not in the ground set");
    if (m & bit(*idx)) schema_error(p, "repeated label");
    if (k > 0 && *idx < prev) sorted = false;
    prev = *idx;
    m |= bit(*idx);
  }
  if (!sorted && notes) notes->push_back(path + ": labels sorted into ground order");
  return m;
}

std::vector<SignedSet> family_from(const Json& j, const Ground& ground, const std::string& path,
                                   std::vector<std::string>* notes) {
  if (!j.is_array()) schema_error(path, "expected an array of signed sets");
  std::vector<SignedSet> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "[" + std::to_string(k) + "]";
    SignedSet x = signed_set_from_json(j[k], ground, p, notes);
    if (x.empty()) schema_error(p, "empty signed set");
    if (!(canonical_rep(x) == x)) {
      if (notes) notes->push_back(p + ": replaced by its negative (canonical representative)");
      x = canonical_rep(x);
    }
    out.push_back(x);
  }
  std::vector<SignedSet> canon = canonical_family(out);
  if (notes && canon != out) notes->push_back(path + ": family sorted and deduplicated");
  return canon;
}

}  // namespace

Json signed_set_to_json(const Ground& ground, const SignedSet& x) {
  Json j;
  j["plus"] = labels_json(ground, x.plus);
  j["minus"] = labels_json(ground, x.minus);
  return j;
}

Json om_to_json(const OrientedMatroid& om) {
  Json j;
  j["ground"] = om.ground().labels();
  j["rank"] = om.rank();
  Json circuits = Json::array();
  for (const auto& c : om.circuits()) circuits.push_back(signed_set_to_json(om.ground(), c));
  Json cocircuits = Json::array();
  for (const auto& d : om.cocircuits()) cocircuits.push_back(signed_set_to_json(om.ground(), d));
  j["circuits"] = std::move(circuits);
  j["cocircuits"] = std::move(cocircuits);
  return j;
}

Json config_to_json(const PointConfig& config) {
  Json j;
  j["mode"] = config.mode == PointMode::kAffine ? "affine" : "linear";
  Json points = Json::array();
  for (std::size_t k = 0; k < config.size(); ++k) {
    Json p;
    p["label"] = config.labels[k];
    Json coords = Json::array();
    for (const auto& q : config.coords[k]) coords.push_back(to_string(q));
    p["coords"] = std::move(coords);
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

Json localization_to_json(const Localization& loc) {
  Json j;
  Json half = Json::array();
  for (const auto& x : loc.half_family) half.push_back(signed_set_to_json(loc.base.ground(), x));
  j["half_family"] = std::move(half);
  j["sigma"] = loc.sigma_string();
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json isomorphism_to_json(const Ground& from, const Ground& to, const Isomorphism& iso) {
  Json j;
  Json image = Json::object();
  for (std::size_t e = 0; e < iso.image.size(); ++e) image[from.label(e)] = to.label(iso.image[e]);
  j["image"] = std::move(image);
  j["reoriented"] = labels_json(from, iso.flips);
  return j;
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

Json localization_report_to_json(const LocalizationReport& rep) {
  Json j;
  j["localization"] = rep.ok();
  j["triplets_ok"] = rep.triplets_ok;
  j["cyclic_ok"] = rep.cyclic_ok;
  j["hyperlines"] = rep.hyperlines;
  j["failures"] = rep.failures;
  return j;
}

Json cube_report_to_json(const CubeReport& rep) {
  Json j;
  j["oriented_cube"] = rep.ok();
  j["n"] = rep.n;
  j["failures"] = rep.failures;
  return j;
}

Json adjoint_report_to_json(const AdjointReport& rep, std::size_t n, AdjointMode mode) {
  Json j;
  j["adjoint"] = rep.ok();
  j["n"] = n;
  j["mode"] = mode == AdjointMode::kWeak ? "weak" : "strong";
  j["failures"] = rep.failures;
  return j;
}

Json search_report_to_json(const SearchReport& rep) {
  Json j;
  j["kind"] = to_string(rep.options.kind);
  j["n"] = rep.options.n;
  j["strategy"] = to_string(rep.options.strategy);
  j["budget_seconds"] = rep.options.budget_seconds;
  j["rank"] = rep.rank;
  j["variables"] = rep.variables;
  j["free_classes"] = rep.free_classes;
  j["subtrees"] = rep.subtrees;
  j["nodes"] = rep.nodes;
  j["candidates_examined"] = rep.candidates_examined;
  j["rejected"] = rep.rejected;
  j["domain_prunes"] = rep.domain_prunes;
  j["found"] = rep.found;
  j["isomorphism_classes"] = rep.isomorphism_classes();
  Json classes = Json::array();
  for (const auto& c : rep.classes) {
    Json k;
    k["digest"] = c.digest;
    k["chirotope"] = c.chirotope;
    k["members"] = c.members;
    if (c.matches_reference) {
      k["matches_reference"] = *c.matches_reference;
    } else {
      k["matches_reference"] = nullptr;
    }
    k["axioms_ok"] = c.axioms_ok;
    k["oriented_matroid"] = om_to_json(c.om);
    classes.push_back(std::move(k));
  }
  j["classes"] = std::move(classes);
  j["completeness"] = rep.complete ? "proved-exhaustive" : "budget-truncated";
  j["resumed"] = rep.resumed;
  j["threads"] = rep.threads_used;
  j["wall_time"] = rep.wall_time;
  j["notes"] = rep.notes;
  return j;
}

Json verification_report_to_json(const VerificationReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["ok"] = rep.ok();
  Json claims = Json::array();
  for (const auto& c : rep.claims) {
    Json k;
    k["id"] = c.id;
    k["description"] = c.description;
    k["status"] = to_string(c.status);
    k["witness"] = c.witness;
    k["seconds"] = c.seconds;
    claims.push_back(std::move(k));
  }
  j["claims"] = std::move(claims);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("$: invalid JSON: ") + e.what());
  }
}

SignedSet signed_set_from_json(const Json& j, const Ground& ground, const std::string& path,
                               std::vector<std::string>* notes) {
  if (!j.is_object()) schema_error(path, "expected an object with plus and minus");
  check_keys(j, {"plus", "minus"}, path);
  SignedSet x;
  x.plus = mask_from(member(j, "plus", path), ground, path + ".plus", notes);
  x.minus = mask_from(member(j, "minus", path), ground, path + ".minus", notes);
  if (x.plus & x.minus) schema_error(path, "plus and minus overlap");
  if (notes && !j.empty() && j.begin().key() != "plus") {
    notes->push_back(path + ": keys reordered to plus, minus");
  }
  return x;
}

Decoded<OrientedMatroid> om_from_json(const Json& j) {
  Decoded<OrientedMatroid> out;
  if (!j.is_object()) schema_error("$", "expected an object");
  check_keys(j, {"ground", "rank", "circuits", "cocircuits"}, "$");
  const Json& g = array_at(j, "ground", "$");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < g.size(); ++k) {
    names.push_back(string_at(g[k], "$.ground[" + std::to_string(k) + "]"));
  }
  if (names.size() >= 64) schema_error("$.ground", "at most 63 elements are supported");
  Ground ground = [&] {
    try {
      return Ground(names);
    } catch (const Error& e) {
      schema_error("$.ground", e.what());
    }
  }();
  const Json& r = member(j, "rank", "$");
  if (!r.is_number_integer() || r.get<long long>() < 0) {
    schema_error("$.rank", "expected a nonnegative integer");
  }
  const bool has_c = j.contains("circuits");
  const bool has_d = j.contains("cocircuits");
  if (!has_c && !has_d) schema_error("$.circuits", "missing key (circuits or cocircuits needed)");
  std::vector<SignedSet> circuits, cocircuits;
  if (has_c) circuits = family_from(j["circuits"], ground, "$.circuits", &out.notes);
  if (has_d) cocircuits = family_from(j["cocircuits"], ground, "$.cocircuits", &out.notes);
  if (has_c) {
    out.value = OrientedMatroid::from_circuits(ground, circuits);
    if (has_d && out.value.cocircuits() != cocircuits) {
      schema_error("$.cocircuits", "not the cocircuit family determined by the circuits");
    }
  } else {
    out.value = OrientedMatroid::from_cocircuits(ground, cocircuits);
    out.notes.push_back("$.circuits: derived from the cocircuits");
  }
  if (!has_d) out.notes.push_back("$.cocircuits: derived from the circuits");
  if (r.get<long long>() != out.value.rank()) {
    schema_error("$.rank", "stated rank " + r.dump() + " but the families have rank " +
                               std::to_string(out.value.rank()));
  }
  std::vector<std::string> order;
  for (auto it = j.begin(); it != j.end(); ++it) order.push_back(it.key());
  if (has_c && has_d && order != std::vector<std::string>{"ground", "rank", "circuits", "cocircuits"}) {
    out.notes.push_back("$: keys reordered");
  }
  return out;
}

Decoded<PointConfig> config_from_json(const Json& j) {
  Decoded<PointConfig> out;
  if (!j.is_object()) schema_error("$", "expected an object");
  check_keys(j, {"mode", "points"}, "$");
  const std::string mode = string_at(member(j, "mode", "$"), "$.mode");
  if (mode == "affine") {
    out.value.mode = PointMode::kAffine;
  } else if (mode == "linear") {
    out.value.mode = PointMode::kLinear;
  } else {
    schema_error("$.mode", "expected \"affine\" or \"linear\"");
  }
  const Json& pts = array_at(j, "points", "$");
  if (pts.empty()) schema_error("$.points", "empty point list");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string p = "$.points[" + std::to_string(k) + "]";
    if (!pts[k].is_object()) schema_error(p, "expected an object");
    check_keys(pts[k], {"label", "coords"}, p);
    out.value.labels.push_back(string_at(member(pts[k], "label", p), p + ".label"));
    const Json& c = array_at(pts[k], "coords", p);
    Vec v;
    for (std::size_t i = 0; i < c.size(); ++i) {
      v.push_back(rational_at(c[i], p + ".coords[" + std::to_string(i) + "]", &out.notes));
    }
    if (k > 0 && v.size() != out.value.coords[0].size()) {
      schema_error(p + ".coords", "dimension differs from the first point");
    }
    out.value.coords.push_back(std::move(v));
  }
  try {
    out.value.validate();
  } catch (const Error& e) {
    schema_error("$.points", e.what());
  }
  return out;
}

Decoded<Localization> localization_from_json(const Json& j, const OrientedMatroid& base) {
  Decoded<Localization> out;
  if (!j.is_object()) schema_error("$", "expected an object");
  check_keys(j, {"half_family", "sigma"}, "$");
  const Json& h = array_at(j, "half_family", "$");
  std::vector<SignedSet> half;
  for (std::size_t k = 0; k < h.size(); ++k) {
    half.push_back(signed_set_from_json(h[k], base.ground(), "$.half_family[" + std::to_string(k) + "]",
                                        &out.notes));
  }
  std::vector<std::int8_t> sigma;
  try {
    sigma = parse_sigma(string_at(member(j, "sigma", "$"), "$.sigma"));
  } catch (const Error& e) {
    schema_error("$.sigma", e.what());
  }
  try {
    out.value = make_localization(base, half, sigma);
  } catch (const Error& e) {
    schema_error("$.half_family", e.what());
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? member(j, "matrix", "$") : j;
  const std::string base = j.is_object() ? "$.matrix" : "$";
  if (!rows.is_array() || rows.empty()) schema_error(base, "expected a nonempty array of rows");
  Matrix m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = base + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != rows.size()) {
      schema_error(p, "expected a row of length " + std::to_string(rows.size()));
    }
    Vec row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      row.push_back(rational_at(rows[r][c], p + "[" + std::to_string(c) + "]", nullptr));
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::string write_om(const OrientedMatroid& om) { return dump(om_to_json(om)); }

Decoded<OrientedMatroid> read_om(const std::string& text) {
  auto out = om_from_json(parse_json(text));
  if (out.notes.empty() && write_om(out.value) != text) out.notes.push_back("$: formatting differs");
  return out;
}

std::string write_config(const PointConfig& config) { return dump(config_to_json(config)); }

Decoded<PointConfig> read_config(const std::string& text) {
  return config_from_json(parse_json(text));
}

std::string write_localization(const Localization& loc) { return dump(localization_to_json(loc)); }

Decoded<Localization> read_localization(const std::string& text, const OrientedMatroid& base) {
  return localization_from_json(parse_json(text), base);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
  require(static_cast<bool>(out), ErrorCode::kInvalidArgument, "write to '" + path + "' failed");
}

}  // namespace omcube
