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

// JSON forms of signed sets, oriented matroids, point configurations,
// localizations and matrices.
//
//   signed set      {"plus": [...], "minus": [...]}, labels in ground order
//   oriented matroid {"ground": [...], "rank": r, "circuits": [...], "cocircuits": [...]}
//   point config    {"mode": "affine", "points": [{"label": "v++", "coords": ["1", "1/2"]}]}
//   localization    {"half_family": [...], "sigma": "+-0"}
//
// Readers report schema violations as kParse errors that name a JSON path
// ("$.circuits[2].plus[0]"). Input that is valid but not canonical is
// normalized and each normalization is recorded in `notes`.

#ifndef OMCUBE_CODEC_HPP_
#define OMCUBE_CODEC_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "omcube/extensions.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/oriented_matroid.hpp"
#include "omcube/realization.hpp"
#include "omcube/search.hpp"
#include "omcube/verify.hpp"

namespace omcube {

using Json = nlohmann::ordered_json;

template <typename T>
struct Decoded {
  T value;
  std::vector<std::string> notes;
  bool canonical() const { return notes.empty(); }
};

Json signed_set_to_json(const Ground& ground, const SignedSet& x);
Json om_to_json(const OrientedMatroid& om);
Json config_to_json(const PointConfig& config);
Json localization_to_json(const Localization& loc);
Json matrix_to_json(const Matrix& m);
Json isomorphism_to_json(const Ground& from, const Ground& to, const Isomorphism& iso);
Json vec_to_json(const Vec& v);

// Reports.
Json localization_report_to_json(const LocalizationReport& rep);
Json cube_report_to_json(const CubeReport& rep);
Json adjoint_report_to_json(const AdjointReport& rep, std::size_t n, AdjointMode mode);
Json search_report_to_json(const SearchReport& rep);
Json verification_report_to_json(const VerificationReport& rep);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json parse_json(const std::string& text);

SignedSet signed_set_from_json(const Json& j, const Ground& ground, const std::string& path,
                               std::vector<std::string>* notes = nullptr);
Decoded<OrientedMatroid> om_from_json(const Json& j);
Decoded<PointConfig> config_from_json(const Json& j);
// The half family must consist of cocircuits of `base`.
Decoded<Localization> localization_from_json(const Json& j, const OrientedMatroid& base);
// Either an array of rows or {"matrix": rows}; entries are rational strings or
// integers.
Matrix matrix_from_json(const Json& j);

std::string write_om(const OrientedMatroid& om);
Decoded<OrientedMatroid> read_om(const std::string& text);
std::string write_config(const PointConfig& config);
Decoded<PointConfig> read_config(const std::string& text);
std::string write_localization(const Localization& loc);
Decoded<Localization> read_localization(const std::string& text, const OrientedMatroid& base);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace omcube

#endif  // OMCUBE_CODEC_HPP_
