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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>

#include "omcube/codec.hpp"
#include "omcube/errors.hpp"
#include "omcube/generators.hpp"

using namespace omcube;

namespace {

bool has_note(const std::vector<std::string>& notes, const std::string& prefix) {
  return std::any_of(notes.begin(), notes.end(),
                     [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

std::string parse_error(const std::string& text) {
  try {
    read_om(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("oriented matroid roundtrip") {
  for (const OrientedMatroid& om :
       {cross_polytope(2), real_cube(3), canonical_adjoint(2), cross_polytope_plus_zero(3)}) {
    const std::string text = write_om(om);
    Decoded<OrientedMatroid> back = read_om(text);
    CHECK(back.canonical());
    CHECK(back.value == om);
    CHECK(write_om(back.value) == text);
  }
  const std::string o2 = write_om(cross_polytope(2));
  CHECK(o2.back() == '\n');
  Json j = parse_json(o2);
  CHECK(j["ground"] == Json::array({"1", "2", "1'", "2'"}));
  CHECK(j["rank"] == 3);
  CHECK(j["circuits"].size() == 1);
  CHECK(j["cocircuits"].size() == 6);
}

TEST_CASE("schema violations name a path") {
  Json j = parse_json(write_om(cross_polytope(2)));
  Json missing = j;
  missing.erase("ground");
  CHECK(parse_error(dump(missing)).find("$.ground") != std::string::npos);
  Json bad_label = j;
  bad_label["circuits"][0]["plus"][0] = "9";
  CHECK(parse_error(dump(bad_label)).find("$.circuits[0].plus[0]") != std::string::npos);
  Json bad_rank = j;
  bad_rank["rank"] = 4;
  CHECK(parse_error(dump(bad_rank)).find("$.rank") != std::string::npos);
  Json extra = j;
  extra["color"] = "red";
  CHECK(parse_error(dump(extra)).find("$.color") != std::string::npos);
  CHECK_FALSE(parse_error("{not json").empty());
  CHECK(parse_error("[]").find("$") == 0);
}

TEST_CASE("non-canonical input is normalized and flagged") {
  Json j = parse_json(write_om(cross_polytope(2)));
  std::swap(j["circuits"][0]["plus"], j["circuits"][0]["minus"]);
  Decoded<OrientedMatroid> d = read_om(dump(j));
  CHECK(d.value == cross_polytope(2));
  CHECK_FALSE(d.canonical());
  CHECK(has_note(d.notes, "$.circuits[0]: replaced by its negative"));
  CHECK(write_om(d.value) == write_om(cross_polytope(2)));

  Json only_c = parse_json(write_om(real_cube(2)));
  only_c.erase("cocircuits");
  Decoded<OrientedMatroid> c = read_om(dump(only_c));
  CHECK(c.value == real_cube(2));
  CHECK(has_note(c.notes, "$.cocircuits: derived"));
}

TEST_CASE("point configurations") {
  PointConfig pc = cube_points(2);
  pc.coords[0][0] = Rational(3, 2);
  const std::string text = write_config(pc);
  Decoded<PointConfig> back = read_config(text);
  CHECK(back.canonical());
  CHECK(back.value.coords == pc.coords);
  CHECK(back.value.labels == pc.labels);
  CHECK(write_config(back.value) == text);
  Json j = parse_json(text);
  CHECK(j["points"][0]["coords"][0] == "3/2");
  j["points"][0]["coords"][0] = "6/4";
  j["points"][1]["coords"][1] = 1;
  Decoded<PointConfig> norm = config_from_json(j);
  CHECK(norm.value.coords == pc.coords);
  CHECK(has_note(norm.notes, "$.points[0].coords[0]: rational normalized"));
  CHECK(has_note(norm.notes, "$.points[1].coords[1]: integer number"));
  j["mode"] = "projective";
  CHECK_THROWS_AS(config_from_json(j), Error);
}

TEST_CASE("localizations and matrices") {
  const OrientedMatroid base = cross_polytope(2);
  std::vector<std::int8_t> sigma{0, 0, 1, 1, 1, 1};
  Localization loc = make_localization(base, cross_polytope_half_family(2), sigma);
  const std::string text = write_localization(loc);
  Decoded<Localization> back = read_localization(text, base);
  CHECK(back.value.sigma == sigma);
  CHECK(back.value.half_family == loc.half_family);
  CHECK(write_localization(back.value) == text);
  Json j = parse_json(text);
  CHECK(j["sigma"] == "00++++");
  j["sigma"] = "00+++";
  CHECK_THROWS_AS(read_localization(dump(j), base), Error);

  Matrix m = matrix_from_json(parse_json(R"([["1", 0], ["1/2", "2/4"]])"));
  CHECK(m[1][1] == Rational(1, 2));
  CHECK(matrix_to_json(m) == parse_json(R"([["1", "0"], ["1/2", "1/2"]])"));
  CHECK(matrix_from_json(parse_json(R"({"matrix": [[2]]})"))[0][0] == 2);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"([["1", "0"]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"([["x"]])")), Error);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "omcube_codec_test.json";
  write_file(path.string(), write_om(real_cube(2)));
  CHECK(read_om(read_file(path.string())).value == real_cube(2));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path.string()), Error);
}
