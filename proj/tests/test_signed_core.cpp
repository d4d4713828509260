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

#include <memory>
#include <random>

#include "omcube/errors.hpp"
#include "omcube/signed_set.hpp"

using namespace omcube;

namespace {

std::shared_ptr<const Ground> abc() {
  return std::make_shared<const Ground>(std::vector<std::string>{"a", "b", "c", "d"});
}

std::shared_ptr<const Ground> cross2() {
  return std::make_shared<const Ground>(labels::cross_ground(2));
}

SignedSet random_set(std::mt19937_64& rng, std::size_t n) {
  SignedSet s;
  std::uniform_int_distribution<int> d(-1, 1);
  for (std::size_t e = 0; e < n; ++e) s = s.with_sign(e, d(rng));
  return s;
}

}  // namespace

TEST_CASE("compose takes the first nonzero sign") {
  auto g = abc();
  auto x = SignedVector::from_labels(g, {"a"}, {"b"});
  auto y = SignedVector::from_labels(g, {"b", "c"}, {});
  auto z = x.compose(y);
  CHECK(z.plus_labels() == std::vector<std::string>{"a", "c"});
  CHECK(z.minus_labels() == std::vector<std::string>{"b"});
  CHECK(x.compose(x) == x);
  auto zero = SignedVector::from_labels(g, {}, {});
  CHECK(zero.compose(y) == y);
  CHECK(y.compose(zero) == y);
}

TEST_CASE("orthogonality") {
  auto g = cross2();
  auto x = SignedVector::from_labels(g, {"1", "1'"}, {"2", "2'"});
  auto y = SignedVector::from_labels(g, {"1"}, {"1'"});
  CHECK(x.orthogonal(y));
  auto h = abc();
  CHECK(SignedVector::from_labels(h, {"a"}, {}).orthogonal(SignedVector::from_labels(h, {"b"}, {})));
  CHECK_FALSE(SignedVector::from_labels(h, {"a"}, {}).orthogonal(SignedVector::from_labels(h, {"a"}, {})));
  CHECK_FALSE(SignedVector::from_labels(h, {"a", "b"}, {}).orthogonal(
      SignedVector::from_labels(h, {"a"}, {"c"})));
}

TEST_CASE("reorientation and restriction") {
  auto g = cross2();
  auto x = SignedVector::from_labels(g, {"1"}, {"2"});
  auto r = x.reorient({"2"});
  CHECK(r.plus_labels() == std::vector<std::string>{"1", "2"});
  CHECK(r.minus_labels().empty());
  CHECK(x.reorient({}) == x);
  CHECK(r.reorient({"2"}) == x);
  auto y = SignedVector::from_labels(g, {"1", "2"}, {"1'"});
  auto s = y.restrict_to({"1", "1'"});
  CHECK(s.ground().labels() == std::vector<std::string>{"1", "1'"});
  CHECK(s.plus_labels() == std::vector<std::string>{"1"});
  CHECK(s.minus_labels() == std::vector<std::string>{"1'"});
  CHECK(y.restrict_to(g->labels()).set() == y.set());
  CHECK(y.restrict_to({}).ground().size() == 0);
}

TEST_CASE("canonical representative") {
  auto g = std::make_shared<const Ground>(std::vector<std::string>{"1", "2"});
  auto x = SignedVector::from_labels(g, {"2"}, {"1"});
  auto c = x.canonical();
  CHECK(c.plus_labels() == std::vector<std::string>{"1"});
  CHECK(c.minus_labels() == std::vector<std::string>{"2"});
  CHECK(c.canonical() == c);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    SignedSet s = random_set(rng, 10);
    CHECK(canonical_rep(s) == canonical_rep(s.negated()));
    CHECK((canonical_rep(s) == s || canonical_rep(s) == s.negated()));
  }
}

TEST_CASE("mismatched grounds and malformed input are rejected") {
  auto x = SignedVector::from_labels(abc(), {"a"}, {});
  auto y = SignedVector::from_labels(cross2(), {"1"}, {});
  CHECK_THROWS_AS(x.compose(y), Error);
  CHECK_THROWS_AS(x.orthogonal(y), Error);
  CHECK_THROWS_AS(SignedVector::from_labels(abc(), {"a"}, {"a"}), Error);
  CHECK_THROWS_AS(SignedVector::from_labels(abc(), {"z"}, {}), Error);
  CHECK_THROWS_AS(Ground(std::vector<std::string>{"a", "a"}), Error);
}

TEST_CASE("algebraic properties on random signed sets") {
  std::mt19937_64 rng(11);
  const std::size_t n = 12;
  for (int t = 0; t < 500; ++t) {
    SignedSet x = random_set(rng, n), y = random_set(rng, n), z = random_set(rng, n);
    Mask a = rng() & low_mask(n);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(orthogonal(x, y) == orthogonal(y, x));
    CHECK(orthogonal(x, y) == orthogonal(x, y.negated()));
    CHECK(orthogonal(reorient(x, a), reorient(y, a)) == orthogonal(x, y));
    CHECK(restrict_to(x, a).support() == compress_bits(x.support() & a, a));
  }
}

TEST_CASE("label grammar") {
  CHECK(labels::cube_vertex(3, 0b010) == "v+-+");
  auto v = labels::parse_cube_vertex("v+-+");
  REQUIRE(v.has_value());
  CHECK(v->n == 3);
  CHECK(v->a == 0b010);
  CHECK_FALSE(labels::parse_cube_vertex("v+x").has_value());
  CHECK(labels::parse_infinity("y12") == std::optional<std::size_t>(12));
  CHECK(labels::cross(2, true) == "2'");
  CHECK(labels::adjoint_ground(2) ==
        std::vector<std::string>{"y1", "y2", "v++", "v-+", "v+-", "v--"});
}
