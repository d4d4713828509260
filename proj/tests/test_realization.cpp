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

#include "omcube/errors.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/realization.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace omcube;

namespace {

Rational r(long p, long q = 1) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

PointConfig affine(std::vector<std::pair<std::string, Vec>> pts) {
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (auto& [l, v] : pts) {
    pc.labels.push_back(l);
    pc.coords.push_back(v);
  }
  return pc;
}

std::vector<oracle::Point> to_oracle(const PointConfig& pc) {
  std::vector<oracle::Point> out;
  for (std::size_t k = 0; k < pc.size(); ++k) out.push_back({pc.labels[k], pc.coords[k]});
  return out;
}

Matrix diag(std::size_t d, long s) {
  Matrix m = identity(d);
  for (std::size_t i = 0; i < d; ++i) m[i][i] = s;
  return m;
}

}  // namespace

TEST_CASE("oriented matroids of point configurations") {
  OrientedMatroid o = om_from_points(cross_points(2)).om;
  CHECK(o.reordered(cross_polytope(2).ground().labels()) == cross_polytope(2));
  CHECK(om_from_points(cube_points(2)).om == real_cube(2));
  PointConfig line = affine({{"a", {r(0)}}, {"b", {r(1)}}, {"c", {r(2)}}});
  Realized rl = om_from_points(line);
  REQUIRE(rl.om.circuits().size() == 1);
  CHECK(canonical_rep(support::make(rl.om.ground(), {"a", "c"}, {"b"})) == rl.om.circuits()[0]);
}

TEST_CASE("dependence witnesses multiply to zero") {
  for (const PointConfig& pc : {cube_points(3), cross_points(3), lifted_adjoint_vectors(2)}) {
    Realized rz = om_from_points(pc);
    REQUIRE(rz.witnesses.size() == rz.om.circuits().size());
    const bool lift = pc.mode == PointMode::kAffine;
    for (std::size_t k = 0; k < rz.witnesses.size(); ++k) {
      const auto& w = rz.witnesses[k];
      REQUIRE(w.size() == pc.size());
      std::vector<Rational> sum(pc.dim() + (lift ? 1 : 0), Rational(0));
      for (std::size_t e = 0; e < pc.size(); ++e) {
        for (std::size_t j = 0; j < pc.dim(); ++j) sum[j] += Rational(w[e]) * pc.coords[e][j];
        if (lift) sum.back() += Rational(w[e]);
        CHECK(sign(w[e]) == rz.om.circuits()[k].sign(e));
      }
      for (const auto& s : sum) CHECK(s == 0);
    }
  }
}

TEST_CASE("parallel points are reported") {
  PointConfig pc = affine({{"a", {r(0), r(0)}}, {"b", {r(0), r(0)}}, {"c", {r(1), r(0)}}});
  Realized rz = om_from_points(pc);
  REQUIRE(rz.parallel.size() == 1);
  CHECK(rz.parallel[0] == std::make_pair(std::string("a"), std::string("b")));
}

TEST_CASE("chirotope") {
  PointConfig tri = affine({{"a", {r(0), r(0)}}, {"b", {r(1), r(0)}}, {"c", {r(0), r(1)}}});
  int rank = 0;
  Chirotope chi = chirotope(tri, &rank);
  CHECK(rank == 3);
  CHECK(chi.at(0b111) != 0);
  // Zero sets of the chirotope are exactly the dependent r-subsets.
  for (const PointConfig& pc : {cube_points(3), lifted_adjoint_vectors(2)}) {
    Chirotope c = chirotope(pc, &rank);
    auto pts = to_oracle(pc);
    for (const auto& [basis, s] : c) {
      std::vector<std::vector<oracle::Q>> m;
      for_each_bit(basis, [&](std::size_t e) {
        auto x = pts[e].coords;
        if (pc.mode == PointMode::kAffine) x.push_back(1);
        m.push_back(x);
      });
      CHECK((s != 0) == (oracle::rank_of(m) == static_cast<std::size_t>(rank)));
    }
  }
}

TEST_CASE("barycentric representation of the canonical adjoint") {
  PointConfig pc = barycentric_adjoint(2, standard_simplex(2));
  CHECK(pc.at("v-+") == Vec{r(0), r(1, 2)});
  CHECK(pc.at("v--") == Vec{r(0), r(0)});
  CHECK(pc.at("y1") == Vec{r(1), r(0)});
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    // Barycenters computed here: X_A' -> (sum_{j not in A} e_j) / (n - |A| + 1).
    std::vector<oracle::Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Point p{"y" + std::to_string(i + 1), std::vector<oracle::Q>(n, 0)};
      p.coords[i] = 1;
      pts.push_back(p);
    }
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
      oracle::Point p{labels::cube_vertex(n, a), std::vector<oracle::Q>(n, 0)};
      const long m = static_cast<long>(n) - std::popcount(a);
      for (std::size_t j = 0; j < n; ++j) {
        if (!((a >> j) & 1)) p.coords[j] = oracle::q(1, m + 1);
      }
      pts.push_back(p);
    }
    auto ref = oracle::from_points(pts, true);
    CHECK(support::matches(canonical_adjoint(n), ref));
    CHECK(support::matches(om_from_points(barycentric_adjoint(n, standard_simplex(n))).om, ref));
  }
}

TEST_CASE("interior-point representation") {
  PointConfig simplex = standard_simplex(2);
  PointConfig pc = interior_point_adjoint(2, simplex, Vec{r(1, 4), r(1, 4)});
  CHECK(pc.at("v-+") == Vec{r(0), r(1, 3)});
  CHECK(pc.at("v+-") == Vec{r(1, 3), r(0)});
  CHECK(pc.at("v++") == Vec{r(1, 4), r(1, 4)});
  CHECK(pc.at("v--") == Vec{r(0), r(0)});
  CHECK(om_from_points(pc).om.reordered(labels::adjoint_ground(2)) == canonical_adjoint(2));
  for (std::size_t n : {2, 3}) {
    Vec bary(n, r(1, static_cast<long>(n) + 1));
    PointConfig a = interior_point_adjoint(n, standard_simplex(n), bary);
    PointConfig b = barycentric_adjoint(n, standard_simplex(n));
    for (const auto& l : labels::adjoint_ground(n)) CHECK(a.at(l) == b.at(l));
  }
  CHECK_THROWS_AS(interior_point_adjoint(2, simplex, Vec{r(1), r(0)}), Error);
  CHECK_THROWS_AS(interior_point_adjoint(2, simplex, Vec{r(1), r(1)}), Error);
}

TEST_CASE("projective maps") {
  const PointConfig c3 = cube_points(3);
  ProjectiveImage same = projective_map(c3, identity(4));
  CHECK(same.config.coords == c3.coords);
  ProjectiveImage scaled = projective_map(c3, diag(4, 2));
  CHECK(om_from_points(scaled.config).om == real_cube(3));
  Matrix m{{r(1), r(0), r(0), r(0)},
           {r(0), r(2), r(1, 3), r(0)},
           {r(0), r(0), r(1), r(1)},
           {r(1, 5), r(1, 7), r(-1, 3), r(2)}};
  ProjectiveImage img = projective_map(c3, m);
  CHECK(support::matches(om_from_points(img.config).om,
                         oracle::from_points(oracle::cube(3), true)));
  Matrix singular(4, Vec(4, r(0)));
  CHECK_THROWS_AS(projective_map(c3, singular), Error);
  Matrix to_infinity = identity(4);
  to_infinity[3] = {r(1), r(0), r(0), r(1)};  // x_1 = -1 goes to infinity
  CHECK_THROWS_AS(projective_map(c3, to_infinity), Error);
}

TEST_CASE("centers") {
  for (std::size_t n : {2, 3, 4}) CHECK(center(cube_points(n)) == Vec(n, r(0)));
  PointConfig bad = affine({{"v++", {r(0), r(0)}}, {"v-+", {r(0), r(1)}},
                            {"v+-", {r(1), r(1)}}, {"v--", {r(1), r(0)}}});
  CHECK_THROWS_AS(center(bad), Error);
  PointConfig skew = cube_points(3);
  skew.coords[0] = {r(1), r(1), r(2)};
  CHECK_THROWS_AS(center(skew), Error);
}

TEST_CASE("facet centers form a polar cross-polytope") {
  PolarCenters p = facet_centers_polar(cube_points(3));
  for (std::size_t i = 0; i < 3; ++i) {
    Vec e(3, r(0));
    e[i] = 1;
    CHECK(p.plus[i] == e);
    e[i] = -1;
    CHECK(p.minus[i] == e);
  }
  CHECK(find_isomorphism(p.om, cross_polytope(3)).has_value());
  CHECK_THROWS_AS(facet_centers_polar(cube_points(2)), Error);
}

TEST_CASE("edge meeting points") {
  for (std::size_t n : {2, 3}) {
    for (std::size_t i = 1; i <= n; ++i) {
      Vec p = edge_meeting_point(cube_points(n), i);
      REQUIRE(p.size() == n + 1);
      CHECK(p.back() == 0);
      for (std::size_t j = 0; j < n; ++j) CHECK(sign(p[j]) == (j + 1 == i ? 1 : 0));
      CHECK(projectively_equal(p, meeting_point_via_center(cube_points(n), i)));
    }
  }
  PointConfig skew = cube_points(3);
  skew.coords[1] = {r(-1), r(1), r(3, 2)};
  CHECK_THROWS_AS(edge_meeting_point(skew, 1), Error);
}

TEST_CASE("adjoint realization from a cube") {
  for (std::size_t n : {2, 3}) {
    PointConfig lifted = adjoint_realization_from_cube(cube_points(n));
    PointConfig ref = lifted_adjoint_vectors(n);
    for (const auto& l : ref.labels) CHECK(projectively_equal(lifted.at(l), ref.at(l)));
    CHECK(om_from_points(lifted).om.reordered(labels::adjoint_ground(n)) == canonical_adjoint(n));
  }
}

TEST_CASE("separating transform sends the center to an interior point") {
  SeparatingTransform st = separating_transform(cube_points(3), 2);
  CHECK(st.image.flipped.empty() == false);
  CHECK(st.matrix.size() == 4);
}
