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


// Acceptance run: one line per criterion with its verdict and timing. Every
// criterion compares library output with values computed here from exact
// point coordinates (tests/oracle.hpp) or from explicit label constructions.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omcube/errors.hpp"
#include "omcube/extensions.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/realization.hpp"
#include "omcube/search.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace omcube;

namespace {

struct Failure {
  std::string what;
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw Failure{what};
}

std::string str(std::size_t n) { return std::to_string(n); }

// ---------------------------------------------------------------------------
// Independent helpers.

oracle::Labels in_order(const oracle::Labels& ground, const std::set<std::string>& members) {
  oracle::Labels out;
  for (const auto& l : ground) {
    if (members.count(l)) out.push_back(l);
  }
  return out;
}

// Cocircuits of O_n written down from their definition: Y_i = ({i},{i'}) and
// X_A' = (([n]-A) + A', {}).
oracle::Family cross_cocircuits_by_definition(std::size_t n) {
  oracle::Labels ground;
  for (std::size_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i) + "'");
  oracle::Family out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.insert(oracle::canonical({{std::to_string(i)}, {std::to_string(i) + "'"}}));
  }
  for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
    std::set<std::string> plus;
    for (std::size_t i = 1; i <= n; ++i) {
      plus.insert(std::to_string(i) + (((a >> (i - 1)) & 1) ? "'" : ""));
    }
    out.insert(oracle::canonical({in_order(ground, plus), {}}));
  }
  return out;
}

// Sign of label l in a signed label set.
int sign_in(const oracle::Signed& s, const std::string& l) {
  if (std::find(s.first.begin(), s.first.end(), l) != s.first.end()) return 1;
  if (std::find(s.second.begin(), s.second.end(), l) != s.second.end()) return -1;
  return 0;
}

bool orthogonal(const oracle::Signed& c, const oracle::Signed& d, const oracle::Labels& ground) {
  bool pos = false, neg = false, meet = false;
  for (const auto& l : ground) {
    int p = sign_in(c, l) * sign_in(d, l);
    if (p != 0) meet = true;
    if (p > 0) pos = true;
    if (p < 0) neg = true;
  }
  return !meet || (pos && neg);
}

// Full product of circuits against cocircuits, both signs, on raw masks.
bool full_orthogonality(const OrientedMatroid& om) {
  for (const auto& c : om.circuits()) {
    for (const auto& d : om.cocircuits()) {
      const Mask same = (c.plus & d.plus) | (c.minus & d.minus);
      const Mask opposite = (c.plus & d.minus) | (c.minus & d.plus);
      if ((same | opposite) != 0 && (same == 0 || opposite == 0)) return false;
    }
  }
  return true;
}

std::vector<oracle::Point> cube_with_infinity(std::size_t n, const std::vector<std::size_t>& axes) {
  std::vector<oracle::Point> pts;
  for (auto p : oracle::cube(n)) {
    p.coords.push_back(1);
    pts.push_back(p);
  }
  for (std::size_t i : axes) {
    oracle::Point y{"y" + std::to_string(i), std::vector<oracle::Q>(n + 1, 0)};
    y.coords[i - 1] = 1;
    pts.push_back(y);
  }
  return pts;
}

std::vector<oracle::Point> to_points(const PointConfig& pc) {
  std::vector<oracle::Point> out;
  for (std::size_t k = 0; k < pc.size(); ++k) out.push_back({pc.labels[k], pc.coords[k]});
  return out;
}

bool same_families(const oracle::OM& a, const oracle::OM& b) {
  return a.rank == b.rank && a.circuits == b.circuits && a.cocircuits == b.cocircuits;
}

// Is p = (1 - t) a + t b for some 0 < t < 1?
bool strictly_between(const Vec& p, const Vec& a, const Vec& b) {
  std::optional<Rational> t;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (a[j] != b[j]) {
      t = (p[j] - a[j]) / (b[j] - a[j]);
      break;
    }
  }
  if (!t || *t <= 0 || *t >= 1) return false;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] != (1 - *t) * a[j] + *t * b[j]) return false;
  }
  return true;
}

Mask vertex_bit(std::size_t a) { return Mask{1} << a; }

// ---------------------------------------------------------------------------
// Criteria.

std::string generators_conform() {
  std::ostringstream msg;
  for (std::size_t n = 2; n <= 5; ++n) {
    const OrientedMatroid o = cross_polytope(n);
    const auto ref = oracle::from_points(oracle::cross(n), true);
    const auto fam = support::families(o, ref.ground);
    expect(fam.cocircuits == cross_cocircuits_by_definition(n), "n=" + str(n) + ": cocircuits differ from the definition");
    expect(fam.cocircuits == ref.cocircuits, "n=" + str(n) + ": cocircuits differ from the realization");
    expect(2 * o.cocircuits().size() == 2 * ((std::size_t{1} << n) + n), "n=" + str(n) + ": cocircuit count");
    expect(fam.circuits == ref.circuits, "n=" + str(n) + ": circuits differ from the realization");
    for (const auto& c : ref.circuits) {
      const std::string i = c.first[0];
      expect(c.first.size() == 2 && c.second.size() == 2 && c.first[1] == i + "'",
             "n=" + str(n) + ": a circuit is not ({i,i'},{j,j'})");
    }
    CrossPolytopeReport rep = cross_polytope_report(n);
    expect(!rep.alternative_orthogonal && !rep.note.empty(), "n=" + str(n) + ": sign discrepancy not flagged");
    // The discrepancy itself: ({1,2},{1',2'}) against Y_1.
    expect(!orthogonal({{"1", "2"}, {"1'", "2'"}}, {{"1"}, {"1'"}}, ref.ground),
           "the alternative signing is orthogonal");
    if (n == 5) msg << "n=2..5; n=5: " << 2 * o.cocircuits().size() << " signed cocircuits, " << o.circuits().size()
                    << " circuits; ({i,j},{i',j'}) flagged";
  }
  return msg.str();
}

std::string adjoint_coherence() {
  std::mt19937_64 rng(20260101);
  std::size_t constructions = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto ground = labels::adjoint_ground(n);
    const auto ref = oracle::from_points(oracle::lifted_adjoint(n), false);
    auto check = [&](const OrientedMatroid& om, const std::string& name) {
      expect(support::matches(om, ref), "n=" + str(n) + ": " + name + " differs from Lin(V~)");
      ++constructions;
    };
    check(canonical_adjoint(n), "generator");
    check(om_from_points(lifted_adjoint_vectors(n)).om, "lifted vectors");
    const PointConfig simplex = standard_simplex(n);
    const PointConfig bary = barycentric_adjoint(n, simplex);
    check(om_from_points(bary).om, "barycentric");
    // Barycenters recomputed here: X_A' -> (sum_{j not in A} e_j) / (n - |A| + 1).
    std::vector<oracle::Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      oracle::Point p{"y" + str(i + 1), std::vector<oracle::Q>(n, 0)};
      p.coords[i] = 1;
      pts.push_back(p);
    }
    for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
      oracle::Point p{labels::cube_vertex(n, a), std::vector<oracle::Q>(n, 0)};
      const long m = static_cast<long>(n) - std::popcount(a);
      for (std::size_t j = 0; j < n; ++j) {
        if (!((a >> j) & 1)) p.coords[j] = oracle::q(1, m + 1);
      }
      expect(bary.at(p.label) == p.coords, "n=" + str(n) + ": barycentric point " + p.label);
      pts.push_back(p);
    }
    expect(same_families(oracle::from_points(pts, true), ref), "n=" + str(n) + ": barycentric oracle");
    std::set<Vec> used;
    while (used.size() < 3) {
      // c_i = k_i / D with k_i >= 1 and sum k_i < D.
      const long d = 5 * static_cast<long>(n) + std::uniform_int_distribution<long>(1, 20)(rng);
      Vec c;
      long total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        long k = std::uniform_int_distribution<long>(1, (d - 1) / static_cast<long>(n))(rng);
        total += k;
        c.push_back(Rational(k, d));
        c.back().canonicalize();
      }
      if (total >= d || !used.insert(c).second) continue;
      const PointConfig f = interior_point_adjoint(n, simplex, c);
      check(om_from_points(f).om, "f_c");
    }
  }
  return "n=2..4, " + str(constructions) + " constructions (generator, Lin(V~), barycentric, 3 random f_c each) agree";
}

std::string adjoint_properties() {
  std::size_t circuits = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const OrientedMatroid a = canonical_adjoint(n);
    const auto ref = oracle::from_points(oracle::lifted_adjoint(n), false);
    const std::string tag = "n=" + str(n) + ": ";
    const Ground& g = a.ground();
    auto y = [&](std::size_t i) { return labels::infinity(i); };
    auto v = [&](std::size_t set) { return labels::cube_vertex(n, set); };
    // (1) circuits ({Y_i, X_(A+i)'}, {X_A'}).
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
        if ((s >> (i - 1)) & 1) continue;
        oracle::Signed c{in_order(ref.ground, {y(i), v(s | (std::size_t{1} << (i - 1)))}), {v(s)}};
        expect(ref.circuits.count(oracle::canonical(c)) == 1, tag + "oracle lacks a circuit");
        expect(a.has_circuit(canonical_rep(support::make(g, c.first, c.second))), tag + "circuit C~(i,A) missing");
        ++circuits;
      }
    }
    // (2) acyclic simplex with facets Y~ and X~[i]^0.
    expect(a.is_acyclic(), tag + "not acyclic");
    FaceLattice lat = lv_face_lattice(a);
    std::vector<Mask> vertices;
    for (std::size_t i = 1; i <= n; ++i) vertices.push_back(g.mask_of({y(i)}));
    vertices.push_back(g.mask_of({v((std::size_t{1} << n) - 1)}));
    std::sort(vertices.begin(), vertices.end());
    auto got = lat.vertices;
    std::sort(got.begin(), got.end());
    expect(got == vertices, tag + "vertices are not Y_1..Y_n, X_[n]'");
    expect(is_simplex_lattice(lat), tag + "the face lattice is not a simplex");
    std::vector<std::string> ys;
    for (std::size_t i = 1; i <= n; ++i) ys.push_back(y(i));
    std::vector<Mask> facets{g.mask_of(ys)};
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<std::string> zero;  // X_(A+i)' and Y~ - Y_i
      for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
        if ((s >> (i - 1)) & 1) zero.push_back(v(s));
      }
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != i) zero.push_back(y(j));
      }
      facets.push_back(g.mask_of(zero));
    }
    std::sort(facets.begin(), facets.end());
    auto lf = lat.facets;
    std::sort(lf.begin(), lf.end());
    expect(lf == facets, tag + "facets are not Y~ and X~[i]^0");
    std::vector<std::string> xs;
    for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) xs.push_back(v(s));
    const SignedSet x0 = support::make(g, xs, {});
    const auto pos = a.positive_cocircuits();
    expect(std::find(pos.begin(), pos.end(), x0) != pos.end(), tag + "X~[0] is not a positive cocircuit");
    // (3) extension of O_n by X~[0].
    const OrientedMatroid o = cross_polytope(n);
    std::vector<std::int8_t> sigma;
    for (std::size_t k = 0; k < g.size(); ++k) sigma.push_back(static_cast<std::int8_t>(x0.sign(k)));
    Localization loc = make_localization(o, cross_polytope_half_family(n), sigma);
    expect(check_localization(loc).ok(), tag + "X~[0] is not a localization");
    OrientedMatroid ext = extend(loc, "0");
    auto zero_pts = oracle::cross(n);
    zero_pts.push_back({"0", std::vector<oracle::Q>(n, 0)});
    const auto zref = oracle::from_points(zero_pts, true);
    expect(support::matches(ext, zref), tag + "O_n + 0 differs from the realization");
    const std::size_t h = (std::size_t{1} << n) + n;
    expect(ext.hyperplanes().size() == h && zref.hyperplanes.size() == h && o.hyperplanes().size() == h,
           tag + "hyperplane count");
    expect(2 * ext.cocircuits().size() == 2 * h && o.cocircuits().size() == h, tag + "signed cocircuit count");
    // (4) contractions and facet restrictions.
    const OrientedMatroid smaller = cross_polytope_plus_zero(n - 1);
    const auto oref = oracle::from_points(oracle::cross(n), true);
    for (std::size_t i = 1; i <= n; ++i) {
      for (bool primed : {false, true}) {
        const std::string e = labels::cross(i, primed);
        OrientedMatroid m = o.contract(o.ground().mask_of({e}));
        // Cocircuits of O_n/e: those of O_n vanishing on e.
        oracle::Family want;
        for (const auto& d : oref.cocircuits) {
          if (sign_in(d, e) == 0) want.insert(d);
        }
        oracle::Labels rest;
        for (const auto& l : oref.ground) {
          if (l != e) rest.push_back(l);
        }
        expect(support::families(m, rest).cocircuits == want, tag + "O_n/" + e + " cocircuits");
        expect(find_isomorphism(m, smaller).has_value(), tag + "O_n/" + e + " is not O_{n-1} + 0");
        OrientedMatroid r = adjoint_facet_restriction(a, n, i, primed);
        expect(is_adjoint(r, n - 1, AdjointMode::kWeak), tag + "restriction to H~_" + e + " is not an adjoint");
      }
    }
  }
  return "n=2..4; " + str(circuits) + " circuits C~(i,A), simplex face lattices, O_n + 0 counts, 2n contractions each";
}

std::string correspondence() {
  std::size_t orders = 0;
  for (std::size_t n : {2, 3}) {
    const std::string tag = "n=" + str(n) + ": ";
    const OrientedMatroid a = canonical_adjoint(n);
    const OrientedMatroid q = real_cube(n);
    const auto aref = oracle::from_points(oracle::lifted_adjoint(n), false);
    const auto qref = oracle::from_points(oracle::cube(n), true);
    OrientedMatroid c = adjoint_to_cube(a);
    expect(is_oriented_cube(c), tag + "adjoint_to_cube is not an oriented cube");
    expect(support::matches(c, qref), tag + "adjoint_to_cube differs from Q_n");
    expect(find_isomorphism(c, q).has_value(), tag + "adjoint_to_cube is not isomorphic to Q_n");
    OrientedMatroid b = cube_to_adjoint(q);
    expect(support::matches(b, aref), tag + "cube_to_adjoint differs from the canonical adjoint");
    expect(find_isomorphism(b, a).has_value(), tag + "cube_to_adjoint is not isomorphic");
    expect(adjoint_to_cube(b) == q, tag + "adjoint_to_cube . cube_to_adjoint is not the identity");
    expect(cube_to_adjoint(c) == a, tag + "cube_to_adjoint . adjoint_to_cube is not the identity");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    do {
      expect(support::matches(cube_to_adjoint(q, order), aref), tag + "extension order matters");
      ++orders;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return "n=2,3; roundtrips are identities; " + str(orders) + " extension orders agree (all 6 at n=3)";
}

std::string flats_and_infinity() {
  std::size_t pairs = 0, parallel = 0, circuits = 0;
  for (std::size_t n : {2, 3}) {
    const std::string tag = "n=" + str(n) + ": ";
    const OrientedMatroid q = real_cube(n);
    for (Mask f : q.flats()) {
      for (std::size_t i = 1; i <= n; ++i) {
        // Mirror image under v -> v with coordinate i reversed.
        Mask g = 0;
        for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
          if (f & vertex_bit(s)) g |= vertex_bit(s ^ (std::size_t{1} << (i - 1)));
        }
        expect(f == g || (f & g) == 0, tag + "a flat meets its mirror image");
        FlatClass cls;
        try {
          cls = classify_flat(q, f, i);
        } catch (const Error& e) {
          throw Failure{tag + "third case: " + e.what()};
        }
        expect((cls == FlatClass::kParallel) == (f == g), tag + "classification disagrees");
        ++pairs;
        parallel += cls == FlatClass::kParallel;
      }
    }
    const auto qref = oracle::from_points(oracle::cube(n), true);
    for (std::size_t i = 1; i <= n; ++i) {
      const std::string ti = tag + "axis " + str(i) + ": ";
      LocalizationReport lr = check_localization(infinity_localization(q, i));
      expect(lr.triplets_ok && lr.cyclic_ok, ti + "not a localization");
      OrientedMatroid e = extend_by_infinity(q, i);
      const auto eref = oracle::from_points(cube_with_infinity(n, {i}), false);
      expect(support::matches(e, eref), ti + "extension differs from the realization");
      expect(e.hyperplanes().size() == q.hyperplanes().size() && eref.hyperplanes.size() == qref.hyperplanes.size(),
             ti + "hyperplane count changed");
      expect(e.cocircuits().size() == q.cocircuits().size() && eref.cocircuits.size() == qref.cocircuits.size(),
             ti + "cocircuit count changed");
      for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
        if ((s >> (i - 1)) & 1) continue;  // v in H_i+
        const std::string mirrored = labels::cube_vertex(n, s | (std::size_t{1} << (i - 1)));
        oracle::Signed c{in_order(eref.ground, {mirrored, labels::infinity(i)}), {labels::cube_vertex(n, s)}};
        expect(eref.circuits.count(oracle::canonical(c)) == 1, ti + "oracle lacks the circuit");
        expect(e.has_circuit(canonical_rep(support::make(e.ground(), c.first, c.second))), ti + "circuit missing");
        ++circuits;
      }
    }
  }
  return "n=2,3; " + str(pairs) + " (flat, axis) pairs, " + str(parallel) + " parallel, 0 third-case; " + str(circuits) +
         " circuits ({-i v, y_i},{v}); counts preserved";
}

std::string search_uniqueness() {
  SearchOptions o;
  o.n = 2;
  o.strategy = SearchStrategy::kExhaustive;
  o.threads = 1;
  o.kind = SearchKind::kCubes;
  SearchReport cubes = run_search(o);
  expect(cubes.complete, "cube search not proved exhaustive");
  expect(cubes.isomorphism_classes() == 1, "cube search: " + str(cubes.isomorphism_classes()) + " classes");
  expect(find_isomorphism(cubes.classes[0].om, real_cube(2), true).has_value(), "cube class is not Q_2");
  expect(is_oriented_cube(cubes.classes[0].om), "cube class fails the cube check");
  o.kind = SearchKind::kAdjoints;
  SearchReport adj = run_search(o);
  expect(adj.complete, "adjoint search not proved exhaustive");
  expect(adj.isomorphism_classes() == 1, "adjoint search: " + str(adj.isomorphism_classes()) + " classes");
  expect(find_isomorphism(adj.classes[0].om, canonical_adjoint(2), true).has_value(),
         "adjoint class is not the canonical adjoint");
  expect(is_adjoint(adj.classes[0].om, 2, AdjointMode::kWeak), "adjoint class fails the adjoint check");
  return "proved-exhaustive; cubes: 1 class (" + str(cubes.candidates_examined) + " candidates), adjoints: 1 class (" +
         str(adj.candidates_examined) + " candidates)";
}

Matrix random_admissible(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    Matrix m(4, Vec(4));
    Rational total = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        m[r][c] = Rational(num(rng), den(rng));
        m[r][c].canonicalize();
      }
    }
    for (std::size_t c = 0; c < 3; ++c) total += abs(m[3][c]);
    m[3][3] = total + Rational(1 + std::abs(num(rng)), den(rng));
    m[3][3].canonicalize();
    std::vector<std::vector<oracle::Q>> om(m.begin(), m.end());
    if (oracle::det(om) != 0) return m;
  }
}

std::string realization_experiments() {
  const std::size_t n = 3, transforms = 24;
  std::mt19937_64 rng(7);
  const auto qref = oracle::from_points(oracle::cube(n), true);
  const auto aref = oracle::from_points(oracle::lifted_adjoint(n), false);
  const auto cref = oracle::from_points(oracle::cross(n), true);
  const PointConfig cube = cube_points(n);
  for (std::size_t t = 0; t < transforms; ++t) {
    const std::string tag = "transform " + str(t) + ": ";
    const Matrix m = random_admissible(rng);
    // Image computed here: (x, 1) -> M (x, 1), then dehomogenized.
    std::vector<oracle::Point> image;
    for (std::size_t k = 0; k < cube.size(); ++k) {
      Vec x = cube.coords[k];
      x.push_back(1);
      Vec y(4, Rational(0));
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) y[r] += m[r][c] * x[c];
      }
      expect(y[3] > 0, tag + "not admissible");
      Vec p{y[0] / y[3], y[1] / y[3], y[2] / y[3]};
      image.push_back({cube.labels[k], p});
    }
    const PointConfig pc = projective_map(cube, m).config;
    for (const auto& p : image) expect(pc.at(p.label) == p.coords, tag + "projective image differs");
    expect(same_families(oracle::from_points(image, true), qref), tag + "image is not Q_3 (oracle)");
    const OrientedMatroid om = om_from_points(pc).om;
    expect(support::matches(om, qref), tag + "om_from_points differs from Q_3");
    expect(find_isomorphism(om, real_cube(n)).has_value(), tag + "not isomorphic to Q_3");
    // Center on all 4 diagonals.
    const Vec o = center(pc);
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t s = 0; s < (std::size_t{1} << (n - 1)); ++s) {
      expect(strictly_between(o, image[s].coords, image[full ^ s].coords), tag + "diagonals are not concurrent");
    }
    // Facet centers on the facet diagonals, O between opposite centers.
    PolarCenters polar = facet_centers_polar(pc);
    std::vector<oracle::Point> centers(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (bool plus : {true, false}) {
        const Vec& f = plus ? polar.plus[i] : polar.minus[i];
        std::vector<std::size_t> verts;
        for (std::size_t s = 0; s <= full; ++s) {
          if (((s >> i) & 1) == (plus ? 0u : 1u)) verts.push_back(s);
        }
        const std::size_t other = full ^ (std::size_t{1} << i);
        for (std::size_t s : verts) {
          expect(strictly_between(f, image[s].coords, image[s ^ other].coords), tag + "facet center off a diagonal");
        }
        centers[plus ? i : n + i] = {labels::cross(i + 1, !plus), f};
      }
      expect(strictly_between(o, polar.plus[i], polar.minus[i]), tag + "O not inside O_i+ O_i-");
    }
    expect(same_families(oracle::from_points(centers, true), cref), tag + "facet centers are not O_3 (oracle)");
    expect(find_isomorphism(polar.om, cross_polytope(n)).has_value(), tag + "polar is not isomorphic to O_3");
    // Adjoint realization: y_i on every edge line of direction i.
    const PointConfig adj = adjoint_realization_from_cube(pc);
    for (std::size_t i = 1; i <= n; ++i) {
      const Vec yi = adj.at(labels::infinity(i));
      for (std::size_t s = 0; s <= full; ++s) {
        Vec a = image[s].coords, b = image[s ^ (std::size_t{1} << (i - 1))].coords;
        a.push_back(1);
        b.push_back(1);
        expect(oracle::rank_of({a, b, std::vector<oracle::Q>(yi.begin(), yi.end())}) == 2,
               tag + "y_" + str(i) + " off an edge line");
      }
    }
    expect(same_families(oracle::from_points(to_points(adj), false), aref), tag + "adjoint realization (oracle)");
    const OrientedMatroid aom = om_from_points(adj).om;
    expect(find_isomorphism(aom, canonical_adjoint(n)).has_value(), tag + "adjoint realization not isomorphic");
  }
  return str(transforms) + " random admissible rational transforms of C^3: Q_3, concurrent diagonals, polar O_3, adjoint";
}

std::string covector_localizations() {
  // n = 2: covectors closed under composition from the oracle's cocircuits.
  const auto ref = oracle::from_points(oracle::lifted_adjoint(2), false);
  const std::size_t m = ref.ground.size();
  std::set<std::vector<int>> cov{std::vector<int>(m, 0)};
  std::vector<std::vector<int>> cocircuits;
  for (const auto& d : ref.cocircuits) {
    std::vector<int> x(m);
    for (std::size_t k = 0; k < m; ++k) x[k] = sign_in(d, ref.ground[k]);
    cocircuits.push_back(x);
    for (auto& s : x) s = -s;
    cocircuits.push_back(x);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> now(cov.begin(), cov.end());
    for (const auto& x : now) {
      for (const auto& d : cocircuits) {
        std::vector<int> y = x;
        for (std::size_t k = 0; k < m; ++k) {
          if (y[k] == 0) y[k] = d[k];
        }
        grew |= cov.insert(y).second;
      }
    }
  }
  const OrientedMatroid a = canonical_adjoint(2);
  expect(a.covectors().size() == cov.size(), "covector count " + str(a.covectors().size()) + " vs " + str(cov.size()));
  const OrientedMatroid o2 = cross_polytope(2);
  const auto half = cross_polytope_half_family(2);
  for (const auto& x : cov) {
    std::vector<std::int8_t> sigma(x.begin(), x.end());
    Localization loc = make_localization(o2, half, sigma);
    LocalizationReport rep = check_localization(loc);
    expect(rep.triplets_ok && rep.cyclic_ok, "covector " + loc.sigma_string() + " is not a localization");
    if (std::all_of(x.begin(), x.end(), [](int s) { return s == 0; })) continue;
    OrientedMatroid ext = extend(loc, "p");
    expect(full_orthogonality(ext) && validate_circuit_axioms(ext.ground(), ext.circuits()).empty(),
           "extension by " + loc.sigma_string() + " is not an oriented matroid");
    expect(ext.deletion(bit(ext.size() - 1)) == o2, "deleting p does not give O_2");
  }
  CovectorCheckReport all = covector_localization_check(a, 2, CovectorScope::kAll);
  expect(all.ok() && all.checked == cov.size(), "library covector check at n=2");
  CovectorCheckReport three = covector_localization_check(canonical_adjoint(3), 3, CovectorScope::kCocircuitsAndPrincipal);
  expect(three.ok(), "n=3: " + str(three.failures.size()) + " failures");
  // Negative control: a reoriented element breaks the statement.
  CovectorCheckReport bad = covector_localization_check(a.reoriented(bit(2)), 2, CovectorScope::kAll);
  expect(!bad.ok(), "a corrupted adjoint passes");
  return "n=2: all " + str(cov.size()) + " covectors; n=3: " + str(three.checked) +
         " cocircuits and principal covectors; corrupted control fails";
}

std::string axioms_everywhere() {
  std::vector<std::pair<std::string, OrientedMatroid>> all;
  for (std::size_t n = 1; n <= 4; ++n) all.push_back({"O_" + str(n) + "+0", cross_polytope_plus_zero(n)});
  for (std::size_t n = 2; n <= 5; ++n) all.push_back({"O_" + str(n), cross_polytope(n)});
  for (std::size_t n = 2; n <= 4; ++n) {
    const OrientedMatroid q = real_cube(n);
    all.push_back({"Q_" + str(n), q});
    all.push_back({"A_" + str(n), canonical_adjoint(n)});
    all.push_back({"Q_" + str(n) + " reoriented", reorient_facet(q, 1)});
    if (n <= 3) {
      all.push_back({"Q_" + str(n) + "+y1", extend_by_infinity(q, 1)});
      all.push_back({"cube_to_adjoint(Q_" + str(n) + ")", cube_to_adjoint(q)});
      all.push_back({"O_" + str(n) + "/1", cross_polytope(n).contract(1)});
      all.push_back({"A_" + str(n) + " restricted", adjoint_facet_restriction(canonical_adjoint(n), n, 1, false)});
    }
  }
  std::mt19937_64 rng(11);
  for (std::size_t t = 0; t < 3; ++t) {
    all.push_back({"projective image " + str(t), om_from_points(projective_map(cube_points(3), random_admissible(rng)).config).om});
  }
  std::size_t pairs = 0;
  for (const auto& [name, om] : all) {
    expect(full_orthogonality(om), name + ": a circuit is not orthogonal to a cocircuit");
    auto v = validate_circuit_axioms(om.ground(), om.circuits());
    expect(v.empty(), name + ": " + (v.empty() ? "" : v[0].kind + " " + v[0].detail));
    pairs += om.circuits().size() * om.cocircuits().size();
  }
  return str(all.size()) + " oriented matroids, " + str(pairs) + " circuit/cocircuit pairs, no axiom violations";
}

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds, 0 for none
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "generator conformance", 5, generators_conform},
      {2, "canonical adjoint coherence", 30, adjoint_coherence},
      {3, "canonical adjoint properties", 0, adjoint_properties},
      {4, "cube/adjoint correspondence", 120, correspondence},
      {5, "flat dichotomy and points at infinity", 0, flats_and_infinity},
      {6, "exhaustive uniqueness at n=2", 60, search_uniqueness},
      {7, "realization experiments", 120, realization_experiments},
      {8, "covectors of the adjoint are localizations", 0, covector_localizations},
      {9, "orthogonality and circuit axioms", 0, axioms_everywhere},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit > 0 && secs > c.limit) {
      ok = false;
      detail += "; over the time limit";
    }
    failed += ok ? 0 : 1;
    char timing[64];
    if (c.limit > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::printf("%s criterion %d (%s): %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str(),
                timing);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
