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


#include "omcube/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "omcube/errors.hpp"
#include "omcube/extensions.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/realization.hpp"
#include "omcube/search.hpp"

namespace omcube {
namespace {

struct ClaimFailure {
  std::string message;
};

void check(bool condition, const std::string& message) {
  if (!condition) throw ClaimFailure{message};
}

std::string show(const Ground& g, const SignedSet& x) {
  std::string s = "({";
  auto join = [&](Mask m) {
    std::string out;
    for (const auto& l : g.labels_of(m)) out += (out.empty() ? "" : ",") + l;
    return out;
  };
  return s + join(x.plus) + "},{" + join(x.minus) + "})";
}

std::string show_mask(const Ground& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : g.labels_of(m)) {
    out += (first ? "" : ",") + l;
    first = false;
  }
  return out + "}";
}

std::size_t pow2(std::size_t n) { return std::size_t{1} << n; }

// Lazily built fixtures shared by the claims of one run.
class Fixtures {
 public:
  explicit Fixtures(std::size_t n) : n_(n) {}
  std::size_t n() const { return n_; }
  const OrientedMatroid& cross() { return get(cross_, [&] { return cross_polytope(n_); }); }
  const OrientedMatroid& cube() { return get(cube_, [&] { return real_cube(n_); }); }
  const OrientedMatroid& adjoint() { return get(adjoint_, [&] { return canonical_adjoint(n_); }); }
  const OrientedMatroid& cross_zero() {
    return get(cross_zero_, [&] { return cross_polytope_plus_zero(n_); });
  }

 private:
  template <class F>
  const OrientedMatroid& get(std::optional<OrientedMatroid>& slot, F&& make) {
    if (!slot) slot = make();
    return *slot;
  }
  std::size_t n_;
  std::optional<OrientedMatroid> cross_, cube_, adjoint_, cross_zero_;
};

struct Context {
  const VerifyOptions& options;
  Fixtures fx;
  std::mt19937_64 rng;
};

bool same_or_isomorphic(const OrientedMatroid& a, const OrientedMatroid& b) {
  if (a.size() != b.size()) return false;
  if (a.ground().labels() != b.ground().labels()) {
    std::vector<std::string> x = a.ground().labels(), y = b.ground().labels();
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x == y && a.reordered(b.ground().labels()) == b) return true;
  } else if (a == b) {
    return true;
  }
  return find_isomorphism(a, b).has_value();
}

Mask vertex_set(std::size_t n, const std::function<bool(Mask)>& pred) {
  Mask m = 0;
  for (Mask a = 0; a < pow2(n); ++a) {
    if (pred(a)) m |= bit(a);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Cross-polytope.

std::string claim_cross_families(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  CrossPolytopeReport rep = cross_polytope_report(n);
  const OrientedMatroid& o = rep.om;
  const Ground& g = o.ground();
  std::vector<SignedSet> expected;
  for (std::size_t i = 1; i <= n; ++i) {
    expected.push_back(SignedSet{bit(g.index_of(labels::cross(i, false))),
                                 bit(g.index_of(labels::cross(i, true)))});
  }
  for (Mask a = 0; a < pow2(n); ++a) {
    Mask plus = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      plus |= bit(g.index_of(labels::cross(i, (a >> (i - 1)) & 1)));
    }
    expected.push_back(SignedSet{plus, 0});
  }
  check(canonical_family(expected) == o.cocircuits(), "cocircuits differ from the closed form");
  check(2 * o.cocircuits().size() == 2 * (pow2(n) + n),
        "signed cocircuit count " + std::to_string(2 * o.cocircuits().size()));
  std::vector<SignedSet> circuits;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      circuits.push_back(SignedSet{
          bit(g.index_of(labels::cross(i, false))) | bit(g.index_of(labels::cross(i, true))),
          bit(g.index_of(labels::cross(j, false))) | bit(g.index_of(labels::cross(j, true)))});
    }
  }
  check(canonical_family(circuits) == o.circuits(), "circuits differ from +-({i,i'},{j,j'})");
  check(o.rank() == static_cast<int>(n) + 1, "rank " + std::to_string(o.rank()));
  check(o.hyperplanes().size() == pow2(n) + n, "hyperplane count");
  check(!rep.alternative_orthogonal,
        "the alternative signing ({i,j},{i',j'}) is unexpectedly orthogonal");
  std::ostringstream w;
  w << 2 * o.cocircuits().size() << " signed cocircuits, " << o.circuits().size()
    << " unsigned circuits; erratum flagged: " << rep.note;
  return w.str();
}

std::string claim_cross_realization(Context& ctx) {
  const OrientedMatroid& o = ctx.fx.cross();
  Realized r = om_from_points(cross_points(ctx.fx.n()));
  check(same_or_isomorphic(r.om, o), "Aff(+-e_i) differs from the closed form");
  check(r.om.reordered(o.ground().labels()) == o, "Aff(+-e_i) differs under the identity labeling");
  return "Aff(+-e_i) equals the closed form on " + std::to_string(o.size()) + " elements";
}

std::string claim_zero_extension(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& o = ctx.fx.cross();
  const auto half = cross_polytope_half_family(n);
  std::vector<std::int8_t> sigma(half.size(), 1);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = 0;
  Localization loc = make_localization(o, half, sigma);
  LocalizationReport rep = check_localization(loc);
  check(rep.ok(), "X~[0] is not a localization: " +
                      (rep.failures.empty() ? std::string() : rep.failures.front()));
  OrientedMatroid ext = extend(loc, labels::kExtensionPoint);
  check(ext == ctx.fx.cross_zero(), "the extension differs from O_n + 0");
  check(ext.hyperplanes().size() == o.hyperplanes().size() &&
            ext.hyperplanes().size() == pow2(n) + n,
        "hyperplane count changed");
  check(ext.cocircuits().size() == o.cocircuits().size(), "signed cocircuit count changed");
  check(ext.deletion(bit(ext.ground().index_of(labels::kExtensionPoint))) == o,
        "deleting 0 does not give O_n back");
  std::size_t rejected = 0;
  for (std::size_t k = n; k < half.size(); ++k) {
    auto bad = sigma;
    bad[k] = -1;
    if (!check_localization(make_localization(o, half, bad)).ok()) ++rejected;
  }
  check(rejected == half.size() - n, "a single flipped X_A' was accepted as a localization");
  std::ostringstream w;
  w << "O_" << n << " + 0 has " << ext.hyperplanes().size() << " hyperplanes and "
    << 2 * ext.cocircuits().size() << " signed cocircuits; " << rejected
    << " single flips rejected";
  return w.str();
}

std::string claim_contractions(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& o = ctx.fx.cross();
  const OrientedMatroid target = cross_polytope_plus_zero(n - 1);
  std::size_t checked = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (bool primed : {false, true}) {
      const std::string l = labels::cross(i, primed);
      OrientedMatroid c = o.contract(bit(o.ground().index_of(l)));
      check(find_isomorphism(c, target).has_value(),
            "O_n/" + l + " is not isomorphic to O_(n-1) + 0");
      ++checked;
    }
  }
  return std::to_string(checked) + " contractions isomorphic to O_" + std::to_string(n - 1) +
         " + 0";
}

// ---------------------------------------------------------------------------
// Real cube and adjoint.

std::string claim_real_cube(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& q = ctx.fx.cube();
  CubeReport rep = check_oriented_cube(q);
  check(rep.ok(), rep.ok() ? "" : rep.failures.front());
  for (const auto& r : rectangles(n)) check(q.has_circuit(r), "missing rectangle");
  auto small = smallest_cocircuits(n, true);
  for (const auto& c : small) check(q.has_cocircuit(c.cocircuit), "missing cocircuit " + c.name);
  check(q.rank() == static_cast<int>(n) + 1, "rank");
  check(q.is_acyclic(), "Q_n is not acyclic");
  return std::to_string(rectangles(n).size()) + " rectangles and " +
         std::to_string(small.size()) + " facet/skew-facet cocircuits present";
}

std::string claim_adjoint_coherence(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& a = ctx.fx.adjoint();
  const auto ground = labels::adjoint_ground(n);
  auto same = [&](const PointConfig& pc, const std::string& what) {
    OrientedMatroid om = om_from_points(pc).om;
    check(om.reordered(ground) == a, what + " differs from the canonical adjoint");
  };
  same(lifted_adjoint_vectors(n), "Lin(V~)");
  PointConfig simplex = standard_simplex(n);
  PointConfig bary = barycentric_adjoint(n, simplex);
  same(bary, "the barycentric representation");
  std::uniform_int_distribution<int> weight(1, 40);
  for (std::size_t t = 0; t < ctx.options.interior_points; ++t) {
    std::vector<int> w(n + 1);
    for (auto& x : w) x = weight(ctx.rng);
    const int total = std::accumulate(w.begin(), w.end(), 0);
    Vec c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = Rational(w[i], total);
      c[i].canonicalize();
    }
    same(interior_point_adjoint(n, simplex, c), "the interior-point representation");
  }
  Vec barycenter(n, Rational(1, static_cast<long>(n + 1)));
  PointConfig via_center = interior_point_adjoint(n, simplex, barycenter);
  for (const auto& l : ground) {
    check(via_center.at(l) == bary.at(l), "c = barycenter does not reproduce the barycenters");
  }
  return "Lin(V~), barycentric and " + std::to_string(ctx.options.interior_points) +
         " random interior-point representations coincide";
}

std::string claim_adjoint_conditions(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  for (AdjointMode mode : {AdjointMode::kWeak, AdjointMode::kStrong}) {
    AdjointReport rep = check_adjoint(ctx.fx.adjoint(), n, mode);
    check(rep.ok(), rep.ok() ? "" : rep.failures.front());
  }
  return "rank n+1, the 2n cocircuits X~[i], X~[i'] and the flat embedding hold";
}

std::string claim_adjoint_circuits(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& a = ctx.fx.adjoint();
  const Ground& g = a.ground();
  std::size_t count = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (Mask s = 0; s < pow2(n); ++s) {
      if (s >> (i - 1) & 1) continue;
      const Mask si = s | bit(i - 1);
      SignedSet c{bit(g.index_of(labels::infinity(i))) |
                      bit(g.index_of(labels::cube_vertex(n, si))),
                  bit(g.index_of(labels::cube_vertex(n, s)))};
      check(a.has_circuit(c), "missing circuit " + show(g, c));
      ++count;
    }
  }
  return std::to_string(count) + " circuits ({Y_i, X_(A+i)'}, {X_A'}) present";
}

std::string claim_adjoint_face_lattice(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& a = ctx.fx.adjoint();
  const Ground& g = a.ground();
  check(a.is_acyclic(), "the adjoint is not acyclic");
  FaceLattice lat = lv_face_lattice(a);
  check(is_simplex_lattice(lat), "the LV-face lattice is not a simplex lattice");
  std::vector<Mask> expected;
  for (std::size_t i = 1; i <= n; ++i) expected.push_back(bit(g.index_of(labels::infinity(i))));
  expected.push_back(bit(g.index_of(labels::cube_vertex(n, low_mask(n)))));
  std::sort(expected.begin(), expected.end());
  std::vector<Mask> vertices = lat.vertices;
  std::sort(vertices.begin(), vertices.end());
  check(vertices == expected, "the vertices are not Y_1..Y_n, X_[n]'");
  Mask ys = 0;
  for (std::size_t i = 1; i <= n; ++i) ys |= bit(g.index_of(labels::infinity(i)));
  check(std::find(lat.facets.begin(), lat.facets.end(), ys) != lat.facets.end(),
        "{Y_1..Y_n} is not a facet");
  check(a.has_cocircuit(adjoint_zero_cocircuit(n)), "X~[0] is not a cocircuit");
  auto pos = a.positive_cocircuits();
  check(std::find(pos.begin(), pos.end(), adjoint_zero_cocircuit(n)) != pos.end(),
        "X~[0] is not a positive cocircuit");
  return std::to_string(lat.faces.size()) + " faces, simplex on " + show_mask(g, [&] {
           Mask m = 0;
           for (Mask v : expected) m |= v;
           return m;
         }());
}

std::string claim_adjoint_restrictions(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  std::size_t checked = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (bool primed : {false, true}) {
      OrientedMatroid r = adjoint_facet_restriction(ctx.fx.adjoint(), n, i, primed);
      AdjointReport rep = check_adjoint(r, n - 1, AdjointMode::kWeak);
      check(rep.ok(), "restriction to H~[" + labels::cross(i, primed) + "]: " +
                          (rep.ok() ? "" : rep.failures.front()));
      ++checked;
    }
  }
  return std::to_string(checked) + " facet restrictions are adjoints of O_" +
         std::to_string(n - 1);
}

std::string claim_covectors(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const CovectorScope scope = n == 2 ? CovectorScope::kAll : CovectorScope::kCocircuitsAndPrincipal;
  CovectorCheckReport rep = covector_localization_check(ctx.fx.adjoint(), n, scope);
  check(rep.ok(), "covector " + (rep.ok() ? std::string() : rep.failures.front()) +
                      " is not a localization");
  return std::to_string(rep.checked) +
         (scope == CovectorScope::kAll ? " covectors (all)" : " cocircuits and principal covectors") +
         " are localizations in O_" + std::to_string(n);
}

// ---------------------------------------------------------------------------
// Cube structure and the correspondence.

std::string claim_flat_dichotomy(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& q = ctx.fx.cube();
  const auto flats = q.flats();
  std::size_t parallel = 0, anti = 0;
  for (Mask f : flats) {
    for (std::size_t i = 1; i <= n; ++i) {
      try {
        (classify_flat(q, f, i) == FlatClass::kParallel ? parallel : anti)++;
      } catch (const Error& e) {
        throw ClaimFailure{"flat " + show_mask(q.ground(), f) + ", axis " + std::to_string(i) +
                           ": " + e.what()};
      }
    }
  }
  // Spot checks on facets and skew facets.
  for (std::size_t i = 1; i <= n; ++i) {
    check(classify_flat(q, facet_mask(n, i, true), i) == FlatClass::kAntiParallel,
          "H_i+ is not anti-parallel to i");
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      check(classify_flat(q, facet_mask(n, j, true), i) == FlatClass::kParallel,
            "H_j+ is not parallel to i");
      Mask skew = vertex_set(n, [&](Mask a) { return ((a >> (i - 1)) & 1) == ((a >> (j - 1)) & 1); });
      check(classify_flat(q, skew, i) == FlatClass::kAntiParallel,
            "H_ij+ is not anti-parallel to i");
    }
  }
  std::ostringstream w;
  w << flats.size() << " flats x " << n << " axes: " << parallel << " parallel, " << anti
    << " anti-parallel, 0 other";
  return w.str();
}

std::string claim_infinity_localization(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  std::size_t lines = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    LocalizationReport rep = check_localization(infinity_localization(ctx.fx.cube(), i));
    check(rep.triplets_ok, "axis " + std::to_string(i) + ": triplet test fails");
    check(rep.cyclic_ok, "axis " + std::to_string(i) + ": cyclic test fails");
    lines += rep.hyperlines;
  }
  return "all " + std::to_string(n) + " axes pass on " + std::to_string(lines / n) + " hyperlines";
}

std::string claim_infinity_extension(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& q = ctx.fx.cube();
  std::size_t remark = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    OrientedMatroid e = extend_by_infinity(q, i);
    check(e.hyperplanes().size() == q.hyperplanes().size(), "hyperplane count changed");
    check(e.cocircuits().size() == q.cocircuits().size(), "cocircuit count changed");
    const Ground& g = e.ground();
    for (Mask a = 0; a < pow2(n); ++a) {
      if (a >> (i - 1) & 1) continue;
      SignedSet c{bit(g.index_of(labels::cube_vertex(n, a | bit(i - 1)))) |
                      bit(g.index_of(labels::infinity(i))),
                  bit(g.index_of(labels::cube_vertex(n, a)))};
      check(e.has_circuit(c), "missing circuit " + show(g, c));
      ++remark;
    }
  }
  return "counts preserved on all axes; " + std::to_string(remark) +
         " circuits ({-i v, y_i}, {v}) present";
}

std::string claim_roundtrip(Context& ctx) {
  const OrientedMatroid& q = ctx.fx.cube();
  const OrientedMatroid& a = ctx.fx.adjoint();
  OrientedMatroid c = adjoint_to_cube(a);
  CubeReport rep = check_oriented_cube(c);
  check(rep.ok(), "the restriction is not an oriented cube");
  check(c == q, "the restriction differs from Q_n");
  OrientedMatroid b = cube_to_adjoint(q);
  check(is_adjoint(b, ctx.fx.n(), AdjointMode::kWeak), "the extension is not an adjoint");
  check(b == a, "the extension differs from the canonical adjoint");
  check(cube_to_adjoint(c) == a, "adjoint -> cube -> adjoint is not the identity");
  check(adjoint_to_cube(b) == q, "cube -> adjoint -> cube is not the identity");
  return "both compositions are identities on Q_" + std::to_string(ctx.fx.n()) + " and its adjoint";
}

std::string claim_order_independence(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::optional<OrientedMatroid> first;
  std::size_t count = 0;
  do {
    OrientedMatroid b = cube_to_adjoint(ctx.fx.cube(), order);
    if (!first) {
      first = b;
    } else {
      check(b == *first, "extension orders give different matroids");
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::to_string(count) + " extension orders give the same adjoint";
}

std::string claim_facet_reorientation(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& q = ctx.fx.cube();
  for (std::size_t i = 1; i <= n; ++i) {
    OrientedMatroid r = reorient_facet(q, i);
    check(reorient_facet(r, i) == q, "reorienting twice is not the identity");
    check(r.is_acyclic(), "the reorientation is not acyclic");
    std::vector<Mask> expected{facet_mask(n, i, true), facet_mask(n, i, false)};
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (bool eq : {true, false}) {
        expected.push_back(vertex_set(n, [&](Mask a) {
          return (((a >> (i - 1)) & 1) == ((a >> (j - 1)) & 1)) == eq;
        }));
      }
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Mask> facets = lv_face_lattice(r).facets;
    std::sort(facets.begin(), facets.end());
    check(facets == expected, "axis " + std::to_string(i) + ": facets are not H_i+-, H_ij+-");
    auto iso = find_isomorphism(r, q);
    check(iso.has_value(), "axis " + std::to_string(i) +
                               ": not isomorphic to a canonically oriented cube");
    OrientedMatroid relabeled = apply_isomorphism(r, *iso, q.ground());
    check(is_oriented_cube(relabeled), "axis " + std::to_string(i) +
                                           ": the relabeled matroid fails C1/C'2");
  }
  return "all axes: an oriented cube (up to relabeling) with facets H_i+-, H_ij+-";
}

// ---------------------------------------------------------------------------
// Realization experiments.

Matrix random_admissible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (;;) {
    Matrix m(n + 1, Vec(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (auto& x : m[r]) {
        x = Rational(entry(rng), den(rng));
        x.canonicalize();
      }
    }
    // Last row (a, d) with sum |a_i| < d keeps every vertex of C^n finite and
    // on one side.
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      m[n][c] = Rational(entry(rng), den(rng));
      m[n][c].canonicalize();
      total += abs(m[n][c]);
    }
    m[n][n] = total + Rational(den(rng), den(rng));
    m[n][n].canonicalize();
    if (sign(determinant(m)) != 0) return m;
  }
}

std::string claim_realization(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  const OrientedMatroid& q = ctx.fx.cube();
  const OrientedMatroid& a = ctx.fx.adjoint();
  const PointConfig base = cube_points(n);
  for (std::size_t t = 0; t < ctx.options.transforms; ++t) {
    const std::string tag = "transform " + std::to_string(t) + ": ";
    Matrix m = random_admissible(n, ctx.rng);
    ProjectiveImage img = projective_map(base, m);
    check(img.flipped.empty(), tag + "an image crossed infinity");
    OrientedMatroid om = om_from_points(img.config).om;
    check(same_or_isomorphic(om, q), tag + "the image is not isomorphic to Q_n");
    try {
      center(img.config);
      if (n >= 3) {
        PolarCenters polar = facet_centers_polar(img.config);
        check(find_isomorphism(polar.om, ctx.fx.cross()).has_value(),
              tag + "the facet centers are not a cross-polytope");
      }
      OrientedMatroid adj = om_from_points(adjoint_realization_from_cube(img.config)).om;
      check(same_or_isomorphic(adj, a), tag + "the extended realization is not the adjoint");
      for (std::size_t i = 1; i <= n; ++i) {
        check(projectively_equal(edge_meeting_point(img.config, i),
                                 meeting_point_via_center(img.config, i)),
              tag + "the two meeting-point constructions disagree on axis " + std::to_string(i));
      }
    } catch (const Error& e) {
      throw ClaimFailure{tag + e.what()};
    }
  }
  std::ostringstream w;
  w << ctx.options.transforms << " random admissible transforms: cube, center"
    << (n >= 3 ? ", polar cross-polytope" : "") << ", adjoint and meeting points verified";
  return w.str();
}

// ---------------------------------------------------------------------------
// Search and axioms.

std::string run_uniqueness(Context& ctx, SearchKind kind) {
  const std::size_t n = ctx.fx.n();
  SearchOptions opts;
  opts.n = n;
  opts.kind = kind;
  opts.strategy = n <= 3 ? SearchStrategy::kExhaustive : SearchStrategy::kPruned;
  opts.budget_seconds = ctx.options.search_budget;
  SearchReport rep = run_search(opts);
  check(rep.complete, to_string(kind) + " search was truncated by the budget");
  check(rep.classes.size() == 1,
        to_string(kind) + " search found " + std::to_string(rep.classes.size()) + " classes");
  check(rep.classes[0].matches_reference.value_or(false),
        "the class found is not the reference object");
  check(rep.classes[0].axioms_ok, "the class found fails the axiom re-check");
  std::ostringstream w;
  w << to_string(opts.strategy) << ": 1 class in " << rep.candidates_examined
    << " candidates, " << rep.nodes << " nodes";
  return w.str();
}

std::string claim_search_cubes(Context& ctx) { return run_uniqueness(ctx, SearchKind::kCubes); }

std::string claim_search_adjoints(Context& ctx) {
  return run_uniqueness(ctx, SearchKind::kAdjoints) + "; matches the cube count";
}

std::string claim_axioms(Context& ctx) {
  const std::size_t n = ctx.fx.n();
  std::vector<std::pair<std::string, OrientedMatroid>> oms{
      {"O_n", ctx.fx.cross()},
      {"Q_n", ctx.fx.cube()},
      {"adjoint", ctx.fx.adjoint()},
      {"O_n + 0", ctx.fx.cross_zero()},
      {"Q_n + y_1", extend_by_infinity(ctx.fx.cube(), 1)},
      {"reoriented Q_n", reorient_facet(ctx.fx.cube(), 1)},
  };
  if (n <= 4) {
    ProjectiveImage img = projective_map(cube_points(n), random_admissible(n, ctx.rng));
    oms.emplace_back("transformed Q_n", om_from_points(img.config).om);
  }
  for (const auto& [name, om] : oms) {
    check(om.families_orthogonal(), name + ": a circuit is not orthogonal to a cocircuit");
    auto v = validate_circuit_axioms(om.ground(), om.circuits());
    check(v.empty(), name + ": " + (v.empty() ? "" : v.front().kind + " " + v.front().detail));
  }
  return std::to_string(oms.size()) + " matroids: families orthogonal, circuit axioms hold";
}

struct Claim {
  ClaimInfo info;
  std::size_t min_n;
  std::function<std::string(Context&)> run;
};

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {{"cross-polytope-families", "O_n cocircuits, circuits and the circuit-sign erratum", 5}, 2,
       claim_cross_families},
      {{"cross-polytope-realization", "O_n equals Aff(+-e_i)", 5}, 2, claim_cross_realization},
      {{"cross-polytope-zero-extension", "X~[0] is a localization; O_n + 0 keeps the counts", 4},
       2, claim_zero_extension},
      {{"cross-polytope-contractions", "O_n/i and O_n/i' are isomorphic to O_(n-1) + 0", 4}, 2,
       claim_contractions},
      {{"real-cube-oriented-cube", "Q_n has all signed rectangles and facet cocircuits", 4}, 2,
       claim_real_cube},
      {{"adjoint-coherence", "Lin(V~), barycentric and interior-point adjoints coincide", 4}, 2,
       claim_adjoint_coherence},
      {{"adjoint-conditions", "the canonical adjoint is an adjoint (weak and strong)", 4}, 2,
       claim_adjoint_conditions},
      {{"adjoint-edge-circuits", "circuits ({Y_i, X_(A+i)'}, {X_A'})", 4}, 2,
       claim_adjoint_circuits},
      {{"adjoint-face-lattice", "acyclic with a simplex LV-face lattice; X~[0] positive", 4}, 2,
       claim_adjoint_face_lattice},
      {{"adjoint-facet-restrictions", "restrictions to H~_i, H~_i' are adjoints of O_(n-1)", 4},
       2, claim_adjoint_restrictions},
      {{"adjoint-covector-localizations", "covectors of the adjoint are localizations in O_n", 4},
       2, claim_covectors},
      {{"cube-flat-dichotomy", "every flat is parallel or anti-parallel to every axis", 4}, 2,
       claim_flat_dichotomy},
      {{"cube-infinity-localization", "the point at infinity of each axis is a localization", 4},
       2, claim_infinity_localization},
      {{"cube-infinity-extension", "extension by y_i keeps counts; ({-i v, y_i}, {v}) circuits",
        4},
       2, claim_infinity_extension},
      {{"correspondence-roundtrip", "cube <-> adjoint maps are mutually inverse", 4}, 2,
       claim_roundtrip},
      {{"correspondence-order-independence", "extension order across axes is immaterial", 4}, 2,
       claim_order_independence},
      {{"cube-facet-reorientation", "reorienting H_i- gives a cube with facets H_i+-, H_ij+-", 4},
       2, claim_facet_reorientation},
      {{"realization-projective", "projective images of C^n: cube, center, polar, adjoint", 4}, 2,
       claim_realization},
      {{"search-cube-uniqueness", "the cube search finds exactly the real cube", 4}, 2,
       claim_search_cubes},
      {{"search-adjoint-uniqueness", "the adjoint search finds exactly the canonical adjoint", 4},
       2, claim_search_adjoints},
      {{"axioms-orthogonality", "circuit axioms and orthogonality on every generated matroid", 4},
       2, claim_axioms},
  };
  return all;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkip:
      return "skip";
  }
  return "?";
}

bool VerificationReport::ok() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const ClaimResult& c) { return c.status == ClaimStatus::kFail; });
}

const std::vector<ClaimInfo>& registered_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

VerificationReport verify_suite(const VerifyOptions& options) {
  require(options.n >= 2 && options.n <= 5, ErrorCode::kInvalidArgument,
          "verify needs 2 <= n <= 5");
  for (const auto& id : options.only) {
    require(std::any_of(claims().begin(), claims().end(),
                        [&](const Claim& c) { return c.info.id == id; }),
            ErrorCode::kInvalidArgument, "unknown claim id: " + id);
  }
  Context ctx{options, Fixtures(options.n), std::mt19937_64(options.seed)};
  VerificationReport report;
  report.n = options.n;
  for (const auto& claim : claims()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), claim.info.id) == options.only.end()) {
      continue;
    }
    ClaimResult res{claim.info.id, claim.info.description, ClaimStatus::kSkip, "", 0};
    if (options.n > claim.info.max_n || options.n < claim.min_n) {
      res.witness = "scale guard: runs for n <= " + std::to_string(claim.info.max_n);
      report.claims.push_back(std::move(res));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      res.witness = claim.run(ctx);
      res.status = ClaimStatus::kPass;
    } catch (const ClaimFailure& f) {
      res.status = ClaimStatus::kFail;
      res.witness = f.message;
    } catch (const std::exception& e) {
      res.status = ClaimStatus::kFail;
      res.witness = std::string("error: ") + e.what();
    }
    res.seconds = seconds_since(start);
    report.claims.push_back(std::move(res));
  }
  return report;
}

}  // namespace omcube
