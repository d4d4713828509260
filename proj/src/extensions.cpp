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

#include "omcube/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "omcube/errors.hpp"
#include "omcube/generators.hpp"

namespace omcube {

namespace {

// Positions of the cube vertices (and points at infinity) in a ground set.
struct CubeView {
  std::size_t n = 0;
  std::vector<std::size_t> vertex;                // A -> element index
  std::vector<std::optional<Mask>> vertex_of;     // element index -> A
  std::vector<std::optional<std::size_t>> y;      // i - 1 -> element index

  Mask cube_part(Mask m) const {
    Mask out = 0;
    for_each_bit(m, [&](std::size_t e) {
      if (vertex_of[e]) out |= bit(*vertex_of[e]);
    });
    return out;
  }
  Mask elements_of(Mask vertices) const {
    Mask out = 0;
    for_each_bit(vertices, [&](std::size_t a) { out |= bit(vertex[a]); });
    return out;
  }
};

// Every element is a cube vertex or a point at infinity y_i, and every vertex
// of C^n occurs exactly once.
CubeView cube_view(const Ground& ground) {
  CubeView view;
  view.vertex_of.resize(ground.size());
  std::vector<std::pair<std::size_t, Mask>> found;
  std::vector<std::pair<std::size_t, std::size_t>> ys;
  for (std::size_t e = 0; e < ground.size(); ++e) {
    if (auto v = labels::parse_cube_vertex(ground.label(e))) {
      require(view.n == 0 || view.n == v->n, ErrorCode::kInvalidArgument,
              "cube vertex labels of different lengths");
      view.n = v->n;
      view.vertex_of[e] = v->a;
      found.push_back({e, v->a});
    } else if (auto i = labels::parse_infinity(ground.label(e))) {
      ys.push_back({e, *i});
    } else {
      fail(ErrorCode::kInvalidArgument, "label '" + ground.label(e) + "' is not a cube vertex");
    }
  }
  require(view.n >= 1 && view.n <= 6 && found.size() == bit(view.n), ErrorCode::kInvalidArgument,
          "the ground is not the vertex set of a cube");
  view.vertex.assign(bit(view.n), ground.size());
  for (auto [e, a] : found) view.vertex[a] = e;
  view.y.resize(view.n);
  for (auto [e, i] : ys) {
    require(i >= 1 && i <= view.n && !view.y[i - 1], ErrorCode::kInvalidArgument,
            "bad point at infinity label '" + ground.label(e) + "'");
    view.y[i - 1] = e;
  }
  return view;
}

// The vertices with coordinate i reversed.
Mask mirror(Mask vertices, std::size_t i) {
  Mask out = 0;
  for_each_bit(vertices, [&](std::size_t a) { out |= bit(a ^ bit(i - 1)); });
  return out;
}

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

std::string describe(const Ground& ground, const SignedSet& x) {
  std::string out = "(";
  bool first = true;
  for (auto& l : ground.labels_of(x.plus)) out += (first ? "" : ",") + l, first = false;
  out += "|";
  first = true;
  for (auto& l : ground.labels_of(x.minus)) out += (first ? "" : ",") + l, first = false;
  return out + ")";
}

bool sign_triple_orthogonal(int a, int b, int c) {
  bool pos = a > 0 || b > 0 || c > 0;
  bool neg = a < 0 || b < 0 || c < 0;
  return pos == neg;
}

}  // namespace

int Localization::sign_of(const SignedSet& cocircuit) const {
  auto it = index.find(canonical_rep(cocircuit));
  require(it != index.end(), ErrorCode::kInvalidArgument, "not a cocircuit of the base");
  int s = sigma[it->second];
  return half_family[it->second] == cocircuit ? s : -s;
}

std::string Localization::sigma_string() const {
  std::string out;
  for (auto s : sigma) out += sign_char(s);
  return out;
}

Localization make_localization(const OrientedMatroid& base, const std::vector<std::int8_t>& sigma) {
  return make_localization(base, base.cocircuits(), sigma);
}

Localization make_localization(const OrientedMatroid& base, const std::vector<SignedSet>& half,
                               const std::vector<std::int8_t>& sigma) {
  require(half.size() == base.cocircuits().size(), ErrorCode::kInvalidArgument,
          "the half family must list every cocircuit once");
  require(sigma.size() == half.size(), ErrorCode::kInvalidArgument,
          "sigma must have one sign per member of the half family");
  Localization loc{base, half, sigma, {}};
  for (std::size_t k = 0; k < half.size(); ++k) {
    require(base.has_cocircuit(half[k]), ErrorCode::kInvalidArgument,
            "half family member " + std::to_string(k) + " is not a cocircuit");
    require(loc.index.emplace(canonical_rep(half[k]), k).second, ErrorCode::kInvalidArgument,
            "half family lists a cocircuit twice");
    require(sigma[k] >= -1 && sigma[k] <= 1, ErrorCode::kInvalidArgument, "sigma values are -1, 0, 1");
  }
  return loc;
}

std::vector<std::int8_t> parse_sigma(const std::string& text) {
  std::vector<std::int8_t> out;
  for (char c : text) {
    switch (c) {
      case '+': out.push_back(1); break;
      case '-': out.push_back(-1); break;
      case '0': out.push_back(0); break;
      default: fail(ErrorCode::kParse, std::string("bad sigma character '") + c + "'");
    }
  }
  return out;
}

LocalizationChecker::LocalizationChecker(const OrientedMatroid& base,
                                         const std::vector<SignedSet>& half)
    : half_size_(half.size()), ground_(base.ground_ptr()) {
  std::unordered_map<SignedSet, std::size_t, SignedSetHash> index;
  for (std::size_t k = 0; k < half.size(); ++k) index.emplace(canonical_rep(half[k]), k);
  require(index.size() == base.cocircuits().size() && half.size() == index.size(),
          ErrorCode::kInvalidArgument, "the half family must list every cocircuit once");
  for (Mask l : base.hyperlines()) {
    Line line;
    line.hyperline = l;
    for (const auto& d : base.cocircuits_through(l)) {
      auto it = index.find(canonical_rep(d));
      require(it != index.end(), ErrorCode::kInvalidArgument, "half family misses a cocircuit");
      line.members.push_back({d, it->second, half[it->second] == d ? 1 : -1});
    }
    const std::size_t m = line.members.size();
    require(m <= 0xFFFF, ErrorCode::kScaleGuard, "too many cocircuits through a hyperline");
    auto same_pair = [&](std::size_t a, std::size_t b) {
      return line.members[a].cocircuit.support() == line.members[b].cocircuit.support();
    };
    // Betweenness: z agrees with x o y wherever x and y do not disagree.
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (same_pair(x, y)) continue;
        const SignedSet& cx = line.members[x].cocircuit;
        const SignedSet& cy = line.members[y].cocircuit;
        const Mask off = ~separation(cx, cy);
        const SignedSet xy = compose(cx, cy);
        for (std::size_t z = 0; z < m; ++z) {
          if (same_pair(z, x) || same_pair(z, y)) continue;
          const SignedSet& cz = line.members[z].cocircuit;
          if ((cz.plus & off) == (xy.plus & off) && (cz.minus & off) == (xy.minus & off)) {
            line.triplets.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y),
                                     static_cast<std::uint16_t>(z)});
          }
        }
      }
    }
    // Cyclic order: neighbours are distinct cocircuits with no separation.
    std::vector<std::vector<std::uint16_t>> adj(m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (!same_pair(x, y) &&
            separation(line.members[x].cocircuit, line.members[y].cocircuit) == 0) {
          adj[x].push_back(static_cast<std::uint16_t>(y));
        }
      }
      require(adj[x].size() == 2, ErrorCode::kInvariant,
              "rank-2 contraction is not a cycle (cocircuit with " + std::to_string(adj[x].size()) +
                  " neighbours)");
    }
    std::uint16_t prev = 0, cur = adj[0][0];
    line.cycle.push_back(0);
    while (cur != 0) {
      line.cycle.push_back(cur);
      std::uint16_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      require(line.cycle.size() <= m, ErrorCode::kInvariant, "rank-2 contraction cycle is broken");
    }
    require(line.cycle.size() == m, ErrorCode::kInvariant,
            "rank-2 contraction is not a single cycle");
    lines_.push_back(std::move(line));
  }
}

bool LocalizationChecker::line_triplets_ok(const Line& line,
                                           const std::vector<std::int8_t>& sigma) const {
  auto s = [&](std::size_t k) {
    return line.members[k].sign * sigma[line.members[k].slot];
  };
  for (const auto& t : line.triplets) {
    if (!sign_triple_orthogonal(s(t[0]), s(t[1]), -s(t[2]))) return false;
  }
  return true;
}

bool LocalizationChecker::line_cyclic_ok(const Line& line,
                                         const std::vector<std::int8_t>& sigma) const {
  const std::size_t m = line.cycle.size();
  std::vector<int> seq(m);
  std::size_t zeros = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const Entry& en = line.members[line.cycle[j]];
    seq[j] = en.sign * sigma[en.slot];
    if (seq[j] == 0) ++zeros;
  }
  if (zeros == m) return true;
  if (zeros == 0) {
    std::size_t changes = 0;
    for (std::size_t j = 0; j < m; ++j) changes += seq[j] != seq[(j + 1) % m];
    return changes == 2;
  }
  if (zeros != 2) return false;
  std::size_t z = 0;
  while (seq[z] != 0) ++z;
  if (seq[(z + m / 2) % m] != 0) return false;
  for (std::size_t j = 1; j + 1 < m / 2; ++j) {
    if (seq[(z + j) % m] != seq[(z + j + 1) % m]) return false;
  }
  return true;
}

LocalizationReport LocalizationChecker::check(const std::vector<std::int8_t>& sigma) const {
  require(sigma.size() == half_size_, ErrorCode::kInvalidArgument,
          "sigma must have one sign per member of the half family");
  LocalizationReport rep;
  rep.hyperlines = lines_.size();
  for (const auto& line : lines_) {
    bool t = line_triplets_ok(line, sigma);
    bool c = line_cyclic_ok(line, sigma);
    if (!t) rep.triplets_ok = false;
    if (!c) rep.cyclic_ok = false;
    if (!t || !c) {
      std::string labels;
      for (auto& l : ground_->labels_of(line.hyperline)) labels += (labels.empty() ? "" : ",") + l;
      rep.failures.push_back("hyperline {" + labels + "}" + (t ? "" : " triplets") +
                             (c ? "" : " cyclic"));
    }
  }
  return rep;
}

bool LocalizationChecker::accepts(const std::vector<std::int8_t>& sigma) const {
  for (const auto& line : lines_) {
    if (!line_cyclic_ok(line, sigma)) return false;
  }
  return true;
}

std::vector<SignedSet> LocalizationChecker::new_cocircuits(
    const std::vector<std::int8_t>& sigma) const {
  std::vector<SignedSet> out;
  for (const auto& line : lines_) {
    const std::size_t m = line.cycle.size();
    auto s = [&](std::size_t j) {
      const Entry& en = line.members[line.cycle[j % m]];
      return en.sign * sigma[en.slot];
    };
    bool all_nonzero = true;
    for (std::size_t j = 0; j < m; ++j) all_nonzero = all_nonzero && s(j) != 0;
    if (!all_nonzero) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (s(j) != s(j + 1)) {
        out.push_back(canonical_rep(compose(line.members[line.cycle[j]].cocircuit,
                                            line.members[line.cycle[(j + 1) % m]].cocircuit)));
      }
    }
  }
  return canonical_family(out);
}

LocalizationReport check_localization(const Localization& loc) {
  return LocalizationChecker(loc.base, loc.half_family).check(loc.sigma);
}

OrientedMatroid extend(const Localization& loc, const std::string& label) {
  const OrientedMatroid& base = loc.base;
  require(!base.ground().find(label), ErrorCode::kInvalidArgument,
          "label '" + label + "' already in the ground set");
  require(base.size() < 64, ErrorCode::kScaleGuard, "ground set too large to extend");
  LocalizationChecker checker(base, loc.half_family);
  auto rep = checker.check(loc.sigma);
  require(rep.ok(), ErrorCode::kPrecondition,
          "not a localization: " + (rep.failures.empty() ? std::string() : rep.failures.front()));
  const Mask p = bit(base.size());
  std::vector<SignedSet> cocircuits;
  for (std::size_t k = 0; k < loc.half_family.size(); ++k) {
    SignedSet x = loc.half_family[k];
    if (loc.sigma[k] > 0) x.plus |= p;
    if (loc.sigma[k] < 0) x.minus |= p;
    cocircuits.push_back(x);
  }
  for (const auto& x : checker.new_cocircuits(loc.sigma)) cocircuits.push_back(x);
  auto names = base.ground().labels();
  names.push_back(label);
  return OrientedMatroid::from_cocircuits(Ground(names), cocircuits);
}

CubeReport check_oriented_cube(const OrientedMatroid& om) {
  CubeView view = cube_view(om.ground());
  require(std::none_of(view.y.begin(), view.y.end(), [](auto& y) { return y.has_value(); }),
          ErrorCode::kInvalidArgument, "an oriented cube has only vertex labels");
  CubeReport rep;
  rep.n = view.n;
  if (view.n < 2) {
    rep.failures.push_back("a cube needs n >= 2");
    return rep;
  }
  std::vector<std::size_t> image(view.vertex.begin(), view.vertex.end());
  const Ground cube(labels::cube_ground(view.n));
  for (const auto& r : rectangles(view.n)) {
    if (!om.has_circuit(map_signed(r, image))) {
      rep.failures.push_back("rectangle " + describe(cube, r) + " is not a circuit");
    }
  }
  for (std::size_t i = 1; i <= view.n; ++i) {
    for (bool plus : {true, false}) {
      Mask f = view.elements_of(facet_mask(view.n, i, plus));
      if (!om.is_flat(f) || om.rank_of(f) != om.rank() - 1) {
        rep.failures.push_back("facet H" + std::to_string(i) + (plus ? "+" : "-") +
                               " is not a hyperplane");
      }
    }
  }
  return rep;
}

bool is_oriented_cube(const OrientedMatroid& om) { return check_oriented_cube(om).ok(); }

AdjointReport check_adjoint(const OrientedMatroid& om, std::size_t n, AdjointMode mode) {
  require(n >= 1 && n <= 5, ErrorCode::kInvalidArgument, "adjoint checks need 1 <= n <= 5");
  const auto ground = labels::adjoint_ground(n);
  require(om.size() == ground.size(), ErrorCode::kInvalidArgument,
          "the ground is not the adjoint ground of O_" + std::to_string(n));
  for (const auto& l : ground) {
    require(om.ground().find(l).has_value(), ErrorCode::kInvalidArgument,
            "the ground is not the adjoint ground of O_" + std::to_string(n) + " (missing " + l + ")");
  }
  const OrientedMatroid a = om.reordered(ground);
  AdjointReport rep;
  if (a.rank() != static_cast<int>(n) + 1) {
    rep.failures.push_back("rank is " + std::to_string(a.rank()) + ", expected " +
                           std::to_string(n + 1));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (bool primed : {false, true}) {
      SignedSet x = adjoint_principal_cocircuit(n, i, primed);
      if (!a.has_cocircuit(x)) {
        rep.failures.push_back("missing cocircuit X~[" + labels::cross(i, primed) + "] = " +
                               describe(a.ground(), x));
      }
    }
  }
  if (mode == AdjointMode::kStrong && rep.ok() && n >= 2) {
    const OrientedMatroid base = cross_polytope(n);
    const auto half = cross_polytope_half_family(n);
    for (Mask f : base.flats()) {
      Mask g = 0;
      for (std::size_t k = 0; k < half.size(); ++k) {
        if ((half[k].support() & f) == 0) g |= bit(k);
      }
      int want = a.rank() - base.rank_of(f);
      if (!a.is_flat(g) || a.rank_of(g) != want) {
        std::string labels;
        for (auto& l : base.ground().labels_of(f)) labels += (labels.empty() ? "" : ",") + l;
        rep.failures.push_back("flat {" + labels + "} does not map to a flat of rank " +
                               std::to_string(want));
      }
    }
  }
  return rep;
}

bool is_adjoint(const OrientedMatroid& om, std::size_t n, AdjointMode mode) {
  return check_adjoint(om, n, mode).ok();
}

FlatClass classify_flat(const OrientedMatroid& om, Mask flat, std::size_t i) {
  CubeView view = cube_view(om.ground());
  require(i >= 1 && i <= view.n, ErrorCode::kInvalidArgument, "axis out of range");
  require(om.is_flat(flat), ErrorCode::kPrecondition, "the given set is not a flat");
  Mask f = view.cube_part(flat);
  Mask g = mirror(f, i);
  if (f == g) return FlatClass::kParallel;
  if ((f & g) == 0) return FlatClass::kAntiParallel;
  fail(ErrorCode::kInvariant, "flat {" + [&] {
    std::string s;
    for (auto& l : om.ground().labels_of(flat)) s += (s.empty() ? "" : ",") + l;
    return s;
  }() + "} meets its mirror in direction " + std::to_string(i) + " without being equal to it");
}

Localization infinity_localization(const OrientedMatroid& om, std::size_t i) {
  CubeView view = cube_view(om.ground());
  require(i >= 1 && i <= view.n, ErrorCode::kInvalidArgument, "axis out of range");
  const Mask plus_side = facet_mask(view.n, i, true);
  const Mask minus_side = facet_mask(view.n, i, false);
  std::vector<std::int8_t> sigma;
  for (const auto& x : om.cocircuits()) {
    const Mask zero = x.zeros(om.all());
    if (classify_flat(om, zero, i) == FlatClass::kParallel) {
      sigma.push_back(0);
      continue;
    }
    const Mask f = view.cube_part(zero);
    const Mask from_minus = view.elements_of(mirror(f & minus_side, i));
    const Mask from_plus = view.elements_of(mirror(f & plus_side, i));
    auto in_family = [&](const SignedSet& s) {
      return (from_minus & ~s.plus) == 0 && (from_plus & ~s.minus) == 0;
    };
    if (in_family(x)) {
      sigma.push_back(1);
    } else if (in_family(x.negated())) {
      sigma.push_back(-1);
    } else {
      fail(ErrorCode::kInvariant, "cocircuit " + describe(om.ground(), x) +
                                      " has no signing in the infinity family of direction " +
                                      std::to_string(i));
    }
  }
  return make_localization(om, sigma);
}

OrientedMatroid extend_by_infinity(const OrientedMatroid& om, std::size_t i) {
  CubeView view = cube_view(om.ground());
  require(i >= 1 && i <= view.n && !view.y[i - 1], ErrorCode::kInvalidArgument,
          "direction out of range or already extended");
  Localization loc = infinity_localization(om, i);
  OrientedMatroid ext = extend(loc, labels::infinity(i));
  // From the cube itself no hyperplane is created. Once some y_j is present,
  // the only new hyperplanes are the ones spanned by points at infinity.
  const Mask ys = ext.all() & ~view.elements_of(low_mask(bit(view.n)));
  std::size_t at_infinity = 0;
  for (Mask h : ext.hyperplanes()) {
    if ((h & ~ys) == 0) ++at_infinity;
  }
  const bool pure = ys == bit(om.size());
  require(pure ? at_infinity == 0 : at_infinity <= 1, ErrorCode::kInvariant,
          "the extension by y" + std::to_string(i) + " creates hyperplanes of points at infinity");
  require(ext.hyperplanes().size() == om.hyperplanes().size() + at_infinity, ErrorCode::kInvariant,
          "the extension by y" + std::to_string(i) + " changes the number of hyperplanes");
  require(ext.cocircuits().size() == om.cocircuits().size() + at_infinity, ErrorCode::kInvariant,
          "the extension by y" + std::to_string(i) + " changes the number of cocircuits");
  const std::size_t yi = om.size();
  for (Mask a = 0; a < bit(view.n); ++a) {
    if (a >> (i - 1) & 1) continue;
    SignedSet c{bit(view.vertex[a ^ bit(i - 1)]) | bit(yi), bit(view.vertex[a])};
    require(ext.has_circuit(c), ErrorCode::kInvariant,
            "missing circuit " + describe(ext.ground(), c));
  }
  return ext;
}

OrientedMatroid cube_to_adjoint(const OrientedMatroid& cube, std::vector<std::size_t> order) {
  CubeView view = cube_view(cube.ground());
  if (order.empty()) {
    order.resize(view.n);
    std::iota(order.begin(), order.end(), std::size_t{1});
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    require(sorted.size() == view.n && sorted[k] == k + 1, ErrorCode::kInvalidArgument,
            "the extension order must be a permutation of 1..n");
  }
  require(is_oriented_cube(cube), ErrorCode::kPrecondition, "not an oriented cube");
  OrientedMatroid cur = cube;
  for (std::size_t i : order) cur = extend_by_infinity(cur, i);
  return cur.reordered(labels::adjoint_ground(view.n));
}

OrientedMatroid adjoint_to_cube(const OrientedMatroid& adjoint) {
  CubeView view = cube_view(adjoint.ground());
  for (std::size_t i = 0; i < view.n; ++i) {
    require(view.y[i].has_value(), ErrorCode::kInvalidArgument,
            "the ground is not an adjoint ground");
  }
  auto rep = check_adjoint(adjoint, view.n, AdjointMode::kWeak);
  require(rep.ok(), ErrorCode::kPrecondition,
          "not an adjoint: " + (rep.failures.empty() ? std::string() : rep.failures.front()));
  Mask keep = 0;
  for (std::size_t e : view.vertex) keep |= bit(e);
  return adjoint.restriction(keep).reordered(labels::cube_ground(view.n));
}

OrientedMatroid reorient_facet(const OrientedMatroid& cube, std::size_t i) {
  CubeView view = cube_view(cube.ground());
  require(i >= 1 && i <= view.n, ErrorCode::kInvalidArgument, "axis out of range");
  return cube.reoriented(view.elements_of(facet_mask(view.n, i, false)));
}

OrientedMatroid adjoint_facet_restriction(const OrientedMatroid& adjoint, std::size_t n,
                                          std::size_t i, bool primed) {
  require(n >= 2 && i >= 1 && i <= n, ErrorCode::kInvalidArgument, "axis out of range");
  const OrientedMatroid a = adjoint.reordered(labels::adjoint_ground(n));
  const Mask zero = adjoint_principal_cocircuit(n, i, primed).zeros(a.all());
  std::vector<std::string> names;
  for_each_bit(zero, [&](std::size_t e) {
    if (e < n) {
      names.push_back(labels::infinity(e + 1 < i ? e + 1 : e));
    } else {
      const Mask v = static_cast<Mask>(e - n);
      const Mask low = v & low_mask(i - 1);
      const Mask high = (v >> i) << (i - 1);
      names.push_back(labels::cube_vertex(n - 1, low | high));
    }
  });
  return a.restriction(zero).relabeled(names).reordered(labels::adjoint_ground(n - 1));
}

std::vector<SignedSet> principal_covectors(std::size_t n) {
  std::vector<SignedSet> out;
  for (Mask primed = 0; primed < bit(n); ++primed) {
    SignedSet x;
    for (std::size_t i = 1; i <= n; ++i) {
      x = compose(x, adjoint_principal_cocircuit(n, i, primed >> (i - 1) & 1));
    }
    out.push_back(x);
    out.push_back(x.negated());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CovectorCheckReport covector_localization_check(const OrientedMatroid& adjoint, std::size_t n,
                                           CovectorScope scope) {
  require(n >= 2 && n <= 4, ErrorCode::kInvalidArgument, "covector checks need 2 <= n <= 4");
  const OrientedMatroid a = adjoint.reordered(labels::adjoint_ground(n));
  const OrientedMatroid base = cross_polytope(n);
  LocalizationChecker checker(base, cross_polytope_half_family(n));
  std::vector<SignedSet> vectors;
  if (scope == CovectorScope::kAll) {
    vectors = a.covectors();
  } else {
    vectors = symmetric_family(a.cocircuits());
    for (const auto& p : principal_covectors(n)) vectors.push_back(p);
  }
  CovectorCheckReport rep;
  for (const auto& v : vectors) {
    std::vector<std::int8_t> sigma(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) sigma[k] = static_cast<std::int8_t>(v.sign(k));
    ++rep.checked;
    if (!checker.check(sigma).ok()) {
      std::string s;
      for (auto c : sigma) s += sign_char(c);
      rep.failures.push_back(s);
    }
  }
  return rep;
}

}  // namespace omcube
