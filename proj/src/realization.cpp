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

#include "omcube/realization.hpp"

#include <algorithm>
#include <unordered_set>

#include "omcube/errors.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"

namespace omcube {

void PointConfig::validate() const {
  require(!labels.empty(), ErrorCode::kInvalidArgument, "empty point configuration");
  require(labels.size() == coords.size(), ErrorCode::kInvalidArgument,
          "labels and coordinates differ in number");
  require(labels.size() <= kMaxGround, ErrorCode::kInvalidArgument, "too many points");
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(coords[i].size() == coords[0].size(), ErrorCode::kInvalidArgument,
            "point '" + labels[i] + "' has the wrong dimension");
    require(seen.insert(labels[i]).second, ErrorCode::kInvalidArgument,
            "duplicate label '" + labels[i] + "'");
  }
  if (mode == PointMode::kLinear) {
    require(dim() > 0, ErrorCode::kInvalidArgument, "linear configurations need dimension >= 1");
  }
}

const Vec& PointConfig::at(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return coords[i];
  }
  fail(ErrorCode::kInvalidArgument, "no point labeled '" + label + "'");
}

Matrix lifted_matrix(const PointConfig& config) {
  config.validate();
  const std::size_t d = config.dim();
  const std::size_t rows = config.mode == PointMode::kAffine ? d + 1 : d;
  Matrix m(rows, Vec(config.size(), Rational(0)));
  for (std::size_t j = 0; j < config.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = config.coords[j][i];
    if (config.mode == PointMode::kAffine) m[d][j] = 1;
  }
  return m;
}

namespace {

// The row space as r integer rows (r = rank).
std::vector<std::vector<Integer>> integer_row_basis(const Matrix& lifted) {
  Matrix a = lifted;
  auto pivots = rref(a);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(primitive_integer(a[r]));
  return rows;
}

template <class F>
void for_each_k_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  for (Mask s = low_mask(k); s < bit(n);) {
    f(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

Chirotope chirotope(const PointConfig& config, int* rank_out) {
  auto rows = integer_row_basis(lifted_matrix(config));
  const std::size_t r = rows.size();
  if (rank_out) *rank_out = static_cast<int>(r);
  Chirotope chi;
  for_each_k_subset(config.size(), r, [&](Mask s) {
    auto cols = bits_of(s);
    std::vector<std::vector<Integer>> m(r, std::vector<Integer>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) m[i][j] = rows[i][cols[j]];
    }
    chi[s] = static_cast<std::int8_t>(sign(bareiss_determinant(std::move(m))));
  });
  return chi;
}

Realized om_from_points(const PointConfig& config) {
  Matrix lifted = lifted_matrix(config);
  int r = 0;
  Realized out;
  out.chirotope = chirotope(config, &r);
  out.om = OrientedMatroid::from_chirotope(Ground(config.labels), r, out.chirotope);
  // Witness per circuit: the one-dimensional kernel of its columns.
  for (const auto& c : out.om.circuits()) {
    auto cols = bits_of(c.support());
    Matrix sub(lifted.size(), Vec(cols.size()));
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = lifted[i][cols[j]];
    }
    auto ker = nullspace(sub);
    require(ker.size() == 1, ErrorCode::kInvariant, "circuit without a unique dependence");
    auto w = primitive_integer(ker[0]);
    // Orient the witness like the stored circuit.
    if (sign(w[0]) != c.sign(cols[0])) {
      for (auto& z : w) z = -z;
    }
    std::vector<Integer> full(config.size(), Integer(0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(sign(w[j]) == c.sign(cols[j]), ErrorCode::kInvariant,
              "circuit signs disagree with the dependence");
      full[cols[j]] = w[j];
    }
    for (const auto& row : lifted) {
      Rational acc = 0;
      for (std::size_t j = 0; j < full.size(); ++j) acc += row[j] * full[j];
      require(acc == 0, ErrorCode::kInvariant, "witness is not a dependence");
    }
    out.witnesses.push_back(std::move(full));
    if (popcount(c.support()) <= 2) {
      auto names = out.om.ground().labels_of(c.support());
      out.parallel.emplace_back(names.front(), names.back());
    }
  }
  return out;
}

PointConfig cube_points(std::size_t n) {
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (Mask a = 0; a < bit(n); ++a) {
    pc.labels.push_back(labels::cube_vertex(n, a));
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (a >> i & 1) ? -1 : 1;
    pc.coords.push_back(std::move(x));
  }
  return pc;
}

PointConfig cross_points(std::size_t n) {
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (int s : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      pc.labels.push_back(labels::cross(i + 1, s < 0));
      Vec x(n, Rational(0));
      x[i] = s;
      pc.coords.push_back(std::move(x));
    }
  }
  return pc;
}

PointConfig lifted_adjoint_vectors(std::size_t n) {
  PointConfig pc;
  pc.mode = PointMode::kLinear;
  for (std::size_t i = 0; i < n; ++i) {
    pc.labels.push_back(labels::infinity(i + 1));
    Vec x(n + 1, Rational(0));
    x[i] = 1;
    pc.coords.push_back(std::move(x));
  }
  PointConfig cube = cube_points(n);
  for (std::size_t k = 0; k < cube.size(); ++k) {
    pc.labels.push_back(cube.labels[k]);
    Vec x = cube.coords[k];
    x.push_back(1);
    pc.coords.push_back(std::move(x));
  }
  return pc;
}

PointConfig standard_simplex(std::size_t n) {
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (std::size_t i = 0; i < n; ++i) {
    pc.labels.push_back(labels::infinity(i + 1));
    Vec x(n, Rational(0));
    x[i] = 1;
    pc.coords.push_back(std::move(x));
  }
  pc.labels.push_back("b");
  pc.coords.push_back(Vec(n, Rational(0)));
  return pc;
}

namespace {

void check_simplex(std::size_t n, const PointConfig& simplex) {
  simplex.validate();
  require(simplex.mode == PointMode::kAffine, ErrorCode::kInvalidArgument,
          "the simplex must be an affine configuration");
  require(simplex.size() == n + 1, ErrorCode::kInvalidArgument, "the simplex needs n+1 points");
  require(rank(lifted_matrix(simplex)) == n + 1, ErrorCode::kPrecondition,
          "degenerate simplex");
}

Vec affine_combination(const PointConfig& pc, const std::vector<std::size_t>& idx,
                       const std::vector<Rational>& w) {
  Vec out(pc.dim(), Rational(0));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += w[k] * pc.coords[idx[k]][j];
  }
  return out;
}

}  // namespace

std::optional<Vec> barycentric_coordinates(const PointConfig& simplex, const Vec& p) {
  Matrix lifted = lifted_matrix(simplex);
  Vec rhs = p;
  rhs.push_back(1);
  return solve_unique(lifted, rhs);
}

PointConfig barycentric_adjoint(std::size_t n, const PointConfig& simplex) {
  check_simplex(n, simplex);
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (std::size_t i = 0; i < n; ++i) {
    pc.labels.push_back(labels::infinity(i + 1));
    pc.coords.push_back(simplex.coords[i]);
  }
  for (Mask a = 0; a < bit(n); ++a) {
    // b_{[n] - A} = (b + sum_{j not in A} y_j) / (n - |A| + 1).
    std::vector<std::size_t> idx{n};
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a >> j & 1)) idx.push_back(j);
    }
    std::vector<Rational> w(idx.size(), Rational(1, idx.size()));
    pc.labels.push_back(labels::cube_vertex(n, a));
    pc.coords.push_back(affine_combination(simplex, idx, w));
  }
  return pc;
}

PointConfig interior_point_adjoint(std::size_t n, const PointConfig& simplex, const Vec& c) {
  check_simplex(n, simplex);
  require(c.size() == simplex.dim(), ErrorCode::kInvalidArgument, "c has the wrong dimension");
  auto bc = barycentric_coordinates(simplex, c);
  require(bc.has_value(), ErrorCode::kPrecondition, "c is not in the affine hull of the simplex");
  for (const auto& x : *bc) {
    require(x > 0, ErrorCode::kPrecondition, "c is not interior to the simplex");
  }
  const std::size_t d = simplex.dim();
  PointConfig pc;
  pc.mode = PointMode::kAffine;
  for (std::size_t i = 0; i < n; ++i) {
    pc.labels.push_back(labels::infinity(i + 1));
    pc.coords.push_back(simplex.coords[i]);
  }
  for (Mask a = 0; a < bit(n); ++a) {
    // Unknowns: weights on {y_i : i in A} + c (affine, summing to 1) and on
    // {y_j : j not in A} + b (affine, summing to 1) with equal points.
    std::vector<Vec> s_pts, f_pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (a >> i & 1) {
        s_pts.push_back(simplex.coords[i]);
      } else {
        f_pts.push_back(simplex.coords[i]);
      }
    }
    s_pts.push_back(c);
    f_pts.push_back(simplex.coords[n]);
    const std::size_t u = s_pts.size() + f_pts.size();
    Matrix m(d + 2, Vec(u, Rational(0)));
    Vec rhs(d + 2, Rational(0));
    for (std::size_t k = 0; k < s_pts.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) m[j][k] = s_pts[k][j];
      m[d][k] = 1;
    }
    for (std::size_t k = 0; k < f_pts.size(); ++k) {
      for (std::size_t j = 0; j < d; ++j) m[j][s_pts.size() + k] = -f_pts[k][j];
      m[d + 1][s_pts.size() + k] = 1;
    }
    rhs[d] = 1;
    rhs[d + 1] = 1;
    auto sol = solve_unique(m, rhs);
    require(sol.has_value(), ErrorCode::kPrecondition,
            "the affine span and the face do not meet in a single point");
    Vec p(d, Rational(0));
    for (std::size_t k = 0; k < f_pts.size(); ++k) {
      const Rational& w = (*sol)[s_pts.size() + k];
      require(w >= 0, ErrorCode::kPrecondition, "the intersection point lies outside the face");
      for (std::size_t j = 0; j < d; ++j) p[j] += w * f_pts[k][j];
    }
    pc.labels.push_back(labels::cube_vertex(n, a));
    pc.coords.push_back(std::move(p));
  }
  return pc;
}

ProjectiveImage projective_map(const PointConfig& config, const Matrix& m, bool same_side) {
  config.validate();
  require(config.mode == PointMode::kAffine, ErrorCode::kInvalidArgument,
          "projective maps act on affine configurations");
  const std::size_t d = config.dim();
  require(m.size() == d + 1, ErrorCode::kInvalidArgument, "matrix has the wrong size");
  for (const auto& row : m) {
    require(row.size() == d + 1, ErrorCode::kInvalidArgument, "matrix has the wrong size");
  }
  require(determinant(m) != 0, ErrorCode::kPrecondition, "singular projective matrix");
  ProjectiveImage out;
  out.config.mode = PointMode::kAffine;
  std::vector<std::string> at_infinity;
  int first_sign = 0;
  bool mixed = false;
  for (std::size_t k = 0; k < config.size(); ++k) {
    Vec h = config.coords[k];
    h.push_back(1);
    Vec z = mat_vec(m, h);
    int s = sign(z[d]);
    if (s == 0) {
      at_infinity.push_back(config.labels[k]);
      continue;
    }
    if (first_sign == 0) first_sign = s;
    if (s != first_sign) mixed = true;
    if (s < 0) out.flipped.push_back(config.labels[k]);
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = z[j] / z[d];
    out.config.labels.push_back(config.labels[k]);
    out.config.coords.push_back(std::move(x));
  }
  if (!at_infinity.empty()) {
    std::string msg = "inadmissible map, images at infinity:";
    for (const auto& l : at_infinity) msg += " " + l;
    fail(ErrorCode::kPrecondition, msg);
  }
  if (same_side && mixed) {
    std::string msg = "inadmissible map, images on both sides:";
    for (const auto& l : out.flipped) msg += " " + l;
    fail(ErrorCode::kPrecondition, msg);
  }
  if (same_side) out.flipped.clear();
  return out;
}

std::size_t cube_dimension(const PointConfig& config) {
  config.validate();
  auto first = labels::parse_cube_vertex(config.labels[0]);
  require(first.has_value(), ErrorCode::kInvalidArgument, "configuration is not labeled by C^n");
  const std::size_t n = first->n;
  require(n < 20 && config.size() == bit(n), ErrorCode::kInvalidArgument,
          "configuration does not have 2^n points");
  std::vector<bool> seen(config.size(), false);
  for (const auto& l : config.labels) {
    auto v = labels::parse_cube_vertex(l);
    require(v.has_value() && v->n == n && !seen[v->a], ErrorCode::kInvalidArgument,
            "configuration is not labeled by C^n");
    seen[v->a] = true;
  }
  return n;
}

namespace {

// Points indexed by the vertex mask.
std::vector<Vec> cube_by_mask(const PointConfig& config, std::size_t n) {
  std::vector<Vec> out(bit(n));
  for (std::size_t k = 0; k < config.size(); ++k) {
    out[labels::parse_cube_vertex(config.labels[k])->a] = config.coords[k];
  }
  return out;
}

// Parameters (s, u) with a + s(b - a) = c + u(d - c), if unique.
std::optional<std::pair<Rational, Rational>> line_meet(const Vec& a, const Vec& b, const Vec& c,
                                                       const Vec& d) {
  const std::size_t dim = a.size();
  Matrix m(dim, Vec(2));
  Vec rhs(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    m[j][0] = b[j] - a[j];
    m[j][1] = c[j] - d[j];
    rhs[j] = c[j] - a[j];
  }
  auto sol = solve_unique(m, rhs);
  if (!sol) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

// Parameter s with p = a + s(b - a), if p is on the line.
std::optional<Rational> line_parameter(const Vec& a, const Vec& b, const Vec& p) {
  Matrix m(a.size(), Vec(1));
  Vec rhs(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m[j][0] = b[j] - a[j];
    rhs[j] = p[j] - a[j];
  }
  auto sol = solve_unique(m, rhs);
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

Vec center_of(const std::vector<Vec>& pts, std::size_t n, const std::vector<std::string>& names) {
  require(n >= 2, ErrorCode::kPrecondition, "the center needs n >= 2");
  const Mask full = low_mask(n);
  // Diagonals {A, [n]-A} with A not containing the last coordinate.
  std::vector<Mask> diag;
  for (Mask a = 0; a < bit(n - 1); ++a) diag.push_back(a);
  auto name = [&](Mask a) { return names[a] + "-" + names[full & ~a]; };
  auto meet = line_meet(pts[diag[0]], pts[full & ~diag[0]], pts[diag[1]], pts[full & ~diag[1]]);
  if (!meet) fail(ErrorCode::kPrecondition, "diagonals are not concurrent: " + name(diag[1]));
  Vec o(pts[0].size());
  for (std::size_t j = 0; j < o.size(); ++j) {
    o[j] = pts[diag[0]][j] + meet->first * (pts[full & ~diag[0]][j] - pts[diag[0]][j]);
  }
  for (Mask a : diag) {
    auto s = line_parameter(pts[a], pts[full & ~a], o);
    if (!s || *s <= 0 || *s >= 1) {
      fail(ErrorCode::kPrecondition, "diagonals are not concurrent: " + name(a));
    }
  }
  return o;
}

std::vector<std::string> cube_names(std::size_t n) { return labels::cube_ground(n); }

// Points of the facet x_i = (plus ? 1 : -1), as an (n-1)-cube by mask.
std::vector<Vec> facet_points(const std::vector<Vec>& pts, std::size_t n, std::size_t i,
                              bool plus) {
  std::vector<Vec> out(bit(n - 1));
  for (Mask a = 0; a < bit(n); ++a) {
    bool in_a = a >> (i - 1) & 1;
    if (in_a == plus) continue;
    Mask low = a & low_mask(i - 1);
    Mask high = (a >> i) << (i - 1);
    out[low | high] = pts[a];
  }
  return out;
}

}  // namespace

Vec center(const PointConfig& config) {
  require(config.mode == PointMode::kAffine, ErrorCode::kInvalidArgument,
          "the center is defined for affine configurations");
  std::size_t n = cube_dimension(config);
  return center_of(cube_by_mask(config, n), n, cube_names(n));
}

PolarCenters facet_centers_polar(const PointConfig& config) {
  require(config.mode == PointMode::kAffine, ErrorCode::kInvalidArgument,
          "facet centers are defined for affine configurations");
  std::size_t n = cube_dimension(config);
  require(n >= 3, ErrorCode::kPrecondition, "the polar of the facet centers needs n >= 3");
  auto pts = cube_by_mask(config, n);
  PolarCenters out;
  out.center = center_of(pts, n, cube_names(n));
  out.polar.mode = PointMode::kAffine;
  auto sub_names = cube_names(n - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    out.plus.push_back(center_of(facet_points(pts, n, i, true), n - 1, sub_names));
    out.minus.push_back(center_of(facet_points(pts, n, i, false), n - 1, sub_names));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.polar.labels.push_back(labels::cross(i, false));
    out.polar.coords.push_back(out.plus[i - 1]);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    out.polar.labels.push_back(labels::cross(i, true));
    out.polar.coords.push_back(out.minus[i - 1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto s = line_parameter(out.plus[i], out.minus[i], out.center);
    require(s && *s > 0 && *s < 1, ErrorCode::kInvariant,
            "the center is not interior to O_" + std::to_string(i + 1) + "+ O_" +
                std::to_string(i + 1) + "-");
  }
  out.om = om_from_points(out.polar).om;
  require(find_isomorphism(out.om, cross_polytope(n)).has_value(), ErrorCode::kInvariant,
          "the facet centers do not form a cross-polytope");
  return out;
}

Vec edge_meeting_point(const PointConfig& config, std::size_t i) {
  require(config.mode == PointMode::kAffine, ErrorCode::kInvalidArgument,
          "meeting points are defined for affine configurations");
  std::size_t n = cube_dimension(config);
  require(i >= 1 && i <= n, ErrorCode::kInvalidArgument, "direction out of range");
  require(n >= 2, ErrorCode::kPrecondition, "meeting points need n >= 2");
  auto pts = cube_by_mask(config, n);
  auto names = cube_names(n);
  auto hom = [&](Mask a) {
    Vec h = pts[a];
    h.push_back(1);
    return h;
  };
  const Mask ib = bit(i - 1);
  std::vector<Mask> starts;
  for (Mask a = 0; a < bit(n); ++a) {
    if (!(a & ib)) starts.push_back(a);
  }
  const std::size_t dim = pts[0].size() + 1;
  // alpha P1 + beta P2 = gamma P3 + delta P4.
  Mask a0 = starts[0], a1 = starts[1];
  Matrix m(dim, Vec(4));
  Vec p1 = hom(a0), p2 = hom(a0 | ib), p3 = hom(a1), p4 = hom(a1 | ib);
  for (std::size_t j = 0; j < dim; ++j) {
    m[j][0] = p1[j];
    m[j][1] = p2[j];
    m[j][2] = -p3[j];
    m[j][3] = -p4[j];
  }
  auto ker = nullspace(m);
  require(ker.size() == 1, ErrorCode::kPrecondition,
          "edge lines " + names[a0] + "-" + names[a0 | ib] + " and " + names[a1] + "-" +
              names[a1 | ib] + " do not meet in a single point");
  Rational alpha = ker[0][0], beta = ker[0][1];
  Vec x(dim);
  for (std::size_t j = 0; j < dim; ++j) x[j] = alpha * p1[j] + beta * p2[j];
  if (alpha < 0) {
    for (auto& v : x) v = -v;
    alpha = -alpha;
    beta = -beta;
  }
  require(alpha > 0 && beta < 0, ErrorCode::kPrecondition,
          "the edge lines meet inside the edge " + names[a0] + "-" + names[a0 | ib]);
  for (Mask a : starts) {
    Vec q1 = hom(a), q2 = hom(a | ib);
    Matrix mm(dim, Vec(2));
    for (std::size_t j = 0; j < dim; ++j) {
      mm[j][0] = q1[j];
      mm[j][1] = q2[j];
    }
    auto sol = solve_unique(mm, x);
    if (!sol || (*sol)[0] <= 0 || (*sol)[1] >= 0) {
      fail(ErrorCode::kPrecondition,
           "edge line " + names[a] + "-" + names[a | ib] + " misses the meeting point");
    }
  }
  return x;
}

PointConfig adjoint_realization_from_cube(const PointConfig& config) {
  std::size_t n = cube_dimension(config);
  PointConfig pc;
  pc.mode = PointMode::kLinear;
  for (std::size_t i = 1; i <= n; ++i) {
    pc.labels.push_back(labels::infinity(i));
    pc.coords.push_back(edge_meeting_point(config, i));
  }
  auto pts = cube_by_mask(config, n);
  for (Mask a = 0; a < bit(n); ++a) {
    pc.labels.push_back(labels::cube_vertex(n, a));
    Vec h = pts[a];
    h.push_back(1);
    pc.coords.push_back(std::move(h));
  }
  return pc;
}

SeparatingTransform separating_transform(const PointConfig& config, std::size_t i) {
  std::size_t n = cube_dimension(config);
  require(config.dim() == n, ErrorCode::kPrecondition, "the cube must be full-dimensional");
  require(i >= 1 && i <= n, ErrorCode::kInvalidArgument, "direction out of range");
  auto pts = cube_by_mask(config, n);
  Vec o = center(config);
  // Affine functional h(x) = a.x + b vanishing on H_{i+}, negative on H_{i-},
  // in coordinates centered at O.
  const Mask ib = bit(i - 1);
  Matrix rows;
  for (Mask a = 0; a < bit(n); ++a) {
    if (a & ib) continue;
    Vec r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = pts[a][j] - o[j];
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  auto ker = nullspace(rows);
  require(ker.size() == 1, ErrorCode::kPrecondition, "the facet H_{i+} does not span a hyperplane");
  Vec h = ker[0];
  auto eval = [&](const Vec& x) {
    Rational v = h[n];
    for (std::size_t j = 0; j < n; ++j) v += h[j] * (x[j] - o[j]);
    return v;
  };
  Mask some_minus = ib;
  if (eval(pts[some_minus]) > 0) {
    for (auto& v : h) v = -v;
  }
  Rational eps = -eval(o);
  for (Mask a = 0; a < bit(n); ++a) {
    if (!(a & ib)) continue;
    Rational v = eval(pts[a]);
    require(v < 0, ErrorCode::kPrecondition, "the facet H_{i-} is not on one side of H_{i+}");
    if (-v < eps) eps = -v;
  }
  require(eps > 0, ErrorCode::kPrecondition, "the center is not interior");
  eps /= 2;
  // l(x, t) = h_lin . (x - O t) + (h_0 + eps) t.
  Matrix m = identity(n + 1);
  for (std::size_t j = 0; j < n; ++j) m[j][n] = -o[j];
  Rational tcoef = h[n] + eps;
  for (std::size_t j = 0; j < n; ++j) {
    m[n][j] = h[j];
    tcoef -= h[j] * o[j];
  }
  m[n][n] = tcoef;
  SeparatingTransform out;
  out.matrix = m;
  out.image = projective_map(config, m, false);
  return out;
}

Vec meeting_point_via_center(const PointConfig& config, std::size_t i) {
  std::size_t n = cube_dimension(config);
  SeparatingTransform st = separating_transform(config, i);
  // In the image the edge ends w_A, w_{A+i} are opposite vertices: relabel
  // A -> A (i not in A) and A -> [n] - (A - i) (i in A).
  const Mask ib = bit(i - 1);
  const Mask full = low_mask(n);
  PointConfig relabeled = st.image.config;
  for (auto& l : relabeled.labels) {
    Mask a = labels::parse_cube_vertex(l)->a;
    Mask b = (a & ib) ? (full & ~(a & ~ib)) : a;
    l = labels::cube_vertex(n, b);
  }
  Vec c = center(relabeled);
  c.push_back(1);
  auto inv = inverse(st.matrix);
  require(inv.has_value(), ErrorCode::kInvariant, "separating transform is singular");
  return mat_vec(*inv, c);
}

bool projectively_equal(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  Matrix m(u.size(), Vec(2));
  bool nonzero_u = false, nonzero_v = false;
  for (std::size_t j = 0; j < u.size(); ++j) {
    m[j][0] = u[j];
    m[j][1] = v[j];
    nonzero_u |= u[j] != 0;
    nonzero_v |= v[j] != 0;
  }
  return nonzero_u && nonzero_v && rank(m) == 1;
}

}  // namespace omcube
