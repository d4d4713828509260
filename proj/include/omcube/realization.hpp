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

// Exact point and vector configurations and the geometric constructions on
// realized cubes and adjoints.
//
// Homogeneous convention: an affine point x in R^d is the vector (x, 1) of
// R^(d+1); a point at infinity has last coordinate 0. Finite points are always
// normalized to a positive last coordinate.

#ifndef OMCUBE_REALIZATION_HPP_
#define OMCUBE_REALIZATION_HPP_

#include <string>
#include <vector>

#include "omcube/oriented_matroid.hpp"
#include "omcube/rational.hpp"

namespace omcube {

enum class PointMode { kAffine, kLinear };

struct PointConfig {
  PointMode mode = PointMode::kAffine;
  std::vector<std::string> labels;
  std::vector<Vec> coords;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return coords.empty() ? 0 : coords[0].size(); }
  // Throws kInvalidArgument on ragged coordinates, duplicate labels or an
  // empty configuration.
  void validate() const;
  const Vec& at(const std::string& label) const;
};

// Columns of the dependency matrix: (x, 1) in affine mode, x in linear mode.
Matrix lifted_matrix(const PointConfig& config);

struct Realized {
  OrientedMatroid om;
  Chirotope chirotope;
  // One primitive integer dependence per circuit, aligned with om.circuits();
  // its sign pattern is the circuit.
  std::vector<std::vector<Integer>> witnesses;
  // Pairs of parallel (or coincident) elements.
  std::vector<std::pair<std::string, std::string>> parallel;
};

// Throws kInvariant if a witness fails to verify against the input matrix.
Realized om_from_points(const PointConfig& config);
// Determinant signs of the rank-subsets of the row space, keyed by mask.
Chirotope chirotope(const PointConfig& config, int* rank_out = nullptr);

// Standard configurations.
PointConfig cube_points(std::size_t n);            // C^n, affine
PointConfig cross_points(std::size_t n);           // +-e_i, affine
PointConfig lifted_adjoint_vectors(std::size_t n); // (e_i,0) and (v_A,1), linear
// y_i = e_i, b = 0 in R^n.
PointConfig standard_simplex(std::size_t n);

// y_i -> y_i, X_A' -> barycenter of b and {y_j : j not in A}. `simplex` lists
// y_1..y_n followed by b.
PointConfig barycentric_adjoint(std::size_t n, const PointConfig& simplex);
// X_A' -> aff({y_i : i in A} + c) meet conv face of {y_j : j not in A} + b.
PointConfig interior_point_adjoint(std::size_t n, const PointConfig& simplex, const Vec& c);
// Barycentric coordinates of p with respect to an affinely independent
// simplex; nullopt when p is not in the affine hull.
std::optional<Vec> barycentric_coordinates(const PointConfig& simplex, const Vec& p);

struct ProjectiveImage {
  PointConfig config;
  // Labels whose homogeneous image had a negative last coordinate.
  std::vector<std::string> flipped;
};
// Applies the (d+1)x(d+1) matrix to the homogenized points. With
// `same_side` set, every image must have last coordinate of one sign.
// Throws kPrecondition on a singular matrix or an inadmissible image.
ProjectiveImage projective_map(const PointConfig& config, const Matrix& m,
                               bool same_side = true);

// Cube helpers: `config` is affine and labeled by the vertex labels of C^n.
std::size_t cube_dimension(const PointConfig& config);
Vec center(const PointConfig& config);

struct PolarCenters {
  Vec center;
  std::vector<Vec> plus;   // O_{i+}
  std::vector<Vec> minus;  // O_{i-}
  PointConfig polar;       // labels "i" -> O_{i+}, "i'" -> O_{i-}
  OrientedMatroid om;
};
// Requires n >= 3; checks that O lies strictly inside every O_{i+}O_{i-} and
// that the polar is a cross-polytope.
PolarCenters facet_centers_polar(const PointConfig& config);

// Homogeneous meeting point of the edge lines of direction i (1-based),
// normalized to alpha * (w_A,1) + beta * (w_{A+i},1) with alpha > 0 > beta.
Vec edge_meeting_point(const PointConfig& config, std::size_t i);

// Linear configuration on adjoint labels: y_i -> meeting point i,
// v_A -> (w_A, 1).
PointConfig adjoint_realization_from_cube(const PointConfig& config);

struct SeparatingTransform {
  Matrix matrix;
  ProjectiveImage image;
};
// A projective map sending a plane that separates H_{i+} from H_{i-} and the
// center to infinity.
SeparatingTransform separating_transform(const PointConfig& config, std::size_t i);
// The meeting point of the direction-i edges obtained by pulling back the
// center of the transformed cube.
Vec meeting_point_via_center(const PointConfig& config, std::size_t i);

// True if u and v are nonzero multiples of each other.
bool projectively_equal(const Vec& u, const Vec& v);

}  // namespace omcube

#endif  // OMCUBE_REALIZATION_HPP_
