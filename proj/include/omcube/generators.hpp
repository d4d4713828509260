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

// Constructors for the cross-polytope O_n, the real cube Q_n, its rectangles
// and smallest cocircuits, the canonical adjoint and the extension O_n + 0.
//
// Cube vertex v_A = (-1 on A, +1 elsewhere) sits at index A of the cube
// ground; the adjoint ground lists y_1..y_n first, so v_A sits at n + A.

#ifndef OMCUBE_GENERATORS_HPP_
#define OMCUBE_GENERATORS_HPP_

#include <string>
#include <vector>

#include "omcube/oriented_matroid.hpp"

namespace omcube {

inline constexpr std::size_t kMaxCubeN = 5;

OrientedMatroid cross_polytope(std::size_t n);

struct CrossPolytopeReport {
  OrientedMatroid om;
  // The alternative signing ({i,j},{i',j'}) of the circuit supports, and
  // whether it is orthogonal to the cocircuits (it is not).
  std::vector<SignedSet> alternative_circuits;
  bool alternative_orthogonal = false;
  std::string note;
};
CrossPolytopeReport cross_polytope_report(std::size_t n);

OrientedMatroid real_cube(std::size_t n);

// R(v; A, B) = ({v, -(A+B)v}, {-Av, -Bv}) over the cube ground, canonical and
// deduplicated.
std::vector<SignedSet> rectangles(std::size_t n);

struct NamedCocircuit {
  std::string name;  // "H1+", "H12-" ...
  Mask zero_set = 0;  // the hyperplane
  SignedSet cocircuit;
};
// Facets H_{i+-} and, optionally, skew facets H_{ij+-}, signed by evaluating
// x_i -+ 1 and x_i -+ x_j on the vertices.
std::vector<NamedCocircuit> smallest_cocircuits(std::size_t n, bool include_skew);
// Vertex masks of the facets H_{i+} (x_i = 1) and H_{i-} (x_i = -1), i 1-based.
Mask facet_mask(std::size_t n, std::size_t i, bool plus);

OrientedMatroid canonical_adjoint(std::size_t n);

// n >= 1; ground 1..n, 1'..n', 0.
OrientedMatroid cross_polytope_plus_zero(std::size_t n);

// Cocircuits of O_n in the fixed order Y_1..Y_n, X_A' (A in bitmask order),
// over cross_ground(n); Y_i = ({i},{i'}), X_A' = (([n]-A) + A', {}).
std::vector<SignedSet> cross_polytope_half_family(std::size_t n);

// X~[i] = ({v_A : i not in A} + {y_i}, {}) and X~[i'] = ({v_A : i in A}, {y_i})
// over adjoint_ground(n); i is 1-based.
SignedSet adjoint_principal_cocircuit(std::size_t n, std::size_t i, bool primed);
// X~[0] = ({v_A}, {}).
SignedSet adjoint_zero_cocircuit(std::size_t n);

}  // namespace omcube

#endif  // OMCUBE_GENERATORS_HPP_
