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

// Localizations and single-element extensions, cube and adjoint recognition,
// and the correspondence between oriented cubes and adjoints of O_n.

#ifndef OMCUBE_EXTENSIONS_HPP_
#define OMCUBE_EXTENSIONS_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "omcube/oriented_matroid.hpp"

namespace omcube {

// A sign for each member of a half family D1 of the cocircuits (D = D1 + -D1).
struct Localization {
  OrientedMatroid base;
  std::vector<SignedSet> half_family;
  std::vector<std::int8_t> sigma;
  // Canonical representative -> position in half_family.
  std::unordered_map<SignedSet, std::size_t, SignedSetHash> index;

  // Sign of an arbitrary cocircuit of the base (either orientation).
  int sign_of(const SignedSet& cocircuit) const;
  // One character per entry: '+', '-' or '0'.
  std::string sigma_string() const;
};

// Half family = the stored canonical cocircuits, in storage order.
Localization make_localization(const OrientedMatroid& base, const std::vector<std::int8_t>& sigma);
// Throws kInvalidArgument unless `half` covers each cocircuit exactly once and
// sigma has matching length and values in {-1, 0, 1}.
Localization make_localization(const OrientedMatroid& base, const std::vector<SignedSet>& half,
                               const std::vector<std::int8_t>& sigma);
std::vector<std::int8_t> parse_sigma(const std::string& text);

struct LocalizationReport {
  bool triplets_ok = true;  // betweenness triplets on every hyperline
  bool cyclic_ok = true;    // point insertion in every cyclic rank-2 contraction
  std::size_t hyperlines = 0;
  std::vector<std::string> failures;
  bool ok() const { return triplets_ok && cyclic_ok; }
};
LocalizationReport check_localization(const Localization& loc);

// Precomputes the rank-2 contractions of a base once, for checking many sign
// assignments on the same half family.
class LocalizationChecker {
 public:
  LocalizationChecker(const OrientedMatroid& base, const std::vector<SignedSet>& half);
  LocalizationReport check(const std::vector<std::int8_t>& sigma) const;
  bool accepts(const std::vector<std::int8_t>& sigma) const;
  std::size_t half_size() const { return half_size_; }
  // Cocircuits through the new element: X o Y for neighbours X, Y of a cycle on
  // which sigma has no zero and changes sign between X and Y.
  std::vector<SignedSet> new_cocircuits(const std::vector<std::int8_t>& sigma) const;

 private:
  struct Entry {
    SignedSet cocircuit;
    std::size_t slot;  // position in the half family
    int sign;          // +1 if the cocircuit equals half[slot], -1 if its negative
  };
  struct Line {
    Mask hyperline;
    std::vector<Entry> members;      // both signs of every cocircuit through the line
    std::vector<std::uint16_t> cycle;  // members in cyclic order
    // (x, y, z) with z strictly between x and y.
    std::vector<std::array<std::uint16_t, 3>> triplets;
  };
  bool line_triplets_ok(const Line& line, const std::vector<std::int8_t>& sigma) const;
  bool line_cyclic_ok(const Line& line, const std::vector<std::int8_t>& sigma) const;

  std::size_t half_size_ = 0;
  std::vector<Line> lines_;
  std::shared_ptr<const Ground> ground_;
};

// The single-element extension by a new element `label`. Throws kPrecondition
// if `loc` is not a localization.
OrientedMatroid extend(const Localization& loc, const std::string& label);

// Cube recognition over the vertex labels of C^n (any order).
struct CubeReport {
  std::size_t n = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
CubeReport check_oriented_cube(const OrientedMatroid& om);
bool is_oriented_cube(const OrientedMatroid& om);

enum class AdjointMode { kWeak, kStrong };
struct AdjointReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// The ground must be the labels y_1..y_n and v_A (any order). Weak: rank n+1
// and the cocircuits X~[i], X~[i']. Strong adds, for every flat F of O_n, that
// the members of D1 vanishing on F form a flat of rank r - rank(F).
AdjointReport check_adjoint(const OrientedMatroid& om, std::size_t n, AdjointMode mode);
bool is_adjoint(const OrientedMatroid& om, std::size_t n, AdjointMode mode);

enum class FlatClass { kParallel, kAntiParallel };
// Compares F with its mirror image under v -> v with coordinate i reversed,
// looking only at the cube labels of F. Throws kInvariant when F meets its
// mirror without being equal to it, kPrecondition when F is not a flat.
FlatClass classify_flat(const OrientedMatroid& om, Mask flat, std::size_t i);

// The point-at-infinity localization of direction i on a cube (possibly
// already extended by some y_j).
Localization infinity_localization(const OrientedMatroid& om, std::size_t i);
// Extends by y_i and checks that ({-i v, y_i}, {v}) is a circuit for v in
// H_{i+}. On a cube the hyperplane and cocircuit counts must be unchanged; on a
// cube already extended by some y_j they may grow only by the hyperplane
// spanned by the points at infinity.
OrientedMatroid extend_by_infinity(const OrientedMatroid& om, std::size_t i);

// Extends by y_1..y_n in the given order (default 1..n) and reorders to the
// adjoint ground.
OrientedMatroid cube_to_adjoint(const OrientedMatroid& cube, std::vector<std::size_t> order = {});
OrientedMatroid adjoint_to_cube(const OrientedMatroid& adjoint);
// Reverses the signs on the facet H_{i-}.
OrientedMatroid reorient_facet(const OrientedMatroid& cube, std::size_t i);

// The restriction to the hyperplane of X~[i] (or X~[i']), relabeled onto the
// adjoint ground of O_{n-1} by dropping coordinate i.
OrientedMatroid adjoint_facet_restriction(const OrientedMatroid& adjoint, std::size_t n,
                                          std::size_t i, bool primed);

enum class CovectorScope { kAll, kCocircuitsAndPrincipal };
struct CovectorCheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // sigma strings that are not localizations
  bool ok() const { return failures.empty(); }
};
// Every covector in scope of an adjoint of O_n must be a localization in O_n.
// The adjoint is read on the adjoint ground order, entry k matching the k-th
// member of cross_polytope_half_family(n).
CovectorCheckReport covector_localization_check(const OrientedMatroid& adjoint, std::size_t n,
                                           CovectorScope scope);

// Principal covectors X~[e_1] o ... o X~[e_n], e_i in {i, i'}, and their
// negatives, on the adjoint ground.
std::vector<SignedSet> principal_covectors(std::size_t n);

}  // namespace omcube

#endif  // OMCUBE_EXTENSIONS_HPP_
