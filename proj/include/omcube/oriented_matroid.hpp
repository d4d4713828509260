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

// Oriented matroids given by their signed circuits and signed cocircuits.
//
// Both families are always held in full, as sorted canonical representatives
// (one of each pair +-X). Whichever family is not supplied is derived from the
// other by hyperplane (or circuit) enumeration and sign propagation; the cost
// is exponential in the rank, which is fine for ground sets of a few dozen
// elements.

#ifndef OMCUBE_ORIENTED_MATROID_HPP_
#define OMCUBE_ORIENTED_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "omcube/signed_set.hpp"

namespace omcube {

// Sign of the chirotope on each r-subset, keyed by the subset mask.
using Chirotope = std::unordered_map<Mask, std::int8_t>;

struct AxiomViolation {
  std::string kind;  // "empty", "incomparable", "elimination", "orthogonality"
  std::string detail;
};

class OrientedMatroid {
 public:
  OrientedMatroid() = default;

  static OrientedMatroid from_circuits(Ground ground, const std::vector<SignedSet>& circuits);
  static OrientedMatroid from_cocircuits(Ground ground, const std::vector<SignedSet>& cocircuits);
  // Both families given; they are canonicalized and checked for orthogonality.
  static OrientedMatroid from_families(Ground ground, const std::vector<SignedSet>& circuits,
                                       const std::vector<SignedSet>& cocircuits);
  // `chi` must be defined (possibly zero) on every r-subset.
  static OrientedMatroid from_chirotope(Ground ground, int rank, const Chirotope& chi);

  const Ground& ground() const { return *ground_; }
  const std::shared_ptr<const Ground>& ground_ptr() const { return ground_; }
  std::size_t size() const { return ground_ ? ground_->size() : 0; }
  Mask all() const { return ground_ ? ground_->all() : 0; }
  int rank() const { return rank_; }
  const std::vector<SignedSet>& circuits() const { return circuits_; }
  const std::vector<SignedSet>& cocircuits() const { return cocircuits_; }

  bool has_circuit(const SignedSet& x) const;
  bool has_cocircuit(const SignedSet& x) const;

  // Matroid closure and rank of element subsets.
  Mask closure(Mask s) const;
  int rank_of(Mask s) const;
  bool is_independent(Mask s) const;

  // Corank-1 flats (cocircuit zero sets) and corank-2 flats, sorted.
  std::vector<Mask> hyperplanes() const;
  std::vector<Mask> hyperlines() const;
  // Every flat, by closing the hyperplanes under intersection.
  std::vector<Mask> flats() const;
  bool is_flat(Mask s) const { return closure(s) == s; }

  // Cocircuits X with L in X^0 (both signs, unrestricted). Throws if L is not a
  // hyperline.
  std::vector<SignedSet> cocircuits_through(Mask hyperline) const;
  // The rank-2 contraction by a hyperline, as an oriented matroid on E \ L.
  OrientedMatroid contract(Mask t) const;
  OrientedMatroid restriction(Mask s) const;
  OrientedMatroid deletion(Mask t) const { return restriction(all() & ~t); }

  bool is_acyclic() const;
  // Cocircuits with an empty negative part, both signings considered.
  std::vector<SignedSet> positive_cocircuits() const;
  // Every covector, as a sorted list (zero vector included). Throws
  // kScaleGuard once more than `limit` covectors have been produced.
  std::vector<SignedSet> covectors(std::size_t limit = 2'000'000) const;

  // Relabel element i as labels[i].
  OrientedMatroid relabeled(const std::vector<std::string>& labels) const;
  // Reorder to the given ground; the labels must be a permutation of ours.
  OrientedMatroid reordered(const std::vector<std::string>& labels) const;
  OrientedMatroid reoriented(Mask a) const;

  bool operator==(const OrientedMatroid& other) const;

  // Every stored circuit against every stored cocircuit.
  bool families_orthogonal() const;

 private:
  void finalize();

  std::shared_ptr<const Ground> ground_;
  std::vector<SignedSet> circuits_;
  std::vector<SignedSet> cocircuits_;
  int rank_ = 0;
};

// Checks the signed circuit axioms on a family (negation is implicit).
std::vector<AxiomViolation> validate_circuit_axioms(const Ground& ground,
                                                    const std::vector<SignedSet>& family);

// Sorted, deduplicated canonical representatives.
std::vector<SignedSet> canonical_family(const std::vector<SignedSet>& family);

// Family expanded to both signs, sorted.
std::vector<SignedSet> symmetric_family(const std::vector<SignedSet>& family);

// Signs the given supports so that every result is orthogonal to `other`
// (which must contain the full dual family). Throws kInvariant if some support
// cannot be signed consistently.
std::vector<SignedSet> sign_supports(const std::vector<Mask>& supports,
                                     const std::vector<SignedSet>& other);

// The face lattice of an acyclic oriented matroid: zero sets of positive
// covectors, sorted by size then value.
struct FaceLattice {
  std::vector<Mask> faces;
  std::vector<Mask> facets;    // maximal faces distinct from the ground set
  std::vector<Mask> vertices;  // minimal nonempty faces
};
FaceLattice lv_face_lattice(const OrientedMatroid& om);

// True when the lattice is boolean on its vertices: every face is determined
// by the vertices it contains and every set of vertices occurs.
bool is_simplex_lattice(const FaceLattice& lattice);

}  // namespace omcube

#endif  // OMCUBE_ORIENTED_MATROID_HPP_
