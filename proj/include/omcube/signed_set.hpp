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

// Signed subsets of a finite, ordered, labeled ground set.
//
// A ground set is an ordered list of at most 64 distinct labels. Element
// subsets are bitmasks over the index space of that list and a signed set is a
// pair of disjoint masks (X+, X-). All the combinatorial machinery of the
// library works on these masks; labels only matter at the boundaries (JSON,
// relabeling, isomorphism reports).

#ifndef OMCUBE_SIGNED_SET_HPP_
#define OMCUBE_SIGNED_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace omcube {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxGround = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Mask low_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<std::size_t> bits_of(Mask m);

// Packs the bits of `value` selected by `selector` into the low bits, keeping
// their relative order (software pext).
Mask compress_bits(Mask value, Mask selector);
// Inverse of compress_bits on the selected positions (software pdep).
Mask expand_bits(Mask value, Mask selector);

class Ground {
 public:
  Ground() = default;
  explicit Ground(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  Mask all() const { return low_mask(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws kInvalidArgument when the label is not in the ground set.
  std::size_t index_of(std::string_view label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  // The sub-ground on the selected indices, in index order.
  Ground subset(Mask m) const;

  bool operator==(const Ground& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct SignedSet {
  Mask plus = 0;
  Mask minus = 0;

  // Throws kInvalidArgument if the parts overlap.
  static SignedSet make(Mask plus, Mask minus);

  Mask support() const { return plus | minus; }
  Mask zeros(Mask ground) const { return ground & ~support(); }
  bool empty() const { return support() == 0; }
  bool is_positive() const { return minus == 0 && plus != 0; }
  int sign(std::size_t e) const {
    return (plus >> e & 1) ? 1 : ((minus >> e & 1) ? -1 : 0);
  }
  SignedSet negated() const { return SignedSet{minus, plus}; }
  SignedSet with_sign(std::size_t e, int s) const;

  bool operator==(const SignedSet&) const = default;
};

// Lexicographic order on (sorted plus list, sorted minus list); this is the
// storage order of every family in the library.
bool operator<(const SignedSet& a, const SignedSet& b);

struct SignedSetHash {
  std::size_t operator()(const SignedSet& s) const {
    return std::hash<Mask>{}(s.plus * 0x9E3779B97F4A7C15ull ^ s.minus);
  }
};

// (X o Y)(e) = X(e) if X(e) != 0, else Y(e).
SignedSet compose(const SignedSet& x, const SignedSet& y);
// True iff the supports are disjoint, or the products X(e)Y(e) on the common
// support take both signs.
bool orthogonal(const SignedSet& x, const SignedSet& y);
// Flips the signs on A.
SignedSet reorient(const SignedSet& x, Mask a);
// Separation set S(X, Y) = {e : X(e) = -Y(e) != 0}.
Mask separation(const SignedSet& x, const SignedSet& y);
// Whichever of X, -X is smaller in the storage order.
SignedSet canonical_rep(const SignedSet& x);
// Restriction to A; the result lives on the index space of A (compressed).
SignedSet restrict_to(const SignedSet& x, Mask a);
// Maps every element through `image` (indices into the target ground) and
// flips the elements of `flips` (indices of the source).
SignedSet map_signed(const SignedSet& x, const std::vector<std::size_t>& image,
                     Mask flips = 0);

// A signed set bound to its ground set. This is the checked surface used at the
// API boundary; operations on mismatched grounds throw kInvalidArgument.
class SignedVector {
 public:
  SignedVector(std::shared_ptr<const Ground> ground, SignedSet set);
  static SignedVector from_labels(std::shared_ptr<const Ground> ground,
                                  const std::vector<std::string>& plus,
                                  const std::vector<std::string>& minus);

  const Ground& ground() const { return *ground_; }
  const std::shared_ptr<const Ground>& ground_ptr() const { return ground_; }
  const SignedSet& set() const { return set_; }
  std::vector<std::string> plus_labels() const { return ground_->labels_of(set_.plus); }
  std::vector<std::string> minus_labels() const { return ground_->labels_of(set_.minus); }

  SignedVector compose(const SignedVector& other) const;
  bool orthogonal(const SignedVector& other) const;
  SignedVector reorient(const std::vector<std::string>& labels) const;
  SignedVector restrict_to(const std::vector<std::string>& labels) const;
  SignedVector canonical() const;
  SignedVector negated() const;

  bool operator==(const SignedVector& other) const;

 private:
  void check_same_ground(const SignedVector& other) const;

  std::shared_ptr<const Ground> ground_;
  SignedSet set_;
};

// Label grammar.
namespace labels {

// "3" or "3'" for the cross-polytope elements.
std::string cross(std::size_t i, bool primed);
// "v" followed by n sign characters; character i-1 is '-' iff i is in A.
std::string cube_vertex(std::size_t n, Mask a);
// "y3".
std::string infinity(std::size_t i);
inline const std::string kExtensionPoint = "0";

struct CubeVertex {
  std::size_t n;
  Mask a;
};
std::optional<CubeVertex> parse_cube_vertex(std::string_view label);
std::optional<std::size_t> parse_infinity(std::string_view label);

std::vector<std::string> cube_ground(std::size_t n);
// y1..yn followed by the cube vertices in bitmask order.
std::vector<std::string> adjoint_ground(std::size_t n);
// 1..n followed by 1'..n'.
std::vector<std::string> cross_ground(std::size_t n);

}  // namespace labels

}  // namespace omcube

#endif  // OMCUBE_SIGNED_SET_HPP_
