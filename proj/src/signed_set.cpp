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

#include "omcube/signed_set.hpp"

#include <charconv>

#include "omcube/errors.hpp"

namespace omcube {

std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

Mask compress_bits(Mask value, Mask selector) {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(selector, [&](std::size_t i) {
    if (value >> i & 1) out |= bit(k);
    ++k;
  });
  return out;
}

Mask expand_bits(Mask value, Mask selector) {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(selector, [&](std::size_t i) {
    if (value >> k & 1) out |= bit(i);
    ++k;
  });
  return out;
}

Ground::Ground(std::vector<std::string> labels) : labels_(std::move(labels)) {
  require(labels_.size() <= kMaxGround, ErrorCode::kInvalidArgument,
          "ground sets are limited to 64 elements");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    require(!labels_[i].empty(), ErrorCode::kInvalidArgument, "empty element label");
    auto [it, inserted] = index_.emplace(labels_[i], i);
    require(inserted, ErrorCode::kInvalidArgument,
            "duplicate element label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> Ground::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ground::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) fail(ErrorCode::kInvalidArgument, "label '" + std::string(label) + "' is not in the ground set");
  return *i;
}

Mask Ground::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> Ground::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels_.at(i)); });
  return out;
}

Ground Ground::subset(Mask m) const { return Ground(labels_of(m & all())); }

SignedSet SignedSet::make(Mask plus, Mask minus) {
  require((plus & minus) == 0, ErrorCode::kInvalidArgument,
          "signed set parts must be disjoint");
  return SignedSet{plus, minus};
}

SignedSet SignedSet::with_sign(std::size_t e, int s) const {
  SignedSet out{plus & ~bit(e), minus & ~bit(e)};
  if (s > 0) out.plus |= bit(e);
  if (s < 0) out.minus |= bit(e);
  return out;
}

namespace {

// Compares the ascending index lists encoded by two masks lexicographically.
int compare_lists(Mask a, Mask b) {
  if (a == b) return 0;
  Mask d = (a ^ b) & (~(a ^ b) + 1);
  if (a & d) {
    // a continues with d; b either ends here (prefix, smaller) or continues
    // with something larger than d.
    return (b & ~(d | (d - 1))) == 0 ? 1 : -1;
  }
  return (a & ~(d | (d - 1))) == 0 ? -1 : 1;
}

}  // namespace

bool operator<(const SignedSet& a, const SignedSet& b) {
  int c = compare_lists(a.plus, b.plus);
  if (c != 0) return c < 0;
  return compare_lists(a.minus, b.minus) < 0;
}

SignedSet compose(const SignedSet& x, const SignedSet& y) {
  Mask free = ~x.support();
  return SignedSet{x.plus | (y.plus & free), x.minus | (y.minus & free)};
}

bool orthogonal(const SignedSet& x, const SignedSet& y) {
  Mask same = (x.plus & y.plus) | (x.minus & y.minus);
  Mask opposite = (x.plus & y.minus) | (x.minus & y.plus);
  if (same == 0 && opposite == 0) return true;
  return same != 0 && opposite != 0;
}

SignedSet reorient(const SignedSet& x, Mask a) {
  return SignedSet{(x.plus & ~a) | (x.minus & a), (x.minus & ~a) | (x.plus & a)};
}

Mask separation(const SignedSet& x, const SignedSet& y) {
  return (x.plus & y.minus) | (x.minus & y.plus);
}

SignedSet canonical_rep(const SignedSet& x) {
  SignedSet neg = x.negated();
  return neg < x ? neg : x;
}

SignedSet restrict_to(const SignedSet& x, Mask a) {
  return SignedSet{compress_bits(x.plus, a), compress_bits(x.minus, a)};
}

SignedSet map_signed(const SignedSet& x, const std::vector<std::size_t>& image,
                     Mask flips) {
  SignedSet out;
  SignedSet y = reorient(x, flips);
  for_each_bit(y.plus, [&](std::size_t i) { out.plus |= bit(image[i]); });
  for_each_bit(y.minus, [&](std::size_t i) { out.minus |= bit(image[i]); });
  return out;
}

SignedVector::SignedVector(std::shared_ptr<const Ground> ground, SignedSet set)
    : ground_(std::move(ground)), set_(set) {
  require(ground_ != nullptr, ErrorCode::kInvalidArgument, "null ground set");
  require((set_.plus & set_.minus) == 0, ErrorCode::kInvalidArgument,
          "signed set parts must be disjoint");
  require((set_.support() & ~ground_->all()) == 0, ErrorCode::kInvalidArgument,
          "signed set has elements outside its ground set");
}

SignedVector SignedVector::from_labels(std::shared_ptr<const Ground> ground,
                                       const std::vector<std::string>& plus,
                                       const std::vector<std::string>& minus) {
  Mask p = ground->mask_of(plus);
  Mask m = ground->mask_of(minus);
  return SignedVector(ground, SignedSet::make(p, m));
}

void SignedVector::check_same_ground(const SignedVector& other) const {
  if (ground_ != other.ground_ && !(*ground_ == *other.ground_)) {
    fail(ErrorCode::kInvalidArgument, "signed sets live on different ground sets");
  }
}

SignedVector SignedVector::compose(const SignedVector& other) const {
  check_same_ground(other);
  return SignedVector(ground_, omcube::compose(set_, other.set_));
}

bool SignedVector::orthogonal(const SignedVector& other) const {
  check_same_ground(other);
  return omcube::orthogonal(set_, other.set_);
}

SignedVector SignedVector::reorient(const std::vector<std::string>& labels) const {
  return SignedVector(ground_, omcube::reorient(set_, ground_->mask_of(labels)));
}

SignedVector SignedVector::restrict_to(const std::vector<std::string>& labels) const {
  Mask a = ground_->mask_of(labels);
  auto sub = std::make_shared<const Ground>(ground_->subset(a));
  return SignedVector(sub, omcube::restrict_to(set_, a));
}

SignedVector SignedVector::canonical() const {
  return SignedVector(ground_, canonical_rep(set_));
}

SignedVector SignedVector::negated() const {
  return SignedVector(ground_, set_.negated());
}

bool SignedVector::operator==(const SignedVector& other) const {
  return *ground_ == *other.ground_ && set_ == other.set_;
}

namespace labels {

std::string cross(std::size_t i, bool primed) {
  return std::to_string(i) + (primed ? "'" : "");
}

std::string cube_vertex(std::size_t n, Mask a) {
  std::string s = "v";
  for (std::size_t i = 0; i < n; ++i) s += (a >> i & 1) ? '-' : '+';
  return s;
}

std::string infinity(std::size_t i) { return "y" + std::to_string(i); }

std::optional<CubeVertex> parse_cube_vertex(std::string_view label) {
  if (label.size() < 2 || label[0] != 'v') return std::nullopt;
  CubeVertex out{label.size() - 1, 0};
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] == '-') {
      out.a |= bit(i - 1);
    } else if (label[i] != '+') {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<std::size_t> parse_infinity(std::string_view label) {
  if (label.size() < 2 || label[0] != 'y') return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), value);
  if (ec != std::errc() || ptr != label.data() + label.size() || value == 0) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string> cube_ground(std::size_t n) {
  std::vector<std::string> out;
  for (Mask a = 0; a < (Mask{1} << n); ++a) out.push_back(cube_vertex(n, a));
  return out;
}

std::vector<std::string> adjoint_ground(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(infinity(i));
  for (auto& v : cube_ground(n)) out.push_back(std::move(v));
  return out;
}

std::vector<std::string> cross_ground(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(cross(i, false));
  for (std::size_t i = 1; i <= n; ++i) out.push_back(cross(i, true));
  return out;
}

}  // namespace labels

}  // namespace omcube
