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

#include "omcube/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace omcube {

namespace {

using Signature = std::vector<std::size_t>;

// Per element: how many circuits and cocircuits of each support size contain
// it. Invariant under relabeling and reorientation.
std::vector<Signature> signatures(const OrientedMatroid& om) {
  const std::size_t n = om.size();
  std::vector<Signature> sig(n, Signature(2 * (n + 1), 0));
  for (const auto& c : om.circuits()) {
    std::size_t k = static_cast<std::size_t>(popcount(c.support()));
    for_each_bit(c.support(), [&](std::size_t e) { ++sig[e][k]; });
  }
  for (const auto& d : om.cocircuits()) {
    std::size_t k = static_cast<std::size_t>(popcount(d.support()));
    for_each_bit(d.support(), [&](std::size_t e) { ++sig[e][n + 1 + k]; });
  }
  return sig;
}

class Search {
 public:
  Search(const OrientedMatroid& a, const OrientedMatroid& b, bool reorient)
      : a_(a), b_(b), reorient_(reorient), n_(a.size()) {
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
    for (const auto& c : b.circuits()) circ_b_.insert(c);
    for (const auto& d : b.cocircuits()) cocirc_b_.insert(d);
    order_elements();
  }

  std::optional<Isomorphism> run() {
    std::map<Signature, int> ca, cb;
    for (const auto& s : sig_a_) ++ca[s];
    for (const auto& s : sig_b_) ++cb[s];
    if (ca != cb) return std::nullopt;
    image_.assign(n_, n_);
    used_.assign(n_, false);
    flips_ = 0;
    if (dfs(0)) return Isomorphism{image_, flips_};
    return std::nullopt;
  }

 private:
  // Elements are placed in an order that completes many circuits early: each
  // next element maximizes the number of families it shares with the placed
  // ones, ties broken by rarity of its signature.
  void order_elements() {
    std::map<Signature, int> freq;
    for (const auto& s : sig_a_) ++freq[s];
    std::vector<bool> placed(n_, false);
    Mask placed_mask = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      long best_score = -1;
      int best_freq = 0;
      for (std::size_t e = 0; e < n_; ++e) {
        if (placed[e]) continue;
        long score = 0;
        for (const auto& c : a_.circuits()) {
          if ((c.support() >> e & 1) && (c.support() & placed_mask)) ++score;
        }
        int f = freq[sig_a_[e]];
        if (best == n_ || score > best_score || (score == best_score && f < best_freq)) {
          best = e;
          best_score = score;
          best_freq = f;
        }
      }
      placed[best] = true;
      placed_mask |= bit(best);
      order_.push_back(best);
    }
    // Families whose support is complete once position k is placed.
    std::vector<std::size_t> pos(n_);
    for (std::size_t k = 0; k < n_; ++k) pos[order_[k]] = k;
    circ_at_.assign(n_, {});
    cocirc_at_.assign(n_, {});
    auto last_pos = [&](Mask s) {
      std::size_t m = 0;
      for_each_bit(s, [&](std::size_t e) { m = std::max(m, pos[e]); });
      return m;
    };
    for (const auto& c : a_.circuits()) circ_at_[last_pos(c.support())].push_back(c);
    for (const auto& d : a_.cocircuits()) cocirc_at_[last_pos(d.support())].push_back(d);
  }

  bool families_ok(std::size_t k) const {
    for (const auto& c : circ_at_[k]) {
      if (!circ_b_.count(canonical_rep(map_signed(c, image_, flips_)))) return false;
    }
    for (const auto& d : cocirc_at_[k]) {
      if (!cocirc_b_.count(canonical_rep(map_signed(d, image_, flips_)))) return false;
    }
    return true;
  }

  bool dfs(std::size_t k) {
    if (k == n_) return true;
    std::size_t e = order_[k];
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || sig_a_[e] != sig_b_[t]) continue;
      used_[t] = true;
      image_[e] = t;
      int max_flip = (reorient_ && k > 0) ? 2 : 1;
      for (int f = 0; f < max_flip; ++f) {
        if (f) {
          flips_ |= bit(e);
        } else {
          flips_ &= ~bit(e);
        }
        if (families_ok(k) && dfs(k + 1)) return true;
      }
      flips_ &= ~bit(e);
      used_[t] = false;
      image_[e] = n_;
    }
    return false;
  }

  const OrientedMatroid& a_;
  const OrientedMatroid& b_;
  bool reorient_;
  std::size_t n_;
  std::vector<Signature> sig_a_, sig_b_;
  std::unordered_set<SignedSet, SignedSetHash> circ_b_, cocirc_b_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<SignedSet>> circ_at_, cocirc_at_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  Mask flips_ = 0;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const OrientedMatroid& a, const OrientedMatroid& b,
                                            bool reorient) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.circuits().size() != b.circuits().size() ||
      a.cocircuits().size() != b.cocircuits().size()) {
    return std::nullopt;
  }
  return Search(a, b, reorient).run();
}

OrientedMatroid apply_isomorphism(const OrientedMatroid& a, const Isomorphism& iso,
                                  const Ground& target) {
  std::vector<SignedSet> circ, cocirc;
  for (const auto& c : a.circuits()) circ.push_back(map_signed(c, iso.image, iso.flips));
  for (const auto& d : a.cocircuits()) cocirc.push_back(map_signed(d, iso.image, iso.flips));
  return OrientedMatroid::from_families(target, circ, cocirc);
}

}  // namespace omcube
