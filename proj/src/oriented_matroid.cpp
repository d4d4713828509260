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

#include "omcube/oriented_matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "omcube/errors.hpp"

namespace omcube {

namespace {

// cl(S) = S + {e : some circuit C has e in C and C - e inside S}.
Mask closure_by_circuits(Mask s, const std::vector<SignedSet>& circuits) {
  Mask out = s;
  for (const auto& c : circuits) {
    Mask rest = c.support() & ~s;
    if (rest != 0 && (rest & (rest - 1)) == 0) out |= rest;
  }
  return out;
}

// cl(S) = E minus the union of cocircuit supports disjoint from S.
Mask closure_by_cocircuits(Mask s, Mask all, const std::vector<SignedSet>& cocircuits) {
  Mask removed = 0;
  for (const auto& d : cocircuits) {
    if ((d.support() & s) == 0) removed |= d.support();
  }
  return all & ~removed;
}

template <class Closure>
int greedy_rank(Mask s, Closure&& cl) {
  Mask basis = 0;
  int r = 0;
  Mask span = cl(Mask{0});
  for_each_bit(s, [&](std::size_t e) {
    if (span >> e & 1) return;
    basis |= bit(e);
    ++r;
    span = cl(basis);
  });
  return r;
}

// Closures of all independent sets of size k, deduplicated.
template <class Closure>
std::vector<Mask> flats_spanned_by(std::size_t n, int k, Closure&& cl) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> out;
  if (k < 0) return out;
  std::function<void(Mask, std::size_t, int, Mask)> dfs = [&](Mask indep, std::size_t next,
                                                                 int size, Mask span) {
    if (size == k) {
      if (seen.insert(span).second) out.push_back(span);
      return;
    }
    for (std::size_t e = next; e < n; ++e) {
      if (span >> e & 1) continue;
      // Enough elements must remain to reach size k.
      if (n - e < static_cast<std::size_t>(k - size)) break;
      Mask next_indep = indep | bit(e);
      dfs(next_indep, e + 1, size + 1, cl(next_indep));
    }
  };
  dfs(0, 0, 0, cl(Mask{0}));
  std::sort(out.begin(), out.end());
  return out;
}

// Circuit supports from a closure operator: each circuit C is found once, as
// (C - max C) independent plus max C in its closure.
template <class Closure>
std::vector<Mask> circuit_supports(std::size_t n, int rank, Closure&& cl) {
  std::vector<Mask> out;
  std::function<void(Mask, std::size_t, int, Mask)> dfs = [&](Mask indep, std::size_t next,
                                                                 int size, Mask span) {
    for (std::size_t e = next; e < n; ++e) {
      if (span >> e & 1) {
        Mask c = indep | bit(e);
        bool minimal = true;
        for_each_bit(indep, [&](std::size_t x) {
          if (minimal && !(cl(c & ~bit(x)) >> x & 1)) minimal = false;
        });
        if (minimal) out.push_back(c);
      } else if (size < rank) {
        Mask next_indep = indep | bit(e);
        dfs(next_indep, e + 1, size + 1, cl(next_indep));
      }
    }
  };
  dfs(0, 0, 0, cl(Mask{0}));
  std::sort(out.begin(), out.end());
  return out;
}

struct ParityUnionFind {
  explicit ParityUnionFind(std::size_t n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // Path compression with parity bookkeeping.
    std::size_t cur = x;
    int acc = p;
    while (parent[cur] != cur) {
      std::size_t nxt = parent[cur];
      int old = parity[cur];
      parent[cur] = r;
      parity[cur] = acc;
      acc ^= old;
      cur = nxt;
    }
    return {r, p};
  }
  // Records sign(x) * sign(y) = (-1)^p; false on contradiction.
  bool unite(std::size_t x, std::size_t y, int p) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == p;
    parent[rx] = ry;
    parity[rx] = px ^ py ^ p;
    return true;
  }
  std::vector<std::size_t> parent;
  std::vector<int> parity;
};

}  // namespace

std::vector<SignedSet> canonical_family(const std::vector<SignedSet>& family) {
  std::vector<SignedSet> out;
  out.reserve(family.size());
  for (const auto& x : family) out.push_back(canonical_rep(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignedSet> symmetric_family(const std::vector<SignedSet>& family) {
  std::vector<SignedSet> out;
  out.reserve(2 * family.size());
  for (const auto& x : family) {
    out.push_back(x);
    out.push_back(x.negated());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignedSet> sign_supports(const std::vector<Mask>& supports,
                                     const std::vector<SignedSet>& other) {
  std::vector<SignedSet> out;
  out.reserve(supports.size());
  for (Mask s : supports) {
    require(s != 0, ErrorCode::kInvariant, "cannot sign an empty support");
    std::vector<std::size_t> elems = bits_of(s);
    std::vector<int> slot(64, -1);
    for (std::size_t k = 0; k < elems.size(); ++k) slot[elems[k]] = static_cast<int>(k);
    ParityUnionFind uf(elems.size());
    for (const auto& y : other) {
      Mask m = y.support() & s;
      if (popcount(m) != 2) continue;
      std::size_t e = static_cast<std::size_t>(std::countr_zero(m));
      std::size_t f = static_cast<std::size_t>(63 - std::countl_zero(m));
      // X(e)Y(e) = -X(f)Y(f), so X(e)X(f) = -Y(e)Y(f).
      int p = (y.sign(e) == y.sign(f)) ? 1 : 0;
      if (!uf.unite(slot[e], slot[f], p)) {
        fail(ErrorCode::kInvariant, "no consistent signing of a support");
      }
    }
    SignedSet x;
    auto [root, p0] = uf.find(0);
    for (std::size_t k = 0; k < elems.size(); ++k) {
      auto [r, p] = uf.find(k);
      require(r == root, ErrorCode::kInvariant, "support signs are underdetermined");
      if ((p ^ p0) == 0) {
        x.plus |= bit(elems[k]);
      } else {
        x.minus |= bit(elems[k]);
      }
    }
    out.push_back(canonical_rep(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrientedMatroid OrientedMatroid::from_circuits(Ground ground,
                                               const std::vector<SignedSet>& circuits) {
  OrientedMatroid om;
  om.ground_ = std::make_shared<const Ground>(std::move(ground));
  om.circuits_ = canonical_family(circuits);
  for (const auto& c : om.circuits_) {
    require((c.support() & ~om.all()) == 0, ErrorCode::kInvalidArgument,
            "circuit uses elements outside the ground set");
    require(!c.empty(), ErrorCode::kInvalidArgument, "empty circuit");
  }
  auto cl = [&](Mask s) { return closure_by_circuits(s, om.circuits_); };
  om.rank_ = greedy_rank(om.all(), cl);
  std::vector<Mask> supports;
  for (Mask h : flats_spanned_by(om.size(), om.rank_ - 1, cl)) supports.push_back(om.all() & ~h);
  om.cocircuits_ = sign_supports(supports, om.circuits_);
  om.finalize();
  return om;
}

OrientedMatroid OrientedMatroid::from_cocircuits(Ground ground,
                                                 const std::vector<SignedSet>& cocircuits) {
  OrientedMatroid om;
  om.ground_ = std::make_shared<const Ground>(std::move(ground));
  om.cocircuits_ = canonical_family(cocircuits);
  for (const auto& d : om.cocircuits_) {
    require((d.support() & ~om.all()) == 0, ErrorCode::kInvalidArgument,
            "cocircuit uses elements outside the ground set");
    require(!d.empty(), ErrorCode::kInvalidArgument, "empty cocircuit");
  }
  Mask all = om.all();
  auto cl = [&](Mask s) { return closure_by_cocircuits(s, all, om.cocircuits_); };
  om.rank_ = greedy_rank(all, cl);
  om.circuits_ = sign_supports(circuit_supports(om.size(), om.rank_, cl), om.cocircuits_);
  om.finalize();
  return om;
}

OrientedMatroid OrientedMatroid::from_families(Ground ground,
                                               const std::vector<SignedSet>& circuits,
                                               const std::vector<SignedSet>& cocircuits) {
  OrientedMatroid om;
  om.ground_ = std::make_shared<const Ground>(std::move(ground));
  om.circuits_ = canonical_family(circuits);
  om.cocircuits_ = canonical_family(cocircuits);
  for (const auto* fam : {&om.circuits_, &om.cocircuits_}) {
    for (const auto& x : *fam) {
      require(!x.empty(), ErrorCode::kInvalidArgument, "empty signed set in a family");
      require((x.support() & ~om.all()) == 0, ErrorCode::kInvalidArgument,
              "signed set uses elements outside the ground set");
    }
  }
  Mask all = om.all();
  om.rank_ = greedy_rank(all, [&](Mask s) { return closure_by_cocircuits(s, all, om.cocircuits_); });
  om.finalize();
  require(om.families_orthogonal(), ErrorCode::kInvariant,
          "circuits and cocircuits are not orthogonal");
  return om;
}

namespace {

// Sign of the chirotope on an ordered tuple.
int chi_ordered(const Chirotope& chi, std::vector<std::size_t> tuple) {
  int parity = 0;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      parity ^= 1;
    }
  }
  Mask m = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k > 0 && tuple[k] == tuple[k - 1]) return 0;
    m |= bit(tuple[k]);
  }
  auto it = chi.find(m);
  if (it == chi.end()) fail(ErrorCode::kInvalidArgument, "chirotope is missing a subset");
  return parity ? -it->second : it->second;
}

template <class F>
void for_each_subset_of_size(std::size_t n, int k, F&& f) {
  require(n < 64, ErrorCode::kInvalidArgument, "chirotopes are limited to 63 elements");
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  // Gosper's hack: next subset of the same size in increasing order.
  for (Mask s = low_mask(static_cast<std::size_t>(k)); s < bit(n);) {
    f(s);
    Mask c = s & (~s + 1);
    Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

OrientedMatroid OrientedMatroid::from_chirotope(Ground ground, int rank, const Chirotope& chi) {
  OrientedMatroid om;
  om.ground_ = std::make_shared<const Ground>(std::move(ground));
  om.rank_ = rank;
  const std::size_t n = om.size();
  std::unordered_set<SignedSet, SignedSetHash> cocircuits;
  std::unordered_set<SignedSet, SignedSetHash> circuits;

  for_each_subset_of_size(n, rank - 1, [&](Mask s) {
    std::vector<std::size_t> tuple = bits_of(s);
    tuple.push_back(0);
    SignedSet x;
    for (std::size_t e = 0; e < n; ++e) {
      if (s >> e & 1) continue;
      tuple.back() = e;
      int v = chi_ordered(chi, tuple);
      if (v > 0) x.plus |= bit(e);
      if (v < 0) x.minus |= bit(e);
    }
    if (!x.empty()) cocircuits.insert(canonical_rep(x));
  });

  for_each_subset_of_size(n, rank, [&](Mask b) {
    auto it = chi.find(b);
    require(it != chi.end(), ErrorCode::kInvalidArgument, "chirotope is missing a subset");
    int chib = it->second;
    if (chib == 0) return;
    std::vector<std::size_t> basis = bits_of(b);
    for (std::size_t e = 0; e < n; ++e) {
      if (b >> e & 1) continue;
      SignedSet c;
      c.plus = bit(e);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<std::size_t> t = basis;
        t[k] = e;
        int v = -chi_ordered(chi, t) * chib;
        if (v > 0) c.plus |= bit(basis[k]);
        if (v < 0) c.minus |= bit(basis[k]);
      }
      circuits.insert(canonical_rep(c));
    }
  });
  if (rank == 0) {
    for (std::size_t e = 0; e < n; ++e) circuits.insert(SignedSet{bit(e), 0});
  }
  om.circuits_.assign(circuits.begin(), circuits.end());
  om.cocircuits_.assign(cocircuits.begin(), cocircuits.end());
  om.finalize();
  return om;
}

void OrientedMatroid::finalize() {
  std::sort(circuits_.begin(), circuits_.end());
  std::sort(cocircuits_.begin(), cocircuits_.end());
}

bool OrientedMatroid::has_circuit(const SignedSet& x) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), canonical_rep(x)) &&
         !x.empty();
}

bool OrientedMatroid::has_cocircuit(const SignedSet& x) const {
  return std::binary_search(cocircuits_.begin(), cocircuits_.end(), canonical_rep(x)) &&
         !x.empty();
}

Mask OrientedMatroid::closure(Mask s) const {
  return closure_by_cocircuits(s & all(), all(), cocircuits_);
}

int OrientedMatroid::rank_of(Mask s) const {
  return greedy_rank(s & all(), [&](Mask t) { return closure(t); });
}

bool OrientedMatroid::is_independent(Mask s) const {
  for (const auto& c : circuits_) {
    if ((c.support() & ~s) == 0) return false;
  }
  return true;
}

std::vector<Mask> OrientedMatroid::hyperplanes() const {
  std::vector<Mask> out;
  for (const auto& d : cocircuits_) out.push_back(all() & ~d.support());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> OrientedMatroid::hyperlines() const {
  if (rank_ < 2) return {};
  return flats_spanned_by(size(), rank_ - 2, [&](Mask s) { return closure(s); });
}

std::vector<Mask> OrientedMatroid::flats() const {
  std::vector<Mask> hs = hyperplanes();
  std::unordered_set<Mask> seen{all()};
  std::vector<Mask> queue{all()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Mask f = queue[q];
    for (Mask h : hs) {
      Mask g = f & h;
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  std::sort(queue.begin(), queue.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return queue;
}

std::vector<SignedSet> OrientedMatroid::cocircuits_through(Mask hyperline) const {
  require(rank_ >= 2 && is_flat(hyperline) && rank_of(hyperline) == rank_ - 2,
          ErrorCode::kPrecondition, "the given set is not a hyperline");
  std::vector<SignedSet> out;
  for (const auto& d : cocircuits_) {
    if ((d.support() & hyperline) == 0) {
      out.push_back(d);
      out.push_back(d.negated());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Support-minimal nonempty members, canonicalized.
std::vector<SignedSet> minimal_nonempty(std::vector<SignedSet> family) {
  family = canonical_family(family);
  family.erase(std::remove_if(family.begin(), family.end(),
                              [](const SignedSet& x) { return x.empty(); }),
               family.end());
  std::vector<SignedSet> out;
  for (const auto& x : family) {
    bool minimal = true;
    for (const auto& y : family) {
      Mask sx = x.support(), sy = y.support();
      if (sy != sx && (sy & ~sx) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace

OrientedMatroid OrientedMatroid::contract(Mask t) const {
  t &= all();
  Mask keep = all() & ~t;
  std::vector<SignedSet> cocirc;
  for (const auto& d : cocircuits_) {
    if ((d.support() & t) == 0) cocirc.push_back(restrict_to(d, keep));
  }
  std::vector<SignedSet> circ;
  for (const auto& c : circuits_) circ.push_back(restrict_to(c, keep));
  return from_families(ground_->subset(keep), minimal_nonempty(std::move(circ)), cocirc);
}

OrientedMatroid OrientedMatroid::restriction(Mask s) const {
  s &= all();
  std::vector<SignedSet> circ;
  for (const auto& c : circuits_) {
    if ((c.support() & ~s) == 0) circ.push_back(restrict_to(c, s));
  }
  std::vector<SignedSet> cocirc;
  for (const auto& d : cocircuits_) cocirc.push_back(restrict_to(d, s));
  return from_families(ground_->subset(s), circ, minimal_nonempty(std::move(cocirc)));
}

bool OrientedMatroid::is_acyclic() const {
  for (const auto& c : circuits_) {
    if (c.minus == 0 || c.plus == 0) return false;
  }
  return true;
}

std::vector<SignedSet> OrientedMatroid::positive_cocircuits() const {
  std::vector<SignedSet> out;
  for (const auto& d : cocircuits_) {
    if (d.minus == 0) out.push_back(d);
    if (d.plus == 0) out.push_back(d.negated());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedSet> OrientedMatroid::covectors(std::size_t limit) const {
  std::vector<SignedSet> gens = symmetric_family(cocircuits_);
  std::unordered_set<SignedSet, SignedSetHash> seen{SignedSet{}};
  std::vector<SignedSet> queue{SignedSet{}};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    SignedSet x = queue[q];
    if (x.support() == all()) continue;
    for (const auto& y : gens) {
      SignedSet z = compose(x, y);
      if (seen.insert(z).second) {
        queue.push_back(z);
        if (queue.size() > limit) fail(ErrorCode::kScaleGuard, "covector enumeration limit exceeded");
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

OrientedMatroid OrientedMatroid::relabeled(const std::vector<std::string>& labels) const {
  require(labels.size() == size(), ErrorCode::kInvalidArgument, "relabeling has the wrong size");
  OrientedMatroid om = *this;
  om.ground_ = std::make_shared<const Ground>(labels);
  return om;
}

OrientedMatroid OrientedMatroid::reordered(const std::vector<std::string>& labels) const {
  require(labels.size() == size(), ErrorCode::kInvalidArgument, "reordering has the wrong size");
  auto target = std::make_shared<const Ground>(labels);
  std::vector<std::size_t> image(size());
  for (std::size_t i = 0; i < size(); ++i) image[i] = target->index_of(ground_->label(i));
  OrientedMatroid om;
  om.ground_ = target;
  om.rank_ = rank_;
  for (const auto& c : circuits_) om.circuits_.push_back(canonical_rep(map_signed(c, image)));
  for (const auto& d : cocircuits_) om.cocircuits_.push_back(canonical_rep(map_signed(d, image)));
  om.finalize();
  return om;
}

OrientedMatroid OrientedMatroid::reoriented(Mask a) const {
  OrientedMatroid om = *this;
  for (auto& c : om.circuits_) c = canonical_rep(reorient(c, a));
  for (auto& d : om.cocircuits_) d = canonical_rep(reorient(d, a));
  om.finalize();
  return om;
}

bool OrientedMatroid::operator==(const OrientedMatroid& other) const {
  return ground() == other.ground() && rank_ == other.rank_ && circuits_ == other.circuits_ &&
         cocircuits_ == other.cocircuits_;
}

bool OrientedMatroid::families_orthogonal() const {
  for (const auto& c : circuits_) {
    for (const auto& d : cocircuits_) {
      if (!orthogonal(c, d)) return false;
    }
  }
  return true;
}

std::vector<AxiomViolation> validate_circuit_axioms(const Ground& ground,
                                                    const std::vector<SignedSet>& family) {
  std::vector<AxiomViolation> out;
  auto show = [&](const SignedSet& x) {
    std::string s = "(+{";
    bool first = true;
    for (const auto& l : ground.labels_of(x.plus)) {
      s += (first ? "" : ",") + l;
      first = false;
    }
    s += "}, -{";
    first = true;
    for (const auto& l : ground.labels_of(x.minus)) {
      s += (first ? "" : ",") + l;
      first = false;
    }
    return s + "})";
  };
  for (const auto& x : family) {
    if ((x.support() & ~ground.all()) != 0) {
      fail(ErrorCode::kInvalidArgument, "signed set uses elements outside the ground set");
    }
    if ((x.plus & x.minus) != 0) {
      fail(ErrorCode::kInvalidArgument, "signed set parts overlap");
    }
  }
  std::vector<SignedSet> canon = canonical_family(family);
  for (const auto& x : canon) {
    if (x.empty()) out.push_back({"empty", "the empty signed set is in the family"});
  }
  std::unordered_map<Mask, SignedSet> by_support;
  for (const auto& x : canon) {
    auto [it, inserted] = by_support.emplace(x.support(), x);
    if (!inserted) {
      out.push_back({"incomparable", show(it->second) + " and " + show(x) + " share a support"});
    }
  }
  for (std::size_t a = 0; a < canon.size(); ++a) {
    for (std::size_t b = 0; b < canon.size(); ++b) {
      Mask sa = canon[a].support(), sb = canon[b].support();
      if (a != b && sa != sb && (sa & ~sb) == 0) {
        out.push_back({"incomparable", show(canon[a]) + " is contained in " + show(canon[b])});
      }
    }
  }
  if (!out.empty()) return out;

  // Weak elimination on all pairs X, Y (both signs) with X != -Y.
  auto conformal_exists = [&](Mask u, Mask plus_ok, Mask minus_ok) {
    // A circuit with support inside u and signs allowed by the masks.
    auto accept = [&](const SignedSet& z) {
      return ((z.plus & ~plus_ok) == 0 && (z.minus & ~minus_ok) == 0) ||
             ((z.minus & ~plus_ok) == 0 && (z.plus & ~minus_ok) == 0);
    };
    if (popcount(u) <= 14) {
      // Enumerate sub-supports of u.
      for (Mask s = u;; s = (s - 1) & u) {
        if (s != 0) {
          auto it = by_support.find(s);
          if (it != by_support.end() && accept(it->second)) return true;
        }
        if (s == 0) break;
      }
      return false;
    }
    for (const auto& z : canon) {
      if ((z.support() & ~u) == 0 && accept(z)) return true;
    }
    return false;
  };
  for (std::size_t a = 0; a < canon.size(); ++a) {
    for (std::size_t b = a + 1; b < canon.size(); ++b) {
      for (int flip = 0; flip < 2; ++flip) {
        SignedSet x = canon[a];
        SignedSet y = flip ? canon[b].negated() : canon[b];
        Mask sep = separation(x, y);
        if (sep == 0) continue;
        Mask plus_ok = x.plus | y.plus;
        Mask minus_ok = x.minus | y.minus;
        Mask uni = x.support() | y.support();
        bool ok = true;
        for_each_bit(sep, [&](std::size_t e) {
          if (!ok) return;
          if (!conformal_exists(uni & ~bit(e), plus_ok & ~bit(e), minus_ok & ~bit(e))) ok = false;
        });
        if (!ok) {
          out.push_back({"elimination", "no elimination circuit for " + show(x) + " and " + show(y)});
        }
      }
    }
  }
  return out;
}

FaceLattice lv_face_lattice(const OrientedMatroid& om) {
  require(om.is_acyclic(), ErrorCode::kPrecondition, "face lattices need an acyclic oriented matroid");
  std::vector<Mask> zero_sets;
  for (const auto& d : om.positive_cocircuits()) zero_sets.push_back(om.all() & ~d.support());
  std::unordered_set<Mask> seen{om.all()};
  std::vector<Mask> faces{om.all()};
  for (std::size_t q = 0; q < faces.size(); ++q) {
    Mask f = faces[q];
    for (Mask z : zero_sets) {
      Mask g = f & z;
      if (seen.insert(g).second) faces.push_back(g);
    }
  }
  std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  FaceLattice lat;
  lat.faces = faces;
  for (Mask f : faces) {
    if (f == om.all()) continue;
    bool maximal = true;
    for (Mask g : faces) {
      if (g != f && g != om.all() && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) lat.facets.push_back(f);
  }
  for (Mask f : faces) {
    if (f == 0) continue;
    bool minimal = true;
    for (Mask g : faces) {
      if (g != f && g != 0 && (g & ~f) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) lat.vertices.push_back(f);
  }
  return lat;
}

bool is_simplex_lattice(const FaceLattice& lattice) {
  const std::size_t k = lattice.vertices.size();
  if (k >= 20 || lattice.faces.size() != (std::size_t{1} << k)) return false;
  std::vector<Mask> code(lattice.faces.size());
  std::unordered_set<Mask> codes;
  for (std::size_t f = 0; f < lattice.faces.size(); ++f) {
    Mask c = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if ((lattice.vertices[v] & ~lattice.faces[f]) == 0) c |= bit(v);
    }
    code[f] = c;
    if (!codes.insert(c).second) return false;
  }
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = 0; b < code.size(); ++b) {
      bool inc = (lattice.faces[a] & ~lattice.faces[b]) == 0;
      bool vinc = (code[a] & ~code[b]) == 0;
      if (inc != vinc) return false;
    }
  }
  return true;
}

}  // namespace omcube
