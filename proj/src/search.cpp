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

#include "omcube/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "omcube/codec.hpp"
#include "omcube/errors.hpp"
#include "omcube/extensions.hpp"
#include "omcube/generators.hpp"
#include "omcube/isomorphism.hpp"
#include "omcube/realization.hpp"

namespace omcube {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint8_t kNeg = 1, kZero = 2, kPos = 4, kAny = 7;
constexpr std::size_t kMaxVariables = 200'000;
constexpr std::size_t kSubtreeTarget = 64;
constexpr std::size_t kPrefixDepthLimit = 12;

std::uint8_t flip_domain(std::uint8_t d) {
  return static_cast<std::uint8_t>((d & kZero) | ((d & kNeg) << 2) | ((d & kPos) >> 2));
}
int value_of(std::uint8_t d) { return d == kPos ? 1 : (d == kNeg ? -1 : 0); }
std::uint8_t domain_of(int v) { return v > 0 ? kPos : (v < 0 ? kNeg : kZero); }
bool singleton(std::uint8_t d) { return d == kPos || d == kNeg || d == kZero; }
int domain_size(std::uint8_t d) { return std::popcount(static_cast<unsigned>(d)); }
char sign_char(int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); }

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

// Sorts a tuple of distinct elements; returns the mask and the parity of the
// sorting permutation (0 on a repeated element).
std::pair<Mask, int> ordered(std::vector<std::size_t> t) {
  int s = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return {0, 0};
      std::swap(t[j - 1], t[j]);
      s = -s;
    }
  }
  Mask m = 0;
  for (auto e : t) m |= bit(e);
  return {m, s};
}

std::string fnv_digest(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Label permutations (with element reorientations) under which the search
// problem is invariant.
struct Symmetry {
  std::vector<std::size_t> image;
  Mask flips = 0;  // source elements whose sign is reversed
};

std::vector<Symmetry> hyperoctahedral_group(SearchKind kind, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Symmetry> out;
  do {
    for (Mask s = 0; s < bit(n); ++s) {
      auto vertex = [&](Mask a) {
        Mask b = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (a >> i & 1) b |= bit(perm[i]);
        }
        return b ^ s;
      };
      Symmetry g;
      if (kind == SearchKind::kAdjoints) {
        for (std::size_t i = 0; i < n; ++i) g.image.push_back(perm[i]);
        for (Mask a = 0; a < bit(n); ++a) g.image.push_back(n + vertex(a));
        for (std::size_t i = 0; i < n; ++i) {
          if (s >> perm[i] & 1) g.flips |= bit(i);
        }
      } else {
        for (Mask a = 0; a < bit(n); ++a) g.image.push_back(vertex(a));
      }
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct Term {
  int coef;
  std::uint32_t a, b;  // classes
};
struct Relation {
  Term t[3];
};

// The constraint problem after merging equalities into parity classes.
struct Problem {
  std::size_t n = 0, size = 0, rank = 0;
  SearchKind kind{};
  bool zero_pattern_fixed = false;
  std::vector<Mask> vars;  // r-subsets in colex order
  std::unordered_map<Mask, std::uint32_t> var_index;
  std::vector<std::uint32_t> var_class;
  std::vector<int> var_parity;
  std::vector<std::uint8_t> root_domain;  // per class
  std::vector<Relation> relations;
  std::vector<std::vector<std::uint32_t>> relations_of;  // class -> relation ids
  std::vector<Symmetry> group;
  bool sign_pivot_fixed = false;

  std::size_t classes() const { return root_domain.size(); }
};

class ProblemBuilder {
 public:
  ProblemBuilder(std::size_t size, std::size_t rank) : size_(size), rank_(rank) {
    for_each_k_subset(size, rank, [&](Mask s) {
      index_.emplace(s, static_cast<std::uint32_t>(vars_.size()));
      vars_.push_back(s);
    });
    require(vars_.size() <= kMaxVariables, ErrorCode::kScaleGuard, "too many r-subsets to search");
    parent_.resize(vars_.size());
    std::iota(parent_.begin(), parent_.end(), 0u);
    parity_.assign(vars_.size(), 1);
    domain_.assign(vars_.size(), kAny);
  }

  // chi of an ordered r-tuple as (variable, sign); sign 0 on repeats.
  std::pair<std::uint32_t, int> ordered_var(const std::vector<std::size_t>& t) const {
    auto [m, s] = ordered(t);
    if (s == 0) return {0, 0};
    return {index_.at(m), s};
  }

  void restrict(std::uint32_t v, std::uint8_t d) {
    auto [r, p] = find(v);
    domain_[r] &= p > 0 ? d : flip_domain(d);
  }
  void force_zero(Mask s) { restrict(index_.at(s), kZero); }
  void force_nonzero(Mask s) { restrict(index_.at(s), kPos | kNeg); }

  // chi(u) = s * chi(v).
  void equate(std::uint32_t u, std::uint32_t v, int s) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    int q = pu * s * pv;  // chi(ru) = q * chi(rv)
    if (ru == rv) {
      if (q < 0) domain_[ru] &= kZero;
      return;
    }
    parent_[ru] = rv;
    parity_[ru] = q;
    domain_[rv] &= q > 0 ? domain_[ru] : flip_domain(domain_[ru]);
  }
  // Equality of two ordered tuples up to the sign s.
  void equate_tuples(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y, int s) {
    auto [u, su] = ordered_var(x);
    auto [v, sv] = ordered_var(y);
    if (su == 0 && sv == 0) return;
    if (su == 0) return restrict(v, kZero);
    if (sv == 0) return restrict(u, kZero);
    equate(u, v, su * s * sv);
  }

  Problem finish(std::size_t n, SearchKind kind) {
    Problem p;
    p.n = n;
    p.size = size_;
    p.rank = rank_;
    p.kind = kind;
    p.vars = vars_;
    p.var_index = index_;
    std::unordered_map<std::uint32_t, std::uint32_t> class_of_root;
    p.var_class.resize(vars_.size());
    p.var_parity.resize(vars_.size());
    for (std::uint32_t v = 0; v < vars_.size(); ++v) {
      auto [r, s] = find(v);
      auto it = class_of_root.find(r);
      if (it == class_of_root.end()) {
        it = class_of_root.emplace(r, static_cast<std::uint32_t>(p.root_domain.size())).first;
        p.root_domain.push_back(domain_[r]);
      }
      p.var_class[v] = it->second;
      p.var_parity[v] = s;
    }
    // Three-term Grassmann-Pluecker relations.
    p.relations_of.resize(p.classes());
    if (rank_ >= 2) {
      for_each_k_subset(size_, rank_ - 2, [&](Mask sigma) {
        const std::vector<std::size_t> base = bits_of(sigma);
        const std::vector<std::size_t> rest = bits_of(low_mask(size_) & ~sigma);
        for_each_k_subset(rest.size(), 4, [&](Mask q) {
          auto idx = bits_of(q);
          std::size_t a = rest[idx[0]], b = rest[idx[1]], c = rest[idx[2]], d = rest[idx[3]];
          auto term = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w, int coef) {
            auto t1 = base, t2 = base;
            t1.push_back(x);
            t1.push_back(y);
            t2.push_back(z);
            t2.push_back(w);
            auto [u, su] = ordered_var(t1);
            auto [v, sv] = ordered_var(t2);
            return Term{coef * su * sv * p.var_parity[u] * p.var_parity[v], p.var_class[u],
                        p.var_class[v]};
          };
          Relation rel{{term(a, b, c, d, 1), term(a, c, b, d, -1), term(a, d, b, c, 1)}};
          const auto id = static_cast<std::uint32_t>(p.relations.size());
          p.relations.push_back(rel);
          std::set<std::uint32_t> touched;
          for (const auto& t : rel.t) {
            touched.insert(t.a);
            touched.insert(t.b);
          }
          for (auto c2 : touched) p.relations_of[c2].push_back(id);
        });
      });
    }
    return p;
  }

 private:
  std::pair<std::uint32_t, int> find(std::uint32_t v) {
    int s = 1;
    std::uint32_t r = v;
    while (parent_[r] != r) {
      s *= parity_[r];
      r = parent_[r];
    }
    // Path compression.
    std::uint32_t x = v;
    int sx = s;
    while (parent_[x] != x) {
      std::uint32_t next = parent_[x];
      int px = parity_[x];
      parent_[x] = r;
      parity_[x] = sx;
      sx *= px;
      x = next;
    }
    return {r, s};
  }

  std::size_t size_, rank_;
  std::vector<Mask> vars_;
  std::unordered_map<Mask, std::uint32_t> index_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> parity_;
  std::vector<std::uint8_t> domain_;
};

// Circuit C on support S: for e != f in S and every tuple Z extending
// S - {e, f} to r - 1 elements, chi(e, Z) = -C(e) C(f) chi(f, Z); every
// r-subset containing S is zero.
void add_circuit(ProblemBuilder& b, std::size_t size, std::size_t rank, const SignedSet& c) {
  const Mask s = c.support();
  const std::size_t k = static_cast<std::size_t>(popcount(s));
  if (k <= rank) {
    for_each_k_subset(size, rank, [&](Mask t) {
      if ((t & s) == s) b.force_zero(t);
    });
  }
  if (k == rank + 1) {
    for_each_bit(s, [&](std::size_t e) { b.force_nonzero(s & ~bit(e)); });
  }
  if (k < 2 || k > rank + 1) return;
  const std::size_t extra = rank + 1 - k;
  const std::vector<std::size_t> outside = bits_of(low_mask(size) & ~s);
  const std::vector<std::size_t> elems = bits_of(s);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const std::size_t e = elems[i], f = elems[j];
      std::vector<std::size_t> z;
      for (auto x : elems) {
        if (x != e && x != f) z.push_back(x);
      }
      for_each_k_subset(outside.size(), extra, [&](Mask tau) {
        std::vector<std::size_t> zz = z;
        for_each_bit(tau, [&](std::size_t t) { zz.push_back(outside[t]); });
        std::vector<std::size_t> x{e}, y{f};
        x.insert(x.end(), zz.begin(), zz.end());
        y.insert(y.end(), zz.begin(), zz.end());
        b.equate_tuples(x, y, -c.sign(e) * c.sign(f));
      });
    }
  }
}

// Cocircuit D with zero set H: every r-subset of H is zero, and for every
// (r-1)-subset I of H and e, f outside H, chi(I, e) D(e) = chi(I, f) D(f).
void add_cocircuit(ProblemBuilder& b, std::size_t size, std::size_t rank, const SignedSet& d) {
  const Mask h = low_mask(size) & ~d.support();
  for_each_k_subset(size, rank, [&](Mask t) {
    if ((t & h) == t) b.force_zero(t);
  });
  const std::vector<std::size_t> hs = bits_of(h);
  const std::vector<std::size_t> out = bits_of(d.support());
  for_each_k_subset(hs.size(), rank - 1, [&](Mask q) {
    std::vector<std::size_t> base;
    for_each_bit(q, [&](std::size_t t) { base.push_back(hs[t]); });
    for (std::size_t i = 1; i < out.size(); ++i) {
      auto x = base, y = base;
      x.push_back(out[0]);
      y.push_back(out[i]);
      b.equate_tuples(x, y, d.sign(out[0]) * d.sign(out[i]));
    }
  });
}

// Hyperplane: every r-subset inside is zero.
void add_hyperplane(ProblemBuilder& b, std::size_t size, std::size_t rank, Mask h) {
  for_each_k_subset(size, rank, [&](Mask t) {
    if ((t & h) == t) b.force_zero(t);
  });
}

Chirotope seed_chirotope(SearchKind kind, std::size_t n) {
  return kind == SearchKind::kAdjoints ? chirotope(lifted_adjoint_vectors(n))
                                       : chirotope(cube_points(n));
}

Problem build_problem(const SearchOptions& opt) {
  const std::size_t n = opt.n;
  const auto ground = search_ground(opt.kind, n);
  const std::size_t size = ground.size(), rank = n + 1;
  require(size < 64, ErrorCode::kScaleGuard, "ground set too large to search");
  ProblemBuilder b(size, rank);
  if (opt.kind == SearchKind::kCubes) {
    for (const auto& r : rectangles(n)) add_circuit(b, size, rank, r);
    for (std::size_t i = 1; i <= n; ++i) {
      add_hyperplane(b, size, rank, facet_mask(n, i, true));
      add_hyperplane(b, size, rank, facet_mask(n, i, false));
    }
  } else if (opt.kind == SearchKind::kAdjoints) {
    for (std::size_t i = 1; i <= n; ++i) {
      add_cocircuit(b, size, rank, adjoint_principal_cocircuit(n, i, false));
      add_cocircuit(b, size, rank, adjoint_principal_cocircuit(n, i, true));
    }
  } else {
    require(opt.strategy == SearchStrategy::kPruned, ErrorCode::kInvalidArgument,
            "the orientation search fixes the zero pattern; use the pruned strategy");
  }
  const bool fixed = opt.strategy == SearchStrategy::kPruned;
  if (fixed) {
    const Chirotope seed = seed_chirotope(opt.kind, n);
    for_each_k_subset(size, rank, [&](Mask t) {
      if (seed.at(t) == 0) {
        b.force_zero(t);
      } else {
        b.force_nonzero(t);
      }
    });
  }
  Problem p = b.finish(n, opt.kind);
  p.zero_pattern_fixed = fixed;
  p.group = hyperoctahedral_group(opt.kind, n);
  return p;
}

struct Stats {
  std::size_t nodes = 0, examined = 0, rejected = 0, prunes = 0;
  void add(const Stats& o) {
    nodes += o.nodes;
    examined += o.examined;
    rejected += o.rejected;
    prunes += o.prunes;
  }
};

using Domains = std::vector<std::uint8_t>;

int term_value(const Term& t, const Domains& d) {
  return t.coef * value_of(d[t.a]) * value_of(d[t.b]);
}

bool relation_holds(int a, int b, int c) {
  bool pos = a > 0 || b > 0 || c > 0;
  bool neg = a < 0 || b < 0 || c < 0;
  return pos == neg;
}

// Arc consistency on relations with a single open class.
bool propagate(const Problem& p, Domains& d, std::vector<std::uint32_t> queue, Stats& st) {
  while (!queue.empty()) {
    const std::uint32_t c = queue.back();
    queue.pop_back();
    for (std::uint32_t id : p.relations_of[c]) {
      const Relation& rel = p.relations[id];
      std::uint32_t open = UINT32_MAX;
      bool several = false;
      for (const auto& t : rel.t) {
        for (std::uint32_t x : {t.a, t.b}) {
          if (!singleton(d[x])) {
            if (open == UINT32_MAX) {
              open = x;
            } else if (open != x) {
              several = true;
            }
          }
        }
      }
      if (several) continue;
      if (open == UINT32_MAX) {
        if (!relation_holds(term_value(rel.t[0], d), term_value(rel.t[1], d),
                            term_value(rel.t[2], d))) {
          return false;
        }
        continue;
      }
      const std::uint8_t before = d[open];
      std::uint8_t keep = 0;
      for (std::uint8_t v : {kPos, kNeg, kZero}) {
        if (!(before & v)) continue;
        d[open] = v;
        if (relation_holds(term_value(rel.t[0], d), term_value(rel.t[1], d),
                           term_value(rel.t[2], d))) {
          keep |= v;
        }
      }
      d[open] = keep;
      if (keep != before) st.prunes += static_cast<std::size_t>(domain_size(before) - domain_size(keep));
      if (keep == 0) return false;
      if (singleton(keep)) queue.push_back(open);
    }
  }
  return true;
}

std::uint32_t choose_class(const Domains& d) {
  std::uint32_t best = UINT32_MAX;
  int best_size = 4;
  for (std::uint32_t c = 0; c < d.size(); ++c) {
    int s = domain_size(d[c]);
    if (s >= 2 && s < best_size) {
      best = c;
      best_size = s;
    }
  }
  return best;
}

std::vector<int> var_signs(const Problem& p, const Domains& d) {
  std::vector<int> out(p.vars.size());
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    out[v] = p.var_parity[v] * value_of(d[p.var_class[v]]);
  }
  return out;
}

bool basis_exchange(const Problem& p, const std::vector<int>& chi) {
  std::vector<Mask> bases;
  for (std::size_t v = 0; v < p.vars.size(); ++v) {
    if (chi[v] != 0) bases.push_back(p.vars[v]);
  }
  if (bases.empty()) return false;
  std::unordered_set<Mask> set(bases.begin(), bases.end());
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      const Mask only2 = b2 & ~b1;
      bool ok = true;
      for_each_bit(b1 & ~b2, [&](std::size_t e) {
        if (!ok) return;
        bool found = false;
        for_each_bit(only2, [&](std::size_t f) {
          if (!found && set.count((b1 & ~bit(e)) | bit(f))) found = true;
        });
        ok = found;
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::string canonical_string(const Problem& p, const std::vector<int>& chi) {
  std::string best;
  std::string cur(p.vars.size(), '0');
  for (const auto& g : p.group) {
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
      if (chi[v] == 0) {
        cur[v] = '0';
        continue;
      }
      std::vector<std::size_t> t;
      for_each_bit(p.vars[v], [&](std::size_t e) { t.push_back(g.image[e]); });
      auto [m, s] = ordered(t);
      int val = chi[v] * s * ((popcount(p.vars[v] & g.flips) % 2) ? -1 : 1);
      cur[p.var_index.at(m)] = sign_char(val);
    }
    auto first = cur.find_first_not_of('0');
    if (first != std::string::npos && cur[first] == '-') {
      for (auto& ch : cur) ch = ch == '+' ? '-' : (ch == '-' ? '+' : ch);
    }
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

Chirotope chirotope_of(const Problem& p, const std::vector<int>& chi) {
  Chirotope out;
  for (std::size_t v = 0; v < p.vars.size(); ++v) out[p.vars[v]] = static_cast<std::int8_t>(chi[v]);
  return out;
}

struct SubtreeResult {
  bool done = false;
  Stats stats;
  std::set<std::string> found;  // canonical sign strings
};

class Searcher {
 public:
  Searcher(const Problem& p, const std::vector<std::string>& ground,
           const std::atomic<bool>& stop, Clock::time_point deadline, bool has_deadline)
      : p_(p), ground_(ground), stop_(stop), deadline_(deadline), has_deadline_(has_deadline) {}

  // Returns false when interrupted.
  bool run(const Domains& start, SubtreeResult& out) {
    interrupted_ = false;
    dfs(start, out);
    return !interrupted_;
  }

 private:
  void dfs(const Domains& d, SubtreeResult& out) {
    if (interrupted_) return;
    ++out.stats.nodes;
    if ((out.stats.nodes & 255) == 0 &&
        (stop_.load(std::memory_order_relaxed) || (has_deadline_ && Clock::now() > deadline_))) {
      interrupted_ = true;
      return;
    }
    const std::uint32_t c = choose_class(d);
    if (c == UINT32_MAX) {
      leaf(d, out);
      return;
    }
    for (std::uint8_t v : {kPos, kNeg, kZero}) {
      if (!(d[c] & v)) continue;
      Domains next = d;
      next[c] = v;
      if (propagate(p_, next, {c}, out.stats)) dfs(next, out);
      if (interrupted_) return;
    }
  }

  void leaf(const Domains& d, SubtreeResult& out) {
    ++out.stats.examined;
    const std::vector<int> chi = var_signs(p_, d);
    // One of each pair +-chi: the first nonzero sign is +.
    if (!p_.sign_pivot_fixed) {
      auto it = std::find_if(chi.begin(), chi.end(), [](int x) { return x != 0; });
      if (it == chi.end() || *it < 0) {
        ++out.stats.rejected;
        return;
      }
    }
    if (!p_.zero_pattern_fixed && !basis_exchange(p_, chi)) {
      ++out.stats.rejected;
      return;
    }
    OrientedMatroid om =
        OrientedMatroid::from_chirotope(Ground(ground_), static_cast<int>(p_.rank), chirotope_of(p_, chi));
    bool ok = om.rank() == static_cast<int>(p_.rank);
    if (ok && p_.kind == SearchKind::kCubes) ok = is_oriented_cube(om);
    if (ok && p_.kind == SearchKind::kAdjoints) ok = is_adjoint(om, p_.n, AdjointMode::kWeak);
    if (!ok) {
      ++out.stats.rejected;
      return;
    }
    out.found.insert(canonical_string(p_, chi));
  }

  const Problem& p_;
  const std::vector<std::string>& ground_;
  const std::atomic<bool>& stop_;
  Clock::time_point deadline_;
  bool has_deadline_;
  bool interrupted_ = false;
};

// Deterministic split of the search tree into independent subtrees.
std::vector<Domains> split(const Problem& p, const Domains& root, Stats& st) {
  std::vector<Domains> frontier{root};
  for (std::size_t depth = 0; depth < kPrefixDepthLimit && frontier.size() < kSubtreeTarget; ++depth) {
    std::vector<Domains> next;
    bool expanded = false;
    for (const auto& d : frontier) {
      const std::uint32_t c = choose_class(d);
      if (c == UINT32_MAX) {
        next.push_back(d);
        continue;
      }
      expanded = true;
      ++st.nodes;
      for (std::uint8_t v : {kPos, kNeg, kZero}) {
        if (!(d[c] & v)) continue;
        Domains child = d;
        child[c] = v;
        if (propagate(p, child, {c}, st)) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (!expanded) break;
  }
  return frontier;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("OMCUBE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Json checkpoint_json(const SearchOptions& opt, const std::vector<SubtreeResult>& results) {
  Json j;
  j["format"] = "omcube-search-checkpoint";
  j["kind"] = to_string(opt.kind);
  j["n"] = opt.n;
  j["strategy"] = to_string(opt.strategy);
  j["subtrees"] = results.size();
  Json done = Json::array();
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k].done) continue;
    Json r;
    r["index"] = k;
    r["nodes"] = results[k].stats.nodes;
    r["examined"] = results[k].stats.examined;
    r["rejected"] = results[k].stats.rejected;
    r["prunes"] = results[k].stats.prunes;
    r["found"] = Json(std::vector<std::string>(results[k].found.begin(), results[k].found.end()));
    done.push_back(std::move(r));
  }
  j["completed"] = std::move(done);
  return j;
}

bool load_checkpoint(const SearchOptions& opt, std::vector<SubtreeResult>& results) {
  if (opt.checkpoint_path.empty() || !std::filesystem::exists(opt.checkpoint_path)) return false;
  Json j = parse_json(read_file(opt.checkpoint_path));
  auto mismatch = [&](const std::string& what) {
    fail(ErrorCode::kInvalidArgument, "checkpoint '" + opt.checkpoint_path + "' was written for a different " + what);
  };
  if (j.value("format", "") != "omcube-search-checkpoint") mismatch("format");
  if (j.value("kind", "") != to_string(opt.kind)) mismatch("kind");
  if (j.value("n", 0u) != opt.n) mismatch("n");
  if (j.value("strategy", "") != to_string(opt.strategy)) mismatch("strategy");
  if (j.value("subtrees", 0u) != results.size()) mismatch("problem split");
  for (const auto& r : j.at("completed")) {
    std::size_t k = r.at("index").get<std::size_t>();
    require(k < results.size(), ErrorCode::kParse, "checkpoint subtree index out of range");
    auto& res = results[k];
    res.done = true;
    res.stats.nodes = r.at("nodes").get<std::size_t>();
    res.stats.examined = r.at("examined").get<std::size_t>();
    res.stats.rejected = r.at("rejected").get<std::size_t>();
    res.stats.prunes = r.at("prunes").get<std::size_t>();
    for (const auto& f : r.at("found")) res.found.insert(f.get<std::string>());
  }
  return true;
}

void save_checkpoint(const SearchOptions& opt, const std::vector<SubtreeResult>& results) {
  if (opt.checkpoint_path.empty()) return;
  const std::string tmp = opt.checkpoint_path + ".tmp";
  write_file(tmp, dump(checkpoint_json(opt, results)));
  std::filesystem::rename(tmp, opt.checkpoint_path);
}

std::optional<OrientedMatroid> reference(SearchKind kind, std::size_t n) {
  if (n < 2 || n > 4) return std::nullopt;
  return kind == SearchKind::kAdjoints ? canonical_adjoint(n) : real_cube(n);
}

}  // namespace

std::string to_string(SearchKind kind) {
  switch (kind) {
    case SearchKind::kCubes: return "cubes";
    case SearchKind::kAdjoints: return "adjoints";
    case SearchKind::kOrientations: return "orientations";
  }
  return "";
}

std::string to_string(SearchStrategy strategy) {
  return strategy == SearchStrategy::kExhaustive ? "exhaustive" : "pruned";
}

SearchKind parse_search_kind(const std::string& text) {
  if (text == "cubes") return SearchKind::kCubes;
  if (text == "adjoints") return SearchKind::kAdjoints;
  if (text == "orientations") return SearchKind::kOrientations;
  fail(ErrorCode::kInvalidArgument, "unknown search kind '" + text + "'");
}

SearchStrategy parse_search_strategy(const std::string& text) {
  if (text == "exhaustive") return SearchStrategy::kExhaustive;
  if (text == "pruned") return SearchStrategy::kPruned;
  fail(ErrorCode::kInvalidArgument, "unknown search strategy '" + text + "'");
}

std::vector<std::string> search_ground(SearchKind kind, std::size_t n) {
  require(n >= 2 && n <= kMaxCubeN, ErrorCode::kInvalidArgument,
          "search needs 2 <= n <= " + std::to_string(kMaxCubeN));
  return kind == SearchKind::kAdjoints ? labels::adjoint_ground(n) : labels::cube_ground(n);
}

std::string sign_string(const Chirotope& chi, std::size_t ground_size, std::size_t rank) {
  std::string out;
  for_each_k_subset(ground_size, rank, [&](Mask s) {
    auto it = chi.find(s);
    require(it != chi.end(), ErrorCode::kInvalidArgument, "chirotope is missing a subset");
    out += sign_char(it->second);
  });
  return out;
}

OrientedMatroid om_from_sign_string(const std::vector<std::string>& ground, std::size_t rank,
                                    const std::string& signs) {
  Chirotope chi;
  std::size_t k = 0;
  for_each_k_subset(ground.size(), rank, [&](Mask s) {
    require(k < signs.size(), ErrorCode::kInvalidArgument, "sign string too short");
    char c = signs[k++];
    require(c == '+' || c == '-' || c == '0', ErrorCode::kParse, "bad sign character");
    chi[s] = static_cast<std::int8_t>(c == '+' ? 1 : (c == '-' ? -1 : 0));
  });
  require(k == signs.size(), ErrorCode::kInvalidArgument, "sign string too long");
  return OrientedMatroid::from_chirotope(Ground(ground), static_cast<int>(rank), chi);
}

bool is_chirotope(const Chirotope& chi, std::size_t ground_size, std::size_t rank) {
  ProblemBuilder b(ground_size, rank);
  Problem p = b.finish(0, SearchKind::kOrientations);
  std::vector<int> signs(p.vars.size());
  for (std::size_t v = 0; v < p.vars.size(); ++v) signs[v] = chi.at(p.vars[v]);
  Domains d(p.classes());
  for (std::size_t v = 0; v < p.vars.size(); ++v) d[p.var_class[v]] = domain_of(signs[v]);
  for (const auto& rel : p.relations) {
    if (!relation_holds(term_value(rel.t[0], d), term_value(rel.t[1], d), term_value(rel.t[2], d))) {
      return false;
    }
  }
  return basis_exchange(p, signs);
}

SearchReport run_search(const SearchOptions& options) {
  const auto t0 = Clock::now();
  SearchReport rep;
  rep.options = options;
  const auto ground = search_ground(options.kind, options.n);
  Problem p = build_problem(options);
  rep.rank = p.rank;
  rep.variables = p.vars.size();

  Stats root_stats;
  Domains root = p.root_domain;
  bool feasible = std::none_of(root.begin(), root.end(), [](std::uint8_t x) { return x == 0; });
  if (feasible) {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t c = 0; c < root.size(); ++c) {
      if (singleton(root[c])) queue.push_back(c);
    }
    feasible = propagate(p, root, queue, root_stats);
  }
  if (feasible) {
    // Global sign symmetry: a class that can never vanish is taken positive.
    for (std::uint32_t c = 0; c < root.size(); ++c) {
      if (root[c] == (kPos | kNeg)) {
        root[c] = kPos;
        p.sign_pivot_fixed = true;
        feasible = propagate(p, root, {c}, root_stats);
        break;
      }
    }
  }
  rep.free_classes = feasible ? static_cast<std::size_t>(std::count_if(
                                    root.begin(), root.end(), [](std::uint8_t x) { return !singleton(x); }))
                              : 0;

  std::vector<Domains> subtrees;
  if (feasible) subtrees = split(p, root, root_stats);
  rep.subtrees = subtrees.size();
  std::vector<SubtreeResult> results(subtrees.size());
  rep.resumed = load_checkpoint(options, results);

  const unsigned threads = std::max(1u, std::min<unsigned>(thread_count(options.threads),
                                                           static_cast<unsigned>(std::max<std::size_t>(1, subtrees.size()))));
  rep.threads_used = threads;
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  const bool has_deadline = options.budget_seconds > 0;
  const auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(has_deadline ? options.budget_seconds : 0));
  auto worker = [&] {
    Searcher searcher(p, ground, stop, deadline, has_deadline);
    while (!stop.load()) {
      std::size_t k = next.fetch_add(1);
      if (k >= subtrees.size()) break;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (results[k].done) continue;
      }
      SubtreeResult r;
      bool finished = searcher.run(subtrees[k], r);
      std::lock_guard<std::mutex> lock(mu);
      if (finished) {
        r.done = true;
        results[k] = std::move(r);
      } else {
        stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  std::atomic<bool> workers_done{false};
  std::thread monitor([&] {
    auto last = Clock::now();
    while (!workers_done.load()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
      if (has_deadline && Clock::now() > deadline) stop = true;
      if (!options.checkpoint_path.empty() &&
          std::chrono::duration<double>(Clock::now() - last).count() >= options.checkpoint_interval) {
        std::lock_guard<std::mutex> lock(mu);
        save_checkpoint(options, results);
        last = Clock::now();
      }
    }
  });
  for (auto& th : pool) th.join();
  workers_done = true;
  monitor.join();

  Stats total = root_stats;
  std::set<std::string> canonical;
  rep.complete = true;
  for (const auto& r : results) {
    if (!r.done) {
      rep.complete = false;
      continue;
    }
    total.add(r.stats);
    canonical.insert(r.found.begin(), r.found.end());
  }
  save_checkpoint(options, results);
  rep.nodes = total.nodes;
  rep.candidates_examined = total.examined;
  rep.rejected = total.rejected;
  rep.domain_prunes = total.prunes;
  if (!feasible) rep.notes.push_back("the constraints are infeasible at the root");
  if (p.sign_pivot_fixed) rep.notes.push_back("global sign fixed on a class that never vanishes");

  // Group the canonical candidates up to reorientation isomorphism.
  std::vector<std::pair<std::string, std::string>> by_digest;
  for (const auto& s : canonical) by_digest.push_back({fnv_digest(s), s});
  std::sort(by_digest.begin(), by_digest.end());
  const auto ref = reference(options.kind, options.n);
  for (const auto& [digest, signs] : by_digest) {
    rep.found.push_back(digest);
    OrientedMatroid om = om_from_sign_string(ground, p.rank, signs);
    bool placed = false;
    for (auto& cls : rep.classes) {
      if (find_isomorphism(om, cls.om, true)) {
        ++cls.members;
        placed = true;
        break;
      }
    }
    if (placed) continue;
    SearchClass cls;
    cls.digest = digest;
    cls.chirotope = signs;
    cls.om = om;
    cls.members = 1;
    cls.axioms_ok = om.families_orthogonal() && validate_circuit_axioms(om.ground(), om.circuits()).empty();
    if (ref) cls.matches_reference = find_isomorphism(om, *ref, true).has_value();
    rep.classes.push_back(std::move(cls));
  }
  rep.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace omcube
