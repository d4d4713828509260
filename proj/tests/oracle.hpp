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


// Brute-force reference computations for the tests. Nothing here uses the
// library: oriented matroids of point configurations are obtained from
// determinants and kernels computed with plain GMP rationals, and families are
// compared as sets of label pairs.

#ifndef OMCUBE_TESTS_ORACLE_HPP_
#define OMCUBE_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Labels = std::vector<std::string>;
// (plus labels, minus labels), each sorted by ground position.
using Signed = std::pair<Labels, Labels>;
using Family = std::set<Signed>;

struct Point {
  std::string label;
  std::vector<Q> coords;
};

inline Q q(long p, long d = 1) {
  Q x(p, d);
  x.canonicalize();
  return x;
}

// Rank of a row-major matrix by Gaussian elimination.
inline std::size_t rank_of(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline Q det(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return d;
}

// One nonzero kernel vector of the columns `cols` (assumed 1-dimensional).
inline std::vector<Q> kernel_vector(const std::vector<std::vector<Q>>& columns) {
  const std::size_t k = columns.size(), d = columns[0].size();
  std::vector<std::vector<Q>> m(d, std::vector<Q>(k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = columns[j][i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < d; ++c) {
    std::size_t p = r;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t t = 0; t < k; ++t) m[i][t] -= f * m[r][t];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Q> x(k, 0);
  x[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m[i][free_col];
  return x;
}

inline Signed canonical(const Signed& s) {
  Signed neg{s.second, s.first};
  return std::min(s, neg);
}

struct OM {
  Labels ground;
  std::size_t rank = 0;
  Family circuits;    // canonical representatives
  Family cocircuits;  // canonical representatives
  std::set<std::vector<std::size_t>> hyperplanes;
};

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Affine mode appends a 1 to every point.
inline OM from_points(const std::vector<Point>& pts, bool affine) {
  OM om;
  std::vector<std::vector<Q>> v;
  for (const auto& p : pts) {
    om.ground.push_back(p.label);
    auto x = p.coords;
    if (affine) x.push_back(1);
    v.push_back(std::move(x));
  }
  const std::size_t n = v.size();
  auto rank_cols = [&](const std::vector<std::size_t>& s) {
    std::vector<std::vector<Q>> m;
    for (auto i : s) m.push_back(v[i]);
    return m.empty() ? std::size_t{0} : rank_of(m);
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  om.rank = rank_cols(all);
  const std::size_t r = om.rank;
  // Circuits: minimal dependent subsets, signed by their kernel vector.
  for (std::size_t k = 1; k <= r + 1; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
      if (rank_cols(s) != k - 1) return;
      for (std::size_t drop = 0; drop < k; ++drop) {
        std::vector<std::size_t> t;
        for (std::size_t j = 0; j < k; ++j) {
          if (j != drop) t.push_back(s[j]);
        }
        if (rank_cols(t) != k - 1) return;
      }
      std::vector<std::vector<Q>> cols;
      for (auto i : s) cols.push_back(v[i]);
      auto x = kernel_vector(cols);
      Signed c;
      for (std::size_t j = 0; j < k; ++j) (sgn(x[j]) > 0 ? c.first : c.second).push_back(om.ground[s[j]]);
      om.circuits.insert(canonical(c));
    });
  }
  // Cocircuits: for every independent (r-1)-set spanning a hyperplane, the
  // sign of det(basis, e) for each e. For a basis B of the hyperplane and a
  // fixed completion direction this is a linear functional.
  if (r >= 1) {
    // The functional det(v_b1..v_b(r-1), x) lives on the span; evaluate it
    // after projecting to r coordinates in which the configuration has rank r.
    const std::size_t d = v[0].size();
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < d && coords.size() < r; ++c) {
      coords.push_back(c);
      std::vector<std::vector<Q>> proj;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Q> row;
        for (auto cc : coords) row.push_back(v[i][cc]);
        proj.push_back(row);
      }
      if (rank_of(proj) < coords.size()) coords.pop_back();
    }
    for_each_subset(n, r - 1, [&](const std::vector<std::size_t>& b) {
      if (rank_cols(b) != r - 1) return;
      std::vector<std::size_t> h;
      std::vector<int> sign(n, 0);
      for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::vector<Q>> m;
        for (auto i : b) {
          std::vector<Q> row;
          for (auto cc : coords) row.push_back(v[i][cc]);
          m.push_back(row);
        }
        std::vector<Q> row;
        for (auto cc : coords) row.push_back(v[e][cc]);
        m.push_back(row);
        sign[e] = sgn(det(m));
        if (sign[e] == 0) h.push_back(e);
      }
      if (!om.hyperplanes.insert(h).second) return;
      Signed c;
      for (std::size_t e = 0; e < n; ++e) {
        if (sign[e] > 0) c.first.push_back(om.ground[e]);
        if (sign[e] < 0) c.second.push_back(om.ground[e]);
      }
      om.cocircuits.insert(canonical(c));
    });
  }
  return om;
}

// Cube vertices v_A in bitmask order, labeled "v" + signs.
inline std::vector<Point> cube(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
    Point p;
    p.label = "v";
    for (std::size_t i = 0; i < n; ++i) {
      const bool minus = (a >> i) & 1;
      p.label += minus ? '-' : '+';
      p.coords.push_back(minus ? -1 : 1);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

// +-e_i labeled "i" and "i'".
inline std::vector<Point> cross(std::size_t n) {
  std::vector<Point> pts;
  for (int s : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      Point p;
      p.label = std::to_string(i + 1) + (s < 0 ? "'" : "");
      p.coords.assign(n, 0);
      p.coords[i] = s;
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

// (e_i, 0) labeled "y i" and (v_A, 1) labeled by the vertex, linear mode.
inline std::vector<Point> lifted_adjoint(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    Point p;
    p.label = "y" + std::to_string(i + 1);
    p.coords.assign(n + 1, 0);
    p.coords[i] = 1;
    pts.push_back(std::move(p));
  }
  for (auto p : cube(n)) {
    p.coords.push_back(1);
    pts.push_back(std::move(p));
  }
  return pts;
}

inline Family canonical_family(const std::vector<Signed>& f) {
  Family out;
  for (const auto& s : f) out.insert(canonical(s));
  return out;
}

}  // namespace oracle

#endif  // OMCUBE_TESTS_ORACLE_HPP_
