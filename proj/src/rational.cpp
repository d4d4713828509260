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

#include "omcube/rational.hpp"

#include <cctype>

#include "omcube/errors.hpp"

namespace omcube {

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    fail(ErrorCode::kParse, "malformed rational '" + text + "'");
  }
  if (num[0] == '+') num = num.substr(1);
  Integer d(den);
  if (d == 0) fail(ErrorCode::kParse, "zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  if (m.empty()) return {};
  Matrix a = m;
  auto pivots = rref(a);
  const std::size_t cols = a[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_unique(const Matrix& m, const Vec& rhs) {
  if (m.empty()) return std::nullopt;
  const std::size_t rows = m.size(), cols = m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(rhs[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (pivots.size() != cols) return std::nullopt;                      // not unique
  Vec x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int s = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return s * m[n - 1][n - 1];
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  Vec out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), Vec(b.empty() ? 0 : b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Matrix identity(std::size_t n) {
  Matrix m(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<Integer> primitive_integer(const Vec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (l / q.get_den());
    out.push_back(z);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  if (g > 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

}  // namespace omcube
