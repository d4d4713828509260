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

// Exact linear algebra over Q (GMP rationals).

#ifndef OMCUBE_RATIONAL_HPP_
#define OMCUBE_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace omcube {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row major

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws kParse.
Rational parse_rational(const std::string& text);
// "p" or "p/q".
std::string to_string(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& z);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// A basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
// The unique solution of m x = rhs, or nullopt if there is none or it is not
// unique.
std::optional<Vec> solve_unique(const Matrix& m, const Vec& rhs);
Rational determinant(Matrix m);
// Fraction-free determinant of a square integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);
std::optional<Matrix> inverse(const Matrix& m);

Vec mat_vec(const Matrix& m, const Vec& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n);
// Scales a rational vector by a positive factor so that it becomes a
// primitive integer vector.
std::vector<Integer> primitive_integer(const Vec& v);

}  // namespace omcube

#endif  // OMCUBE_RATIONAL_HPP_
