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

#include "omcube/generators.hpp"

#include "omcube/errors.hpp"
#include "omcube/realization.hpp"

namespace omcube {

namespace {

void check_cube_n(std::size_t n, std::size_t max_n) {
  require(n >= 2 && n <= max_n, ErrorCode::kInvalidArgument,
          "n must be between 2 and " + std::to_string(max_n));
}

// Index of i (1-based) and i' in the cross ground.
std::size_t unprimed(std::size_t i) { return i - 1; }
std::size_t primed(std::size_t n, std::size_t i) { return n + i - 1; }

}  // namespace

std::vector<SignedSet> cross_polytope_half_family(std::size_t n) {
  std::vector<SignedSet> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back({bit(unprimed(i)), bit(primed(n, i))});
  for (Mask a = 0; a < bit(n); ++a) {
    SignedSet x;
    for (std::size_t i = 1; i <= n; ++i) {
      x.plus |= (a >> (i - 1) & 1) ? bit(primed(n, i)) : bit(unprimed(i));
    }
    out.push_back(x);
  }
  return out;
}

OrientedMatroid cross_polytope(std::size_t n) {
  require(n >= 2 && n <= 31, ErrorCode::kInvalidArgument, "cross_polytope needs 2 <= n <= 31");
  std::vector<SignedSet> circuits;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      circuits.push_back({bit(unprimed(i)) | bit(primed(n, i)), bit(unprimed(j)) | bit(primed(n, j))});
    }
  }
  return OrientedMatroid::from_families(Ground(labels::cross_ground(n)), circuits,
                                        cross_polytope_half_family(n));
}

CrossPolytopeReport cross_polytope_report(std::size_t n) {
  CrossPolytopeReport rep;
  rep.om = cross_polytope(n);
  rep.alternative_orthogonal = true;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      SignedSet alt{bit(unprimed(i)) | bit(unprimed(j)), bit(primed(n, i)) | bit(primed(n, j))};
      rep.alternative_circuits.push_back(alt);
      for (const auto& d : rep.om.cocircuits()) {
        if (!orthogonal(alt, d)) rep.alternative_orthogonal = false;
      }
    }
  }
  rep.note = rep.alternative_orthogonal
                 ? "the signing ({i,j},{i',j'}) is orthogonal to the cocircuits"
                 : "the signing ({i,j},{i',j'}) is not orthogonal to the cocircuits; circuits are "
                   "signed ({i,i'},{j,j'}) as in the realization by +-e_i";
  return rep;
}

OrientedMatroid real_cube(std::size_t n) {
  check_cube_n(n, 4);
  return om_from_points(cube_points(n)).om;
}

std::vector<SignedSet> rectangles(std::size_t n) {
  require(n >= 2 && n <= kMaxCubeN + 1, ErrorCode::kInvalidArgument, "rectangles need 2 <= n <= 6");
  std::vector<SignedSet> out;
  const Mask full = low_mask(n);
  for (Mask v = 0; v < bit(n); ++v) {
    for (Mask a = 1; a <= full; ++a) {
      for (Mask b = 1; b <= full; ++b) {
        if (a & b) continue;
        // Vertex masks: flipping the coordinates of S is xor with S.
        out.push_back({bit(v) | bit(v ^ (a | b)), bit(v ^ a) | bit(v ^ b)});
      }
    }
  }
  return canonical_family(out);
}

Mask facet_mask(std::size_t n, std::size_t i, bool plus) {
  Mask m = 0;
  for (Mask a = 0; a < bit(n); ++a) {
    bool in_a = a >> (i - 1) & 1;
    if (in_a != plus) m |= bit(a);
  }
  return m;
}

std::vector<NamedCocircuit> smallest_cocircuits(std::size_t n, bool include_skew) {
  require(n >= 2 && n <= kMaxCubeN + 1, ErrorCode::kInvalidArgument,
          "smallest cocircuits need 2 <= n <= 6");
  auto coord = [](Mask a, std::size_t i) { return (a >> (i - 1) & 1) ? -1 : 1; };
  auto make = [&](const std::string& name, auto&& f) {
    NamedCocircuit nc;
    nc.name = name;
    for (Mask a = 0; a < bit(n); ++a) {
      int v = f(a);
      if (v > 0) nc.cocircuit.plus |= bit(a);
      if (v < 0) nc.cocircuit.minus |= bit(a);
      if (v == 0) nc.zero_set |= bit(a);
    }
    nc.cocircuit = canonical_rep(nc.cocircuit);
    return nc;
  };
  std::vector<NamedCocircuit> out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(make("H" + std::to_string(i) + "+", [&](Mask a) { return coord(a, i) - 1; }));
    out.push_back(make("H" + std::to_string(i) + "-", [&](Mask a) { return coord(a, i) + 1; }));
  }
  if (include_skew) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::string ij = std::to_string(i) + std::to_string(j);
        out.push_back(make("H" + ij + "+", [&](Mask a) { return coord(a, i) - coord(a, j); }));
        out.push_back(make("H" + ij + "-", [&](Mask a) { return coord(a, i) + coord(a, j); }));
      }
    }
  }
  return out;
}

OrientedMatroid canonical_adjoint(std::size_t n) {
  check_cube_n(n, 4);
  return om_from_points(lifted_adjoint_vectors(n)).om;
}

OrientedMatroid cross_polytope_plus_zero(std::size_t n) {
  require(n >= 1 && n <= 31, ErrorCode::kInvalidArgument,
          "cross_polytope_plus_zero needs 1 <= n <= 31");
  auto names = labels::cross_ground(n);
  names.push_back(labels::kExtensionPoint);
  const Mask zero = bit(2 * n);
  std::vector<SignedSet> cocircuits;
  for (const auto& x : cross_polytope_half_family(n)) {
    cocircuits.push_back(x.minus == 0 ? SignedSet{x.plus | zero, 0} : x);
  }
  return OrientedMatroid::from_cocircuits(Ground(names), cocircuits);
}

SignedSet adjoint_principal_cocircuit(std::size_t n, std::size_t i, bool primed_flag) {
  SignedSet x;
  for (Mask a = 0; a < bit(n); ++a) {
    bool in_a = a >> (i - 1) & 1;
    if (in_a == primed_flag) x.plus |= bit(n + a);
  }
  if (primed_flag) {
    x.minus |= bit(i - 1);
  } else {
    x.plus |= bit(i - 1);
  }
  return x;
}

SignedSet adjoint_zero_cocircuit(std::size_t n) {
  return SignedSet{low_mask(n + bit(n)) & ~low_mask(n), 0};
}

}  // namespace omcube
