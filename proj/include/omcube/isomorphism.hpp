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

#ifndef OMCUBE_ISOMORPHISM_HPP_
#define OMCUBE_ISOMORPHISM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "omcube/oriented_matroid.hpp"

namespace omcube {

struct Isomorphism {
  // image[i] is the index in the second ground of element i of the first.
  std::vector<std::size_t> image;
  // Elements of the first ground whose signs are reversed before mapping.
  Mask flips = 0;
};

// Backtracking search for a bijection carrying the circuits of `a` onto those
// of `b` (and the cocircuits onto the cocircuits). With `reorient` set, sign
// reversals on elements of `a` are searched as well.
std::optional<Isomorphism> find_isomorphism(const OrientedMatroid& a, const OrientedMatroid& b,
                                            bool reorient = false);

// Applies an isomorphism: the result has b's ground and equals b when the
// isomorphism is valid.
OrientedMatroid apply_isomorphism(const OrientedMatroid& a, const Isomorphism& iso,
                                  const Ground& target);

}  // namespace omcube

#endif  // OMCUBE_ISOMORPHISM_HPP_
