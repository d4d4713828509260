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


// Conversions between library values and the oracle's label-based families.

#ifndef OMCUBE_TESTS_SUPPORT_HPP_
#define OMCUBE_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "omcube/oriented_matroid.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Signed to_signed(const omcube::Ground& g, const omcube::SignedSet& x) {
  return {g.labels_of(x.plus), g.labels_of(x.minus)};
}

inline oracle::Family to_family(const omcube::Ground& g, const std::vector<omcube::SignedSet>& f) {
  oracle::Family out;
  for (const auto& x : f) out.insert(oracle::canonical(to_signed(g, x)));
  return out;
}

// The library matroid reordered to the oracle's ground, as label families.
struct Families {
  oracle::Family circuits;
  oracle::Family cocircuits;
  std::size_t rank;
};

inline Families families(const omcube::OrientedMatroid& om, const std::vector<std::string>& ground) {
  omcube::OrientedMatroid r = om.reordered(ground);
  return {to_family(r.ground(), r.circuits()), to_family(r.ground(), r.cocircuits()),
          static_cast<std::size_t>(r.rank())};
}

inline bool matches(const omcube::OrientedMatroid& om, const oracle::OM& ref) {
  Families f = families(om, ref.ground);
  return f.rank == ref.rank && f.circuits == ref.circuits && f.cocircuits == ref.cocircuits;
}

inline omcube::SignedSet make(const omcube::Ground& g, const std::vector<std::string>& plus,
                              const std::vector<std::string>& minus) {
  return omcube::SignedSet{g.mask_of(plus), g.mask_of(minus)};
}

}  // namespace support

#endif  // OMCUBE_TESTS_SUPPORT_HPP_
