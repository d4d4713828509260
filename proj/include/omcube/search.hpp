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

// Enumeration of oriented cubes and adjoints of O_n as chirotopes.
//
// Each r-subset of the ground carries a sign in {-, 0, +}. The required
// circuits and cocircuits become equalities chi(T) = +-chi(T') (merged with a
// parity union-find) and forced zeros; three-term Grassmann-Pluecker relations
// are propagated during the search. Complete assignments are checked for the
// basis exchange axiom and for the target property, reduced modulo the
// hyperoctahedral group and finally grouped up to reorientation isomorphism.

#ifndef OMCUBE_SEARCH_HPP_
#define OMCUBE_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omcube/oriented_matroid.hpp"

namespace omcube {

enum class SearchKind {
  kCubes,         // rank n+1 on C^n: signed rectangles are circuits, facets hyperplanes
  kAdjoints,      // adjoint ground of O_n: rank n+1 and the cocircuits X~[i], X~[i']
  kOrientations,  // every orientation of the matroid of Q_n
};
enum class SearchStrategy {
  kExhaustive,  // zero pattern free
  kPruned,      // zero pattern fixed to the real cube (or canonical adjoint)
};

struct SearchOptions {
  std::size_t n = 2;
  SearchKind kind = SearchKind::kCubes;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  double budget_seconds = 0;  // 0: unlimited
  std::string checkpoint_path;  // empty: no checkpointing
  double checkpoint_interval = 30;
  unsigned threads = 0;  // 0: OMCUBE_THREADS or the hardware concurrency
};

struct SearchClass {
  std::string digest;     // 16 hex digits of the canonical chirotope
  std::string chirotope;  // canonical sign string over the r-subsets in colex order
  OrientedMatroid om;
  std::size_t members = 0;  // distinct canonical candidates in the class
  std::optional<bool> matches_reference;
  bool axioms_ok = false;  // circuit axioms and orthogonality re-checked
};

struct SearchReport {
  SearchOptions options;
  std::size_t rank = 0;
  std::size_t variables = 0;       // r-subsets
  std::size_t free_classes = 0;    // parity classes left after the root propagation
  std::size_t subtrees = 0;
  std::size_t nodes = 0;           // search nodes visited
  std::size_t candidates_examined = 0;  // complete sign assignments reached
  std::size_t rejected = 0;        // complete assignments failing the leaf checks
  std::size_t domain_prunes = 0;   // values removed by Grassmann-Pluecker propagation
  std::vector<std::string> found;  // digests of the distinct canonical candidates
  std::vector<SearchClass> classes;
  double wall_time = 0;
  bool complete = false;  // proved exhaustive (within the strategy)
  bool resumed = false;
  unsigned threads_used = 1;
  std::vector<std::string> notes;

  std::size_t isomorphism_classes() const { return classes.size(); }
};

SearchReport run_search(const SearchOptions& options);

std::string to_string(SearchKind kind);
std::string to_string(SearchStrategy strategy);
SearchKind parse_search_kind(const std::string& text);
SearchStrategy parse_search_strategy(const std::string& text);

// Ground and rank searched for the given kind.
std::vector<std::string> search_ground(SearchKind kind, std::size_t n);

// The oriented matroid of a sign string over the r-subsets in colex order.
OrientedMatroid om_from_sign_string(const std::vector<std::string>& ground, std::size_t rank,
                                    const std::string& signs);
std::string sign_string(const Chirotope& chi, std::size_t ground_size, std::size_t rank);

// Three-term Grassmann-Pluecker relations and basis exchange on a complete
// chirotope.
bool is_chirotope(const Chirotope& chi, std::size_t ground_size, std::size_t rank);

}  // namespace omcube

#endif  // OMCUBE_SEARCH_HPP_
