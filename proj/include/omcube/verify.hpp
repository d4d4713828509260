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


// The verification suite: every structural claim about cross-polytopes, cubes
// and their adjoints as a named, executable check.

#ifndef OMCUBE_VERIFY_HPP_
#define OMCUBE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace omcube {

enum class ClaimStatus { kPass, kFail, kSkip };

std::string to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::kSkip;
  std::string witness;  // what was checked, or the first failure
  double seconds = 0;
};

struct VerifyOptions {
  std::size_t n = 2;
  std::uint64_t seed = 20260101;
  std::size_t transforms = 20;      // random projective transforms per run
  std::size_t interior_points = 3;  // random interior points c
  double search_budget = 60;        // seconds per search
  std::vector<std::string> only;    // claim ids to run; empty: all
};

struct VerificationReport {
  std::size_t n = 0;
  std::vector<ClaimResult> claims;
  bool ok() const;  // no failures (skips allowed)
};

struct ClaimInfo {
  std::string id;
  std::string description;
  std::size_t max_n;  // larger n is skipped by the scale guard
};

const std::vector<ClaimInfo>& registered_claims();

// Throws kInvalidArgument for n outside [2, 5] or an unknown claim id.
VerificationReport verify_suite(const VerifyOptions& options);

}  // namespace omcube

#endif  // OMCUBE_VERIFY_HPP_
