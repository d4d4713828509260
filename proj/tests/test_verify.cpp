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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "omcube/codec.hpp"
#include "omcube/errors.hpp"
#include "omcube/verify.hpp"

using namespace omcube;

TEST_CASE("claim registry") {
  const auto& claims = registered_claims();
  CHECK(claims.size() >= 20);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK_FALSE(c.id.empty());
    CHECK_FALSE(c.description.empty());
    CHECK(c.max_n >= 4);
    ids.insert(c.id);
  }
  CHECK(ids.size() == claims.size());
}

TEST_CASE("every claim passes at n = 2 and n = 3") {
  for (std::size_t n : {2, 3}) {
    VerifyOptions o;
    o.n = n;
    VerificationReport rep = verify_suite(o);
    CHECK(rep.ok());
    REQUIRE(rep.claims.size() == registered_claims().size());
    for (const auto& c : rep.claims) {
      CAPTURE(c.id);
      CAPTURE(c.witness);
      CHECK(c.status == ClaimStatus::kPass);
    }
  }
}

TEST_CASE("scale guard skips at n = 5") {
  VerifyOptions o;
  o.n = 5;
  VerificationReport rep = verify_suite(o);
  CHECK(rep.ok());
  std::size_t skipped = 0;
  for (std::size_t k = 0; k < rep.claims.size(); ++k) {
    const auto& c = rep.claims[k];
    if (registered_claims()[k].max_n < 5) {
      CHECK(c.status == ClaimStatus::kSkip);
      CHECK(c.witness.rfind("scale guard", 0) == 0);
      ++skipped;
    } else {
      CHECK(c.status == ClaimStatus::kPass);
    }
  }
  CHECK(skipped > 0);
  Json j = verification_report_to_json(rep);
  CHECK(j["n"] == 5);
  CHECK(j["ok"] == true);
}

TEST_CASE("claim selection and input errors") {
  VerifyOptions o;
  o.only = {"adjoint-conditions"};
  VerificationReport rep = verify_suite(o);
  REQUIRE(rep.claims.size() == 1);
  CHECK(rep.claims[0].id == "adjoint-conditions");
  o.only = {"no-such-claim"};
  CHECK_THROWS_AS(verify_suite(o), Error);
  VerifyOptions low;
  low.n = 1;
  CHECK_THROWS_AS(verify_suite(low), Error);
  CHECK(to_string(ClaimStatus::kSkip) == "skip");
}
