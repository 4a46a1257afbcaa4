// Copyright 2026 The nilcay Authors
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

#include "doctest.h"
#include "nilcay/errors.hpp"
#include "nilcay/verify.hpp"

using namespace nilcay;

TEST_CASE("reports carry provenance") {
  const PcPresentation h = heisenberg();
  const auto res = run_suite("group_laws", h, VerifyOptions{5, 1, 500});
  REQUIRE(res.size() == 1);
  const json j = res[0].to_json();
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["presentation_hash"] == h.hash());
  CHECK(j["seed"] == 5);
  for (const json& r : j["reports"]) {
    CHECK(r.contains("claim"));
    CHECK(r.contains("parameters"));
    CHECK(!r.contains("runtime_ms"));
  }
  CHECK(res[0].ok());
}

TEST_CASE("suites are deterministic across worker counts") {
  const PcPresentation h = builtin("heisenberg_x_z3");
  for (const char* suite : {"group_laws", "metric", "biorder"}) {
    const std::string a = run_suite(suite, h, VerifyOptions{3, 1, 400})[0].to_json().dump();
    const std::string b = run_suite(suite, h, VerifyOptions{3, 3, 400})[0].to_json().dump();
    CHECK(a == b);
  }
}

TEST_CASE("seeds change sampled witnesses but not verdicts") {
  const PcPresentation k = klein_bottle();
  CHECK(run_suite("group_laws", k, VerifyOptions{1, 1, 300})[0].ok());
  CHECK(run_suite("group_laws", k, VerifyOptions{2, 1, 300})[0].ok());
  CHECK_THROWS_AS(run_suite("bogus", k, VerifyOptions{}), InvalidArgument);
}

TEST_CASE("metric oracle and geodesic counts") {
  const PcPresentation k = klein_bottle();
  CHECK(check_metric_oracle(k, standard_genset(k), 4).ok);
  const Ball b = generate_ball(k, standard_genset(k), 4);
  CHECK(check_geodesic_counts(b, 50, 1).ok);
}
