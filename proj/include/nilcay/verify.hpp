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

#ifndef NILCAY_VERIFY_HPP_
#define NILCAY_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nilcay/cayley.hpp"
#include "nilcay/pcgroup.hpp"
#include "nilcay/report.hpp"

namespace nilcay {

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t samples = 10'000;
};

struct SuiteResult {
  std::string suite;
  std::string group;
  std::string presentation_hash;
  std::uint64_t seed = 0;
  std::vector<Report> reports;

  bool ok() const;
  json to_json() const;
};

// group_laws, metric, klein, fsf, local_normality, biorder, distortion, torsion_geodesics,
// quotient; "all" runs each in that order.
const std::vector<std::string>& suite_names();
std::vector<SuiteResult> run_suite(const std::string& suite, const PcPresentation& p,
                                   const VerifyOptions& opts);

// Individual checks, shared with the acceptance harness.
Report check_group_laws(const PcPresentation& p, const VerifyOptions& opts);
Report check_power_laws(const PcPresentation& p, const VerifyOptions& opts);
Report check_centrality(const PcPresentation& p, const VerifyOptions& opts);
// BFS distances in B(r) against exhaustive enumeration of words of length <= r.
Report check_metric_oracle(const PcPresentation& p, const GenSet& s, int r);
Report check_geodesic_counts(const Ball& ball, std::size_t pairs, std::uint64_t seed);
Report check_bi_invariance(const PcPresentation& p, const VerifyOptions& opts);

}  // namespace nilcay

#endif  // NILCAY_VERIFY_HPP_
