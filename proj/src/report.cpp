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

#include "nilcay/report.hpp"

namespace nilcay {

json Report::to_json(const std::string& presentation_hash, std::uint64_t seed,
                     std::optional<double> runtime_ms) const {
  json j;
  j["claim"] = claim;
  j["verdict"] = verdict;
  j["ok"] = ok;
  j["witnesses"] = witnesses;
  j["parameters"] = parameters;
  j["details"] = details;
  j["tool_version"] = kToolVersion;
  j["presentation_hash"] = presentation_hash;
  j["seed"] = seed;
  if (runtime_ms) j["runtime_ms"] = *runtime_ms;
  return j;
}

Report make_report(std::string claim, bool ok, const std::string& pass_verdict,
                   const std::string& fail_verdict) {
  Report r;
  r.claim = std::move(claim);
  r.ok = ok;
  r.verdict = ok ? pass_verdict : fail_verdict;
  return r;
}

json to_json(const GroupElement& x) { return x.to_string(); }

}  // namespace nilcay
