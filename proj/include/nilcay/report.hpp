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

#ifndef NILCAY_REPORT_HPP_
#define NILCAY_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "nilcay/element.hpp"

namespace nilcay {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Outcome of one checked claim. `verdict` is claim specific ("pass", "fail",
// "non-normal", "distorted", ...); `ok` says whether the claim held.
struct Report {
  std::string claim;
  std::string verdict;
  bool ok = false;
  json witnesses = json::array();
  json parameters = json::object();
  json details = json::object();

  // Adds tool version, presentation hash and seed. Wall-clock time is only
  // included when given, so that repeated runs stay byte-identical.
  json to_json(const std::string& presentation_hash, std::uint64_t seed,
               std::optional<double> runtime_ms = std::nullopt) const;
};

Report make_report(std::string claim, bool ok,
                   const std::string& pass_verdict = "pass",
                   const std::string& fail_verdict = "fail");

json to_json(const GroupElement& x);

}  // namespace nilcay

#endif  // NILCAY_REPORT_HPP_
