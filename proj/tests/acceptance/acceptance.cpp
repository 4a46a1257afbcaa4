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

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nilcay/order.hpp"
#include "nilcay/verify.hpp"

using namespace nilcay;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

void require_suite(Outcome& o, const SuiteResult& r) {
  for (const Report& rep : r.reports)
    o.require(rep.ok, r.suite + "/" + r.group + ": " + rep.claim + " [" + rep.verdict + "]");
}

Outcome group_laws() {
  Outcome o;
  for (const char* id : {"z", "z2", "z3", "heisenberg", "klein_bottle", "z_x_z2", "heisenberg_x_z3"}) {
    const Report r = check_group_laws(builtin(id), VerifyOptions{1, 1, 10'000});
    o.require(r.ok, std::string(id) + ": " + r.details.dump());
  }
  return o;
}

Outcome metric() {
  Outcome o;
  for (const char* id : {"z", "z2", "z3", "heisenberg", "klein_bottle", "z_x_z2", "heisenberg_x_z3"}) {
    const PcPresentation p = builtin(id);
    const Report r = check_metric_oracle(p, standard_genset(p), 4);
    o.require(r.ok, std::string(id) + ": " + r.details.dump());
  }
  return o;
}

Outcome fixed_suite(const char* suite) {
  Outcome o;
  require_suite(o, run_suite(suite, zn(1), VerifyOptions{})[0]);
  return o;
}

Outcome local_normality() {
  Outcome o;
  for (const char* id : {"z2", "z3", "heisenberg"}) {
    const SuiteResult r = run_suite("local_normality", builtin(id), VerifyOptions{})[0];
    require_suite(o, r);
    if (std::string(id) == "z2")
      o.require(r.reports[0].details["automorphisms"] == 8,
                "Z^2 count " + r.reports[0].details["automorphisms"].dump());
  }
  return o;
}

Outcome biorder() {
  Outcome o;
  // Klein bottle is torsion-free but not nilpotent; the order is refused there.
  for (const char* id : {"z", "z2", "z3", "heisenberg", "heisenberg_x_z"}) {
    const SuiteResult r = run_suite("biorder", builtin(id), VerifyOptions{1, 1, 10'000})[0];
    require_suite(o, r);
    for (const json& row : r.reports[0].details["table"])
      o.require(row["geodesics"] == "1", std::string(id) + ": k = " + row["k"].dump());
  }
  return o;
}

Outcome distortion() {
  Outcome o;
  const SuiteResult r = run_suite("distortion", heisenberg(), VerifyOptions{})[0];
  require_suite(o, r);
  o.require(r.reports.size() == 4, "missing Heisenberg ratio check");
  const char* want[] = {"undistorted", "undistorted", "distorted"};
  for (std::size_t i = 0; i < 3 && i < r.reports.size(); ++i) {
    o.require(r.reports[i].verdict == want[i], "generator " + std::to_string(i));
    o.require(r.reports[i].details["analytic_agrees"] == true,
              "analytic table disagrees for generator " + std::to_string(i));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const PcPresentation p = builtin("heisenberg_x_z3");
  std::string first;
  for (unsigned threads : {1u, 2u, 8u}) {
    json all = json::array();
    for (const SuiteResult& r : run_suite("all", p, VerifyOptions{42, threads}))
      all.push_back(r.to_json());
    const std::string text = all.dump(2);
    if (first.empty())
      first = text;
    else
      o.require(text == first, "output differs at " + std::to_string(threads) + " workers");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "group laws, 10^4 triples per family", 5, group_laws},
      {2, "BFS distances equal word distances on B(4)", 30, metric},
      {3, "Klein bottle flip and grid maps", 10, [] { return fixed_suite("klein"); }},
      {4, "FSF twins on Z x Z_2", 10, [] { return fixed_suite("fsf"); }},
      {5, "local automorphisms at (3,2) are affine", 60, local_normality},
      {6, "max generator convexity and bi-invariance", 30, biorder},
      {7, "Heisenberg distortion", 60, distortion},
      {8, "torsion-labelled geodesics on Z x Z_2", 30, [] { return fixed_suite("torsion_geodesics"); }},
      {9, "induced quotient maps, wreath lift, rank additivity", 30,
       [] { return fixed_suite("quotient"); }},
      {10, "byte-identical reports under 1, 2 and 8 workers", 120, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s <= c.limit_s, "time limit exceeded");
    if (!o.ok) ++failures;
    std::printf("criterion %2d %s  %-52s %7.2fs / %5.0fs%s%s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.name, s, c.limit_s, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
