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

#include "nilcay/order.hpp"

#include <algorithm>

#include "nilcay/errors.hpp"
#include "nilcay/structure.hpp"

namespace nilcay {

namespace {

json path_to_json(const PcPresentation& p, const GeodesicPath& path) {
  json labels = json::array(), verts = json::array();
  for (const GroupElement& s : path.labels) labels.push_back(to_json(s));
  for (const GroupElement& x : path_vertices(p, path)) verts.push_back(to_json(x));
  return json{{"start", to_json(path.start)}, {"labels", labels}, {"vertices", verts}};
}

}  // namespace

std::string to_string(Cmp c) {
  switch (c) {
    case Cmp::kLess: return "less";
    case Cmp::kEqual: return "equal";
    case Cmp::kGreater: return "greater";
  }
  return "";
}

std::string to_string(Distortion d) {
  switch (d) {
    case Distortion::kDistorted: return "distorted";
    case Distortion::kUndistorted: return "undistorted";
    case Distortion::kInconclusive: return "inconclusive";
  }
  return "";
}

BiOrder::BiOrder(PcPresentation p) : p_(std::move(p)) {
  const std::size_t n = p_.num_generators();
  for (std::size_t i = 0; i < n; ++i)
    if (p_.is_finite(i))
      throw PreconditionError("bi-order refused: '" + p_.name() + "' has torsion");
  if (!p_.nilpotent())
    throw PreconditionError("bi-order refused: '" + p_.name() +
                            "' is not flagged nilpotent");
  if (p_.biorder_blocks().empty())
    throw PreconditionError("bi-order refused: '" + p_.name() +
                            "' declares no filtration");
  for (const auto& block : p_.biorder_blocks())
    scan_.insert(scan_.end(), block.begin(), block.end());
  if (scan_.size() != n)
    throw PreconditionError("bi-order refused: filtration of '" + p_.name() +
                            "' does not cover every generator");
}

Cmp BiOrder::compare(const GroupElement& x, const GroupElement& y) const {
  const GroupElement d = multiply(p_, inverse(p_, x), y);
  for (std::size_t g : scan_) {
    if (d[g] > 0) return Cmp::kLess;
    if (d[g] < 0) return Cmp::kGreater;
  }
  return Cmp::kEqual;
}

GroupElement max_generator(const BiOrder& order, const GenSet& s) {
  if (s.size() == 0) throw PreconditionError("max_generator: empty generating set");
  if (!s.symmetric()) throw PreconditionError("max_generator: generating set is not symmetric");
  GroupElement best = s[0];
  for (const GroupElement& x : s.elements())
    if (order.less(best, x)) best = x;
  return best;
}

Report convexity_check(const Ball& ball, const GroupElement& s, int kmax) {
  const PcPresentation& p = ball.presentation();
  if (!ball.genset().contains(s))
    throw PreconditionError("convexity_check: " + s.to_string() + " is not in S");
  if (kmax < 1 || kmax > ball.radius())
    throw PreconditionError("convexity_check: kmax must lie in [1, radius]");
  Report r = make_report("s^k is a convex geodesic for 1 <= k <= kmax", true);
  r.parameters = json{{"s", to_json(s)}, {"kmax", kmax}, {"r", ball.radius()}};
  json table = json::array();
  for (int k = 1; k <= kmax; ++k) {
    const GroupElement x = power(p, s, k);
    const auto id = ball.find(x);
    const int d = ball.dist(*id);
    const Int count = count_geodesics(ball, p.identity(), x);
    table.push_back(json{{"k", k}, {"dist", d}, {"geodesics", count.str()}});
    if (r.ok && (d != k || count != 1)) {
      r.ok = false;
      r.verdict = "fail";
      json w{{"k", k}, {"dist", d}, {"geodesics", count.str()}};
      json paths = json::array();
      for (const auto& path : enumerate_geodesics(ball, p.identity(), x, 2).paths)
        paths.push_back(path_to_json(p, path));
      w["paths"] = paths;
      r.witnesses.push_back(w);
    }
  }
  r.details = json{{"table", table}, {"verified_range", json::array({1, kmax})}};
  return r;
}

Report central_label_propagation(const Ball& ball, const GeodesicPath& segment,
                                 const GroupElement& s) {
  const PcPresentation& p = ball.presentation();
  if (!is_central(p, s))
    throw PreconditionError("label propagation: " + s.to_string() + " is not central");
  if (std::find(segment.labels.begin(), segment.labels.end(), s) == segment.labels.end())
    throw PreconditionError("label propagation: no edge of the segment is labelled " +
                            s.to_string());
  const GroupElement end = path_vertices(p, segment).back();
  const auto d = distance(ball, segment.start, end);
  if (!d || *d != static_cast<int>(segment.length()) ||
      count_geodesics(ball, segment.start, end) != 1)
    throw PreconditionError("label propagation: segment is not convex within the ball");
  Report r = make_report("every edge of a convex segment through an s-edge is labelled s",
                         true);
  r.parameters = json{{"s", to_json(s)}, {"length", segment.length()}, {"r", ball.radius()}};
  const auto verts = path_vertices(p, segment);
  for (std::size_t i = 0; i < segment.labels.size(); ++i) {
    if (segment.labels[i] == s) continue;
    r.ok = false;
    r.verdict = "fail";
    r.witnesses.push_back(json{{"from", to_json(verts[i])},
                               {"label", to_json(segment.labels[i])},
                               {"to", to_json(verts[i + 1])}});
    break;
  }
  return r;
}

DistortionProfile distortion_profile(const PcPresentation& p, const GenSet& s,
                                     const GroupElement& g, long long kmax,
                                     const DistortionOptions& opts) {
  if (g.is_identity()) throw InvalidArgument("distortion of the identity");
  if (kmax < 1) throw InvalidArgument("kmax must be at least 1");
  std::vector<long long> ks;
  for (long long k = 1; k <= kmax; k *= 2) ks.push_back(k);
  if (ks.back() != kmax) ks.push_back(kmax);

  DistortionProfile prof;
  std::optional<Ball> ball;
  int radius = std::max(1, opts.start_radius);
  bool out_of_budget = false;
  std::optional<int> d1;
  for (long long k : ks) {
    DistortionSample smp;
    smp.k = k;
    const GroupElement x = power(p, g, k);
    if (x.is_identity()) {
      smp.dist = 0;
      smp.method = "identity";
    } else if (d1 && character_lower_bound(p, s, x) >= k * *d1) {
      smp.dist = static_cast<int>(k * *d1);
      smp.method = "character bound";
    }
    while (!smp.dist && !out_of_budget) {
      if (!ball || ball->radius() != radius) {
        try {
          ball.emplace(generate_ball(p, s, radius, opts.ball));
        } catch (const BudgetExceeded& e) {
          out_of_budget = true;
          prof.stop_reason = e.what();
          break;
        }
      }
      if (auto id = ball->find(x)) {
        smp.dist = ball->dist(*id);
        smp.method = "ball";
      } else if (auto d = distance(*ball, p.identity(), x)) {
        smp.dist = *d;
        smp.method = "split";
      } else {
        // Here dist > 2 * radius; k * d1 bounds it above.
        int next = std::max(radius + 1, (3 * radius + 1) / 2);
        if (d1) next = std::min<long long>(next, std::max<long long>(radius + 1, (k * *d1 + 1) / 2));
        radius = next;
      }
    }
    if (smp.dist) {
      smp.ratio = static_cast<double>(*smp.dist) / static_cast<double>(k);
      if (k == 1) d1 = smp.dist;
    } else {
      smp.method = "uncertified";
    }
    prof.samples.push_back(smp);
  }
  prof.radius_used = ball ? ball->radius() : 0;
  prof.complete = std::all_of(prof.samples.begin(), prof.samples.end(),
                              [](const DistortionSample& x) { return x.dist.has_value(); });
  return prof;
}

DistortionVerdict classify_distorted(const PcPresentation& p, const GenSet& s,
                                     const GroupElement& g, long long kmax, double tol,
                                     const DistortionOptions& opts) {
  DistortionVerdict v;
  v.profile = distortion_profile(p, s, g, kmax, opts);
  v.analytic_in_isolator = in_derived_isolator(p, g);
  const auto& sm = v.profile.samples;
  if (v.profile.complete) {
    // ratio_i < ratio_j  <=>  d_i k_j < d_j k_i, kept in integers.
    auto ratio_le = [&](std::size_t i, std::size_t j) {
      return static_cast<long long>(*sm[i].dist) * sm[j].k <=
             static_cast<long long>(*sm[j].dist) * sm[i].k;
    };
    const bool constant = std::all_of(sm.begin(), sm.end(), [&](const DistortionSample& x) {
      return static_cast<long long>(*x.dist) * sm[0].k == static_cast<long long>(*sm[0].dist) * x.k;
    });
    bool tail_down = true;
    for (std::size_t i = sm.size() / 2; i + 1 < sm.size(); ++i)
      tail_down = tail_down && ratio_le(i + 1, i);
    if (constant && sm[0].ratio >= 1) {
      v.verdict = Distortion::kUndistorted;
    } else if (sm.back().ratio < tol * sm.front().ratio && tail_down) {
      v.verdict = Distortion::kDistorted;
    }
  }
  if (p.nilpotent() && v.verdict != Distortion::kInconclusive) {
    v.agrees = (v.verdict == Distortion::kDistorted) == v.analytic_in_isolator;
    if (!*v.agrees)
      throw Error("distortion verdict for " + g.to_string() + " is " + to_string(v.verdict) +
                  " but the isolator table says the element is " +
                  (v.analytic_in_isolator ? "in" : "not in") + " the isolator of [G,G]");
  }
  return v;
}

Report distortion_report(const PcPresentation& p, const GenSet& s, const GroupElement& g,
                         const DistortionVerdict& v, long long kmax, double tol) {
  Report r;
  r.claim = "dist(e, g^k)/k tends to 0 iff g lies in the isolator of [G,G]";
  r.verdict = to_string(v.verdict);
  r.ok = v.verdict != Distortion::kInconclusive && v.agrees.value_or(true);
  r.parameters = json{{"g", to_json(g)}, {"genset", s.to_string(p)}, {"kmax", kmax}, {"tol", tol}};
  json table = json::array();
  for (const auto& x : v.profile.samples) {
    json row{{"k", x.k}, {"method", x.method}};
    row["dist"] = x.dist ? json(*x.dist) : json(nullptr);
    row["ratio"] = x.dist ? json(x.ratio) : json(nullptr);
    table.push_back(row);
  }
  r.details = json{{"profile", table},
                   {"radius_used", v.profile.radius_used},
                   {"analytic_in_isolator", v.analytic_in_isolator}};
  r.details["analytic_agrees"] = v.agrees ? json(*v.agrees) : json(nullptr);
  if (!v.profile.stop_reason.empty()) r.details["stop_reason"] = v.profile.stop_reason;
  return r;
}

}  // namespace nilcay
