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

#include "nilcay/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nilcay/autlab.hpp"
#include "nilcay/constructions.hpp"
#include "nilcay/errors.hpp"
#include "nilcay/order.hpp"
#include "nilcay/parallel.hpp"
#include "nilcay/structure.hpp"

namespace nilcay {

namespace {

GroupElement random_element(const PcPresentation& p, std::mt19937_64& rng, long long bound) {
  std::vector<Int> e(p.num_generators());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    if (const auto& m = p.relative_order(i)) e[i] = floor_mod(e[i], *m);
  }
  return GroupElement(std::move(e));
}

long long random_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Runs check(i) for every sample in parallel and reports the first failing
// index, so the outcome does not depend on the worker count.
template <typename Check>
std::optional<std::size_t> first_failure(std::size_t n, unsigned threads, Check&& check) {
  std::vector<char> bad(n, 0);
  parallel_for(n, threads, [&](std::size_t i) { bad[i] = check(i) ? 0 : 1; });
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i]) return i;
  return std::nullopt;
}

bool is_torsion_free(const PcPresentation& p) {
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (p.is_finite(i)) return false;
  return true;
}

Report not_applicable(std::string claim, std::string why) {
  Report r = make_report(std::move(claim), true, "not-applicable");
  r.details = json{{"reason", std::move(why)}};
  return r;
}

Report expect(std::string claim, bool ok, json details = json::object()) {
  Report r = make_report(std::move(claim), ok);
  r.details = std::move(details);
  return r;
}

std::vector<Report> suite_group_laws(const PcPresentation& p, const VerifyOptions& o) {
  return {check_group_laws(p, o), check_power_laws(p, o), check_centrality(p, o)};
}

std::vector<Report> suite_metric(const PcPresentation& p, const VerifyOptions& o) {
  const GenSet s = standard_genset(p);
  const Ball ball = generate_ball(p, s, 4, BallOptions{kDefaultVertexCap, o.threads});
  return {check_metric_oracle(p, s, 4), check_geodesic_counts(ball, 200, o.seed)};
}

std::vector<Report> suite_klein() {
  const PcPresentation k = klein_bottle();
  const PcPresentation z2 = zn(2);
  const Ball bk = generate_ball(k, standard_genset(k), 8);
  const Ball bz = generate_ball(z2, standard_genset(z2), 8);
  std::vector<Report> out;
  const VertexMap flip = klein_flip_map(bk);
  const MapCheck fc = check_vertex_map(bk, bk, flip);
  out.push_back(expect("flip map a^i b^j -> a^j b^i is a ball automorphism at r = 8", fc.ok,
                       json{{"reason", fc.reason}}));
  out.push_back(expect("flip map fixes e", flip.image[bk.identity_id()] == bk.identity_id()));
  const AffineVerdict av = is_affine_on_ball(bk, bk, flip);
  Report ar = expect("flip map is not affine", !av.affine && av.witness.has_value());
  ar.witnesses.push_back(av.to_json());
  out.push_back(ar);
  const MapCheck gc = check_vertex_map(bk, bz, klein_grid_map(bk, bz));
  out.push_back(expect("grid map a^i b^j -> (i, j) is an isomorphism onto the Z^2 ball at r = 8",
                       gc.ok, json{{"reason", gc.reason}}));
  Report nv = normality_verdict(k, standard_genset(k), 4, 2);
  nv.ok = nv.verdict == "non-normal";
  out.push_back(nv);
  return out;
}

std::vector<Report> suite_fsf() {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const SubgroupWitness f = torsion_subgroup(p);
  const GenSet s = GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}});
  const FsfResult fsf = fsf_generating_set(p, *f.elements, s);
  std::vector<Report> out;
  out.push_back(expect("FSF is symmetric and generating",
                       fsf.genset.symmetric() && generates_group(p, fsf.genset, 3),
                       json{{"genset", fsf.genset.to_string(p)},
                            {"identity_removed", fsf.identity_removed}}));

  const Ball b5 = generate_ball(p, fsf.genset, 5);
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<char> done(b5.size(), 0);
  for (std::size_t v = 0; v < b5.size(); ++v) {
    if (!b5.interior(v) || done[v]) continue;
    std::vector<std::size_t> c;
    for (const GroupElement& x : *f.elements) {
      const auto w = b5.find(multiply(p, b5.vertex(v), x));
      if (w && b5.interior(*w)) {
        c.push_back(*w);
        done[*w] = 1;
      }
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(c);
  }
  std::sort(cosets.begin(), cosets.end());
  const auto classes = twin_classes(b5);
  out.push_back(expect("twin classes at r = 5 are exactly the cosets gF", classes == cosets,
                       json{{"classes", classes.size()}, {"cosets", cosets.size()}}));

  const Ball b6 = generate_ball(p, fsf.genset, 6);
  const TwinSwap sw = twin_swap_map(b6, GroupElement{5, 0}, GroupElement{5, 1});
  const MapCheck mc = check_vertex_map(b6, b6, sw.map);
  bool fixes = sw.map.image[b6.identity_id()] == b6.identity_id();
  for (const GroupElement& x : fsf.genset.elements()) {
    const std::size_t id = *b6.find(x);
    fixes = fixes && sw.map.image[id] == id;
  }
  out.push_back(expect("twin swap (5,0) <-> (5,1) is a ball automorphism fixing FSF and e",
                       mc.ok && fixes, json{{"reason", mc.reason}}));
  const AffineVerdict av = is_affine_on_ball(b6, b6, sw.map);
  Report ar = expect("twin swap is not affine", !av.affine);
  ar.witnesses.push_back(av.to_json());
  out.push_back(ar);
  Report nv = normality_verdict(p, fsf.genset, 3, 2);
  nv.ok = nv.verdict == "non-normal";
  out.push_back(nv);
  return out;
}

std::vector<Report> suite_local_normality(const PcPresentation& p) {
  const std::string claim = "stable local automorphisms at (3,2) are affine";
  if (!p.nilpotent() || !is_torsion_free(p))
    return {not_applicable(claim, "needs a torsion-free nilpotent group")};
  Report nv = normality_verdict(p, standard_genset(p), 3, 2);
  nv.ok = nv.verdict == "normal-at-(3,2)";
  return {nv};
}

std::vector<Report> suite_biorder(const PcPresentation& p, const VerifyOptions& o) {
  const std::string claim = "max generator spans a convex geodesic to k = 6";
  if (!p.nilpotent() || !is_torsion_free(p) || p.biorder_blocks().empty())
    return {not_applicable(claim, "needs a torsion-free nilpotent group with a filtration")};
  const BiOrder order(p);
  const GenSet s = standard_genset(p);
  const GroupElement top = max_generator(order, s);
  const Ball ball = generate_ball(p, s, 6, BallOptions{kDefaultVertexCap, o.threads});
  Report conv = convexity_check(ball, top, 6);
  conv.details["max_generator"] = to_json(top);
  return {conv, check_bi_invariance(p, o)};
}

std::vector<Report> suite_distortion(const PcPresentation& p) {
  const GenSet s = standard_genset(p);
  std::vector<Report> out;
  std::vector<DistortionVerdict> verdicts;
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    const GroupElement g = p.generator(i);
    verdicts.push_back(classify_distorted(p, s, g, 64, 0.5));
    out.push_back(distortion_report(p, s, g, verdicts.back(), 64, 0.5));
  }
  if (p.hash() != heisenberg().hash()) return out;
  auto dist_at = [](const DistortionVerdict& v, long long k) -> std::optional<long long> {
    for (const auto& x : v.profile.samples)
      if (x.k == k && x.dist) return static_cast<long long>(*x.dist);
    return std::nullopt;
  };
  auto unit_ratio = [](const DistortionVerdict& v) {
    return std::all_of(v.profile.samples.begin(), v.profile.samples.end(),
                       [](const DistortionSample& x) { return x.dist && *x.dist == x.k; });
  };
  const auto c1 = dist_at(verdicts[2], 1), c16 = dist_at(verdicts[2], 16);
  const bool ok = c1 == 4 && c16 && *c16 <= 16 && verdicts[2].verdict == Distortion::kDistorted &&
                  unit_ratio(verdicts[0]) && unit_ratio(verdicts[1]) &&
                  verdicts[0].verdict == Distortion::kUndistorted &&
                  verdicts[1].verdict == Distortion::kUndistorted;
  out.push_back(expect("Heisenberg: ratio_c(1) = 4, ratio_c(16) <= 1, a and b have ratio 1", ok,
                       json{{"dist_c1", c1 ? json(*c1) : json(nullptr)},
                            {"dist_c16", c16 ? json(*c16) : json(nullptr)}}));
  return out;
}

std::vector<Report> suite_torsion_geodesics(const VerifyOptions& o) {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n = *torsion_subgroup(p).elements;
  const GenSet s = GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}, GroupElement{1, 1},
                                    GroupElement{-1, 1}, GroupElement{0, 1}});
  const Ball b4 = generate_ball(p, s, 4);
  std::vector<Report> out;
  out.push_back(torsion_label_bound(b4, n));

  std::vector<int> corrupted(b4.distances().begin(), b4.distances().end());
  corrupted[*b4.find(GroupElement{1, 1})] = 2;
  corrupted[*b4.find(GroupElement{1, 0})] = 3;
  Report neg = torsion_label_bound(b4, n, corrupted);
  neg.claim = "corrupted distance table is caught (negative control)";
  neg.ok = !neg.ok && !neg.witnesses.empty();
  neg.verdict = neg.ok ? "pass" : "fail";
  out.push_back(neg);

  bool inserted = true;
  json sizes = json::array();
  for (std::size_t k = 0; k <= 4; ++k) {
    GeodesicPath geo{p.identity(), {GroupElement{0, 1}}};
    for (std::size_t i = 0; i < k; ++i) geo.labels.push_back(GroupElement{1, 0});
    const auto paths = insert_torsion_edge(b4, geo, n);
    const GroupElement end = path_vertices(p, geo).back();
    bool distinct = paths.size() == k + 1;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      distinct = distinct && paths[i].length() == k + 1 &&
                 path_vertices(p, paths[i]).back() == end;
      for (std::size_t j = 0; j < i; ++j) distinct = distinct && !(paths[i] == paths[j]);
    }
    inserted = inserted && distinct;
    sizes.push_back(paths.size());
  }
  out.push_back(expect("inserting an N-edge gives k+1 distinct equal-length paths, k <= 4",
                       inserted, json{{"paths", sizes}}));
  out.push_back(check_geodesic_counts(b4, 100, o.seed));

  const Ball b6 = generate_ball(p, s, 6);
  const auto orbit = aut_e_orbit(b6, GroupElement{0, 1}, 2);
  json orb = json::array();
  bool inside = true;
  for (const GroupElement& x : orbit) {
    orb.push_back(to_json(x));
    inside = inside && std::find(n.begin(), n.end(), x) != n.end();
  }
  out.push_back(expect("Aut_e orbit of (0,1) at (4,2) stays in N", inside, json{{"orbit", orb}}));
  return out;
}

std::vector<Report> suite_quotient() {
  std::vector<Report> out;
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n = *torsion_subgroup(p).elements;
  const GenSet lifted = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const Ball b6 = generate_ball(p, lifted, 6);
  const TwinSwap sw = twin_swap_map(b6, GroupElement{5, 0}, GroupElement{5, 1});
  Report iq = induced_quotient_check(b6, b6, sw.map, n, n);
  iq.ok = iq.ok && iq.details.value("induced_identity", false);
  out.push_back(iq);

  const PcPresentation q = quotient_by_torsion(p);
  const Ball b5 = generate_ball(p, lifted, 5);
  const Ball q5 = generate_ball(q, standard_genset(q), 5);
  const LabeledGraph w = wreath_product(ball_graph(q5), edgeless_graph(2));
  const MapCheck mc = check_graph_map(ball_graph(b5), w, wreath_lift_map(b5, q5, n));
  out.push_back(expect("B_5 of Cay(ZxZ_2; lifted S) is the wreath product B_5(Z)[E_2]", mc.ok,
                       json{{"reason", mc.reason}, {"vertices", b5.size()}}));
  out.push_back(rank_report(p, torsion_subgroup(p)));
  const PcPresentation h3 = builtin("heisenberg_x_z3");
  out.push_back(rank_report(h3, torsion_subgroup(h3)));
  return out;
}

SuiteResult wrap(const std::string& suite, const PcPresentation& p, const VerifyOptions& o,
                 std::vector<Report> reports) {
  return SuiteResult{suite, p.name(), p.hash(), o.seed, std::move(reports)};
}

}  // namespace

bool SuiteResult::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok; });
}

json SuiteResult::to_json() const {
  json reps = json::array();
  for (const Report& r : reports) reps.push_back(r.to_json(presentation_hash, seed));
  return json{{"suite", suite},         {"group", group},     {"ok", ok()},
              {"tool_version", kToolVersion}, {"presentation_hash", presentation_hash},
              {"seed", seed},           {"reports", reps}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group_laws", "metric",     "klein",
                                              "fsf",        "local_normality",      "biorder",
                                              "distortion", "torsion_geodesics",     "quotient"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& suite, const PcPresentation& p,
                                   const VerifyOptions& o) {
  if (suite == "all") {
    std::vector<SuiteResult> out;
    for (const std::string& name : suite_names()) {
      auto part = run_suite(name, p, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "group_laws") return {wrap(suite, p, o, suite_group_laws(p, o))};
  if (suite == "metric") return {wrap(suite, p, o, suite_metric(p, o))};
  if (suite == "local_normality") return {wrap(suite, p, o, suite_local_normality(p))};
  if (suite == "biorder") return {wrap(suite, p, o, suite_biorder(p, o))};
  if (suite == "distortion") return {wrap(suite, p, o, suite_distortion(p))};
  if (suite == "klein") return {wrap(suite, klein_bottle(), o, suite_klein())};
  if (suite == "fsf") return {wrap(suite, zn_cross_cyclic(1, 2), o, suite_fsf())};
  if (suite == "torsion_geodesics") return {wrap(suite, zn_cross_cyclic(1, 2), o, suite_torsion_geodesics(o))};
  if (suite == "quotient") return {wrap(suite, zn_cross_cyclic(1, 2), o, suite_quotient())};
  throw InvalidArgument("unknown suite '" + suite + "'");
}

Report check_group_laws(const PcPresentation& p, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed);
  const std::size_t n = o.samples;
  std::vector<GroupElement> xs, ys, zs;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(random_element(p, rng, 20));
    ys.push_back(random_element(p, rng, 20));
    zs.push_back(random_element(p, rng, 20));
  }
  const GroupElement e = p.identity();
  std::vector<char> assoc(n, 1), ident(n, 1), inv(n, 1), idem(n, 1);
  parallel_for(n, o.threads, [&](std::size_t i) {
    const GroupElement &x = xs[i], &y = ys[i], &z = zs[i];
    assoc[i] = multiply(p, multiply(p, x, y), z) == multiply(p, x, multiply(p, y, z));
    ident[i] = multiply(p, x, e) == x && multiply(p, e, x) == x;
    const GroupElement xi = inverse(p, x);
    inv[i] = multiply(p, x, xi) == e && multiply(p, xi, x) == e;
    idem[i] = evaluate(p, word_of(x)) == x;
  });
  Report r = make_report("associativity, identity, inverse and normal-form laws", true);
  r.parameters = json{{"samples", n}, {"exponent_bound", 20}};
  const std::pair<const char*, const std::vector<char>*> checks[] = {
      {"associativity", &assoc}, {"identity", &ident}, {"inverse", &inv}, {"idempotence", &idem}};
  for (const auto& [name, flags] : checks) {
    const auto fails = static_cast<std::size_t>(std::count(flags->begin(), flags->end(), 0));
    r.details[name] = json{{"failures", fails}};
    if (fails > 0) {
      r.ok = false;
      r.verdict = "fail";
      const std::size_t i = static_cast<std::size_t>(
          std::find(flags->begin(), flags->end(), 0) - flags->begin());
      r.witnesses.push_back(json{{"law", name}, {"x", to_json(xs[i])}, {"y", to_json(ys[i])},
                                 {"z", to_json(zs[i])}});
    }
  }
  return r;
}

Report check_power_laws(const PcPresentation& p, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0x706f776572ULL);
  const std::size_t n = std::max<std::size_t>(1, o.samples / 10);
  std::vector<GroupElement> xs;
  std::vector<long long> js, ks;
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(random_element(p, rng, 20));
    js.push_back(random_int(rng, -10, 10));
    ks.push_back(random_int(rng, -10, 10));
  }
  const auto bad = first_failure(n, o.threads, [&](std::size_t i) {
    return power(p, xs[i], js[i] + ks[i]) ==
           multiply(p, power(p, xs[i], js[i]), power(p, xs[i], ks[i]));
  });
  Report r = make_report("power(x, j+k) = power(x, j) power(x, k)", !bad);
  r.parameters = json{{"samples", n}};
  if (bad)
    r.witnesses.push_back(json{{"x", to_json(xs[*bad])}, {"j", js[*bad]}, {"k", ks[*bad]}});
  return r;
}

Report check_centrality(const PcPresentation& p, const VerifyOptions& o) {
  std::mt19937_64 rng(o.seed ^ 0x63656e746572ULL);
  std::vector<GroupElement> cands{p.identity()};
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    cands.push_back(p.generator(i));
    cands.push_back(power(p, p.generator(i), 2));
  }
  for (int i = 0; i < 20; ++i) cands.push_back(random_element(p, rng, 3));
  std::size_t central = 0;
  Report r = make_report("central elements are fixed by conjugation", true);
  for (const GroupElement& x : cands) {
    if (!is_central(p, x)) continue;
    ++central;
    for (int k = 0; k < 100; ++k) {
      const GroupElement g = random_element(p, rng, 20);
      if (conjugate(p, x, g) != x) {
        r.ok = false;
        r.verdict = "fail";
        r.witnesses.push_back(json{{"x", to_json(x)}, {"g", to_json(g)}});
        return r;
      }
    }
  }
  r.details = json{{"candidates", cands.size()}, {"central", central}};
  return r;
}

Report check_metric_oracle(const PcPresentation& p, const GenSet& s, int r) {
  std::map<GroupElement, int> best;
  std::vector<GroupElement> stack{p.identity()};
  std::vector<int> depth{0};
  // Every word of length <= r, without deduplication.
  std::size_t words = 0;
  while (!stack.empty()) {
    const GroupElement x = std::move(stack.back());
    const int d = depth.back();
    stack.pop_back();
    depth.pop_back();
    ++words;
    auto [it, fresh] = best.emplace(x, d);
    if (!fresh) it->second = std::min(it->second, d);
    if (d == r) continue;
    for (const GroupElement& g : s.elements()) {
      stack.push_back(multiply(p, x, g));
      depth.push_back(d + 1);
    }
  }
  const Ball ball = generate_ball(p, s, r);
  std::size_t mismatches = 0;
  json witness = nullptr;
  for (std::size_t v = 0; v < ball.size(); ++v) {
    const auto it = best.find(ball.vertex(v));
    if (it == best.end() || it->second != ball.dist(v)) {
      if (mismatches++ == 0)
        witness = json{{"vertex", to_json(ball.vertex(v))}, {"bfs", ball.dist(v)},
                       {"words", it == best.end() ? json(nullptr) : json(it->second)}};
    }
  }
  if (best.size() != ball.size()) ++mismatches;
  Report rep = make_report("BFS distances equal exhaustive word distances", mismatches == 0);
  rep.parameters = json{{"r", r}, {"genset", s.to_string(p)}};
  rep.details = json{{"vertices", ball.size()}, {"words", words}, {"mismatches", mismatches}};
  if (!witness.is_null()) rep.witnesses.push_back(witness);
  return rep;
}

Report check_geodesic_counts(const Ball& ball, std::size_t pairs, std::uint64_t seed) {
  const PcPresentation& p = ball.presentation();
  std::mt19937_64 rng(seed ^ 0x67656f64ULL);
  const Int k = ball.genset().size();
  Report r = make_report("count_geodesics matches enumeration and is at most |S|^dist", true);
  r.parameters = json{{"pairs", pairs}, {"r", ball.radius()}};
  std::size_t done = 0, attempts = 0;
  while (done < pairs && attempts < 100 * pairs) {
    ++attempts;
    const GroupElement& u = ball.vertex(rng() % ball.size());
    const GroupElement& v = ball.vertex(rng() % ball.size());
    const auto d = ball.find(multiply(p, inverse(p, u), v));
    if (!d) continue;
    ++done;
    const Int c = count_geodesics(ball, u, v);
    const auto en = enumerate_geodesics(ball, u, v);
    Int bound = 1;
    for (int i = 0; i < ball.dist(*d); ++i) bound *= k;
    if (c != Int(en.paths.size()) || c > bound || en.truncated) {
      r.ok = false;
      r.verdict = "fail";
      r.witnesses.push_back(json{{"u", to_json(u)}, {"v", to_json(v)}, {"count", c.str()},
                                 {"enumerated", en.paths.size()}});
      break;
    }
  }
  r.details = json{{"checked", done}};
  if (done < pairs) {
    r.ok = false;
    r.verdict = "fail";
    r.details["reason"] = "could not sample enough in-ball pairs";
  }
  return r;
}

Report check_bi_invariance(const PcPresentation& p, const VerifyOptions& o) {
  const BiOrder order(p);
  std::mt19937_64 rng(o.seed ^ 0x6269ULL);
  const std::size_t n = o.samples;
  struct Sample {
    GroupElement a, x, y, b;
  };
  std::vector<Sample> q;
  for (std::size_t i = 0; i < n; ++i)
    q.push_back(Sample{random_element(p, rng, 5), random_element(p, rng, 5),
                       random_element(p, rng, 5), random_element(p, rng, 5)});
  std::vector<char> inv(n, 1), anti(n, 1), mono(n, 1);
  parallel_for(n, o.threads, [&](std::size_t i) {
    const Sample& s = q[i];
    const Cmp xy = order.compare(s.x, s.y), yx = order.compare(s.y, s.x);
    anti[i] = (xy == Cmp::kLess) == (yx == Cmp::kGreater) &&
              (xy == Cmp::kEqual) == (s.x == s.y) && (yx == Cmp::kEqual) == (s.x == s.y);
    if (xy != Cmp::kEqual) {
      const GroupElement& lo = xy == Cmp::kLess ? s.x : s.y;
      const GroupElement& hi = xy == Cmp::kLess ? s.y : s.x;
      inv[i] = order.compare(multiply(p, multiply(p, s.a, lo), s.b),
                             multiply(p, multiply(p, s.a, hi), s.b)) == Cmp::kLess;
    }
    // a <= b and c <= d imply ac <= bd, with equality iff a = b and c = d.
    GroupElement a = s.a, b = s.x, c = s.y, d = s.b;
    if (order.less(b, a)) std::swap(a, b);
    if (order.less(d, c)) std::swap(c, d);
    const Cmp prod = order.compare(multiply(p, a, c), multiply(p, b, d));
    mono[i] = prod != Cmp::kGreater && ((prod == Cmp::kEqual) == (a == b && c == d));
  });
  Report r = make_report("bi-order is total, antisymmetric and bi-invariant", true);
  r.parameters = json{{"samples", n}, {"exponent_bound", 5}};
  const std::pair<const char*, const std::vector<char>*> checks[] = {
      {"bi_invariance", &inv}, {"antisymmetry", &anti}, {"product_monotonicity", &mono}};
  for (const auto& [name, flags] : checks) {
    const auto fails = static_cast<std::size_t>(std::count(flags->begin(), flags->end(), 0));
    r.details[name] = json{{"violations", fails}};
    if (fails > 0) {
      r.ok = false;
      r.verdict = "fail";
      const std::size_t i = static_cast<std::size_t>(
          std::find(flags->begin(), flags->end(), 0) - flags->begin());
      r.witnesses.push_back(json{{"property", name}, {"a", to_json(q[i].a)},
                                 {"x", to_json(q[i].x)}, {"y", to_json(q[i].y)},
                                 {"b", to_json(q[i].b)}});
    }
  }
  return r;
}

}  // namespace nilcay
