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

#include "nilcay/autlab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nilcay/errors.hpp"
#include "nilcay/structure.hpp"

namespace nilcay {

namespace {

// Backtracking that always branches on the unmapped vertex with the fewest
// candidates. A candidate for v is a neighbour of the image of some mapped
// neighbour of v, at the same distance from e; every edge with an interior
// endpoint must be preserved in both directions.
class AutSearch {
 public:
  AutSearch(const Ball& ball, int window_radius)
      : ball_(ball), n_(ball.size()), window_radius_(window_radius), img_(n_, npos),
        pre_(n_, npos), nbr_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      nbr_[v] = ball.neighbors(v);
      if (ball.dist(v) <= window_radius) ++window_count_;
    }
    assign(ball.identity_id(), ball.identity_id());
  }

  // Calls f() for every assignment of the window vertices.
  template <typename F>
  void windows(F&& f, bool& stop) {
    search(window_radius_, window_count_ - 1, [&] {
      f();
      return stop;
    });
  }

  // Completes the current window assignment to the whole ball, if possible.
  std::optional<std::vector<std::size_t>> extend() {
    steps_ = 0;
    budgeted_ = true;
    std::optional<std::vector<std::size_t>> found;
    search(ball_.radius(), n_ - window_count_, [&] {
      found = img_;
      return true;
    });
    budgeted_ = false;
    return found;
  }

  const std::vector<std::size_t>& image() const { return img_; }

 private:
  template <typename F>
  bool search(int max_dist, std::size_t remaining, F&& done) {
    if (budgeted_ && ++steps_ > kDefaultExtensionSteps)
      throw BudgetExceeded("extension search exceeded " +
                           std::to_string(kDefaultExtensionSteps) + " steps");
    if (remaining == 0) return done();
    std::size_t best = npos;
    std::vector<std::size_t> best_c, c;
    // Vertices beyond max_dist are never branched on, but a vertex with no
    // candidate left still prunes the branch.
    for (std::size_t v = 0; v < n_; ++v) {
      if (img_[v] != npos || !candidates(v, c)) continue;
      if (c.empty()) return false;
      if (ball_.dist(v) > max_dist) continue;
      if (best == npos || c.size() < best_c.size()) {
        best = v;
        best_c.swap(c);
      }
    }
    if (best == npos) return false;
    for (std::size_t x : best_c) {
      assign(best, x);
      const bool stop = search(max_dist, remaining - 1, done);
      unassign(best);
      if (stop) return true;
    }
    return false;
  }

  // False when v has no mapped neighbour yet.
  bool candidates(std::size_t v, std::vector<std::size_t>& out) const {
    out.clear();
    std::size_t anchor = npos;
    for (std::size_t w : nbr_[v])
      if (img_[w] != npos && (anchor == npos || nbr_[img_[w]].size() < nbr_[img_[anchor]].size()))
        anchor = w;
    if (anchor == npos) return false;
    for (std::size_t c : nbr_[img_[anchor]])
      if (consistent(v, c)) out.push_back(c);
    return true;
  }

  bool adjacent(std::size_t x, std::size_t y) const {
    return std::binary_search(nbr_[x].begin(), nbr_[x].end(), y);
  }

  bool consistent(std::size_t v, std::size_t c) const {
    if (pre_[c] != npos || ball_.dist(c) != ball_.dist(v) || nbr_[c].size() != nbr_[v].size())
      return false;
    const bool v_in = ball_.interior(v);
    for (std::size_t w : nbr_[v])
      if (img_[w] != npos && (v_in || ball_.interior(w)) && !adjacent(c, img_[w])) return false;
    for (std::size_t z : nbr_[c]) {
      const std::size_t w = pre_[z];
      if (w != npos && (v_in || ball_.interior(w)) && !adjacent(v, w)) return false;
    }
    return true;
  }

  void assign(std::size_t v, std::size_t c) {
    img_[v] = c;
    pre_[c] = v;
  }
  void unassign(std::size_t v) {
    pre_[img_[v]] = npos;
    img_[v] = npos;
  }

  const Ball& ball_;
  std::size_t n_;
  int window_radius_;
  std::vector<std::size_t> img_, pre_;
  std::vector<std::vector<std::size_t>> nbr_;
  std::size_t window_count_ = 0;
  std::size_t steps_ = 0;
  bool budgeted_ = false;
};

json pair_json(const std::pair<GroupElement, GroupElement>& p) {
  return json::array({to_json(p.first), to_json(p.second)});
}

json map_json(const Ball& a, const Ball& b, const VertexMap& m, std::size_t limit = 64) {
  json out = json::array();
  for (std::size_t v = 0; v < m.image.size() && out.size() < limit; ++v)
    if (m.image[v] != VertexMap::kUnmapped && m.image[v] != v)
      out.push_back(json::array({to_json(a.vertex(v)), to_json(b.vertex(m.image[v]))}));
  return out;
}

bool is_torsion_free(const PcPresentation& p) {
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (p.is_finite(i)) return false;
  return true;
}

Report central_translation_core(const Ball& a, const PcPresentation& pb, const ElementMap& m,
                                const GroupElement& z, int kmax) {
  const PcPresentation& pa = a.presentation();
  if (!is_torsion_free(pa))
    throw PreconditionError("central translation check: source group has torsion");
  if (!is_central(pa, z) || !in_derived_isolator(pa, z))
    throw PreconditionError("central translation check: " + z.to_string() +
                            " is not in Z-dagger of the source");
  if (kmax < 1) throw InvalidArgument("kmax must be at least 1");
  std::vector<GroupElement> zpow;
  for (int k = -kmax; k <= kmax; ++k) zpow.push_back(power(pa, z, k));
  Report r = make_report("m(g z^k) = m(g) sigma(z)^k with sigma independent of g", true);
  r.parameters = json{{"z", to_json(z)}, {"kmax", kmax}, {"r", a.radius()}};
  std::optional<GroupElement> sigma;
  std::size_t samples = 0;
  for (std::size_t v = 0; v < a.size() && r.ok; ++v) {
    const GroupElement& g = a.vertex(v);
    bool usable = true;
    for (const GroupElement& zk : zpow) {
      const auto id = a.find(multiply(pa, g, zk));
      if (!id || !a.interior(*id)) {
        usable = false;
        break;
      }
    }
    if (!usable) continue;
    ++samples;
    const GroupElement mg = m(g);
    const GroupElement sg = multiply(pb, inverse(pb, mg), m(multiply(pa, g, z)));
    if (sigma && *sigma != sg) {
      r.ok = false;
      r.verdict = "fail";
      r.witnesses.push_back(json{{"reason", "sigma depends on g"}, {"g", to_json(g)},
                                 {"sigma_g", to_json(sg)}, {"sigma", to_json(*sigma)}});
      break;
    }
    sigma = sg;
    for (int k = -kmax; k <= kmax; ++k) {
      const GroupElement lhs = m(multiply(pa, g, zpow[k + kmax]));
      const GroupElement rhs = multiply(pb, mg, power(pb, sg, k));
      if (lhs != rhs) {
        r.ok = false;
        r.verdict = "fail";
        r.witnesses.push_back(json{{"reason", "power law fails"}, {"g", to_json(g)}, {"k", k}});
        break;
      }
    }
  }
  if (samples == 0)
    throw PreconditionError("central translation check: no g with every g z^k interior");
  r.details = json{{"samples", samples}};
  if (sigma) {
    r.details["sigma"] = to_json(*sigma);
    const bool in_target = is_central(pb, *sigma) && in_derived_isolator(pb, *sigma);
    r.details["sigma_in_target_z_dagger"] = in_target;
    if (r.ok && !in_target) {
      r.ok = false;
      r.verdict = "fail";
      r.witnesses.push_back(json{{"reason", "sigma(z) is not in Z-dagger of the target"}});
    }
  }
  return r;
}

}  // namespace

LocalAutEnumeration enumerate_local_auts(const Ball& ball, int t, std::size_t cap) {
  if (t < 0 || ball.radius() < t)
    throw PreconditionError("enumerate_local_auts: need 0 <= t <= ball radius");
  const int r = ball.radius() - t;
  const PcPresentation& p = ball.presentation();
  LocalAutEnumeration out{generate_ball(p, ball.genset(), r), t, {}, false};
  const Ball& win = out.window_ball;
  std::vector<std::size_t> win_to_big(win.size());
  for (std::size_t v = 0; v < win.size(); ++v) win_to_big[v] = *ball.find(win.vertex(v));

  AutSearch search(ball, r);
  bool stop = false;
  search.windows([&] {
    auto ext = search.extend();
    if (!ext) return;
    if (out.maps.size() == cap) {
      out.truncated = true;
      stop = true;
      return;
    }
    LocalAutomorphism aut;
    aut.window.image.resize(win.size());
    for (std::size_t v = 0; v < win.size(); ++v)
      aut.window.image[v] = *win.find(ball.vertex(search.image()[win_to_big[v]]));
    aut.extension.image = std::move(*ext);
    out.maps.push_back(std::move(aut));
  }, stop);
  std::sort(out.maps.begin(), out.maps.end(),
            [](const LocalAutomorphism& x, const LocalAutomorphism& y) {
              return x.window.image < y.window.image;
            });
  return out;
}

json AffineVerdict::to_json() const {
  json gens = json::array();
  for (const auto& g : alpha_on_generators) gens.push_back(pair_json(g));
  json j{{"affine", affine}, {"h", nilcay::to_json(h)}, {"alpha_on_generators", gens}};
  j["witness"] = witness ? pair_json(*witness) : json(nullptr);
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

AffineVerdict is_affine(const PcPresentation& pa, const GenSet& sa, const PcPresentation& pb,
                        const GenSet& sb, const ElementMap& m,
                        const std::vector<GroupElement>& domain) {
  AffineVerdict v;
  v.h = m(pa.identity());
  const GroupElement hinv = inverse(pb, v.h);
  auto alpha = [&](const GroupElement& x) { return multiply(pb, hinv, m(x)); };

  std::set<GroupElement> images;
  for (const GroupElement& s : sa.elements()) {
    GroupElement as = alpha(s);
    v.alpha_on_generators.emplace_back(s, as);
    if (!sb.contains(as) && !v.witness) {
      v.witness = std::make_pair(s, as);
      v.reason = "alpha(" + s.to_string() + ") = " + as.to_string() + " is not in S_B";
    }
    images.insert(std::move(as));
  }
  if (!v.witness && (images.size() != sa.size() || sa.size() != sb.size()))
    v.reason = "alpha does not map S_A bijectively onto S_B";
  if (!v.reason.empty()) return v;

  std::vector<GroupElement> dom = domain;
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  std::map<GroupElement, GroupElement> al;
  for (const GroupElement& x : dom) al.emplace(x, alpha(x));
  for (const GroupElement& x : dom) {
    for (const GroupElement& y : dom) {
      const auto xy = al.find(multiply(pa, x, y));
      if (xy == al.end()) continue;
      if (xy->second != multiply(pb, al.at(x), al.at(y))) {
        v.witness = std::make_pair(x, y);
        v.reason = "alpha(xy) != alpha(x) alpha(y) at x = " + x.to_string() +
                   ", y = " + y.to_string();
        return v;
      }
    }
  }
  v.affine = true;
  return v;
}

AffineVerdict is_affine_on_ball(const Ball& a, const Ball& b, const VertexMap& m,
                                std::optional<int> domain_radius) {
  if (m.image.size() != a.size()) throw InvalidArgument("vertex map has the wrong size");
  const int rad = domain_radius.value_or(a.radius() - 1);
  std::vector<GroupElement> domain;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a.dist(v) <= rad && m.image[v] != VertexMap::kUnmapped) domain.push_back(a.vertex(v));
  auto f = [&](const GroupElement& x) {
    const auto id = a.find(x);
    if (!id || m.image[*id] == VertexMap::kUnmapped)
      throw PreconditionError("affine check: map undefined at " + x.to_string());
    return b.vertex(m.image[*id]);
  };
  return is_affine(a.presentation(), a.genset(), b.presentation(), b.genset(), f, domain);
}

Report normality_verdict(const PcPresentation& p, const GenSet& s, int r, int t,
                         std::size_t cap) {
  if (t < 1 || r < 1) throw PreconditionError("normality verdict needs r >= 1 and t >= 1");
  const Ball ball = generate_ball(p, s, r + t);
  const LocalAutEnumeration e = enumerate_local_auts(ball, t, cap);
  Report rep;
  rep.claim = "every stable local automorphism fixing e is affine";
  rep.parameters = json{{"r", r}, {"t", t}, {"genset", s.to_string(p)}, {"cap", cap}};
  std::size_t non_affine = 0;
  for (const LocalAutomorphism& aut : e.maps) {
    const AffineVerdict v = is_affine_on_ball(e.window_ball, e.window_ball, aut.window, r);
    if (v.affine) continue;
    if (non_affine++ == 0) {
      json w = v.to_json();
      w["moved_vertices"] = map_json(e.window_ball, e.window_ball, aut.window);
      rep.witnesses.push_back(w);
    }
  }
  rep.details = json{{"automorphisms", e.maps.size()}, {"non_affine", non_affine},
                     {"truncated", e.truncated}};
  if (non_affine > 0) {
    rep.verdict = "non-normal";
    rep.ok = true;
  } else if (e.truncated) {
    rep.verdict = "inconclusive";
    rep.ok = false;
  } else {
    rep.verdict = "normal-at-(" + std::to_string(r) + "," + std::to_string(t) + ")";
    rep.ok = true;
  }
  return rep;
}

std::vector<GroupElement> aut_e_orbit(const Ball& ball, const GroupElement& g, int t,
                                      std::size_t cap) {
  const LocalAutEnumeration e = enumerate_local_auts(ball, t, cap);
  if (e.truncated) throw BudgetExceeded("aut_e_orbit: automorphism cap reached");
  const auto id = e.window_ball.find(g);
  if (!id) throw PreconditionError("aut_e_orbit: " + g.to_string() + " is outside the window");
  std::set<GroupElement> orbit;
  for (const LocalAutomorphism& aut : e.maps)
    orbit.insert(e.window_ball.vertex(aut.window.image[*id]));
  return {orbit.begin(), orbit.end()};
}

Report induced_quotient_check(const Ball& a, const Ball& b, const VertexMap& m,
                              const std::vector<GroupElement>& n1,
                              const std::vector<GroupElement>& n2) {
  const PcPresentation& pa = a.presentation();
  const PcPresentation& pb = b.presentation();
  const MapCheck mc = check_vertex_map(a, b, m);
  if (!mc.ok) throw PreconditionError("induced quotient check: " + mc.reason);
  Report rep = make_report("m(gN1) lies in N2 m(g) and induces an affine map on G/N", true);
  rep.parameters = json{{"r", a.radius()}, {"order_N1", n1.size()}, {"order_N2", n2.size()}};
  auto in_n2 = [&](const GroupElement& x) {
    return std::find(n2.begin(), n2.end(), x) != n2.end();
  };
  std::size_t checked = 0;
  std::map<GroupElement, GroupElement> induced;
  for (std::size_t v = 0; v < a.size() && rep.ok; ++v) {
    if (!a.interior(v)) continue;
    const GroupElement& g = a.vertex(v);
    const GroupElement mg = b.vertex(m.image[v]);
    const GroupElement mg_inv = inverse(pb, mg);
    for (const GroupElement& n : n1) {
      const auto id = a.find(multiply(pa, g, n));
      if (!id) continue;
      ++checked;
      const GroupElement img = b.vertex(m.image[*id]);
      if (!in_n2(multiply(pb, img, mg_inv))) {
        rep.ok = false;
        rep.verdict = "fail";
        rep.witnesses.push_back(json{{"reason", "coset not mapped into a coset"},
                                     {"g", to_json(g)}, {"n", to_json(n)},
                                     {"m(g)", to_json(mg)}, {"m(gn)", to_json(img)}});
        break;
      }
    }
    const GroupElement gbar = torsion_quotient_image(pa, g);
    const GroupElement mbar = torsion_quotient_image(pb, mg);
    auto [it, fresh] = induced.emplace(gbar, mbar);
    if (!fresh && it->second != mbar) {
      rep.ok = false;
      rep.verdict = "fail";
      rep.witnesses.push_back(json{{"reason", "induced map not well defined"},
                                   {"coset", to_json(gbar)}});
    }
  }
  rep.details = json{{"coset_checks", checked}, {"quotient_points", induced.size()}};
  if (!rep.ok) return rep;

  const PcPresentation qa = quotient_by_torsion(pa);
  const PcPresentation qb = quotient_by_torsion(pb);
  auto quotient_genset = [](const PcPresentation& p, const PcPresentation& q, const GenSet& s) {
    std::vector<GroupElement> out;
    for (const GroupElement& x : s.elements()) {
      GroupElement y = torsion_quotient_image(p, x);
      if (!y.is_identity()) out.push_back(std::move(y));
    }
    return GenSet::make(q, std::move(out));
  };
  const GenSet sa = quotient_genset(pa, qa, a.genset());
  const GenSet sb = quotient_genset(pb, qb, b.genset());
  std::vector<GroupElement> domain;
  bool identity = true, translation = true;
  const GroupElement shift = induced.at(qa.identity());
  for (const auto& [x, y] : induced) {
    domain.push_back(x);
    identity = identity && x == y;
    translation = translation && y == multiply(qb, shift, x);
  }
  const AffineVerdict v = is_affine(
      qa, sa, qb, sb,
      [&](const GroupElement& x) {
        const auto it = induced.find(x);
        if (it == induced.end())
          throw PreconditionError("induced map undefined at " + x.to_string());
        return it->second;
      },
      domain);
  rep.details["induced_identity"] = identity;
  rep.details["induced_translation"] = translation;
  rep.details["induced_affine"] = v.to_json();
  if (!v.affine) {
    rep.ok = false;
    rep.verdict = "fail";
    rep.witnesses.push_back(json{{"reason", "induced map is not affine"}, {"affine", v.to_json()}});
  }
  return rep;
}

Report central_translation_check(const Ball& a, const Ball& b, const VertexMap& m,
                                 const GroupElement& z, int kmax) {
  const MapCheck mc = check_vertex_map(a, b, m);
  if (!mc.ok) throw PreconditionError("central translation check: " + mc.reason);
  return central_translation_core(
      a, b.presentation(),
      [&](const GroupElement& x) {
        const auto id = a.find(x);
        if (!id) throw PreconditionError("map undefined at " + x.to_string());
        return b.vertex(m.image[*id]);
      },
      z, kmax);
}

Report central_translation_check(const Ball& a, const PcPresentation& pb, const GenSet& sb,
                                 const ElementMap& m, const GroupElement& z, int kmax) {
  const PcPresentation& pa = a.presentation();
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (!a.interior(v)) continue;
    const GroupElement mx = m(a.vertex(v));
    const GroupElement mx_inv = inverse(pb, mx);
    for (const GroupElement& s : a.genset().elements())
      if (!sb.contains(multiply(pb, mx_inv, m(multiply(pa, a.vertex(v), s)))))
        throw PreconditionError("central translation check: map breaks the edge at " +
                                a.vertex(v).to_string() + " labelled " + s.to_string());
  }
  return central_translation_core(a, pb, m, z, kmax);
}

}  // namespace nilcay
