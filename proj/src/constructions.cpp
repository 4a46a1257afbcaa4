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

#include "nilcay/constructions.hpp"

#include <algorithm>
#include <map>

#include "nilcay/errors.hpp"
#include "nilcay/structure.hpp"

namespace nilcay {

std::vector<std::vector<std::size_t>> LabeledGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

LabeledGraph make_graph(std::vector<std::string> vertices,
                        std::vector<std::pair<std::size_t, std::size_t>> edges) {
  LabeledGraph g;
  g.vertices = std::move(vertices);
  for (auto [u, v] : edges) {
    if (u >= g.size() || v >= g.size()) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + g.vertices[u]);
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

LabeledGraph edgeless_graph(long long n) {
  if (n <= 0) throw InvalidArgument("edgeless graph needs n >= 1");
  std::vector<std::string> v;
  for (long long i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return make_graph(std::move(v), {});
}

LabeledGraph path_graph(std::size_t n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(std::to_string(i));
    if (i > 0) e.emplace_back(i - 1, i);
  }
  return make_graph(std::move(v), std::move(e));
}

LabeledGraph ball_graph(const Ball& ball) {
  std::vector<std::string> v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t x = 0; x < ball.size(); ++x) {
    v.push_back(ball.vertex(x).to_string());
    for (std::size_t j = 0; j < ball.genset().size(); ++j)
      if (std::size_t y = ball.neighbor(x, j); y != npos && x < y) e.emplace_back(x, y);
  }
  return make_graph(std::move(v), std::move(e));
}

LabeledGraph wreath_product(const LabeledGraph& x1, const LabeledGraph& x2) {
  const std::size_t n2 = x2.size();
  std::vector<std::string> v;
  for (const auto& a : x1.vertices)
    for (const auto& b : x2.vertices) v.push_back("(" + a + "|" + b + ")");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (const auto& [u1, w1] : x1.edges)
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = 0; b < n2; ++b) e.emplace_back(u1 * n2 + a, w1 * n2 + b);
  for (std::size_t v1 = 0; v1 < x1.size(); ++v1)
    for (const auto& [u2, w2] : x2.edges) e.emplace_back(v1 * n2 + u2, v1 * n2 + w2);
  return make_graph(std::move(v), std::move(e));
}

MapCheck check_graph_map(const LabeledGraph& a, const LabeledGraph& b,
                         const std::vector<std::size_t>& map) {
  if (a.size() != b.size() || map.size() != a.size())
    throw InvalidArgument("graph map is not a bijection: sizes differ");
  std::vector<char> hit(b.size(), 0);
  for (std::size_t v : map) {
    if (v >= b.size() || hit[v]) throw InvalidArgument("graph map is not a bijection");
    hit[v] = 1;
  }
  if (a.edges.size() != b.edges.size())
    return MapCheck{false, "edge counts differ: " + std::to_string(a.edges.size()) +
                               " vs " + std::to_string(b.edges.size()),
                    std::nullopt};
  for (const auto& [u, v] : a.edges) {
    const std::pair<std::size_t, std::size_t> img{std::min(map[u], map[v]),
                                                  std::max(map[u], map[v])};
    if (!std::binary_search(b.edges.begin(), b.edges.end(), img))
      return MapCheck{false, "edge " + a.vertices[u] + " -- " + a.vertices[v] + " is not preserved",
                      std::nullopt};
  }
  return MapCheck{true, "", std::nullopt};
}

GenSet lift_generating_set(const PcPresentation& p, const std::vector<GroupElement>& sbar) {
  const SubgroupWitness n = torsion_subgroup(p);
  std::vector<GroupElement> out;
  for (const GroupElement& x : sbar) {
    if (x.is_identity())
      throw PreconditionError("lift_generating_set: Sbar contains the identity");
    const GroupElement base = torsion_quotient_section(p, x);
    for (const GroupElement& t : *n.elements) out.push_back(multiply(p, base, t));
  }
  return GenSet::make(p, std::move(out));
}

FsfResult fsf_generating_set(const PcPresentation& p, const std::vector<GroupElement>& f,
                             const GenSet& s) {
  for (const GroupElement& x : f)
    for (const GroupElement& y : f)
      if (std::find(f.begin(), f.end(), multiply(p, x, y)) == f.end())
        throw PreconditionError("F is not closed: " + x.to_string() + " * " + y.to_string());
  FsfResult r;
  std::vector<GroupElement> out;
  for (const GroupElement& f1 : f)
    for (const GroupElement& x : s.elements())
      for (const GroupElement& f2 : f) {
        GroupElement y = multiply(p, multiply(p, f1, x), f2);
        if (y.is_identity()) {
          r.identity_removed = true;
          continue;
        }
        out.push_back(std::move(y));
      }
  std::sort(out.begin(), out.end());
  r.genset = GenSet::make(p, std::move(out));
  return r;
}

bool generates_group(const PcPresentation& p, const GenSet& s, int r) {
  const Ball ball = generate_ball(p, s, r);
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (!ball.find(p.generator(i))) return false;
  return true;
}

std::vector<std::vector<std::size_t>> twin_classes(const Ball& ball) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  std::vector<std::vector<std::size_t>> order;
  for (std::size_t v = 0; v < ball.size(); ++v)
    if (ball.interior(v)) groups[ball.neighbors(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [nbrs, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

GroupElement klein_flip(const GroupElement& x) {
  if (x.size() != 2) throw InvalidArgument("klein_flip expects a Klein-bottle element");
  // a^i b^j -> a^j b^i: the coordinate swap of the grid picture, so a <-> b.
  return GroupElement(std::vector<Int>{x[1], x[0]});
}

VertexMap klein_grid_map(const Ball& klein, const Ball& z2) {
  return map_from_function(klein, z2, [](const GroupElement& x) { return x; });
}

VertexMap klein_flip_map(const Ball& klein) {
  return map_from_function(klein, klein, klein_flip);
}

TwinSwap twin_swap_map(const Ball& ball, const GroupElement& g, const GroupElement& h) {
  const auto gi = ball.find(g), hi = ball.find(h);
  if (!gi || !hi) throw PreconditionError("twin_swap_map: vertices outside the ball");
  TwinSwap out;
  out.map = identity_map(ball);
  if (*gi == *hi) return out;
  if (!ball.interior(*gi) || !ball.interior(*hi))
    throw PreconditionError("twin_swap_map: twins must be interior vertices");
  if (ball.neighbors(*gi) != ball.neighbors(*hi))
    throw PreconditionError("twin_swap_map: " + g.to_string() + " and " + h.to_string() +
                            " are not twins");
  for (const GroupElement* x : {&g, &h})
    if (x->is_identity() || ball.genset().contains(*x))
      out.warnings.push_back(x->to_string() + " lies in S or is e");
  std::swap(out.map.image[*gi], out.map.image[*hi]);
  return out;
}

std::vector<std::size_t> wreath_lift_map(const Ball& lifted, const Ball& quotient,
                                         const std::vector<GroupElement>& n) {
  const PcPresentation& p = lifted.presentation();
  std::vector<std::size_t> out;
  for (const GroupElement& g : lifted.vertices()) {
    const GroupElement gbar = torsion_quotient_image(p, g);
    const auto qi = quotient.find(gbar);
    if (!qi) throw PreconditionError("wreath_lift_map: " + g.to_string() +
                                     " projects outside the quotient ball");
    const GroupElement t = multiply(p, inverse(p, torsion_quotient_section(p, gbar)), g);
    const auto it = std::find(n.begin(), n.end(), t);
    if (it == n.end()) throw PreconditionError("wreath_lift_map: fibre element outside N");
    out.push_back(*qi * n.size() + static_cast<std::size_t>(it - n.begin()));
  }
  return out;
}

}  // namespace nilcay
