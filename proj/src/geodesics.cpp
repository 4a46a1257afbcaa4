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

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nilcay/cayley.hpp"
#include "nilcay/errors.hpp"

namespace nilcay {

namespace {

std::size_t translate_into_ball(const Ball& ball, const GroupElement& u,
                                const GroupElement& v) {
  const PcPresentation& p = ball.presentation();
  const GroupElement d = multiply(p, inverse(p, u), v);
  const auto id = ball.find(d);
  if (!id)
    throw PreconditionError("u^-1 v = " + d.to_string() +
                            " lies outside the ball of radius " +
                            std::to_string(ball.radius()));
  return *id;
}

// Vertices lying on some geodesic from e to `target`.
std::vector<char> on_geodesics(const Ball& ball, std::size_t target) {
  const GenSet& s = ball.genset();
  std::vector<char> mark(ball.size(), 0);
  std::vector<std::size_t> stack{target};
  mark[target] = 1;
  while (!stack.empty()) {
    const std::size_t y = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j) {
      const std::size_t x = ball.neighbor(y, s.inverse_index(j));
      if (x != npos && !mark[x] && ball.dist(x) == ball.dist(y) - 1) {
        mark[x] = 1;
        stack.push_back(x);
      }
    }
  }
  return mark;
}

bool contains(const std::vector<GroupElement>& set, const GroupElement& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

json path_json(const PcPresentation& p, const GeodesicPath& path) {
  json labels = json::array(), verts = json::array();
  for (const GroupElement& s : path.labels) labels.push_back(to_json(s));
  for (const GroupElement& x : path_vertices(p, path)) verts.push_back(to_json(x));
  return json{{"start", to_json(path.start)}, {"labels", labels}, {"vertices", verts}};
}

}  // namespace

std::vector<GroupElement> path_vertices(const PcPresentation& p,
                                        const GeodesicPath& path) {
  std::vector<GroupElement> out{path.start};
  for (const GroupElement& s : path.labels) out.push_back(multiply(p, out.back(), s));
  return out;
}

GeodesicEnumeration enumerate_geodesics(const Ball& ball, const GroupElement& u,
                                        const GroupElement& v, std::size_t cap) {
  const std::size_t target = translate_into_ball(ball, u, v);
  const std::vector<char> mark = on_geodesics(ball, target);
  const GenSet& s = ball.genset();
  GeodesicEnumeration out;
  struct Step {
    std::size_t vertex;
    std::size_t next_label;
  };
  std::vector<Step> stack{{ball.identity_id(), 0}};
  std::vector<std::size_t> labels;
  while (!stack.empty()) {
    Step& top = stack.back();
    if (top.vertex == target) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        break;
      }
      GeodesicPath path{u, {}};
      for (std::size_t j : labels) path.labels.push_back(s[j]);
      out.paths.push_back(std::move(path));
      stack.pop_back();
      if (!labels.empty()) labels.pop_back();
      continue;
    }
    bool advanced = false;
    while (top.next_label < s.size()) {
      const std::size_t j = top.next_label++;
      const std::size_t y = ball.neighbor(top.vertex, j);
      if (y != npos && mark[y] && ball.dist(y) == ball.dist(top.vertex) + 1) {
        labels.push_back(j);
        stack.push_back(Step{y, 0});
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      stack.pop_back();
      if (!labels.empty()) labels.pop_back();
    }
  }
  return out;
}

Int count_geodesics(const Ball& ball, const GroupElement& u,
                    const GroupElement& v) {
  const std::size_t target = translate_into_ball(ball, u, v);
  const std::vector<char> mark = on_geodesics(ball, target);
  std::vector<std::size_t> verts;
  for (std::size_t x = 0; x < ball.size(); ++x)
    if (mark[x]) verts.push_back(x);
  std::stable_sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) {
    return ball.dist(a) < ball.dist(b);
  });
  std::unordered_map<std::size_t, Int> count{{ball.identity_id(), Int(1)}};
  for (std::size_t x : verts) {
    const Int cx = count[x];
    for (std::size_t j = 0; j < ball.genset().size(); ++j) {
      const std::size_t y = ball.neighbor(x, j);
      if (y != npos && mark[y] && ball.dist(y) == ball.dist(x) + 1) count[y] += cx;
    }
  }
  return count[target];
}

Report torsion_label_bound(const Ball& ball, const std::vector<GroupElement>& n) {
  return torsion_label_bound(ball, n, ball.distances());
}

Report torsion_label_bound(const Ball& ball, const std::vector<GroupElement>& n,
                           std::span<const int> table) {
  const PcPresentation& p = ball.presentation();
  const GenSet& s = ball.genset();
  if (table.size() != ball.size())
    throw InvalidArgument("distance table has the wrong length");
  for (const GroupElement& x : n)
    for (std::size_t i = 0; i < p.num_generators(); ++i)
      if (!contains(n, conjugate(p, x, p.generator(i))))
        throw PreconditionError("N is not normal: conjugating " + x.to_string() +
                                " by generator " + p.symbol(i) + " leaves N");
  std::vector<char> in_n(s.size());
  std::size_t n_edges = 0;
  for (std::size_t j = 0; j < s.size(); ++j) in_n[j] = contains(n, s[j]);
  for (std::size_t x = 0; x < ball.size(); ++x)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (in_n[j] && ball.neighbor(x, j) != npos) ++n_edges;

  // best[x]: most N-labelled edges on a path from e to x that climbs the
  // table one step at a time, capped at 2.
  std::vector<std::size_t> order(ball.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return table[a] < table[b]; });
  std::vector<int> best(ball.size(), -1);
  std::vector<std::pair<std::size_t, std::size_t>> parent(ball.size(), {npos, npos});
  best[ball.identity_id()] = 0;
  for (std::size_t x : order) {
    if (best[x] < 0) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const std::size_t y = ball.neighbor(x, j);
      if (y == npos || table[y] != table[x] + 1) continue;
      const int c = std::min(2, best[x] + (in_n[j] ? 1 : 0));
      if (c > best[y]) {
        best[y] = c;
        parent[y] = {x, j};
      }
    }
  }
  Report rep = make_report("geodesics carry at most one N-labelled edge",
                           true);
  rep.parameters = json{{"r", ball.radius()}, {"genset", s.to_string(p)}};
  json nlist = json::array();
  for (const GroupElement& x : n) nlist.push_back(to_json(x));
  rep.parameters["N"] = nlist;
  rep.details = json{{"vertices", ball.size()}, {"n_labelled_edges", n_edges}};
  for (std::size_t y = 0; y < ball.size(); ++y) {
    if (best[y] < 2) continue;
    GeodesicPath path{p.identity(), {}};
    for (std::size_t z = y; parent[z].first != npos; z = parent[z].first)
      path.labels.push_back(s[parent[z].second]);
    std::reverse(path.labels.begin(), path.labels.end());
    rep.ok = false;
    rep.verdict = "fail";
    rep.witnesses.push_back(path_json(p, path));
    break;
  }
  return rep;
}

std::vector<GeodesicPath> insert_torsion_edge(const Ball& ball,
                                              const GeodesicPath& geo,
                                              const std::vector<GroupElement>& n) {
  const PcPresentation& p = ball.presentation();
  const GenSet& s = ball.genset();
  if (geo.labels.empty() || !contains(n, geo.labels[0]))
    throw PreconditionError("path must start with an edge labelled in N");
  for (const GroupElement& x : geo.labels)
    if (!s.contains(x))
      throw PreconditionError("label " + x.to_string() + " is not in S");
  const GroupElement& nn = geo.labels[0];
  const std::size_t k = geo.labels.size() - 1;
  std::vector<GeodesicPath> out;
  GroupElement prefix = p.identity();
  for (std::size_t i = 0; i <= k; ++i) {
    const GroupElement ni = conjugate(p, nn, prefix);
    if (!contains(n, ni))
      throw PreconditionError("conjugate " + ni.to_string() +
                              " of n leaves N; N is not normal");
    if (!s.contains(ni))
      throw PreconditionError("conjugate " + ni.to_string() + " of n is not in S");
    GeodesicPath path{geo.start, {}};
    for (std::size_t j = 1; j <= i; ++j) path.labels.push_back(geo.labels[j]);
    path.labels.push_back(ni);
    for (std::size_t j = i + 1; j <= k; ++j) path.labels.push_back(geo.labels[j]);
    out.push_back(std::move(path));
    if (i < k) prefix = multiply(p, prefix, geo.labels[i + 1]);
  }
  return out;
}

}  // namespace nilcay
