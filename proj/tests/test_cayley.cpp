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

#include <map>
#include <sstream>

#include "doctest.h"
#include "nilcay/cayley.hpp"
#include "nilcay/errors.hpp"

using namespace nilcay;

namespace {

Int binom(long long n, long long k) {
  Int r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Word metric of H3 on {a^+-1, b^+-1} by brute force over words, using the
// closed-form product instead of collection.
std::map<GroupElement, int> heisenberg_word_metric(int r) {
  const std::vector<GroupElement> gens{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  std::map<GroupElement, int> best{{GroupElement{0, 0, 0}, 0}};
  std::vector<GroupElement> layer{GroupElement{0, 0, 0}};
  for (int d = 1; d <= r; ++d) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : layer)
      for (const GroupElement& s : gens) {
        GroupElement y{x[0] + s[0], x[1] + s[1], x[2] + s[2] - x[1] * s[0]};
        if (best.emplace(y, d).second) next.push_back(y);
      }
    layer = std::move(next);
  }
  return best;
}

}  // namespace

TEST_CASE("ball sizes") {
  const PcPresentation z2 = zn(2);
  for (int r = 0; r <= 6; ++r)
    CHECK(generate_ball(z2, standard_genset(z2), r).size() ==
          static_cast<std::size_t>(2 * r * r + 2 * r + 1));
  const PcPresentation k = klein_bottle();
  CHECK(generate_ball(k, standard_genset(k), 1).size() == 5);
  CHECK(generate_ball(heisenberg(), standard_genset(heisenberg()), 0).size() == 1);
}

TEST_CASE("heisenberg ball matches word enumeration") {
  const PcPresentation h = heisenberg();
  const auto oracle = heisenberg_word_metric(5);
  const Ball b = generate_ball(h, standard_genset(h), 5);
  REQUIRE(b.size() == oracle.size());
  for (std::size_t v = 0; v < b.size(); ++v) CHECK(oracle.at(b.vertex(v)) == b.dist(v));
}

TEST_CASE("ball generation is thread-count independent") {
  const PcPresentation h = builtin("heisenberg_x_z3");
  const Ball b1 = generate_ball(h, standard_genset(h), 5, BallOptions{kDefaultVertexCap, 1});
  const Ball b4 = generate_ball(h, standard_genset(h), 5, BallOptions{kDefaultVertexCap, 4});
  CHECK(b1.vertices() == b4.vertices());
  std::ostringstream o1, o4;
  export_graph(b1, o1);
  export_graph(b4, o4);
  CHECK(o1.str() == o4.str());
}

TEST_CASE("vertex cap") {
  const PcPresentation z3 = zn(3);
  CHECK_THROWS_AS(generate_ball(z3, standard_genset(z3), 10, BallOptions{100, 1}), BudgetExceeded);
}

TEST_CASE("genset validation") {
  const PcPresentation z2 = zn(2);
  CHECK_THROWS(GenSet::make(z2, {GroupElement{0, 0}}));
  const GenSet s = GenSet::make(z2, {GroupElement{1, 0}, GroupElement{0, 1}});
  CHECK(!s.symmetric());
  CHECK(standard_genset(z2).symmetric());
}

TEST_CASE("distance") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 7);
  CHECK(distance(b, z2.identity(), GroupElement{3, 4}) == 7);
  CHECK(distance(b, z2.identity(), z2.identity()) == 0);
  const Ball b4 = generate_ball(z2, standard_genset(z2), 4);
  CHECK(distance(b4, z2.identity(), GroupElement{3, 4}) == 7);  // certified through the sphere
  CHECK(!distance(b4, z2.identity(), GroupElement{9, 0}).has_value());
  const PcPresentation h = heisenberg();
  const Ball hb = generate_ball(h, standard_genset(h), 4);
  CHECK(distance(hb, h.identity(), h.generator(2)) == 4);
}

TEST_CASE("geodesics in Z^2 are lattice paths") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 6);
  const GroupElement e = z2.identity();
  CHECK(enumerate_geodesics(b, e, GroupElement{1, 1}).paths.size() == 2);
  CHECK(enumerate_geodesics(b, e, GroupElement{2, 0}).paths.size() == 1);
  CHECK(enumerate_geodesics(b, e, GroupElement{0, -1}).paths.size() == 1);
  CHECK(count_geodesics(b, e, GroupElement{2, 1}) == 3);
  CHECK(count_geodesics(b, e, e) == 1);
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y)
      if (std::abs(x) + std::abs(y) <= 6)
        CHECK(count_geodesics(b, e, GroupElement{x, y}) ==
              binom(std::abs(x) + std::abs(y), std::abs(x)));
  const auto en = enumerate_geodesics(b, e, GroupElement{3, 3}, 5);
  CHECK(en.truncated);
  CHECK(en.paths.size() == 5);
}

TEST_CASE("geodesic enumeration is ordered and agrees with counting") {
  const PcPresentation h = heisenberg();
  const Ball b = generate_ball(h, standard_genset(h), 4);
  const GroupElement c = h.generator(2);
  const auto en = enumerate_geodesics(b, h.identity(), c);
  CHECK(Int(en.paths.size()) == count_geodesics(b, h.identity(), c));
  for (const GeodesicPath& g : en.paths) {
    CHECK(g.length() == 4);
    CHECK(path_vertices(h, g).back() == c);
  }
}

TEST_CASE("torsion label bound") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n{GroupElement{0, 0}, GroupElement{0, 1}};
  const GenSet s = GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}, GroupElement{1, 1},
                                    GroupElement{-1, 1}, GroupElement{0, 1}});
  const Ball b = generate_ball(p, s, 4);
  CHECK(torsion_label_bound(b, n).ok);
  std::vector<int> bad(b.distances().begin(), b.distances().end());
  bad[*b.find(GroupElement{1, 1})] = 2;
  bad[*b.find(GroupElement{1, 0})] = 3;
  const Report r = torsion_label_bound(b, n, bad);
  CHECK(!r.ok);
  CHECK(!r.witnesses.empty());

  const PcPresentation z2 = zn(2);
  CHECK(torsion_label_bound(generate_ball(z2, standard_genset(z2), 3), {z2.identity()}).ok);
}

TEST_CASE("inserting a torsion edge") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n{GroupElement{0, 0}, GroupElement{0, 1}};
  const GenSet s = GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}, GroupElement{1, 1},
                                    GroupElement{-1, 1}, GroupElement{0, 1}});
  const Ball b = generate_ball(p, s, 4);
  const GeodesicPath geo{p.identity(), {GroupElement{0, 1}, GroupElement{1, 0}, GroupElement{1, 0}}};
  const auto paths = insert_torsion_edge(b, geo, n);
  REQUIRE(paths.size() == 3);
  for (const GeodesicPath& g : paths) {
    CHECK(g.length() == 3);
    CHECK(path_vertices(p, g).back() == GroupElement{2, 1});
    CHECK(std::count(g.labels.begin(), g.labels.end(), GroupElement{0, 1}) == 1);
  }
  CHECK(!(paths[0] == paths[1]));
  CHECK(insert_torsion_edge(b, GeodesicPath{p.identity(), {GroupElement{0, 1}}}, n).size() == 1);

  const PcPresentation hz = builtin("heisenberg_x_z2");
  const GenSet hs = GenSet::make(hz, {GroupElement{1, 0, 0, 0}, GroupElement{-1, 0, 0, 0},
                                      GroupElement{0, 1, 0, 0}, GroupElement{0, -1, 0, 0},
                                      GroupElement{0, 0, 0, 1}});
  const Ball hb = generate_ball(hz, hs, 4);
  const GeodesicPath hg{hz.identity(),
                        {GroupElement{0, 0, 0, 1}, GroupElement{1, 0, 0, 0},
                         GroupElement{0, 1, 0, 0}, GroupElement{-1, 0, 0, 0}}};
  const auto hp = insert_torsion_edge(hb, hg, {hz.identity(), GroupElement{0, 0, 0, 1}});
  CHECK(hp.size() == 4);
}

TEST_CASE("vertex maps") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 4);
  CHECK(check_vertex_map(b, b, identity_map(b)).ok);
  const VertexMap swap = map_from_function(b, b, [](const GroupElement& x) {
    return GroupElement{x[1], x[0]};
  });
  CHECK(check_vertex_map(b, b, swap).ok);
  // shear (x, y) -> (x, x + y) leaves the ball, so it is not a bijection of it
  const VertexMap out = map_from_function(b, b, [](const GroupElement& x) {
    return GroupElement{x[0], x[0] + x[1]};
  });
  CHECK(out.image[*b.find(GroupElement{3, 1})] == VertexMap::kUnmapped);
  CHECK_THROWS_AS(check_vertex_map(b, b, out), InvalidArgument);
  // shear where it stays inside the ball, leftovers matched in order
  VertexMap shear{std::vector<std::size_t>(b.size(), VertexMap::kUnmapped)};
  std::vector<char> used(b.size(), 0);
  for (std::size_t v = 0; v < b.size(); ++v) {
    const auto w = b.find(GroupElement{b.vertex(v)[0], b.vertex(v)[0] + b.vertex(v)[1]});
    if (w && !used[*w]) {
      shear.image[v] = *w;
      used[*w] = 1;
    }
  }
  std::size_t next = 0;
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (shear.image[v] != VertexMap::kUnmapped) continue;
    while (used[next]) ++next;
    shear.image[v] = next;
    used[next] = 1;
  }
  const MapCheck mc = check_vertex_map(b, b, shear);
  CHECK(mc.witness.has_value());
  CHECK(!mc.ok);
}

TEST_CASE("exports") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 1);
  std::ostringstream g, d;
  export_graph(b, g);
  export_distances(b, d);
  CHECK(g.str().rfind("# group", 0) == 0);
  CHECK(d.str().find("0,0\t0") != std::string::npos);
}
