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

#include "doctest.h"
#include "nilcay/autlab.hpp"
#include "nilcay/constructions.hpp"
#include "nilcay/errors.hpp"
#include "nilcay/structure.hpp"

using namespace nilcay;

namespace {

bool has_edge(const LabeledGraph& g, std::size_t u, std::size_t v) {
  const auto e = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  return std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end();
}

}  // namespace

TEST_CASE("wreath products follow the definition") {
  const LabeledGraph p2 = path_graph(2);
  const LabeledGraph w = wreath_product(p2, edgeless_graph(2));
  CHECK(w.size() == 4);
  CHECK(w.edges.size() == 4);
  CHECK(!has_edge(w, 0, 1));  // same fiber
  CHECK(has_edge(w, 0, 2));
  CHECK(has_edge(w, 0, 3));
  CHECK(wreath_product(edgeless_graph(2), edgeless_graph(2)).edges.empty());
  const LabeledGraph p4 = path_graph(4);
  const LabeledGraph w1 = wreath_product(p4, edgeless_graph(1));
  CHECK(w1.size() == p4.size());
  CHECK(w1.edges.size() == p4.edges.size());
  CHECK(edgeless_graph(3).size() == 3);
  CHECK_THROWS(edgeless_graph(0));
  // (v1,v2) ~ (v1',v2') iff v1 ~ v1', or v1 = v1' and v2 ~ v2'
  const LabeledGraph x = wreath_product(path_graph(3), path_graph(2));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) {
      const std::size_t a1 = a / 2, a2 = a % 2, b1 = b / 2, b2 = b % 2;
      const bool want = (a1 + 1 == b1 || b1 + 1 == a1) || (a1 == b1 && a2 != b2);
      CHECK(has_edge(x, a, b) == want);
    }
}

TEST_CASE("wreath product of the Z ball is the lifted Z x Z_2 ball") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n = *torsion_subgroup(p).elements;
  const GenSet s = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const PcPresentation q = quotient_by_torsion(p);
  for (int r : {3, 5}) {
    const Ball b = generate_ball(p, s, r);
    const Ball qb = generate_ball(q, standard_genset(q), r);
    const LabeledGraph w = wreath_product(ball_graph(qb), edgeless_graph(2));
    CHECK(check_graph_map(ball_graph(b), w, wreath_lift_map(b, qb, n)).ok);
  }
}

TEST_CASE("lifted and FSF generating sets") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const GenSet lifted = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const std::vector<GroupElement> want{GroupElement{-1, 0}, GroupElement{-1, 1},
                                       GroupElement{1, 0}, GroupElement{1, 1}};
  std::vector<GroupElement> got = lifted.elements();
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  const PcPresentation z2 = zn(2);
  CHECK(lift_generating_set(z2, standard_genset(z2).elements()).size() == 4);
  const PcPresentation hz = builtin("heisenberg_x_z2");
  CHECK(lift_generating_set(hz, standard_genset(heisenberg()).elements()).size() == 8);

  const std::vector<GroupElement> f = *torsion_subgroup(p).elements;
  const FsfResult fsf = fsf_generating_set(p, f, GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}}));
  got = fsf.genset.elements();
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(fsf_generating_set(z2, {z2.identity()}, standard_genset(z2)).genset.size() == 4);
  const std::vector<GroupElement> hf = *torsion_subgroup(hz).elements;
  const GenSet hs = GenSet::make(hz, {GroupElement{1, 0, 0, 0}, GroupElement{-1, 0, 0, 0},
                                      GroupElement{0, 1, 0, 0}, GroupElement{0, -1, 0, 0}});
  CHECK(fsf_generating_set(hz, hf, hs).genset.size() == 8);
  CHECK(generates_group(p, fsf.genset, 3));
}

TEST_CASE("twin classes") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const GenSet s = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const Ball b = generate_ball(p, s, 5);
  for (const auto& cls : twin_classes(b)) {
    CHECK(cls.size() == 2);
    CHECK(b.vertex(cls[0])[0] == b.vertex(cls[1])[0]);
  }
  const PcPresentation z2 = zn(2);
  for (const auto& cls : twin_classes(generate_ball(z2, standard_genset(z2), 4)))
    CHECK(cls.size() == 1);
}

TEST_CASE("klein bottle maps") {
  const PcPresentation k = klein_bottle();
  const PcPresentation z2 = zn(2);
  const Ball bk = generate_ball(k, standard_genset(k), 8);
  const Ball bz = generate_ball(z2, standard_genset(z2), 8);
  CHECK(check_vertex_map(bk, bz, klein_grid_map(bk, bz)).ok);
  const VertexMap flip = klein_flip_map(bk);
  CHECK(check_vertex_map(bk, bk, flip).ok);
  CHECK(flip.image[bk.identity_id()] == bk.identity_id());
  CHECK(klein_flip(GroupElement{1, 0}) == GroupElement{0, 1});
  const AffineVerdict v = is_affine_on_ball(bk, bk, flip);
  CHECK(!v.affine);
  CHECK(v.witness.has_value());
}

TEST_CASE("twin swaps") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const GenSet s = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const Ball b = generate_ball(p, s, 6);
  const TwinSwap sw = twin_swap_map(b, GroupElement{5, 0}, GroupElement{5, 1});
  CHECK(check_vertex_map(b, b, sw.map).ok);
  CHECK(sw.warnings.empty());
  CHECK(!is_affine_on_ball(b, b, sw.map).affine);
  const TwinSwap same = twin_swap_map(b, GroupElement{5, 0}, GroupElement{5, 0});
  CHECK(same.map.image == identity_map(b).image);
  CHECK_THROWS_AS(twin_swap_map(b, GroupElement{5, 0}, GroupElement{4, 1}), PreconditionError);
}
