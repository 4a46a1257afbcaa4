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

TEST_CASE("local automorphisms of the Z^2 ball are the square's symmetries") {
  const PcPresentation z2 = zn(2);
  const LocalAutEnumeration e = enumerate_local_auts(generate_ball(z2, standard_genset(z2), 5), 2);
  CHECK(e.maps.size() == 8);
  CHECK(!e.truncated);
  CHECK(e.window_ball.radius() == 3);
  for (const LocalAutomorphism& a : e.maps) {
    CHECK(check_vertex_map(e.window_ball, e.window_ball, a.window).ok);
    CHECK(is_affine_on_ball(e.window_ball, e.window_ball, a.window, 3).affine);
  }
  const LocalAutEnumeration zero =
      enumerate_local_auts(generate_ball(z2, standard_genset(z2), 2), 2);
  CHECK(zero.maps.size() == 1);
  const LocalAutEnumeration capped =
      enumerate_local_auts(generate_ball(z2, standard_genset(z2), 5), 2, 3);
  CHECK(capped.truncated);
}

TEST_CASE("the Klein flip survives as a local automorphism") {
  const PcPresentation k = klein_bottle();
  const LocalAutEnumeration e = enumerate_local_auts(generate_ball(k, standard_genset(k), 6), 2);
  const VertexMap flip = klein_flip_map(e.window_ball);
  bool found = false;
  for (const LocalAutomorphism& a : e.maps) found = found || a.window.image == flip.image;
  CHECK(found);
}

TEST_CASE("affine maps") {
  const PcPresentation h = heisenberg();
  const GenSet s = standard_genset(h);
  const Ball b = generate_ball(h, s, 4);
  std::vector<GroupElement> dom = b.vertices();
  const GroupElement g{2, -1, 3};
  const AffineVerdict v = is_affine(h, s, h, s, [&](const GroupElement& x) {
    return multiply(h, g, x);
  }, dom);
  CHECK(v.affine);
  CHECK(v.h == g);
  for (const auto& [x, ax] : v.alpha_on_generators) CHECK(x == ax);
  CHECK(is_affine_on_ball(b, b, identity_map(b)).affine);
}

TEST_CASE("normality verdicts") {
  const PcPresentation z2 = zn(2);
  const Report z = normality_verdict(z2, standard_genset(z2), 3, 2);
  CHECK(z.verdict == "normal-at-(3,2)");
  CHECK(z.details["automorphisms"] == 8);
  const PcPresentation k = klein_bottle();
  const Report kr = normality_verdict(k, standard_genset(k), 4, 2);
  CHECK(kr.verdict == "non-normal");
  CHECK(!kr.witnesses.empty());
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const GenSet fsf = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  CHECK(normality_verdict(p, fsf, 3, 2).verdict == "non-normal");
}

TEST_CASE("orbits of Aut_e") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 5);
  CHECK(aut_e_orbit(b, GroupElement{1, 0}, 2) ==
        std::vector<GroupElement>{GroupElement{-1, 0}, GroupElement{0, -1}, GroupElement{0, 1},
                                  GroupElement{1, 0}});
  CHECK(aut_e_orbit(b, z2.identity(), 2) == std::vector<GroupElement>{z2.identity()});
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const GenSet s = GenSet::make(p, {GroupElement{1, 0}, GroupElement{-1, 0}, GroupElement{1, 1},
                                    GroupElement{-1, 1}, GroupElement{0, 1}});
  const auto orbit = aut_e_orbit(generate_ball(p, s, 6), GroupElement{0, 1}, 2);
  for (const GroupElement& x : orbit) CHECK(x[0] == 0);
}

TEST_CASE("induced quotient maps") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const std::vector<GroupElement> n = *torsion_subgroup(p).elements;
  const GenSet s = lift_generating_set(p, {GroupElement{1}, GroupElement{-1}});
  const Ball b = generate_ball(p, s, 6);
  const Report id = induced_quotient_check(b, b, identity_map(b), n, n);
  CHECK(id.ok);
  CHECK(id.details["induced_identity"] == true);
  const TwinSwap sw = twin_swap_map(b, GroupElement{5, 0}, GroupElement{5, 1});
  const Report r = induced_quotient_check(b, b, sw.map, n, n);
  CHECK(r.ok);
  CHECK(r.details["induced_identity"] == true);
  // swap the two points of every fiber with x >= 0
  const VertexMap fibers = map_from_function(b, b, [&](const GroupElement& x) {
    return x[0] >= 0 ? GroupElement{x[0], 1 - x[1]} : x;
  });
  const Report fr = induced_quotient_check(b, b, fibers, n, n);
  CHECK(fr.ok);
  CHECK(fr.details["induced_identity"] == true);
}

TEST_CASE("central translations") {
  const PcPresentation h = heisenberg();
  const GenSet s = standard_genset(h);
  const Ball b = generate_ball(h, s, 6);
  const GroupElement c = h.generator(2);
  const GroupElement g{1, -1, 0};
  const Report t = central_translation_check(b, h, s, [&](const GroupElement& x) {
    return multiply(h, g, x);
  }, c, 1);
  CHECK(t.ok);
  CHECK(t.details["sigma"] == "0,0,1");
  // swap a and b: a^i b^j c^k -> b^i a^j c^-k
  auto swap = [&](const GroupElement& x) {
    return multiply(h, multiply(h, power(h, h.generator(1), static_cast<long long>(x[0])),
                                power(h, h.generator(0), static_cast<long long>(x[1]))),
                    power(h, c, static_cast<long long>(-x[2])));
  };
  const Report a = central_translation_check(b, h, s, [&](const GroupElement& x) {
    return multiply(h, g, swap(x));
  }, c, 1);
  CHECK(a.ok);
  CHECK(a.details["sigma"] == "0,0,-1");
  const PcPresentation k = klein_bottle();
  const PcPresentation z2 = zn(2);
  const Ball bk = generate_ball(k, standard_genset(k), 4);
  const Ball bz = generate_ball(z2, standard_genset(z2), 4);
  CHECK_THROWS_AS(central_translation_check(bk, bz, klein_grid_map(bk, bz), GroupElement{0, 2}, 1),
                  PreconditionError);
}
