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
#include "nilcay/errors.hpp"
#include "nilcay/order.hpp"

using namespace nilcay;

TEST_CASE("bi-order comparisons") {
  const BiOrder z2(zn(2));
  CHECK(z2.compare(GroupElement{0, 1}, GroupElement{1, 0}) == Cmp::kLess);
  CHECK(z2.compare(GroupElement{0, 0}, GroupElement{1, 0}) == Cmp::kLess);
  CHECK(z2.compare(GroupElement{1, 0}, GroupElement{0, 0}) == Cmp::kGreater);
  CHECK(z2.compare(GroupElement{3, -2}, GroupElement{3, -2}) == Cmp::kEqual);
  const PcPresentation h = heisenberg();
  const BiOrder o(h);
  CHECK(o.less(h.generator(2), h.generator(1)));
  CHECK(o.less(h.generator(1), h.generator(0)));
  CHECK(o.less(h.identity(), h.generator(2)));
}

TEST_CASE("bi-order is refused without the right structure") {
  CHECK_THROWS_AS(BiOrder{klein_bottle()}, PreconditionError);
  CHECK_THROWS_AS(BiOrder{zn_cross_cyclic(1, 2)}, PreconditionError);
}

TEST_CASE("bi-order invariance on a grid of small elements") {
  const PcPresentation h = heisenberg();
  const BiOrder o(h);
  std::vector<GroupElement> xs;
  for (long long i = -1; i <= 1; ++i)
    for (long long j = -1; j <= 1; ++j)
      for (long long k = -1; k <= 1; ++k) xs.push_back(GroupElement{i, j, k});
  for (const GroupElement& x : xs)
    for (const GroupElement& y : xs) {
      if (!o.less(x, y)) continue;
      for (const GroupElement& g : {h.generator(0), h.generator(1), GroupElement{-1, 2, 1}}) {
        CHECK(o.less(multiply(h, g, x), multiply(h, g, y)));
        CHECK(o.less(multiply(h, x, g), multiply(h, y, g)));
      }
    }
}

TEST_CASE("max generator") {
  const PcPresentation z2 = zn(2);
  CHECK(max_generator(BiOrder(z2), standard_genset(z2)) == GroupElement{1, 0});
  const PcPresentation h = heisenberg();
  CHECK(max_generator(BiOrder(h), standard_genset(h)) == h.generator(0));
  const GenSet single = GenSet::make(z2, {GroupElement{0, -1}, GroupElement{0, 1}});
  CHECK(max_generator(BiOrder(z2), single) == GroupElement{0, 1});
}

TEST_CASE("convexity") {
  const PcPresentation z2 = zn(2);
  const Ball bz = generate_ball(z2, standard_genset(z2), 5);
  CHECK(convexity_check(bz, GroupElement{1, 0}, 5).ok);
  CHECK_THROWS_AS(convexity_check(bz, GroupElement{1, 1}, 5), PreconditionError);
  const PcPresentation h = heisenberg();
  CHECK(convexity_check(generate_ball(h, standard_genset(h), 5), h.generator(0), 5).ok);
}

TEST_CASE("central label propagation") {
  const PcPresentation z2 = zn(2);
  const Ball bz = generate_ball(z2, standard_genset(z2), 5);
  const GeodesicPath seg{z2.identity(), std::vector<GroupElement>(5, GroupElement{1, 0})};
  CHECK(central_label_propagation(bz, seg, GroupElement{1, 0}).ok);
  const PcPresentation h = heisenberg();
  const Ball bh = generate_ball(h, standard_genset(h), 5);
  CHECK_THROWS_AS(central_label_propagation(
                      bh, GeodesicPath{h.identity(), std::vector<GroupElement>(3, h.generator(0))},
                      h.generator(0)),
                  PreconditionError);
  const PcPresentation hz = builtin("heisenberg_x_z");
  const Ball bhz = generate_ball(hz, standard_genset(hz), 4);
  const GroupElement t = hz.generator(3);
  CHECK(central_label_propagation(bhz, GeodesicPath{hz.identity(), std::vector<GroupElement>(4, t)},
                                  t)
            .ok);
}

TEST_CASE("distortion") {
  const PcPresentation h = heisenberg();
  const GenSet s = standard_genset(h);
  const DistortionVerdict c = classify_distorted(h, s, h.generator(2), 64, 0.5);
  CHECK(c.verdict == Distortion::kDistorted);
  REQUIRE(c.profile.samples.size() >= 5);
  CHECK(c.profile.samples[0].k == 1);
  CHECK(c.profile.samples[0].dist == 4);
  CHECK(c.profile.samples[4].k == 16);
  CHECK(*c.profile.samples[4].dist <= 16);
  CHECK(c.agrees == true);
  for (std::size_t i : {0, 1}) {
    const DistortionVerdict v = classify_distorted(h, s, h.generator(i), 64, 0.5);
    CHECK(v.verdict == Distortion::kUndistorted);
    for (const auto& x : v.profile.samples) CHECK(x.dist == x.k);
  }
  const PcPresentation z2 = zn(2);
  const DistortionVerdict z = classify_distorted(z2, standard_genset(z2), GroupElement{1, 0});
  CHECK(z.verdict == Distortion::kUndistorted);
  for (const auto& x : z.profile.samples) CHECK(x.ratio == 1.0);
}
