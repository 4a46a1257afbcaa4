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
#include "nilcay/structure.hpp"

using namespace nilcay;

TEST_CASE("torsion subgroups") {
  const SubgroupWitness t = torsion_subgroup(zn_cross_cyclic(1, 2));
  REQUIRE(t.elements);
  CHECK(*t.elements == std::vector<GroupElement>{GroupElement{0, 0}, GroupElement{0, 1}});
  CHECK(torsion_subgroup(zn(2)).elements->size() == 1);
  const PcPresentation h3 = builtin("heisenberg_x_z3");
  const SubgroupWitness n = torsion_subgroup(h3);
  CHECK(n.elements->size() == 3);
  for (const GroupElement& x : *n.elements) CHECK(power(h3, x, 3) == h3.identity());
}

TEST_CASE("quotients by torsion") {
  CHECK(quotient_by_torsion(zn_cross_cyclic(1, 2)).num_generators() == 1);
  const PcPresentation q = quotient_by_torsion(builtin("heisenberg_x_z3"));
  CHECK(q.num_generators() == 3);
  CHECK(multiply(q, q.generator(1), q.generator(0)) == GroupElement{1, 1, -1});
  CHECK(quotient_by_torsion(zn(2)).num_generators() == 2);
  const PcPresentation p = builtin("heisenberg_x_z3");
  CHECK(torsion_quotient_image(p, GroupElement{1, 2, 3, 2}) == GroupElement{1, 2, 3});
}

TEST_CASE("isolator oracle") {
  const PcPresentation z2 = zn(2);
  const Ball b = generate_ball(z2, standard_genset(z2), 5);
  const auto iso = isolator_oracle(b, cyclic_subgroup(z2, GroupElement{2, 0}), 6);
  std::vector<GroupElement> got;
  for (const auto& e : iso) got.push_back(e.element);
  std::sort(got.begin(), got.end());
  std::vector<GroupElement> want;
  for (long long x = -5; x <= 5; ++x) want.push_back(GroupElement{x, 0});
  CHECK(got == want);
  CHECK(isolator_oracle(b, trivial_subgroup(z2), 6).size() == 1);

  const PcPresentation h = heisenberg();
  const Ball hb = generate_ball(h, standard_genset(h), 4);
  const auto hiso = isolator_oracle(hb, coordinate_subgroup(h, {2}, "[G,G]"), 4);
  for (const auto& e : hiso) {
    CHECK(e.element[0] == 0);
    CHECK(e.element[1] == 0);
    CHECK(in_derived_isolator(h, e.element));
  }
}

TEST_CASE("derived isolator membership") {
  const PcPresentation h = heisenberg();
  CHECK(in_derived_isolator(h, h.generator(2)));
  CHECK(!in_derived_isolator(h, h.generator(0)));
  CHECK(in_derived_isolator_rational(h, GroupElement{0, 0, -5}));
  const PcPresentation k = klein_bottle();
  CHECK(in_derived_isolator_rational(k, GroupElement{1, 0}));
  CHECK(!in_derived_isolator_rational(k, GroupElement{0, 1}));
  CHECK(in_derived_isolator(zn_cross_cyclic(1, 2), GroupElement{0, 1}));
}

TEST_CASE("z dagger") {
  const PcPresentation h = heisenberg();
  const auto zh = z_dagger(generate_ball(h, standard_genset(h), 4));
  CHECK(zh.size() == 3);  // c^-1, e, c
  for (const GroupElement& x : zh) CHECK((x[0] == 0 && x[1] == 0));
  const PcPresentation z2 = zn(2);
  CHECK(z_dagger(generate_ball(z2, standard_genset(z2), 3)) ==
        std::vector<GroupElement>{z2.identity()});
  const PcPresentation k = klein_bottle();
  CHECK(z_dagger(generate_ball(k, standard_genset(k), 4)) ==
        std::vector<GroupElement>{k.identity()});
}

TEST_CASE("conjugator search") {
  const PcPresentation h = heisenberg();
  const Ball b = generate_ball(h, standard_genset(h), 6);
  const ConjugatorSearch s = find_conjugator(b, h.generator(0), GroupElement{1, 0, 1}, 3);
  REQUIRE(s.conjugator);
  CHECK(conjugate(h, h.generator(0), *s.conjugator) == GroupElement{1, 0, 1});
  CHECK(*s.conjugator == h.generator(1));
  CHECK(find_conjugator(b, h.generator(0), h.generator(0), 3).conjugator == h.identity());
  CHECK(!find_conjugator(b, h.generator(0), h.generator(1), 3).conjugator);
}

TEST_CASE("rank additivity") {
  const PcPresentation p = zn_cross_cyclic(1, 2);
  const Report r = rank_report(p, torsion_subgroup(p));
  CHECK(r.ok);
  CHECK(r.details["equation"] == "1 = 0 + 1");
  const PcPresentation z2 = zn(2);
  CHECK(rank_report(z2, trivial_subgroup(z2)).details["equation"] == "2 = 0 + 2");
  const PcPresentation h3 = builtin("heisenberg_x_z3");
  CHECK(rank_report(h3, torsion_subgroup(h3)).details["equation"] == "3 = 0 + 3");
}
