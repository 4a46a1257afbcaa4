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

#include <random>

#include "doctest.h"
#include "nilcay/errors.hpp"
#include "nilcay/pcgroup.hpp"

using namespace nilcay;

namespace {

// a^i b^j c^k * a^i' b^j' c^k' with b a = a b c^-1.
GroupElement heis(const GroupElement& x, const GroupElement& y) {
  return GroupElement{x[0] + y[0], x[1] + y[1], x[2] + y[2] - x[1] * y[0]};
}

// a^i b^j * a^k b^l with b^-1 a b = a^-1.
GroupElement klein(const GroupElement& x, const GroupElement& y) {
  const Int sign = floor_mod(x[1], 2) == 0 ? 1 : -1;
  return GroupElement{x[0] + sign * y[0], x[1] + y[1]};
}

GroupElement rnd(std::mt19937_64& rng, std::size_t n, int b) {
  std::vector<Int> e(n);
  for (auto& v : e) v = static_cast<long long>(rng() % (2 * b + 1)) - b;
  return GroupElement(std::move(e));
}

}  // namespace

TEST_CASE("heisenberg products match the closed form") {
  const PcPresentation h = heisenberg();
  CHECK(multiply(h, GroupElement{1, 0, 0}, GroupElement{0, 1, 0}) == GroupElement{1, 1, 0});
  CHECK(multiply(h, GroupElement{0, 1, 0}, GroupElement{1, 0, 0}) == GroupElement{1, 1, -1});
  CHECK(commutator(h, h.generator(0), h.generator(1)) == GroupElement{0, 0, 1});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const GroupElement x = rnd(rng, 3, 30), y = rnd(rng, 3, 30);
    REQUIRE(multiply(h, x, y) == heis(x, y));
  }
}

TEST_CASE("klein bottle products match the closed form") {
  const PcPresentation k = klein_bottle();
  CHECK(multiply(k, GroupElement{0, 1}, GroupElement{1, 0}) == GroupElement{-1, 1});
  CHECK(commutator(k, k.generator(0), k.generator(1)) == GroupElement{-2, 0});
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const GroupElement x = rnd(rng, 2, 30), y = rnd(rng, 2, 30);
    REQUIRE(multiply(k, x, y) == klein(x, y));
  }
  CHECK(!k.nilpotent());
  CHECK(k.biorder_blocks().empty());
}

TEST_CASE("inverse, power and conjugate") {
  std::mt19937_64 rng(9);
  for (const char* id : {"heisenberg", "klein_bottle", "z_x_z2", "heisenberg_x_z3"}) {
    const PcPresentation p = builtin(id);
    for (int i = 0; i < 200; ++i) {
      GroupElement x = rnd(rng, p.num_generators(), 10);
      std::vector<Int> e(x.exponents().begin(), x.exponents().end());
      for (std::size_t j = 0; j < e.size(); ++j)
        if (const auto& m = p.relative_order(j)) e[j] = floor_mod(e[j], *m);
      x = GroupElement(e);
      const GroupElement g = p.generator(i % p.num_generators());
      CHECK(multiply(p, inverse(p, x), x) == p.identity());
      GroupElement naive = p.identity();
      for (int k = 0; k < 7; ++k) naive = multiply(p, naive, x);
      CHECK(power(p, x, 7) == naive);
      CHECK(power(p, x, -7) == inverse(p, naive));
      CHECK(power(p, x, 0) == p.identity());
      CHECK(conjugate(p, x, g) == multiply(p, multiply(p, inverse(p, g), x), g));
    }
  }
  const PcPresentation h = heisenberg();
  CHECK(power(h, h.generator(2), 16) == GroupElement{0, 0, 16});
  CHECK(commutator(h, power(h, h.generator(0), 4), power(h, h.generator(1), 4)) ==
        GroupElement{0, 0, 16});
}

TEST_CASE("abelian groups have trivial commutators") {
  const PcPresentation z2 = zn(2);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i)
    CHECK(commutator(z2, rnd(rng, 2, 50), rnd(rng, 2, 50)) == z2.identity());
}

TEST_CASE("centrality") {
  const PcPresentation h = heisenberg();
  CHECK(is_central(h, h.generator(2)));
  CHECK(!is_central(h, h.generator(0)));
  const PcPresentation k = klein_bottle();
  CHECK(is_central(k, GroupElement{0, 2}));
  CHECK(!is_central(k, GroupElement{1, 0}));
  CHECK(is_central(zn(3), GroupElement{4, -1, 2}));
}

TEST_CASE("hirsch rank") {
  CHECK(hirsch_rank(zn(2)) == 2);
  CHECK(hirsch_rank(heisenberg()) == 3);
  CHECK(hirsch_rank(zn_cross_cyclic(1, 2)) == 1);
  CHECK(hirsch_rank(builtin("heisenberg_x_z3")) == 3);
}

TEST_CASE("builtins") {
  const PcPresentation z2 = builtin("z2");
  CHECK(z2.num_generators() == 2);
  CHECK(z2.is_normal_form(GroupElement{5, -3}));
  const PcPresentation h = builtin("heisenberg");
  REQUIRE(h.biorder_blocks().size() == 2);
  CHECK(h.biorder_blocks()[0] == std::vector<std::size_t>{0, 1});
  CHECK(h.biorder_blocks()[1] == std::vector<std::size_t>{2});
  const PcPresentation zc = zn_cross_cyclic(1, 2);
  CHECK(zc.is_finite(1));
  CHECK(!zc.is_normal_form(GroupElement{0, 2}));
  CHECK_THROWS_AS(builtin("no_such_group"), InvalidArgument);
  CHECK_THROWS_AS(zn_cross_cyclic(1, 1), InvalidArgument);
}

TEST_CASE("presentation source round trip") {
  for (const char* id : {"z3", "heisenberg", "klein_bottle", "heisenberg_x_z3", "z_x_z2"}) {
    const PcPresentation p = builtin(id);
    const PcPresentation q = parse_presentation(p.to_source());
    CHECK(q.to_source() == p.to_source());
    CHECK(q.hash() == p.hash());
  }
}

TEST_CASE("parse presentation text") {
  const PcPresentation p = parse_presentation(R"(# Heisenberg, written by hand
group H
nilpotent true
gen a order inf
gen b order inf
gen c order inf
conj b by a = b*c^-1
conjinv b by a = b*c
block a b
block c
)");
  CHECK(p.num_generators() == 3);
  CHECK(multiply(p, GroupElement{0, 1, 0}, GroupElement{1, 0, 0}) == GroupElement{1, 1, -1});
  CHECK(format_word(p, parse_word(p, "a^2 * c^-1")) == "a^2*c^-1");
  CHECK(evaluate(p, parse_word(p, "b*a")) == GroupElement{1, 1, -1});
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("group G\ngen a order inf\npow a ^ 2 = 1\n");
    FAIL("expected a parse error");
  } catch (const nilcay::ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_presentation("group G\nfrobnicate a\n"), nilcay::ParseError);
  CHECK_THROWS_AS(parse_presentation("group G\ngen a order inf\ngen a order inf\n"), Error);
  CHECK_THROWS(parse_word(heisenberg(), "a*q"));
}

TEST_CASE("inconsistent presentations are rejected") {
  // b conjugates a to a^2: not a group with these normal forms.
  CHECK_THROWS_AS(parse_presentation(R"(group Bad
nilpotent false
polycyclic true
gen a order inf
gen b order inf
conj a by b = a^2
conjinv a by b = a^2
)"),
                  InvalidPresentation);
  // nilpotent flag with a relation that moves a generator down
  CHECK_THROWS_AS(parse_presentation(R"(group Bad2
nilpotent true
gen a order inf
gen b order inf
conj a by b = a^-1
conjinv a by b = a^-1
block a b
)"),
                  InvalidPresentation);
}

TEST_CASE("direct products") {
  const PcPresentation p = direct_product(heisenberg(), zn_cross_cyclic(0, 3));
  CHECK(p.num_generators() == 4);
  CHECK(p.is_finite(3));
  CHECK(is_central(p, p.generator(3)));
  const PcPresentation q = direct_product(zn(1), zn(1));
  CHECK(q.num_generators() == 2);
  CHECK(q.symbol(0) != q.symbol(1));
}
