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

#include <charconv>
#include <string>
#include <vector>

#include "nilcay/errors.hpp"
#include "nilcay/pcgroup.hpp"

namespace nilcay {

namespace {

Word letter(std::size_t gen, long long exp) { return Word{Letter{gen, Int(exp)}}; }

void add_standard_genset(PresentationBuilder& b, std::size_t gen,
                         const std::optional<Int>& order) {
  b.add_genset_word(letter(gen, 1));
  if (!order) {
    b.add_genset_word(letter(gen, -1));
  } else if (*order > 2) {
    b.add_genset_word(Word{Letter{gen, *order - 1}});
  }
}

std::size_t parse_size(std::string_view s, std::string_view id) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidArgument("bad parameter '" + std::string(s) +
                          "' in group id '" + std::string(id) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

PcPresentation atom(std::string_view id) {
  if (id == "z") return zn(1);
  if (id == "z2") return zn(2);
  if (id == "z3") return zn(3);
  if (id == "z_x_z2") return zn_cross_cyclic(1, 2);
  if (id == "heisenberg") return heisenberg();
  if (id == "klein_bottle") return klein_bottle();
  if (id == "heisenberg_x_z2") return direct_product(heisenberg(), zn_cross_cyclic(0, 2));
  if (id == "heisenberg_x_z3") return direct_product(heisenberg(), zn_cross_cyclic(0, 3));
  if (id == "heisenberg_x_z") return direct_product(heisenberg(), zn(1));
  const auto parts = split(id, ':');
  if (parts[0] == "zn" && parts.size() == 2) return zn(parse_size(parts[1], id));
  if (parts[0] == "zn_cross_cyclic" && parts.size() == 3) {
    const std::size_t m = parse_size(parts[2], id);
    return zn_cross_cyclic(parse_size(parts[1], id), static_cast<long long>(m));
  }
  throw InvalidArgument("unknown group family '" + std::string(id) + "'");
}

}  // namespace

PcPresentation zn(std::size_t n) {
  if (n == 0) throw InvalidArgument("zn needs n >= 1");
  PresentationBuilder b("Z^" + std::to_string(n));
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < n; ++i)
    block.push_back(b.add_generator("x" + std::to_string(i + 1), std::nullopt));
  for (std::size_t i = 0; i < n; ++i) add_standard_genset(b, i, std::nullopt);
  b.set_nilpotent(true);
  b.add_biorder_block(block);
  b.set_derived_isolator_support(std::vector<bool>(n, false));
  return b.build();
}

PcPresentation heisenberg() {
  PresentationBuilder b("H3");
  const std::size_t a = b.add_generator("a", std::nullopt);
  const std::size_t bb = b.add_generator("b", std::nullopt);
  const std::size_t c = b.add_generator("c", std::nullopt);
  // ab = ba c
  b.set_conjugate(bb, a, 1, Word{Letter{bb, Int(1)}, Letter{c, Int(-1)}});
  b.set_conjugate(bb, a, -1, Word{Letter{bb, Int(1)}, Letter{c, Int(1)}});
  b.set_nilpotent(true);
  b.add_biorder_block({a, bb});
  b.add_biorder_block({c});
  for (std::size_t g : {a, bb}) add_standard_genset(b, g, std::nullopt);
  b.set_derived_isolator_support({false, false, true});
  return b.build();
}

PcPresentation klein_bottle() {
  PresentationBuilder b("KleinBottle");
  const std::size_t a = b.add_generator("a", std::nullopt);
  const std::size_t bb = b.add_generator("b", std::nullopt);
  // b^-1 a b = a^-1, hence also b a b^-1 = a^-1
  b.set_conjugate(a, bb, 1, letter(a, -1));
  b.set_conjugate(a, bb, -1, letter(a, -1));
  b.set_nilpotent(false);
  b.set_polycyclic(true);
  for (std::size_t g : {a, bb}) add_standard_genset(b, g, std::nullopt);
  b.set_derived_isolator_support({true, false});
  return b.build();
}

PcPresentation zn_cross_cyclic(std::size_t n, long long m) {
  if (m < 2)
    throw InvalidArgument("cyclic factor order must be at least 2, got " +
                          std::to_string(m));
  const std::string name = (n > 0 ? "Z^" + std::to_string(n) + "x" : std::string()) +
                           "Z_" + std::to_string(m);
  PresentationBuilder b(name);
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < n; ++i)
    block.push_back(b.add_generator("x" + std::to_string(i + 1), std::nullopt));
  const std::size_t t = b.add_generator("t", Int(m));
  b.set_torsion(TorsionBlock{t, 1});
  b.set_nilpotent(true);
  if (!block.empty()) b.add_biorder_block(block);
  for (std::size_t i = 0; i < n; ++i) add_standard_genset(b, i, std::nullopt);
  add_standard_genset(b, t, Int(m));
  std::vector<bool> support(n + 1, false);
  support[t] = true;
  b.set_derived_isolator_support(std::move(support));
  return b.build();
}

PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b) {
  const PcPresentation* f[2] = {&a, &b};
  for (const PcPresentation* p : f)
    if (!p->torsion().empty() &&
        p->torsion().first + p->torsion().count != p->num_generators())
      throw InvalidArgument("direct_product needs torsion generators last in '" +
                            p->name() + "'");
  PresentationBuilder out(a.name() + "x" + b.name());
  // New basis: free part of a, free part of b, torsion of a, torsion of b.
  std::vector<std::size_t> map[2];
  std::vector<std::pair<int, std::size_t>> order;
  for (bool torsion : {false, true})
    for (int side = 0; side < 2; ++side)
      for (std::size_t i = 0; i < f[side]->num_generators(); ++i)
        if (f[side]->torsion().contains(i) == torsion) order.emplace_back(side, i);
  map[0].resize(a.num_generators());
  map[1].resize(b.num_generators());
  for (const auto& [side, i] : order) {
    std::string sym = f[side]->symbol(i);
    if (out.find_symbol(sym)) {
      for (int k = 2;; ++k) {
        std::string alt = sym + "_" + std::to_string(k);
        if (!out.find_symbol(alt) && !f[0]->find_symbol(alt) && !f[1]->find_symbol(alt)) {
          sym = std::move(alt);
          break;
        }
      }
    }
    map[side][i] = out.add_generator(sym, f[side]->relative_order(i));
  }
  auto remap = [&](int side, const Word& w) {
    Word r;
    for (const Letter& l : w) r.push_back(Letter{map[side][l.gen], l.exp});
    return r;
  };
  std::size_t torsion_count = 0;
  for (int side = 0; side < 2; ++side) {
    const PcPresentation& p = *f[side];
    torsion_count += p.torsion().count;
    for (std::size_t i = 0; i < p.num_generators(); ++i)
      if (p.is_finite(i) && !p.power_word(i).empty())
        out.set_power(map[side][i], remap(side, p.power_word(i)));
    for (std::size_t j = 0; j < p.num_generators(); ++j)
      for (std::size_t by = 0; by < p.num_generators(); ++by)
        for (int sign : {1, -1})
          if (j != by)
            if (const auto& w = p.conjugate_word(j, by, sign))
              out.set_conjugate(map[side][j], map[side][by], sign, remap(side, *w));
    for (const auto& block : p.biorder_blocks()) {
      std::vector<std::size_t> nb;
      for (std::size_t g : block) nb.push_back(map[side][g]);
      out.add_biorder_block(std::move(nb));
    }
    for (const GroupElement& s : p.standard_generators())
      out.add_genset_word(remap(side, word_of(s)));
  }
  const std::size_t n = out.num_generators();
  if (torsion_count > 0) out.set_torsion(TorsionBlock{n - torsion_count, torsion_count});
  out.set_nilpotent(a.nilpotent() && b.nilpotent());
  out.set_polycyclic((a.nilpotent() || a.polycyclic()) &&
                     (b.nilpotent() || b.polycyclic()) &&
                     !(a.nilpotent() && b.nilpotent()));
  if (a.derived_isolator_support() && b.derived_isolator_support()) {
    std::vector<bool> support(n, false);
    for (int side = 0; side < 2; ++side)
      for (std::size_t i = 0; i < f[side]->num_generators(); ++i)
        support[map[side][i]] = (*f[side]->derived_isolator_support())[i];
    out.set_derived_isolator_support(std::move(support));
  }
  return out.build();
}

PcPresentation builtin(std::string_view id) {
  const auto parts = split(id, '+');
  PcPresentation acc = atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, atom(parts[i]));
  return acc;
}

}  // namespace nilcay
