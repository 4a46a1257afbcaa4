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

#include "nilcay/structure.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>

#include "nilcay/errors.hpp"

namespace nilcay {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

constexpr std::size_t kMaxTorsionElements = 1'000'000;

// Rows are exponent-sum vectors of relator words, i.e. the relations of the
// abelianization written additively.
Matrix relation_rows(const PcPresentation& p) {
  const std::size_t n = p.num_generators();
  Matrix rows;
  auto add = [&](const Word& w, std::size_t j, const Int& lhs) {
    std::vector<Rational> row(n);
    for (const Letter& l : w) row[l.gen] += Rational(l.exp);
    row[j] -= Rational(lhs);
    if (std::any_of(row.begin(), row.end(), [](const Rational& v) { return v != 0; }))
      rows.push_back(std::move(row));
  };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t by = 0; by < n; ++by)
      for (int sign : {1, -1})
        if (j != by)
          if (const auto& w = p.conjugate_word(j, by, sign)) add(*w, j, Int(1));
    if (const auto& m = p.relative_order(j)) add(p.power_word(j), j, *m);
  }
  return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational piv = a[row][c];
    for (Rational& v : a[row]) v /= piv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

Int dot(const std::vector<Int>& c, const GroupElement& x) {
  Int s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

}  // namespace

bool SubgroupWitness::contains(const GroupElement& x) const {
  if (elements) return std::binary_search(elements->begin(), elements->end(), x);
  if (predicate) return predicate(x);
  throw PreconditionError("subgroup '" + description + "' has no membership test");
}

SubgroupWitness trivial_subgroup(const PcPresentation& p) {
  SubgroupWitness w;
  w.description = "trivial";
  w.elements = std::vector<GroupElement>{p.identity()};
  return w;
}

SubgroupWitness coordinate_subgroup(const PcPresentation& p,
                                    std::vector<std::size_t> coords,
                                    std::string description) {
  SubgroupWitness w;
  w.description = std::move(description);
  std::vector<bool> allowed(p.num_generators(), false);
  for (std::size_t c : coords) {
    allowed.at(c) = true;
    w.generators.push_back(p.generator(c));
  }
  w.predicate = [allowed](const GroupElement& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!allowed[i] && x[i] != 0) return false;
    return true;
  };
  return w;
}

SubgroupWitness cyclic_subgroup(const PcPresentation& p, const GroupElement& g) {
  if (g.is_identity()) return trivial_subgroup(p);
  SubgroupWitness w;
  w.description = "<" + g.to_string() + ">";
  w.generators = {g};
  std::size_t lead = 0;
  while (g[lead] == 0) ++lead;
  if (p.is_finite(lead)) {
    // Enumerate the powers until they cycle; bounded by the torsion size.
    std::vector<GroupElement> all{p.identity()};
    GroupElement x = g;
    while (!x.is_identity()) {
      if (all.size() > kMaxTorsionElements)
        throw BudgetExceeded("cyclic subgroup enumeration too large");
      all.push_back(x);
      x = multiply(p, x, g);
    }
    std::sort(all.begin(), all.end());
    w.elements = std::move(all);
    return w;
  }
  // The pc series quotient at the leading coordinate is infinite cyclic, so
  // (g^j)_lead = j * g_lead.
  w.predicate = [p, g, lead](const GroupElement& x) {
    for (std::size_t i = 0; i < lead; ++i)
      if (x[i] != 0) return false;
    Int q, r;
    boost::multiprecision::divide_qr(x[lead], g[lead], q, r);
    return r == 0 && power(p, g, q) == x;
  };
  return w;
}

SubgroupWitness torsion_subgroup(const PcPresentation& p) {
  const TorsionBlock& t = p.torsion();
  if (t.empty()) return trivial_subgroup(p);
  Int total = 1;
  for (std::size_t i = t.first; i < t.first + t.count; ++i) total *= *p.relative_order(i);
  if (total > kMaxTorsionElements)
    throw BudgetExceeded("torsion subgroup has " + total.str() + " elements");
  std::vector<GroupElement> all;
  std::vector<Int> e(p.num_generators());
  while (true) {
    all.emplace_back(e);
    std::size_t i = t.first;
    for (; i < t.first + t.count; ++i) {
      if (++e[i] < *p.relative_order(i)) break;
      e[i] = 0;
    }
    if (i == t.first + t.count) break;
  }
  std::sort(all.begin(), all.end());
  const std::size_t size = all.size();
  std::size_t conjugations = 0;
  for (const GroupElement& x : all) {
    GroupElement y = x;
    std::size_t order = 1;
    while (!y.is_identity()) {
      if (order > size)
        throw InvalidPresentation("declared torsion element " + x.to_string() +
                                  " has infinite order");
      y = multiply(p, y, x);
      ++order;
    }
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
      for (const GroupElement& h : {p.generator(g), inverse(p, p.generator(g))}) {
        ++conjugations;
        if (!std::binary_search(all.begin(), all.end(), conjugate(p, x, h)))
          throw InvalidPresentation("declared torsion block of '" + p.name() +
                                    "' is not conjugation-stable at " + x.to_string());
      }
    }
  }
  SubgroupWitness w;
  w.description = "torsion";
  for (std::size_t i = t.first; i < t.first + t.count; ++i) w.generators.push_back(p.generator(i));
  w.elements = std::move(all);
  w.normality = json{{"conjugations_checked", conjugations}, {"stable", true}};
  return w;
}

GroupElement torsion_quotient_image(const PcPresentation& p, const GroupElement& x) {
  std::vector<Int> e;
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (!p.torsion().contains(i)) e.push_back(x[i]);
  return GroupElement(std::move(e));
}

GroupElement torsion_quotient_section(const PcPresentation& p, const GroupElement& xbar) {
  std::vector<Int> e(p.num_generators());
  std::size_t j = 0;
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (!p.torsion().contains(i)) e[i] = xbar[j++];
  if (j != xbar.size()) throw InvalidArgument("quotient element has the wrong length");
  return GroupElement(std::move(e));
}

PcPresentation quotient_by_torsion(const PcPresentation& p) {
  const TorsionBlock& t = p.torsion();
  if (t.empty()) return p;
  torsion_subgroup(p);
  const std::size_t n = p.num_generators();
  if (t.count == n) throw InvalidArgument("quotient by torsion is the trivial group");
  PresentationBuilder b(p.name() + "/N");
  std::vector<std::size_t> map(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    if (t.contains(i)) continue;
    if (p.is_finite(i))
      throw InvalidPresentation("finite-order generator " + p.symbol(i) +
                                " outside the torsion block");
    map[i] = b.add_generator(p.symbol(i), std::nullopt);
  }
  auto reduce = [&](const Word& w) {
    Word r;
    for (const Letter& l : w)
      if (map[l.gen] != npos) r.push_back(Letter{map[l.gen], l.exp});
    return r;
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t by = 0; by < n; ++by)
      for (int sign : {1, -1})
        if (j != by && map[j] != npos && map[by] != npos)
          if (const auto& w = p.conjugate_word(j, by, sign))
            b.set_conjugate(map[j], map[by], sign, reduce(*w));
  for (const auto& block : p.biorder_blocks()) {
    std::vector<std::size_t> nb;
    for (std::size_t g : block) nb.push_back(map[g]);
    b.add_biorder_block(std::move(nb));
  }
  std::set<GroupElement> seen;
  for (const GroupElement& s : p.standard_generators()) {
    GroupElement img = torsion_quotient_image(p, s);
    if (!img.is_identity() && seen.insert(img).second) b.add_genset_word(word_of(img));
  }
  b.set_nilpotent(p.nilpotent());
  b.set_polycyclic(p.polycyclic());
  if (const auto& sup = p.derived_isolator_support()) {
    std::vector<bool> ns;
    for (std::size_t i = 0; i < n; ++i)
      if (map[i] != npos) ns.push_back((*sup)[i]);
    b.set_derived_isolator_support(std::move(ns));
  }
  return b.build();
}

std::vector<IsolatorEntry> isolator_oracle(const Ball& ball, const SubgroupWitness& h,
                                           int kmax) {
  const PcPresentation& p = ball.presentation();
  std::vector<IsolatorEntry> out;
  for (const GroupElement& g : ball.vertices()) {
    GroupElement x = g;
    for (long long k = 1; k <= kmax; ++k) {
      if (h.contains(x)) {
        out.push_back(IsolatorEntry{g, k});
        break;
      }
      x = multiply(p, x, g);
    }
  }
  return out;
}

bool in_derived_isolator_rational(const PcPresentation& p, const GroupElement& g) {
  const std::size_t n = p.num_generators();
  Matrix rows = relation_rows(p);
  const std::size_t rank = rref(rows, n).size();
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Rational(g[i]);
  rows.push_back(std::move(x));
  return rref(rows, n).size() == rank;
}

bool in_derived_isolator(const PcPresentation& p, const GroupElement& g) {
  if (const auto& sup = p.derived_isolator_support()) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0 && !(*sup)[i]) return false;
    return true;
  }
  return in_derived_isolator_rational(p, g);
}

std::vector<std::vector<Int>> abelian_characters(const PcPresentation& p) {
  const std::size_t n = p.num_generators();
  Matrix rows = relation_rows(p);
  const std::vector<std::size_t> pivots = rref(rows, n);
  std::vector<std::vector<Int>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Rational> c(n);
    c[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = -rows[r][f];
    Int den = 1;
    for (const Rational& v : c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<Int> ic(n);
    for (std::size_t i = 0; i < n; ++i)
      ic[i] = boost::multiprecision::numerator(c[i]) * (den / boost::multiprecision::denominator(c[i]));
    out.push_back(std::move(ic));
  }
  return out;
}

long long character_lower_bound(const PcPresentation& p, const GenSet& s,
                                const GroupElement& x) {
  const auto basis = abelian_characters(p);
  const std::size_t d = basis.size();
  if (d == 0) return 0;
  std::vector<std::vector<Int>> chars;
  if (d <= 6) {
    std::vector<int> coef(d, -1);
    while (true) {
      if (std::any_of(coef.begin(), coef.end(), [](int c) { return c != 0; })) {
        std::vector<Int> c(p.num_generators());
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t i = 0; i < c.size(); ++i) c[i] += coef[b] * basis[b][i];
        chars.push_back(std::move(c));
      }
      std::size_t b = 0;
      while (b < d && coef[b] == 1) coef[b++] = -1;
      if (b == d) break;
      ++coef[b];
    }
  } else {
    chars = basis;
  }
  Int best = 0;
  for (const auto& c : chars) {
    Int m = 0;
    for (const GroupElement& y : s.elements()) m = std::max(m, Int(abs(dot(c, y))));
    if (m == 0) continue;
    const Int v = abs(dot(c, x));
    best = std::max(best, Int((v + m - 1) / m));
  }
  return static_cast<long long>(best);
}

std::vector<GroupElement> z_dagger(const Ball& ball) {
  const PcPresentation& p = ball.presentation();
  std::vector<GroupElement> out;
  for (const GroupElement& g : ball.vertices())
    if (in_derived_isolator(p, g) && is_central(p, g)) out.push_back(g);
  return out;
}

ConjugatorSearch find_conjugator(const Ball& ball, const GroupElement& a,
                                 const GroupElement& b, int kmax) {
  const PcPresentation& p = ball.presentation();
  if (!ball.find(a) || !ball.find(b))
    throw PreconditionError("find_conjugator: a and b must lie in the ball");
  ConjugatorSearch out;
  // shortest conjugator first, ties broken lexicographically
  std::vector<std::size_t> order(ball.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return ball.dist(x) < ball.dist(y); });
  for (std::size_t v : order) {
    const GroupElement& g = ball.vertex(v);
    if (conjugate(p, a, g) != b) continue;
    out.conjugator = g;
    const GroupElement e = p.identity();
    for (int k = 1; k <= kmax; ++k) {
      // dist(a^k, g b^k) = dist(e, a^-k g b^k) by left invariance.
      const GroupElement x =
          multiply(p, power(p, a, -k), multiply(p, g, power(p, b, k)));
      out.distances.push_back(distance(ball, e, x));
    }
    out.distances_constant =
        std::all_of(out.distances.begin(), out.distances.end(),
                    [&](const std::optional<int>& d) {
                      return d && d == out.distances.front();
                    });
    break;
  }
  return out;
}

Report rank_report(const PcPresentation& p, const SubgroupWitness& n) {
  if (!n.elements)
    throw PreconditionError("rank_report: unsupported subgroup shape '" + n.description + "'");
  const bool trivial = n.elements->size() == 1;
  const SubgroupWitness tors = torsion_subgroup(p);
  if (!trivial && *n.elements != *tors.elements)
    throw PreconditionError("rank_report: N must be trivial or the torsion subgroup");
  const std::size_t rank_g = hirsch_rank(p);
  const std::size_t rank_n = 0;
  const std::size_t rank_q = trivial ? rank_g : hirsch_rank(quotient_by_torsion(p));
  Report r = make_report("rank G = rank N + rank G/N", rank_g == rank_n + rank_q);
  r.parameters = json{{"N", n.description}, {"order_N", n.elements->size()}};
  r.details = json{{"rank_G", rank_g}, {"rank_N", rank_n}, {"rank_quotient", rank_q},
                   {"equation", std::to_string(rank_g) + " = " + std::to_string(rank_n) +
                                    " + " + std::to_string(rank_q)}};
  return r;
}

}  // namespace nilcay
