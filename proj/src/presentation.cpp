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
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nilcay/errors.hpp"
#include "nilcay/pcgroup.hpp"

namespace nilcay {

namespace {

constexpr int kConsistencySamples = 24;

std::string order_text(const std::optional<Int>& m) {
  return m ? m->str() : std::string("inf");
}

void check_normal_form(const std::vector<std::string>& symbols,
                       const std::vector<std::optional<Int>>& orders,
                       const Word& w, const std::string& where) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[i];
    if (l.gen >= symbols.size())
      throw InvalidPresentation(where + ": unknown generator index");
    if (l.exp == 0)
      throw InvalidPresentation(where + ": zero exponent on " +
                                symbols[l.gen]);
    if (i > 0 && w[i - 1].gen >= l.gen)
      throw InvalidPresentation(where +
                                ": right-hand side is not in normal form "
                                "(generators must appear in basis order)");
    if (const auto& m = orders[l.gen]; m && (l.exp < 0 || l.exp >= *m))
      throw InvalidPresentation(where + ": exponent of " + symbols[l.gen] +
                                " not reduced mod " + m->str());
  }
}

bool mentions_only_from(const Word& w, std::size_t lo) {
  return std::all_of(w.begin(), w.end(),
                     [lo](const Letter& l) { return l.gen >= lo; });
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

std::optional<std::size_t> PcPresentation::find_symbol(
    std::string_view sym) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == sym) return i;
  return std::nullopt;
}

const std::optional<Word>& PcPresentation::conjugate_word(std::size_t j,
                                                          std::size_t by,
                                                          int sign) const {
  const std::size_t idx = j * symbols_.size() + by;
  return sign > 0 ? conj_plus_.at(idx) : conj_minus_.at(idx);
}

bool PcPresentation::generators_commute(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  return rule(std::min(i, j), std::max(i, j)) == PairRule::kCommute;
}

GroupElement PcPresentation::generator(std::size_t i, long long exp) const {
  if (i >= num_generators())
    throw InvalidArgument("generator index " + std::to_string(i) +
                          " out of range for '" + name_ + "'");
  std::vector<Int> e(num_generators());
  e[i] = exp;
  if (const auto& m = orders_[i]) e[i] = floor_mod(e[i], *m);
  return GroupElement(std::move(e));
}

bool PcPresentation::is_normal_form(const GroupElement& x) const {
  if (x.size() != num_generators()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (const auto& m = orders_[i]; m && (x[i] < 0 || x[i] >= *m))
      return false;
  return true;
}

std::string PcPresentation::to_source() const {
  const std::size_t n = num_generators();
  std::ostringstream out;
  out << "group " << name_ << "\n";
  out << "nilpotent " << (nilpotent_ ? "true" : "false") << "\n";
  if (polycyclic_) out << "polycyclic true\n";
  if (!torsion_.empty()) {
    if (torsion_.first == 0)
      out << "torsion_prefix " << torsion_.count << "\n";
    else
      out << "torsion_suffix " << torsion_.count << "\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    out << "gen " << symbols_[i] << " order " << order_text(orders_[i])
        << "\n";
  for (std::size_t i = 0; i < n; ++i)
    if (orders_[i] && !power_[i].empty())
      out << "pow " << symbols_[i] << " = " << format_word(*this, power_[i])
          << "\n";
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t by = 0; by < n; ++by) {
      if (const auto& w = conj_plus_[j * n + by])
        out << "conj " << symbols_[j] << " by " << symbols_[by] << " = "
            << format_word(*this, *w) << "\n";
      if (const auto& w = conj_minus_[j * n + by])
        out << "conjinv " << symbols_[j] << " by " << symbols_[by] << " = "
            << format_word(*this, *w) << "\n";
    }
  }
  for (const auto& block : blocks_) {
    out << "block";
    for (std::size_t g : block) out << " " << symbols_[g];
    out << "\n";
  }
  if (!genset_.empty()) {
    out << "genset";
    for (const GroupElement& s : genset_)
      out << " " << format_word(*this, word_of(s));
    out << "\n";
  }
  return out.str();
}

std::string PcPresentation::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_source()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t PresentationBuilder::add_generator(std::string symbol,
                                               std::optional<Int> order) {
  if (find_symbol(symbol))
    throw InvalidPresentation("generator '" + symbol + "' declared twice");
  if (order && *order <= 0)
    throw InvalidPresentation("generator '" + symbol +
                              "' has non-positive order " + order->str());
  symbols_.push_back(std::move(symbol));
  orders_.push_back(std::move(order));
  power_.emplace_back();
  return symbols_.size() - 1;
}

void PresentationBuilder::set_power(std::size_t gen, Word rhs) {
  if (gen >= symbols_.size())
    throw InvalidPresentation("power relation for unknown generator");
  if (!orders_[gen])
    throw InvalidPresentation("power relation for infinite-order generator '" +
                              symbols_[gen] + "'");
  if (power_[gen])
    throw InvalidPresentation("power relation for '" + symbols_[gen] +
                              "' declared twice");
  power_[gen] = std::move(rhs);
}

void PresentationBuilder::set_conjugate(std::size_t j, std::size_t by,
                                        int sign, Word rhs) {
  if (j >= symbols_.size() || by >= symbols_.size())
    throw InvalidPresentation("conjugation relation with unknown generator");
  if (j == by)
    throw InvalidPresentation("generator '" + symbols_[j] +
                              "' conjugated by itself");
  for (const ConjDecl& d : conj_)
    if (d.j == j && d.by == by && d.sign == sign)
      throw InvalidPresentation(std::string(sign > 0 ? "conj " : "conjinv ") +
                                symbols_[j] + " by " + symbols_[by] +
                                " declared twice");
  conj_.push_back(ConjDecl{j, by, sign > 0 ? 1 : -1, std::move(rhs)});
}

void PresentationBuilder::add_biorder_block(std::vector<std::size_t> gens) {
  blocks_.push_back(std::move(gens));
}

std::optional<std::size_t> PresentationBuilder::find_symbol(
    std::string_view sym) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == sym) return i;
  return std::nullopt;
}

PcPresentation PresentationBuilder::build() const {
  const std::size_t n = symbols_.size();
  if (n == 0) throw InvalidPresentation("presentation has no generators");
  PcPresentation p;
  p.name_ = name_;
  p.symbols_ = symbols_;
  p.orders_ = orders_;
  p.power_.assign(n, Word{});
  p.conj_plus_.assign(n * n, std::nullopt);
  p.conj_minus_.assign(n * n, std::nullopt);
  p.rules_.assign(n * n, PairRule::kCommute);
  p.nilpotent_ = nilpotent_;
  p.polycyclic_ = polycyclic_;

  for (std::size_t i = 0; i < n; ++i) {
    if (!power_[i]) continue;
    check_normal_form(symbols_, orders_, *power_[i], "pow " + symbols_[i]);
    p.power_[i] = *power_[i];
  }
  for (const ConjDecl& d : conj_) {
    const std::string where = std::string(d.sign > 0 ? "conj " : "conjinv ") +
                              symbols_[d.j] + " by " + symbols_[d.by];
    check_normal_form(symbols_, orders_, d.rhs, where);
    auto& slot = d.sign > 0 ? p.conj_plus_[d.j * n + d.by]
                            : p.conj_minus_[d.j * n + d.by];
    slot = d.rhs;
  }

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = k + 1; t < n; ++t) {
      const auto& up_plus = p.conj_plus_[t * n + k];
      const auto& up_minus = p.conj_minus_[t * n + k];
      const auto& lo_plus = p.conj_plus_[k * n + t];
      const auto& lo_minus = p.conj_minus_[k * n + t];
      const bool upper = up_plus || up_minus;
      const bool lower = lo_plus || lo_minus;
      const std::string pair = symbols_[k] + ", " + symbols_[t];
      if (upper && lower)
        throw InvalidPresentation("pair (" + pair +
                                  ") has relations in both directions");
      if (upper) {
        if (!up_plus || !up_minus)
          throw InvalidPresentation("pair (" + pair +
                                    ") needs both conj and conjinv of " +
                                    symbols_[t] + " by " + symbols_[k]);
        const Word trivial{Letter{t, Int(1)}};
        p.rules_[k * n + t] = (*up_plus == trivial && *up_minus == trivial)
                                  ? PairRule::kCommute
                                  : PairRule::kConjugateUpper;
      } else if (lower) {
        if (!lo_plus || !lo_minus)
          throw InvalidPresentation("pair (" + pair +
                                    ") needs both conj and conjinv of " +
                                    symbols_[k] + " by " + symbols_[t]);
        const Word trivial{Letter{k, Int(1)}};
        p.rules_[k * n + t] = (*lo_plus == trivial && *lo_minus == trivial)
                                  ? PairRule::kCommute
                                  : PairRule::kConjugateLower;
      }
    }
  }

  if (!torsion_.empty()) {
    if (torsion_.count > n)
      throw InvalidPresentation("torsion block longer than the basis");
    if (torsion_.first != 0 && torsion_.first + torsion_.count != n)
      throw InvalidPresentation(
          "torsion block must be a leading or trailing run of generators");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (torsion_.contains(i) && !orders_[i])
      throw InvalidPresentation("torsion block contains infinite-order "
                                "generator '" + symbols_[i] + "'");
    if (!torsion_.contains(i) && orders_[i])
      throw InvalidPresentation("finite-order generator '" + symbols_[i] +
                                "' lies outside the torsion block");
  }
  p.torsion_ = torsion_.empty() ? TorsionBlock{} : torsion_;

  if (nilpotent_) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t t = k + 1; t < n; ++t) {
        const PairRule r = p.rules_[k * n + t];
        if (r == PairRule::kConjugateLower)
          throw InvalidPresentation(
              "nilpotent presentation conjugates " + symbols_[k] + " by " +
              symbols_[t] + "; relations must rewrite later generators");
        if (r == PairRule::kConjugateUpper &&
            (!mentions_only_from(*p.conj_plus_[t * n + k], t) ||
             !mentions_only_from(*p.conj_minus_[t * n + k], t)))
          throw InvalidPresentation("nilpotent presentation: conj " +
                                    symbols_[t] + " by " + symbols_[k] +
                                    " mentions a generator before " +
                                    symbols_[t]);
      }
      if (!mentions_only_from(p.power_[k], k + 1))
        throw InvalidPresentation("nilpotent presentation: pow " +
                                  symbols_[k] +
                                  " mentions a generator not after it");
    }
  }

  std::set<std::size_t> seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidPresentation("empty bi-order block");
    for (std::size_t g : block) {
      if (g >= n) throw InvalidPresentation("bi-order block: unknown generator");
      if (!seen.insert(g).second)
        throw InvalidPresentation("generator '" + symbols_[g] +
                                  "' appears in two bi-order blocks");
      if (orders_[g])
        throw InvalidPresentation("bi-order block contains finite-order "
                                  "generator '" + symbols_[g] + "'");
    }
  }
  p.blocks_ = blocks_;

  if (derived_support_) {
    if (derived_support_->size() != n)
      throw InvalidPresentation("isolator support table has wrong length");
    p.derived_support_ = derived_support_;
  }

  // Both directions of each declared conjugation must undo each other, and
  // the group law must be associative on a fixed sample.
  try {
    for (const ConjDecl& d : conj_) {
      if (d.sign < 0) continue;
      const auto& minus = p.conj_minus_[d.j * n + d.by];
      if (!minus) continue;
      const Word by{Letter{d.by, Int(1)}};
      const Word by_inv{Letter{d.by, Int(-1)}};
      const GroupElement back = evaluate(p, concat({by, d.rhs, by_inv}));
      const GroupElement fwd = evaluate(p, concat({by_inv, *minus, by}));
      if (back != p.generator(d.j) || fwd != p.generator(d.j))
        throw InvalidPresentation("conj and conjinv of " + symbols_[d.j] +
                                  " by " + symbols_[d.by] +
                                  " are not mutually inverse");
    }
    std::mt19937_64 rng(0x6e696c636179ULL);
    auto draw = [&] {
      std::vector<Int> e(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = static_cast<long long>(rng() % 5) - 2;
        if (orders_[i]) e[i] = floor_mod(e[i], *orders_[i]);
      }
      return GroupElement(std::move(e));
    };
    for (int s = 0; s < kConsistencySamples; ++s) {
      const GroupElement x = draw(), y = draw(), z = draw();
      if (multiply(p, multiply(p, x, y), z) != multiply(p, x, multiply(p, y, z)))
        throw InvalidPresentation("presentation '" + name_ +
                                  "' is not associative at (" + x.to_string() +
                                  ")(" + y.to_string() + ")(" + z.to_string() +
                                  ")");
      if (multiply(p, x, inverse(p, x)) != p.identity())
        throw InvalidPresentation("presentation '" + name_ +
                                  "' has inconsistent inverses at (" +
                                  x.to_string() + ")");
    }
    for (const Word& w : genset_words_) p.genset_.push_back(evaluate(p, w));
  } catch (const CollectionError& e) {
    throw InvalidPresentation(std::string("collection did not terminate: ") +
                              e.what());
  }
  return p;
}

}  // namespace nilcay
