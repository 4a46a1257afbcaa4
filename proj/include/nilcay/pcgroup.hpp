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

#ifndef NILCAY_PCGROUP_HPP_
#define NILCAY_PCGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcay/element.hpp"

namespace nilcay {

struct Letter {
  std::size_t gen = 0;
  Int exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the pc generators. Relation right-hand sides are kept in normal
// form (strictly increasing generators, nonzero exponents, finite exponents
// reduced); other words may be arbitrary.
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word word_of(const GroupElement& x);

// How an out-of-order pair g_t^x g_k^y (k < t) is rewritten during collection.
enum class PairRule : std::uint8_t {
  kCommute,
  // Relations give g_k^-1 g_t g_k and g_k g_t g_k^-1 ("conj t by k").
  kConjugateUpper,
  // Relations give g_t^-1 g_k g_t and g_t g_k g_t^-1 ("conj k by t").
  kConjugateLower,
};

// Contiguous run of generators declared to generate the torsion subgroup.
// Either a leading or a trailing block of the basis.
struct TorsionBlock {
  std::size_t first = 0;
  std::size_t count = 0;

  bool contains(std::size_t gen) const noexcept {
    return gen >= first && gen < first + count;
  }
  bool empty() const noexcept { return count == 0; }
};

inline constexpr std::size_t kDefaultFuel = 1'000'000;

class PresentationBuilder;

/// A validated power-commutator presentation.
///
/// Generators g_1..g_n have relative orders m_i (finite or infinite), power
/// relations g_i^m_i = w_i and conjugation relations for each pair. Pairs with
/// no declared relation commute. Instances are immutable values.
class PcPresentation {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t num_generators() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> find_symbol(std::string_view sym) const;

  // Empty optional means infinite relative order.
  const std::optional<Int>& relative_order(std::size_t i) const {
    return orders_.at(i);
  }
  bool is_finite(std::size_t i) const { return orders_.at(i).has_value(); }
  const Word& power_word(std::size_t i) const { return power_.at(i); }

  // g_by^-sign g_j g_by^sign, if declared.
  const std::optional<Word>& conjugate_word(std::size_t j, std::size_t by,
                                            int sign) const;
  PairRule rule(std::size_t k, std::size_t t) const {
    return rules_[k * symbols_.size() + t];
  }
  bool generators_commute(std::size_t i, std::size_t j) const;

  const TorsionBlock& torsion() const noexcept { return torsion_; }
  bool nilpotent() const noexcept { return nilpotent_; }
  bool polycyclic() const noexcept { return polycyclic_; }
  const std::vector<std::vector<std::size_t>>& biorder_blocks() const noexcept {
    return blocks_;
  }
  const std::vector<GroupElement>& standard_generators() const noexcept {
    return genset_;
  }
  // Coordinates allowed to be nonzero in the isolator of [G,G], when the
  // family knows it exactly.
  const std::optional<std::vector<bool>>& derived_isolator_support()
      const noexcept {
    return derived_support_;
  }

  GroupElement identity() const {
    return GroupElement::identity(num_generators());
  }
  GroupElement generator(std::size_t i, long long exp = 1) const;
  bool is_normal_form(const GroupElement& x) const;

  // Source text in the presentation grammar; parse(to_source()) round-trips.
  std::string to_source() const;
  // FNV-1a of to_source(), as 16 hex digits.
  std::string hash() const;

 private:
  friend class PresentationBuilder;
  PcPresentation() = default;

  std::string name_;
  std::vector<std::string> symbols_;
  std::vector<std::optional<Int>> orders_;
  std::vector<Word> power_;
  std::vector<std::optional<Word>> conj_plus_;   // [j * n + by]
  std::vector<std::optional<Word>> conj_minus_;  // [j * n + by]
  std::vector<PairRule> rules_;                  // [k * n + t], k < t
  TorsionBlock torsion_;
  bool nilpotent_ = false;
  bool polycyclic_ = false;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<GroupElement> genset_;
  std::optional<std::vector<bool>> derived_support_;
};

class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::string name) : name_(std::move(name)) {}

  std::size_t add_generator(std::string symbol, std::optional<Int> order);
  void set_power(std::size_t gen, Word rhs);
  // sign = +1 declares g_by^-1 g_j g_by = rhs; sign = -1 declares g_by g_j g_by^-1.
  void set_conjugate(std::size_t j, std::size_t by, int sign, Word rhs);
  void set_torsion(TorsionBlock block) { torsion_ = block; }
  void set_nilpotent(bool v) { nilpotent_ = v; }
  void set_polycyclic(bool v) { polycyclic_ = v; }
  void add_biorder_block(std::vector<std::size_t> gens);
  // Generating-set words may be arbitrary; they are collected on build().
  void add_genset_word(Word w) { genset_words_.push_back(std::move(w)); }
  void set_derived_isolator_support(std::vector<bool> support) {
    derived_support_ = std::move(support);
  }

  std::size_t num_generators() const noexcept { return symbols_.size(); }
  std::optional<std::size_t> find_symbol(std::string_view sym) const;

  // Validates every declaration and samples collection for consistency.
  PcPresentation build() const;

 private:
  struct ConjDecl {
    std::size_t j, by;
    int sign;
    Word rhs;
  };
  std::string name_;
  std::vector<std::string> symbols_;
  std::vector<std::optional<Int>> orders_;
  std::vector<std::optional<Word>> power_;
  std::vector<ConjDecl> conj_;
  TorsionBlock torsion_;
  bool nilpotent_ = false;
  bool polycyclic_ = false;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<Word> genset_words_;
  std::optional<std::vector<bool>> derived_support_;
};

// ---- group law (collection from the left, fuel-bounded) --------------------

GroupElement multiply(const PcPresentation& p, const GroupElement& x,
                      const GroupElement& y, std::size_t fuel = kDefaultFuel);
GroupElement evaluate(const PcPresentation& p, const Word& w,
                      std::size_t fuel = kDefaultFuel);
GroupElement inverse(const PcPresentation& p, const GroupElement& x,
                     std::size_t fuel = kDefaultFuel);
GroupElement power(const PcPresentation& p, const GroupElement& x,
                   const Int& k, std::size_t fuel = kDefaultFuel);
// [x, y] = x^-1 y^-1 x y
GroupElement commutator(const PcPresentation& p, const GroupElement& x,
                        const GroupElement& y);
// x^g = g^-1 x g
GroupElement conjugate(const PcPresentation& p, const GroupElement& x,
                       const GroupElement& g);
bool is_central(const PcPresentation& p, const GroupElement& x);

// Number of infinite-order pc generators. Refuses presentations that are
// neither nilpotent nor declared polycyclic.
std::size_t hirsch_rank(const PcPresentation& p);

// ---- parsing and built-in families ----------------------------------------

PcPresentation parse_presentation(std::string_view text);
Word parse_word(const PcPresentation& p, std::string_view text);
std::string format_word(const PcPresentation& p, const Word& w);

PcPresentation zn(std::size_t n);
PcPresentation heisenberg();
PcPresentation klein_bottle();
// Z^n x Z_m, torsion generator last.
PcPresentation zn_cross_cyclic(std::size_t n, long long m);
// Generators of a then b, with all torsion generators moved to the end.
PcPresentation direct_product(const PcPresentation& a, const PcPresentation& b);

// Family ids: "zn:<n>", "heisenberg", "klein_bottle", "zn_cross_cyclic:<n>:<m>",
// products "A+B"; shorthands "z", "z2", "z3", "z_x_z2", "heisenberg_x_z2",
// "heisenberg_x_z3", "heisenberg_x_z".
PcPresentation builtin(std::string_view id);

}  // namespace nilcay

#endif  // NILCAY_PCGROUP_HPP_
