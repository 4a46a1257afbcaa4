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

#ifndef NILCAY_STRUCTURE_HPP_
#define NILCAY_STRUCTURE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilcay/cayley.hpp"
#include "nilcay/pcgroup.hpp"
#include "nilcay/report.hpp"

namespace nilcay {

/// A subgroup given by generators plus either its full (sorted) element
/// list, when finite, or a membership predicate.
struct SubgroupWitness {
  std::string description;
  std::vector<GroupElement> generators;
  std::optional<std::vector<GroupElement>> elements;
  std::function<bool(const GroupElement&)> predicate;
  json normality = json::object();

  bool contains(const GroupElement& x) const;
};

SubgroupWitness trivial_subgroup(const PcPresentation& p);
// Elements supported on the given coordinates (e.g. <c> in the Heisenberg group).
SubgroupWitness coordinate_subgroup(const PcPresentation& p,
                                    std::vector<std::size_t> coords,
                                    std::string description);
SubgroupWitness cyclic_subgroup(const PcPresentation& p, const GroupElement& g);

// All elements supported on the declared torsion block, checked to have
// finite order and to be stable under conjugation by every generator.
SubgroupWitness torsion_subgroup(const PcPresentation& p);
// Presentation of G/N on the remaining generators. Returns p unchanged when
// no torsion is declared.
PcPresentation quotient_by_torsion(const PcPresentation& p);
// Image of x in quotient_by_torsion(p), and a section back into G.
GroupElement torsion_quotient_image(const PcPresentation& p, const GroupElement& x);
GroupElement torsion_quotient_section(const PcPresentation& p,
                                      const GroupElement& xbar);

struct IsolatorEntry {
  GroupElement element;
  long long k;  // least k <= kmax with element^k in H
};

// Ball elements g with g^k in H for some 1 <= k <= kmax: a certified lower
// approximation of the isolator of H inside the ball.
std::vector<IsolatorEntry> isolator_oracle(const Ball& ball,
                                           const SubgroupWitness& h, int kmax);

// Membership in the isolator of [G,G]: exactly the elements whose image in
// the rationalized abelianization vanishes. Uses the family's support table
// when present, otherwise the rational-span computation below.
bool in_derived_isolator(const PcPresentation& p, const GroupElement& g);
bool in_derived_isolator_rational(const PcPresentation& p, const GroupElement& g);
// Integer coefficient vectors c such that x -> sum c_i x_i is a homomorphism
// G -> Z; a basis of Hom(G, Q) scaled to integers.
std::vector<std::vector<Int>> abelian_characters(const PcPresentation& p);
// Lower bound on dist_S(e, x) from the characters and their +-1 combinations.
long long character_lower_bound(const PcPresentation& p, const GenSet& s,
                                const GroupElement& x);

// Z(G) intersected with the isolator of [G,G], restricted to the ball.
std::vector<GroupElement> z_dagger(const Ball& ball);

struct ConjugatorSearch {
  std::optional<GroupElement> conjugator;
  // dist(a^k, g b^k) for k = 1..kmax, when certifiable.
  std::vector<std::optional<int>> distances;
  bool distances_constant = false;
};

// Canonically least g in the ball with g^-1 a g = b.
ConjugatorSearch find_conjugator(const Ball& ball, const GroupElement& a,
                                 const GroupElement& b, int kmax);

// rank G = rank N + rank G/N for N trivial or the torsion subgroup.
Report rank_report(const PcPresentation& p, const SubgroupWitness& n);

}  // namespace nilcay

#endif  // NILCAY_STRUCTURE_HPP_
