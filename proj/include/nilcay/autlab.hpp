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

#ifndef NILCAY_AUTLAB_HPP_
#define NILCAY_AUTLAB_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcay/cayley.hpp"
#include "nilcay/pcgroup.hpp"
#include "nilcay/report.hpp"

namespace nilcay {

using ElementMap = std::function<GroupElement(const GroupElement&)>;

/// Adjacency-preserving self-bijection of the window ball B(r) fixing e that
/// extends to the enclosing ball B(r + t).
struct LocalAutomorphism {
  VertexMap window;     // on the window ball
  VertexMap extension;  // one extension on the enclosing ball
};

inline constexpr std::size_t kDefaultAutCap = 100'000;
inline constexpr std::size_t kDefaultExtensionSteps = 10'000'000;

struct LocalAutEnumeration {
  Ball window_ball;
  int stability = 0;
  std::vector<LocalAutomorphism> maps;  // sorted by window images
  bool truncated = false;
};

// `ball` has radius R; windows have radius R - t. Throws PreconditionError
// unless t >= 1 and R >= t + 1 (R >= t when R - t = 0 is wanted explicitly).
LocalAutEnumeration enumerate_local_auts(const Ball& ball, int t,
                                         std::size_t cap = kDefaultAutCap);

struct AffineVerdict {
  bool affine = false;
  GroupElement h;
  std::vector<std::pair<GroupElement, GroupElement>> alpha_on_generators;
  std::optional<std::pair<GroupElement, GroupElement>> witness;
  std::string reason;

  json to_json() const;
};

// h = m(e), alpha(x) = h^-1 m(x). Affine iff alpha(xy) = alpha(x) alpha(y)
// for all x, y with x, y, xy at distance <= domain_radius (default r - 1),
// and alpha maps S_A bijectively onto S_B.
AffineVerdict is_affine_on_ball(const Ball& a, const Ball& b, const VertexMap& m,
                                std::optional<int> domain_radius = std::nullopt);
// Same test for a map given on elements, over the listed domain.
AffineVerdict is_affine(const PcPresentation& pa, const GenSet& sa,
                        const PcPresentation& pb, const GenSet& sb, const ElementMap& m,
                        const std::vector<GroupElement>& domain);

// "normal-at-(r,t)", "non-normal" (conclusive, with witness) or "inconclusive".
Report normality_verdict(const PcPresentation& p, const GenSet& s, int r, int t,
                         std::size_t cap = kDefaultAutCap);

// Images of g under the stable local automorphisms of the ball.
std::vector<GroupElement> aut_e_orbit(const Ball& ball, const GroupElement& g, int t,
                                      std::size_t cap = kDefaultAutCap);

// m(gN1) within N2 m(g) for interior g; then the induced map on G/N must be
// well defined and affine between the quotient Cayley graphs.
Report induced_quotient_check(const Ball& a, const Ball& b, const VertexMap& m,
                              const std::vector<GroupElement>& n1,
                              const std::vector<GroupElement>& n2);

// sigma_g(z) = m(g)^-1 m(gz) obeys m(g z^k) = m(g) sigma^k, does not depend
// on g, and lands in Z-dagger of the target.
Report central_translation_check(const Ball& a, const Ball& b, const VertexMap& m,
                                 const GroupElement& z, int kmax);
Report central_translation_check(const Ball& a, const PcPresentation& pb,
                                 const GenSet& sb, const ElementMap& m,
                                 const GroupElement& z, int kmax);

}  // namespace nilcay

#endif  // NILCAY_AUTLAB_HPP_
