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

#ifndef NILCAY_CONSTRUCTIONS_HPP_
#define NILCAY_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcay/cayley.hpp"
#include "nilcay/pcgroup.hpp"

namespace nilcay {

// Finite simple graph. Edges are stored once as (u, v) with u < v, sorted.
struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::vector<int>> coloring;

  std::size_t size() const noexcept { return vertices.size(); }
  std::vector<std::vector<std::size_t>> adjacency() const;
};

// Normalizes edges; throws InvalidArgument on self-loops or bad indices.
LabeledGraph make_graph(std::vector<std::string> vertices,
                        std::vector<std::pair<std::size_t, std::size_t>> edges);
LabeledGraph edgeless_graph(long long n);
LabeledGraph path_graph(std::size_t n);
// Undirected graph underlying a ball (vertex names are exponent vectors).
LabeledGraph ball_graph(const Ball& ball);

// X1[X2]: vertex (v1, v2) has index v1 * |V2| + v2.
LabeledGraph wreath_product(const LabeledGraph& x1, const LabeledGraph& x2);

// Bijection between vertex sets preserving edges and non-edges.
MapCheck check_graph_map(const LabeledGraph& a, const LabeledGraph& b,
                         const std::vector<std::size_t>& map);

// Full preimage in G of Sbar, given in coordinates of quotient_by_torsion(p).
GenSet lift_generating_set(const PcPresentation& p,
                           const std::vector<GroupElement>& sbar);

struct FsfResult {
  GenSet genset;
  bool identity_removed = false;
};

// {f1 s f2 : f1, f2 in F, s in S}, with the identity dropped if it occurs.
// Throws PreconditionError if F is not closed under products.
FsfResult fsf_generating_set(const PcPresentation& p,
                             const std::vector<GroupElement>& f, const GenSet& s);

// True if every pc generator lies in the radius-r ball of Cay(G;S).
bool generates_group(const PcPresentation& p, const GenSet& s, int r);

// Interior vertices grouped by equal neighbourhoods, in canonical order.
std::vector<std::vector<std::size_t>> twin_classes(const Ball& ball);

// b^i a^j rewritten as a^((-1)^i j) b^i.
GroupElement klein_flip(const GroupElement& x);
VertexMap klein_grid_map(const Ball& klein, const Ball& z2);
VertexMap klein_flip_map(const Ball& klein);

struct TwinSwap {
  VertexMap map;
  std::vector<std::string> warnings;
};

// Transposition of twins g and h. Throws PreconditionError if they are not
// twins; a g or h in S or equal to e is only a warning.
TwinSwap twin_swap_map(const Ball& ball, const GroupElement& g,
                       const GroupElement& h);

// Map from the lifted ball to wreath(ball_graph(quotient), E_|N|):
// g -> (index of gN in the quotient ball, index of section(gN)^-1 g in N).
std::vector<std::size_t> wreath_lift_map(const Ball& lifted, const Ball& quotient,
                                         const std::vector<GroupElement>& n);

}  // namespace nilcay

#endif  // NILCAY_CONSTRUCTIONS_HPP_
