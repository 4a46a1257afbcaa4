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

#ifndef NILCAY_CAYLEY_HPP_
#define NILCAY_CAYLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilcay/element.hpp"
#include "nilcay/pcgroup.hpp"
#include "nilcay/report.hpp"

namespace nilcay {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Deduplicated, identity-free list of group elements.
class GenSet {
 public:
  GenSet() = default;
  // Drops duplicates (keeping first occurrences). Throws InvalidArgument if an
  // element is the identity or not in normal form.
  static GenSet make(const PcPresentation& p, std::vector<GroupElement> elems);

  std::size_t size() const noexcept { return elems_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<GroupElement>& elements() const noexcept { return elems_; }
  bool symmetric() const noexcept { return symmetric_; }
  std::optional<std::size_t> index_of(const GroupElement& x) const;
  // Index of the inverse of element i, or npos when S is not symmetric.
  std::size_t inverse_index(std::size_t i) const { return inv_[i]; }
  bool contains(const GroupElement& x) const { return index_of(x).has_value(); }
  std::string to_string(const PcPresentation& p) const;

 private:
  std::vector<GroupElement> elems_;
  std::vector<std::size_t> inv_;
  bool symmetric_ = false;
};

GenSet standard_genset(const PcPresentation& p);

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

struct BallOptions {
  std::size_t vertex_cap = kDefaultVertexCap;
  unsigned threads = 1;
};

/// The radius-r ball of Cay(G;S) around e.
///
/// Vertices are stored in lexicographic order of their exponent vectors,
/// independent of how the BFS frontiers were processed. neighbor(v, i) is the
/// id of v * S[i], or npos when that product lies outside the ball.
class Ball {
 public:
  const PcPresentation& presentation() const noexcept { return p_; }
  const GenSet& genset() const noexcept { return s_; }
  int radius() const noexcept { return radius_; }

  std::size_t size() const noexcept { return vertices_.size(); }
  const GroupElement& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<GroupElement>& vertices() const noexcept { return vertices_; }
  int dist(std::size_t v) const { return dist_[v]; }
  std::span<const int> distances() const noexcept { return dist_; }
  std::size_t neighbor(std::size_t v, std::size_t s) const {
    return nbr_[v * s_.size() + s];
  }
  std::optional<std::size_t> find(const GroupElement& x) const;
  std::size_t identity_id() const noexcept { return identity_; }
  bool interior(std::size_t v) const { return dist_[v] <= radius_ - 1; }
  // Ids of in-ball neighbours of v, sorted.
  std::vector<std::size_t> neighbors(std::size_t v) const;
  // Number of oriented edges (u, s, us) with both ends in the ball.
  std::size_t num_edges() const;

 private:
  friend Ball generate_ball(const PcPresentation&, const GenSet&, int,
                            const BallOptions&);
  Ball(PcPresentation p, GenSet s) : p_(std::move(p)), s_(std::move(s)) {}

  PcPresentation p_;
  GenSet s_;
  int radius_ = 0;
  std::size_t identity_ = 0;
  std::vector<GroupElement> vertices_;
  std::vector<int> dist_;
  std::vector<std::size_t> nbr_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

// Throws PreconditionError unless S is symmetric, BudgetExceeded past the
// vertex cap.
Ball generate_ball(const PcPresentation& p, const GenSet& s, int r,
                   const BallOptions& opts = {});

// dist_S(u, v) when certifiable from the ball: either u^-1 v lies in the ball,
// or a meet-in-the-middle split through the ball certifies it (any value up to
// 2r). Otherwise empty. Throws PreconditionError if u is not in the ball.
std::optional<int> distance(const Ball& ball, const GroupElement& u,
                            const GroupElement& v);

struct GeodesicPath {
  GroupElement start;
  std::vector<GroupElement> labels;

  std::size_t length() const noexcept { return labels.size(); }
  friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

// Vertices start, start*s_1, ..., start*s_1*...*s_k.
std::vector<GroupElement> path_vertices(const PcPresentation& p,
                                        const GeodesicPath& path);

inline constexpr std::size_t kDefaultGeodesicCap = 1'000'000;

struct GeodesicEnumeration {
  std::vector<GeodesicPath> paths;
  bool truncated = false;
};

// Geodesics u -> v, found on the translate e -> u^-1 v, which must lie in the
// ball. Paths come in lexicographic order of generator indices.
GeodesicEnumeration enumerate_geodesics(const Ball& ball, const GroupElement& u,
                                        const GroupElement& v,
                                        std::size_t cap = kDefaultGeodesicCap);
Int count_geodesics(const Ball& ball, const GroupElement& u,
                    const GroupElement& v);

// Checks that no geodesic from e inside the ball carries two edges labelled
// by elements of N. The overload takes a distance table (indexed by vertex id)
// in place of the ball's own, which is how the negative control is run.
Report torsion_label_bound(const Ball& ball, const std::vector<GroupElement>& n);
Report torsion_label_bound(const Ball& ball, const std::vector<GroupElement>& n,
                           std::span<const int> distances);

// geo = (n, s_1, ..., s_k) with n in N. Returns the k+1 paths obtained by
// moving the N-labelled edge to each position, n_i = (s_1..s_{i-1})^-1 n
// (s_1..s_{i-1}). Throws PreconditionError if some n_i is outside N or S.
std::vector<GeodesicPath> insert_torsion_edge(const Ball& ball,
                                              const GeodesicPath& geo,
                                              const std::vector<GroupElement>& n);

// Vertex map between two balls: image[v] is a vertex id of the target ball.
struct VertexMap {
  static constexpr std::size_t kUnmapped = npos;
  std::vector<std::size_t> image;
};

struct MapCheck {
  bool ok = false;
  std::string reason;
  // Offending edge, as elements of the source ball (or of the target ball
  // when the inverse direction failed).
  std::optional<std::pair<GroupElement, GroupElement>> witness;
};

VertexMap identity_map(const Ball& ball);
// Builds a vertex map from an element-level function. Vertices whose image
// falls outside `to` stay unmapped.
VertexMap map_from_function(
    const Ball& from, const Ball& to,
    const std::function<GroupElement(const GroupElement&)>& f);

// True iff m is a bijection of the vertex sets that preserves adjacency in
// both directions around interior vertices. Throws InvalidArgument on radius
// mismatch or a non-bijective map.
MapCheck check_vertex_map(const Ball& a, const Ball& b, const VertexMap& m);

void export_graph(const Ball& ball, std::ostream& out);
void export_distances(const Ball& ball, std::ostream& out);
void export_vertex_map(const Ball& a, const Ball& b, const VertexMap& m,
                       std::ostream& out);

}  // namespace nilcay

#endif  // NILCAY_CAYLEY_HPP_
