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

#include "nilcay/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "nilcay/errors.hpp"
#include "nilcay/parallel.hpp"

namespace nilcay {

GenSet GenSet::make(const PcPresentation& p, std::vector<GroupElement> elems) {
  GenSet s;
  for (GroupElement& x : elems) {
    if (!p.is_normal_form(x))
      throw InvalidArgument("generating element '" + x.to_string() +
                            "' is not a normal form of '" + p.name() + "'");
    if (x.is_identity())
      throw InvalidArgument("generating set contains the identity");
    if (std::find(s.elems_.begin(), s.elems_.end(), x) == s.elems_.end())
      s.elems_.push_back(std::move(x));
  }
  s.inv_.assign(s.elems_.size(), npos);
  s.symmetric_ = true;
  for (std::size_t i = 0; i < s.elems_.size(); ++i) {
    if (auto j = s.index_of(inverse(p, s.elems_[i]))) {
      s.inv_[i] = *j;
    } else {
      s.symmetric_ = false;
    }
  }
  if (!s.symmetric_) s.inv_.assign(s.elems_.size(), npos);
  return s;
}

std::optional<std::size_t> GenSet::index_of(const GroupElement& x) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == x) return i;
  return std::nullopt;
}

std::string GenSet::to_string(const PcPresentation& p) const {
  std::string out;
  for (const GroupElement& x : elems_) {
    if (!out.empty()) out += ' ';
    out += format_word(p, word_of(x));
  }
  return out;
}

GenSet standard_genset(const PcPresentation& p) {
  return GenSet::make(p, p.standard_generators());
}

std::optional<std::size_t> Ball::find(const GroupElement& x) const {
  if (auto it = index_.find(x); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::size_t> Ball::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s_.size(); ++j)
    if (std::size_t w = neighbor(v, j); w != npos) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Ball::num_edges() const {
  return static_cast<std::size_t>(
      std::count_if(nbr_.begin(), nbr_.end(), [](std::size_t w) { return w != npos; }));
}

Ball generate_ball(const PcPresentation& p, const GenSet& s, int r,
                   const BallOptions& opts) {
  if (r < 0) throw InvalidArgument("negative radius");
  if (!s.symmetric())
    throw PreconditionError("generating set is not symmetric");
  Ball ball(p, s);
  ball.radius_ = r;
  const std::size_t k = s.size();

  std::vector<GroupElement> order{p.identity()};
  std::vector<int> dist{0};
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen{
      {p.identity(), 0}};
  std::vector<GroupElement> prod;
  std::size_t layer_begin = 0;
  for (int layer = 0;; ++layer) {
    const std::size_t layer_end = order.size();
    prod.resize(layer_end * k);
    parallel_for(layer_end - layer_begin, opts.threads, [&](std::size_t i) {
      const std::size_t v = layer_begin + i;
      for (std::size_t j = 0; j < k; ++j)
        prod[v * k + j] = multiply(p, order[v], s[j]);
    });
    if (layer == r) break;
    std::vector<GroupElement> fresh;
    for (std::size_t i = layer_begin * k; i < layer_end * k; ++i)
      if (!seen.count(prod[i])) fresh.push_back(prod[i]);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (fresh.empty()) break;
    if (order.size() + fresh.size() > opts.vertex_cap)
      throw BudgetExceeded("ball of radius " + std::to_string(r) + " in '" +
                           p.name() + "' exceeds the vertex cap of " +
                           std::to_string(opts.vertex_cap));
    for (GroupElement& x : fresh) {
      seen.emplace(x, order.size());
      order.push_back(std::move(x));
      dist.push_back(layer + 1);
    }
    layer_begin = layer_end;
  }

  const std::size_t n = order.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[perm[i]] = i;

  ball.vertices_.resize(n);
  ball.dist_.resize(n);
  ball.nbr_.assign(n * k, npos);
  for (std::size_t i = 0; i < n; ++i) {
    ball.vertices_[i] = order[perm[i]];
    ball.dist_[i] = dist[perm[i]];
  }
  for (std::size_t old = 0; old < n; ++old)
    for (std::size_t j = 0; j < k; ++j)
      if (auto it = seen.find(prod[old * k + j]); it != seen.end())
        ball.nbr_[id[old] * k + j] = id[it->second];
  ball.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ball.index_.emplace(ball.vertices_[i], i);
  ball.identity_ = *ball.find(p.identity());
  return ball;
}

std::optional<int> distance(const Ball& ball, const GroupElement& u,
                            const GroupElement& v) {
  const PcPresentation& p = ball.presentation();
  if (!ball.find(u))
    throw PreconditionError("distance: '" + u.to_string() + "' is not in the ball");
  const GroupElement d = multiply(p, inverse(p, u), v);
  if (auto id = ball.find(d)) return ball.dist(*id);
  // Here D > r. A geodesic of length D <= 2r passes through a vertex x with
  // |x| = r and |x^-1 d| = D - r <= r, so the minimum over the sphere equals D
  // exactly when it is at most 2r.
  int best = -1;
  for (std::size_t x = 0; x < ball.size(); ++x) {
    if (ball.dist(x) != ball.radius()) continue;
    const auto rest = ball.find(multiply(p, inverse(p, ball.vertex(x)), d));
    if (!rest) continue;
    const int len = ball.radius() + ball.dist(*rest);
    if (best < 0 || len < best) best = len;
  }
  if (best >= 0 && best <= 2 * ball.radius()) return best;
  return std::nullopt;
}

VertexMap identity_map(const Ball& ball) {
  VertexMap m;
  m.image.resize(ball.size());
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

VertexMap map_from_function(
    const Ball& from, const Ball& to,
    const std::function<GroupElement(const GroupElement&)>& f) {
  VertexMap m;
  m.image.resize(from.size(), VertexMap::kUnmapped);
  for (std::size_t v = 0; v < from.size(); ++v)
    if (auto w = to.find(f(from.vertex(v)))) m.image[v] = *w;
  return m;
}

namespace {

// Checks N(m(u)) == m(N(u)) for every interior u of `src`.
MapCheck check_direction(const Ball& src, const Ball& dst,
                         const std::vector<std::size_t>& fwd,
                         const std::vector<std::size_t>& back,
                         const std::string& side) {
  for (std::size_t u = 0; u < src.size(); ++u) {
    if (!src.interior(u)) continue;
    const std::vector<std::size_t> target = dst.neighbors(fwd[u]);
    for (std::size_t w : src.neighbors(u)) {
      if (!std::binary_search(target.begin(), target.end(), fwd[w]))
        return MapCheck{false,
                        side + " edge " + src.vertex(u).to_string() + " -- " +
                            src.vertex(w).to_string() + " is not preserved",
                        std::make_pair(src.vertex(u), src.vertex(w))};
    }
    for (std::size_t z : target) {
      const std::size_t w = back[z];
      const auto nbrs = src.neighbors(u);
      if (!std::binary_search(nbrs.begin(), nbrs.end(), w))
        return MapCheck{false,
                        side + " non-edge " + src.vertex(u).to_string() +
                            " -- " + src.vertex(w).to_string() +
                            " maps to an edge",
                        std::make_pair(src.vertex(u), src.vertex(w))};
    }
  }
  return MapCheck{true, "", std::nullopt};
}

}  // namespace

MapCheck check_vertex_map(const Ball& a, const Ball& b, const VertexMap& m) {
  if (a.radius() != b.radius())
    throw InvalidArgument("radius mismatch: " + std::to_string(a.radius()) +
                          " vs " + std::to_string(b.radius()));
  if (a.size() != b.size() || m.image.size() != a.size())
    throw InvalidArgument("vertex map is not a bijection: sizes " +
                          std::to_string(a.size()) + " -> " +
                          std::to_string(b.size()));
  std::vector<std::size_t> back(b.size(), npos);
  for (std::size_t v = 0; v < a.size(); ++v) {
    const std::size_t w = m.image[v];
    if (w == VertexMap::kUnmapped || w >= b.size())
      throw InvalidArgument("vertex map leaves " + a.vertex(v).to_string() +
                            " unmapped");
    if (back[w] != npos)
      throw InvalidArgument("vertex map is not injective at " +
                            b.vertex(w).to_string());
    back[w] = v;
  }
  MapCheck fwd = check_direction(a, b, m.image, back, "source");
  if (!fwd.ok) return fwd;
  return check_direction(b, a, back, m.image, "target");
}

void export_graph(const Ball& ball, std::ostream& out) {
  out << "# group " << ball.presentation().name() << "\n";
  out << "# genset " << ball.genset().to_string(ball.presentation()) << "\n";
  out << "# radius " << ball.radius() << "\n";
  for (std::size_t v = 0; v < ball.size(); ++v)
    for (std::size_t j = 0; j < ball.genset().size(); ++j)
      if (std::size_t w = ball.neighbor(v, j); w != npos)
        out << ball.vertex(v).to_string() << '\t' << ball.genset()[j].to_string()
            << '\t' << ball.vertex(w).to_string() << '\n';
}

void export_distances(const Ball& ball, std::ostream& out) {
  out << "# group " << ball.presentation().name() << "\n";
  out << "# genset " << ball.genset().to_string(ball.presentation()) << "\n";
  out << "# radius " << ball.radius() << "\n";
  for (std::size_t v = 0; v < ball.size(); ++v)
    out << ball.vertex(v).to_string() << '\t' << ball.dist(v) << '\n';
}

void export_vertex_map(const Ball& a, const Ball& b, const VertexMap& m,
                       std::ostream& out) {
  for (std::size_t v = 0; v < a.size() && v < m.image.size(); ++v)
    if (m.image[v] != VertexMap::kUnmapped)
      out << a.vertex(v).to_string() << '\t' << b.vertex(m.image[v]).to_string()
          << '\n';
}

}  // namespace nilcay
