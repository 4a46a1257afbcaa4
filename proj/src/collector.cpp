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

#include "collector.hpp"

#include <string>

#include "nilcay/errors.hpp"

namespace nilcay {
namespace detail {

namespace {
constexpr std::size_t kMaxConjugationDepth = 64;
}  // namespace

Collector::Collector(const PcPresentation& p, std::size_t fuel)
    : p_(p), n_(p.num_generators()), fuel_(fuel) {}

void Collector::burn() {
  if (fuel_ == 0)
    throw CollectionError("collection fuel exhausted in presentation '" +
                          p_.name() + "'");
  --fuel_;
}

const Word* Collector::own(Word w) {
  arena_.push_back(std::move(w));
  return &arena_.back();
}

void Collector::multiply(std::vector<Int>& r, const Word& w) {
  Stack st;
  push_power(st, w, Int(1));
  run(r, st);
}

void Collector::run(std::vector<Int>& r, Stack& st) {
  while (!st.empty()) {
    Frame& f = st.back();
    if (f.pos == f.size()) {
      if (--f.reps <= 0) {
        st.pop_back();
      } else {
        f.pos = 0;
      }
      continue;
    }
    burn();
    if (!f.word) {
      // The frame is consumed; move the letter out before apply() pushes.
      Letter letter = std::move(f.single);
      st.pop_back();
      apply(r, st, letter.gen, letter.exp);
      continue;
    }
    const Letter& letter = (*f.word)[f.pos++];
    apply(r, st, letter.gen, letter.exp);
  }
}

void Collector::apply(std::vector<Int>& r, Stack& st, std::size_t k,
                      const Int& e) {
  if (e == 0) return;
  std::size_t t = n_;
  for (std::size_t i = n_; i-- > k + 1;) {
    if (r[i] != 0) {
      t = i;
      break;
    }
  }
  if (t == n_) {
    add_at(r, st, k, e);
    return;
  }
  Int rt = std::move(r[t]);
  r[t] = 0;
  switch (p_.rule(k, t)) {
    case PairRule::kCommute:
      // g_t^rt g_k^e = g_k^e g_t^rt
      push_letter(st, t, rt);
      push_letter(st, k, e);
      break;
    case PairRule::kConjugateUpper: {
      // g_t^rt g_k^s = g_k^s (g_k^-s g_t g_k^s)^rt, one step of g_k at a time
      const int s = e > 0 ? 1 : -1;
      if (e > 1 || e < -1) push_letter(st, k, e - s);
      push_power(st, *p_.conjugate_word(t, k, s), rt);
      push_letter(st, k, Int(s));
      break;
    }
    case PairRule::kConjugateLower: {
      // g_t^rt g_k^e = (g_t^rt g_k g_t^-rt)^e g_t^rt
      push_letter(st, t, rt);
      const Word& w = conjugate_by_power(k, t, rt);
      push_power(st, w, e);
      break;
    }
  }
}

void Collector::add_at(std::vector<Int>& r, Stack& st, std::size_t k,
                       const Int& e) {
  r[k] += e;
  const auto& m = p_.relative_order(k);
  if (m && (r[k] < 0 || r[k] >= *m)) {
    Int q = floor_div(r[k], *m);
    r[k] -= q * *m;
    // g_k^(q m) = w^q commutes with g_k and nothing follows position k.
    push_power(st, p_.power_word(k), q);
  }
}

void Collector::push_letter(Stack& st, std::size_t gen, const Int& e) {
  if (e == 0) return;
  st.push_back(Frame{nullptr, Letter{gen, e}, Int(1), 0});
}

bool Collector::abelian(const Word& w) const {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (!p_.generators_commute(w[a].gen, w[b].gen)) return false;
  return true;
}

void Collector::push_power(Stack& st, const Word& w, const Int& reps) {
  if (reps == 0 || w.empty()) return;
  const Word* src = &w;
  Int n = reps;
  if (n < 0) {
    src = own(inverse_word(w));
    n = -n;
  }
  if (n == 1) {
    st.push_back(Frame{src, Letter{}, Int(1), 0});
    return;
  }
  if (abelian(*src)) {
    Word scaled = *src;
    for (Letter& l : scaled) l.exp *= n;
    st.push_back(Frame{own(std::move(scaled)), Letter{}, Int(1), 0});
    return;
  }
  st.push_back(Frame{src, Letter{}, n, 0});
}

bool Collector::in_normal_form(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].exp == 0 || (i > 0 && w[i - 1].gen >= w[i].gen)) return false;
    if (const auto& m = p_.relative_order(w[i].gen);
        m && (w[i].exp < 0 || w[i].exp >= *m))
      return false;
  }
  return true;
}

Word Collector::collect_fresh(const Word& w) {
  std::vector<Int> r(n_);
  Stack st;
  push_power(st, w, Int(1));
  run(r, st);
  Word out;
  for (std::size_t i = 0; i < n_; ++i)
    if (r[i] != 0) out.push_back(Letter{i, r[i]});
  return out;
}

Word Collector::image_under(std::size_t i, std::size_t t, int sigma) {
  if (i == t) return Word{Letter{t, Int(1)}};
  const std::size_t lo = std::min(i, t), hi = std::max(i, t);
  const PairRule rule = p_.rule(lo, hi);
  if (rule == PairRule::kCommute) return Word{Letter{i, Int(1)}};
  if (i < t && rule == PairRule::kConjugateLower)
    return *p_.conjugate_word(i, t, -sigma);
  return collect_fresh(Word{Letter{t, Int(sigma)}, Letter{i, Int(1)},
                            Letter{t, Int(-sigma)}});
}

const Word& Collector::conjugate_by_power(std::size_t k, std::size_t t,
                                          const Int& m) {
  auto key = std::make_tuple(k, t, m);
  if (auto it = conj_cache_.find(key); it != conj_cache_.end())
    return *it->second;
  if (++depth_ > kMaxConjugationDepth)
    throw CollectionError("conjugation recursion too deep in presentation '" +
                          p_.name() + "'");
  const int sigma = m > 0 ? 1 : -1;
  const Int steps = m > 0 ? m : Int(-m);
  Word cur{Letter{k, Int(1)}};
  for (Int i = 0; i < steps; ++i) {
    burn();
    Word image;
    for (const Letter& l : cur) {
      Word img = image_under(l.gen, t, sigma);
      if (img.size() == 1) {
        image.push_back(Letter{img[0].gen, img[0].exp * l.exp});
        continue;
      }
      if (l.exp < 0) img = inverse_word(img);
      const Int reps = l.exp < 0 ? Int(-l.exp) : l.exp;
      for (Int j = 0; j < reps; ++j) image.insert(image.end(), img.begin(), img.end());
    }
    cur = in_normal_form(image) ? std::move(image) : collect_fresh(image);
  }
  --depth_;
  const Word* stored = own(std::move(cur));
  conj_cache_.emplace(std::move(key), stored);
  return *stored;
}

}  // namespace detail

namespace {

void require_size(const PcPresentation& p, const GroupElement& x) {
  if (x.size() != p.num_generators())
    throw InvalidArgument("element '" + x.to_string() + "' has " +
                          std::to_string(x.size()) + " exponents; '" +
                          p.name() + "' has " +
                          std::to_string(p.num_generators()) + " generators");
}

}  // namespace

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word word_of(const GroupElement& x) {
  Word w;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) w.push_back(Letter{i, x[i]});
  return w;
}

GroupElement multiply(const PcPresentation& p, const GroupElement& x,
                      const GroupElement& y, std::size_t fuel) {
  require_size(p, x);
  require_size(p, y);
  std::vector<Int> r(x.exponents().begin(), x.exponents().end());
  detail::Collector c(p, fuel);
  c.multiply(r, word_of(y));
  return GroupElement(std::move(r));
}

GroupElement evaluate(const PcPresentation& p, const Word& w,
                      std::size_t fuel) {
  for (const Letter& l : w)
    if (l.gen >= p.num_generators())
      throw InvalidArgument("word mentions generator index " +
                            std::to_string(l.gen) + " outside '" + p.name() +
                            "'");
  std::vector<Int> r(p.num_generators());
  detail::Collector c(p, fuel);
  c.multiply(r, w);
  return GroupElement(std::move(r));
}

GroupElement inverse(const PcPresentation& p, const GroupElement& x,
                     std::size_t fuel) {
  require_size(p, x);
  return evaluate(p, inverse_word(word_of(x)), fuel);
}

GroupElement power(const PcPresentation& p, const GroupElement& x,
                   const Int& k, std::size_t fuel) {
  require_size(p, x);
  GroupElement base = k < 0 ? inverse(p, x, fuel) : x;
  Int n = k < 0 ? Int(-k) : k;
  GroupElement acc = p.identity();
  while (n > 0) {
    if (n & 1) acc = multiply(p, acc, base, fuel);
    n >>= 1;
    if (n > 0) base = multiply(p, base, base, fuel);
  }
  return acc;
}

GroupElement commutator(const PcPresentation& p, const GroupElement& x,
                        const GroupElement& y) {
  return multiply(p, multiply(p, inverse(p, x), inverse(p, y)),
                  multiply(p, x, y));
}

GroupElement conjugate(const PcPresentation& p, const GroupElement& x,
                       const GroupElement& g) {
  return multiply(p, multiply(p, inverse(p, g), x), g);
}

bool is_central(const PcPresentation& p, const GroupElement& x) {
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    const GroupElement g = p.generator(i);
    if (multiply(p, x, g) != multiply(p, g, x)) return false;
  }
  return true;
}

std::size_t hirsch_rank(const PcPresentation& p) {
  if (!p.nilpotent() && !p.polycyclic())
    throw PreconditionError("hirsch rank of '" + p.name() +
                            "' refused: neither nilpotent nor declared "
                            "polycyclic");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (!p.is_finite(i)) ++rank;
  return rank;
}

}  // namespace nilcay
