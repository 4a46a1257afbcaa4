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

#ifndef NILCAY_SRC_COLLECTOR_HPP_
#define NILCAY_SRC_COLLECTOR_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <tuple>
#include <vector>

#include "nilcay/pcgroup.hpp"

namespace nilcay::detail {

// Collection from the left. The collected prefix is an exponent vector; the
// uncollected suffix is a stack of (word, repetitions) frames. Each letter
// taken off the stack costs one unit of fuel.
class Collector {
 public:
  Collector(const PcPresentation& p, std::size_t fuel);

  // r := r * w, where r is in normal form on entry and on exit.
  void multiply(std::vector<Int>& r, const Word& w);

 private:
  // A frame walks `word` reps times, or the inline letter when word is null.
  struct Frame {
    const Word* word;
    Letter single;
    Int reps;
    std::size_t pos;
    std::size_t size() const { return word ? word->size() : 1; }
    const Letter& at(std::size_t i) const { return word ? (*word)[i] : single; }
  };
  using Stack = std::vector<Frame>;

  void run(std::vector<Int>& r, Stack& st);
  void apply(std::vector<Int>& r, Stack& st, std::size_t k, const Int& e);
  void add_at(std::vector<Int>& r, Stack& st, std::size_t k, const Int& e);
  void push_letter(Stack& st, std::size_t gen, const Int& e);
  void push_power(Stack& st, const Word& w, const Int& reps);
  bool abelian(const Word& w) const;
  // Normal form of g_t^m g_k g_t^-m.
  const Word& conjugate_by_power(std::size_t k, std::size_t t, const Int& m);
  // Normal form of g_t^sigma g_i g_t^-sigma.
  Word image_under(std::size_t i, std::size_t t, int sigma);
  Word collect_fresh(const Word& w);
  bool in_normal_form(const Word& w) const;
  const Word* own(Word w);
  void burn();

  const PcPresentation& p_;
  std::size_t n_;
  std::size_t fuel_;
  std::size_t depth_ = 0;
  std::deque<Word> arena_;
  std::map<std::tuple<std::size_t, std::size_t, Int>, const Word*> conj_cache_;
};

}  // namespace nilcay::detail

#endif  // NILCAY_SRC_COLLECTOR_HPP_
