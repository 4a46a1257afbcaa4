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

#ifndef NILCAY_ELEMENT_HPP_
#define NILCAY_ELEMENT_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilcay {

using Int = boost::multiprecision::cpp_int;

/// Exponent vector (e_1, ..., e_n) of the normal-form word g_1^e_1 ... g_n^e_n.
///
/// Elements carry no reference to their presentation; every operation that
/// needs the group law takes the presentation explicitly. The ordering is
/// lexicographic on the exponent vector and is the canonical vertex order used
/// everywhere a deterministic enumeration is needed.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Int> exponents)
      : exps_(std::move(exponents)) {}
  GroupElement(std::initializer_list<long long> exponents);
  GroupElement(std::initializer_list<Int> exponents) : exps_(exponents) {}

  static GroupElement identity(std::size_t n) {
    return GroupElement(std::vector<Int>(n));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  const Int& operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Int> exponents() const noexcept { return exps_; }
  bool is_identity() const noexcept;

  // Comma-separated exponents, e.g. "1,0,-3". The empty vector is "".
  std::string to_string() const;
  static GroupElement parse(std::string_view text);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b);

 private:
  std::vector<Int> exps_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

// Floor division and the matching non-negative remainder for m > 0.
Int floor_div(const Int& a, const Int& m);
Int floor_mod(const Int& a, const Int& m);

}  // namespace nilcay

#endif  // NILCAY_ELEMENT_HPP_
