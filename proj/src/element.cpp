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

#include "nilcay/element.hpp"

#include <climits>
#include <cstdint>
#include <sstream>

#include "nilcay/errors.hpp"

namespace nilcay {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

GroupElement::GroupElement(std::initializer_list<long long> exponents) {
  exps_.reserve(exponents.size());
  for (long long e : exponents) exps_.emplace_back(e);
}

bool GroupElement::is_identity() const noexcept {
  for (const Int& e : exps_)
    if (e != 0) return false;
  return true;
}

std::string GroupElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += ',';
    out += exps_[i].str();
  }
  return out;
}

GroupElement GroupElement::parse(std::string_view text) {
  std::vector<Int> exps;
  if (text.empty()) return GroupElement(std::move(exps));
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    std::size_t b = 0, e = tok.size();
    while (b < e && tok[b] == ' ') ++b;
    while (e > b && tok[e - 1] == ' ') --e;
    tok = tok.substr(b, e - b);
    std::size_t digits = (!tok.empty() && (tok[0] == '-' || tok[0] == '+'));
    if (digits == tok.size())
      throw InvalidArgument("malformed element '" + std::string(text) + "'");
    for (std::size_t i = digits; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9')
        throw InvalidArgument("malformed element '" + std::string(text) + "'");
    std::string s(tok[0] == '+' ? tok.substr(1) : tok);
    exps.emplace_back(s);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GroupElement(std::move(exps));
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.exps_[i].compare(b.exps_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.exps_.size() <=> b.exps_.size();
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Int& e : x.exponents()) {
    if (e >= LLONG_MIN && e <= LLONG_MAX) {
      mix(static_cast<std::uint64_t>(e.convert_to<long long>()));
    } else {
      mix(std::hash<std::string>{}(e.str()));
    }
  }
  return static_cast<std::size_t>(h);
}

Int floor_div(const Int& a, const Int& m) {
  Int q, r;
  boost::multiprecision::divide_qr(a, m, q, r);
  if (r != 0 && ((r < 0) != (m < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& m) { return a - floor_div(a, m) * m; }

}  // namespace nilcay
