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

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "nilcay/errors.hpp"
#include "nilcay/pcgroup.hpp"

namespace nilcay {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_symbol(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::optional<Int> parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  std::string digits(s.substr(i));
  Int v(digits);
  return s[0] == '-' ? Int(-v) : v;
}

// Parses `sym^k*sym*...` or `1`. `lookup` maps a symbol to a generator index.
// On failure reports the offset within `text` of the bad factor.
template <typename Lookup>
Word parse_word_text(std::string_view text, Lookup lookup,
                     std::size_t line, std::size_t column) {
  Word w;
  if (text == "1") return w;
  if (text.empty()) throw ParseError(line, column, "empty word");
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find('*', pos);
    const std::string_view factor =
        text.substr(pos, star == std::string_view::npos ? std::string_view::npos
                                                        : star - pos);
    const std::size_t col = column + pos;
    const std::size_t caret = factor.find('^');
    const std::string_view sym = factor.substr(0, caret);
    if (!valid_symbol(sym))
      throw ParseError(line, col, "bad generator symbol '" + std::string(sym) + "'");
    const std::optional<std::size_t> gen = lookup(sym);
    if (!gen)
      throw ParseError(line, col, "undeclared generator '" + std::string(sym) + "'");
    Int exp(1);
    if (caret != std::string_view::npos) {
      const auto e = parse_integer(factor.substr(caret + 1));
      if (!e)
        throw ParseError(line, col + caret + 1,
                         "bad exponent in '" + std::string(factor) + "'");
      exp = *e;
    }
    if (exp != 0) w.push_back(Letter{*gen, exp});
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return w;
}

std::string join_tokens(const std::vector<Token>& toks, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < toks.size(); ++i) s += toks[i].text;
  return s;
}

bool parse_bool(const Token& t, std::size_t line) {
  if (t.text == "true") return true;
  if (t.text == "false") return false;
  throw ParseError(line, t.column, "expected true or false, got '" + t.text + "'");
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  std::optional<PresentationBuilder> b;
  std::optional<std::size_t> prefix, suffix;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t count) {
      if (toks.size() < count)
        throw ParseError(line_no, toks.back().column + toks.back().text.size(),
                         "'" + kw + "' line is incomplete");
    };
    auto exact = [&](std::size_t count) {
      need(count);
      if (toks.size() > count)
        throw ParseError(line_no, toks[count].column,
                         "unexpected '" + toks[count].text + "'");
    };
    auto lookup = [&](std::string_view s) { return b->find_symbol(s); };
    auto symbol_at = [&](std::size_t i) {
      const auto g = b->find_symbol(toks[i].text);
      if (!g)
        throw ParseError(line_no, toks[i].column,
                         "undeclared generator '" + toks[i].text + "'");
      return *g;
    };
    auto expect = [&](std::size_t i, const char* word) {
      if (toks[i].text != word)
        throw ParseError(line_no, toks[i].column,
                         std::string("expected '") + word + "', got '" +
                             toks[i].text + "'");
    };

    if (kw == "group") {
      exact(2);
      if (b) throw ParseError(line_no, 1, "second 'group' line");
      b.emplace(toks[1].text);
      continue;
    }
    if (!b) throw ParseError(line_no, toks[0].column, "expected 'group <name>' first");

    try {
      if (kw == "nilpotent") {
        exact(2);
        b->set_nilpotent(parse_bool(toks[1], line_no));
      } else if (kw == "polycyclic") {
        exact(2);
        b->set_polycyclic(parse_bool(toks[1], line_no));
      } else if (kw == "torsion_prefix" || kw == "torsion_suffix") {
        exact(2);
        const auto t = parse_integer(toks[1].text);
        if (!t || *t < 0)
          throw ParseError(line_no, toks[1].column, "bad torsion length");
        if (prefix || suffix)
          throw ParseError(line_no, 1, "torsion block declared twice");
        (kw == "torsion_prefix" ? prefix : suffix) =
            static_cast<std::size_t>(*t);
      } else if (kw == "gen") {
        exact(4);
        if (!valid_symbol(toks[1].text))
          throw ParseError(line_no, toks[1].column,
                           "bad generator symbol '" + toks[1].text + "'");
        expect(2, "order");
        std::optional<Int> order;
        if (toks[3].text != "inf") {
          const auto m = parse_integer(toks[3].text);
          if (!m) throw ParseError(line_no, toks[3].column, "bad order '" + toks[3].text + "'");
          order = *m;
        }
        b->add_generator(toks[1].text, order);
      } else if (kw == "pow") {
        need(4);
        const std::size_t g = symbol_at(1);
        expect(2, "=");
        b->set_power(g, parse_word_text(join_tokens(toks, 3), lookup, line_no,
                                        toks[3].column));
      } else if (kw == "conj" || kw == "conjinv") {
        need(6);
        const std::size_t j = symbol_at(1);
        expect(2, "by");
        const std::size_t by = symbol_at(3);
        expect(4, "=");
        b->set_conjugate(j, by, kw == "conj" ? 1 : -1,
                         parse_word_text(join_tokens(toks, 5), lookup, line_no,
                                         toks[5].column));
      } else if (kw == "block") {
        need(2);
        std::vector<std::size_t> gens;
        for (std::size_t i = 1; i < toks.size(); ++i) gens.push_back(symbol_at(i));
        b->add_biorder_block(std::move(gens));
      } else if (kw == "genset") {
        need(2);
        for (std::size_t i = 1; i < toks.size(); ++i)
          b->add_genset_word(
              parse_word_text(toks[i].text, lookup, line_no, toks[i].column));
      } else {
        throw ParseError(line_no, toks[0].column, "unknown keyword '" + kw + "'");
      }
    } catch (const InvalidPresentation& e) {
      throw InvalidPresentation("line " + std::to_string(line_no) + ": " +
                                e.what());
    }
  }
  if (!b) throw ParseError(line_no, 1, "missing 'group <name>' line");
  const std::size_t n = b->num_generators();
  if (prefix) b->set_torsion(TorsionBlock{0, *prefix});
  if (suffix) {
    if (*suffix > n) throw InvalidPresentation("torsion_suffix longer than the basis");
    b->set_torsion(TorsionBlock{n - *suffix, *suffix});
  }
  return b->build();
}

Word parse_word(const PcPresentation& p, std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  return parse_word_text(
      compact, [&](std::string_view s) { return p.find_symbol(s); }, 1, 1);
}

std::string format_word(const PcPresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += '*';
    out += p.symbol(l.gen);
    if (l.exp != 1) out += "^" + l.exp.str();
  }
  return out;
}

}  // namespace nilcay
