// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torelli/parse.h"

#include <cctype>
#include <string>
#include <vector>

#include "torelli/errors.h"

namespace torelli {
namespace {

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text, std::size_t base)
      : field_(field), text_(text), base_(base) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(base_ + pos_, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc(field_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Poly first = term();
    acc = negate ? -first : first;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == '(';
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Poly d = factor();
        if (d.degree() != 0) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc = acc.scale(d.lead().inverse());
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return Poly::x(field_);
    }
    if (c == 't') {
      if (field_->kind() != FieldCtx::Kind::kExtension) {
        fail("generator t is only defined over GF(p^k), k > 1");
      }
      ++pos_;
      return Poly::constant(field_.generator());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return Poly::constant(field_.from_rational(mpq_class(n)));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& field_;
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_uint(std::string_view s, std::size_t base) {
  if (s.empty()) throw ParseError(base, "expected an integer");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(base + i, "expected a digit");
    }
  }
  if (s.size() > 18) throw ParseError(base, "integer too large");
  return std::stoull(std::string(s));
}

Field char_token_at(std::string_view s, std::size_t base) {
  const std::size_t caret = s.find('^');
  if (caret == std::string_view::npos) {
    const std::uint64_t p = parse_uint(s, base);
    if (p == 0) return Field::rationals();
    return Field::prime(p);
  }
  const std::uint64_t p = parse_uint(s.substr(0, caret), base);
  const std::uint64_t k = parse_uint(s.substr(caret + 1), base + caret + 1);
  if (k > 64) throw ParseError(base + caret + 1, "extension degree too large");
  return make_ext_field(p, static_cast<int>(k));
}

Poly parse_poly_at(const Field& field, std::string_view s, std::size_t base) {
  return PolyParser(field, s, base).parse();
}

FieldElem parse_element_at(const Field& field, std::string_view s, std::size_t base) {
  const Poly p = parse_poly_at(field, s, base);
  if (p.degree() > 0) throw ParseError(base, "expected a field element, found a polynomial");
  return p.coeff(0);
}

}  // namespace

Field parse_field_spec(std::string_view s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  const std::string_view t = s.substr(lo, hi - lo);
  if (t == "Q") return Field::rationals();
  if (t.substr(0, 3) != "GF(") throw ParseError(lo, "expected \"Q\" or \"GF(\"");
  if (t.empty() || t.back() != ')') throw ParseError(hi, "expected ')'");
  return char_token_at(t.substr(3, t.size() - 4), lo + 3);
}

Poly parse_poly(const Field& field, std::string_view s) { return parse_poly_at(field, s, 0); }

FieldElem parse_element(const Field& field, std::string_view s) {
  return parse_element_at(field, s, 0);
}

Field parse_char_token(std::string_view s) { return char_token_at(s, 0); }

CurveModel parse_curve_spec(std::string_view s) {
  struct Entry {
    std::string_view key;
    std::string_view value;
    std::size_t value_offset;
  };
  std::vector<Entry> entries;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string_view::npos) end = s.size();
    const std::string_view item = s.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(start, "expected key=value");
    std::string_view key = item.substr(0, eq);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.front()))) key.remove_prefix(1);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    entries.push_back({key, item.substr(eq + 1), start + eq + 1});
    start = end + 1;
  }
  auto find = [&](std::string_view key) -> const Entry* {
    for (const auto& e : entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  };
  for (const auto& e : entries) {
    if (e.key != "char" && e.key != "f" && e.key != "alpha0" && e.key != "terms") {
      throw ParseError(e.value_offset - e.key.size() - 1, "unknown key '" + std::string(e.key) + "'");
    }
  }
  const Entry* ch = find("char");
  if (ch == nullptr) throw ParseError(0, "missing char=");
  std::string_view token = ch->value;
  std::size_t token_offset = ch->value_offset;
  while (!token.empty() && token.front() == ' ') {
    token.remove_prefix(1);
    ++token_offset;
  }
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  const Field field = char_token_at(token, token_offset);

  if (field->characteristic() != 2) {
    const Entry* f = find("f");
    if (f == nullptr) throw ParseError(s.size(), "missing f=");
    const Poly poly = parse_poly_at(field, f->value, f->value_offset);
    if (poly.degree() < 5 || poly.degree() % 2 == 0) {
      throw Error(ErrorCode::kWrongDegree,
                  "deg f = " + std::to_string(poly.degree()) +
                      "; need odd degree 2g+1 with g >= 2 (even-degree models are unsupported)");
    }
    return validate_odd_model(poly, (poly.degree() - 1) / 2);
  }

  const Entry* alpha0 = find("alpha0");
  const Entry* terms = find("terms");
  if (alpha0 == nullptr) throw ParseError(s.size(), "missing alpha0=");
  if (terms == nullptr) throw ParseError(s.size(), "missing terms=");
  const FieldElem a0 = parse_element_at(field, alpha0->value, alpha0->value_offset);
  std::vector<BranchTerm> branch;
  const std::string_view list = terms->value;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < list.size() && std::isspace(static_cast<unsigned char>(list[i]))) ++i;
  };
  for (;;) {
    skip();
    if (i >= list.size() || list[i] != '(') {
      throw ParseError(terms->value_offset + i, "expected '('");
    }
    const std::size_t colon = list.find(':', i);
    const std::size_t close = list.find(')', i);
    if (colon == std::string_view::npos || close == std::string_view::npos || colon > close) {
      throw ParseError(terms->value_offset + i, "expected (a:alpha)");
    }
    const FieldElem a =
        parse_element_at(field, list.substr(i + 1, colon - i - 1), terms->value_offset + i + 1);
    const FieldElem alpha = parse_element_at(field, list.substr(colon + 1, close - colon - 1),
                                             terms->value_offset + colon + 1);
    branch.push_back({a, alpha});
    i = close + 1;
    skip();
    if (i == list.size()) break;
    if (list[i] != ',') throw ParseError(terms->value_offset + i, "expected ','");
    ++i;
  }
  const int g = static_cast<int>(branch.size());
  return validate_as_model(a0, std::move(branch), g);
}

}  // namespace torelli
