// Copyright 2026 The reescalc authors.
//
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
#include <cstdlib>

#include "reescalc/poly.hpp"

namespace rees {

namespace {

// Recursive-descent parser for the polynomial text grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' integer)?
//   base   := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const Field& field, const std::vector<std::string>& vars,
             const std::string& text)
      : field_(field), vars_(vars), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw Error("unexpected character '" + std::string(1, text_[pos_]) +
                  "' in polynomial \"" + text_ + "\"");
    }
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Poly factor() {
    Poly p = base();
    if (eat('^')) {
      uint64_t e = integer();
      p = p.pow(e);
    }
    return p;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) throw Error("missing ')' in polynomial \"" + text_ + "\"");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(field_, vars_, Coef(field_, Rational(BigInt(integer()))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Poly::variable(field_, vars_, i);
      }
      throw Error("unknown variable '" + name + "' in polynomial \"" + text_ + "\"");
    }
    throw Error("cannot parse polynomial \"" + text_ + "\"");
  }

  uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw Error("expected integer in polynomial \"" + text_ + "\"");
    }
    uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string identifier() {
    std::string s;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      s += text_[pos_];
      ++pos_;
    }
    return s;
  }

  const Field& field_;
  const std::vector<std::string>& vars_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& field, const std::vector<std::string>& vars,
                const std::string& text) {
  return PolyParser(field, vars, text).parse();
}

Point parse_point(const Field& field, const std::vector<std::string>& vars,
                  const std::string& text) {
  Point p = Point::origin(field, vars.size());
  size_t pos = 0;
  auto fail = [&]() { throw Error("cannot parse point \"" + text + "\""); };
  while (pos < text.size()) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      name += text[pos++];
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (name.empty() || pos >= text.size() || text[pos] != '=') fail();
    ++pos;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) num += text[pos++];
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
      num += text[pos++];
    }
    if (num.empty()) fail();
    size_t idx = vars.size();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) idx = i;
    }
    if (idx == vars.size()) throw Error("unknown variable '" + name + "' in point");
    p.coords[idx] = Coef(field, Rational(num));
  }
  return p;
}

}  // namespace rees
