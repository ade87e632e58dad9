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

#include "reescalc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

Point Point::origin(const Field& field, size_t dim) {
  Point p;
  p.coords.assign(dim, Coef(field, 0));
  return p;
}

Poly::Poly(Field field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {}

Poly Poly::zero(const Field& field, const std::vector<std::string>& vars) {
  return Poly(field, vars);
}

Poly Poly::constant(const Field& field, const std::vector<std::string>& vars, Coef c) {
  Poly p(field, vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

Poly Poly::variable(const Field& field, const std::vector<std::string>& vars, size_t index) {
  if (index >= vars.size()) throw Error("variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(field, vars, e, Coef(field, 1));
}

Poly Poly::monomial(const Field& field, const std::vector<std::string>& vars,
                    const Exponents& e, Coef c) {
  if (e.size() != vars.size()) throw Error("exponent vector length mismatch");
  Poly p(field, vars);
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::pair<Exponents, Coef> Poly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

uint64_t Poly::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

void Poly::add_term(const Exponents& e, const Coef& c) {
  if (e.size() != vars_.size()) throw Error("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (field_ != o.field_ || vars_ != o.vars_) {
    throw Error("polynomial field/variable mismatch");
  }
}

Poly Poly::operator-() const {
  Poly r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.field_, a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::scaled(const Coef& c) const {
  Poly r(field_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

Poly Poly::pow(uint64_t e) const {
  Poly r = Poly::constant(field_, vars_, Coef(field_, 1));
  Poly base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_term().second.inverse());
}

Coef Poly::eval(const Point& p) const {
  if (p.coords.size() != vars_.size()) throw Error("point dimension mismatch");
  Coef r(field_, 0);
  for (const auto& [e, c] : terms_) {
    Coef t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= p.coords[i].pow(e[i]);
    }
    r += t;
  }
  return r;
}

Poly Poly::translate(const Point& p) const {
  if (p.coords.size() != vars_.size()) throw Error("point dimension mismatch");
  std::vector<Poly> subs;
  subs.reserve(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    Poly s = Poly::variable(field_, vars_, i);
    s += Poly::constant(field_, vars_, p.coords[i]);
    subs.push_back(std::move(s));
  }
  return substitute(subs);
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
  if (subs.size() != vars_.size()) throw Error("substitution arity mismatch");
  Poly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(field_, vars_, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) t *= subs[i].pow(e[i]);
    }
    r += t;
  }
  return r;
}

Poly Poly::restrict_var(size_t index) const {
  if (index >= vars_.size()) throw Error("variable index out of range");
  std::vector<std::string> new_vars;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i != index) new_vars.push_back(vars_[i]);
  }
  Poly r(field_, new_vars);
  for (const auto& [e, c] : terms_) {
    if (e[index] != 0) continue;
    Exponents ne;
    for (size_t i = 0; i < e.size(); ++i) {
      if (i != index) ne.push_back(e[i]);
    }
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::extend_vars(const std::vector<std::string>& new_vars) const {
  if (new_vars.size() < vars_.size() ||
      !std::equal(vars_.begin(), vars_.end(), new_vars.begin())) {
    throw Error("extend_vars: old variables must be a prefix of the new list");
  }
  Poly r(field_, new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(e);
    ne.resize(new_vars.size(), 0);
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::hasse_derivative(const Exponents& alpha) const {
  if (alpha.size() != vars_.size()) throw Error("hasse derivative: dimension mismatch");
  Poly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    Coef coef = c;
    bool ok = true;
    Exponents ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < alpha[i]) {
        ok = false;
        break;
      }
      ne[i] = e[i] - alpha[i];
      coef *= binomial(field_, e[i], alpha[i]);
    }
    if (ok) r.add_term(ne, coef);
  }
  return r;
}

std::optional<uint64_t> Poly::order_at(const Point& p) const {
  if (is_zero()) return std::nullopt;
  Poly t = translate(p);
  if (t.is_zero()) return std::nullopt;  // unreachable: translation is invertible
  return total_degree(t.terms_.begin()->first);
}

std::optional<uint64_t> Poly::order_along(const std::vector<size_t>& var_indices) const {
  if (is_zero()) return std::nullopt;
  uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : terms_) {
    uint64_t d = 0;
    for (size_t i : var_indices) d += e[i];
    best = std::min(best, d);
  }
  return best;
}

uint64_t Poly::divisor_order(size_t var_index) const {
  if (is_zero()) throw Error("divisor_order of zero polynomial is undefined");
  uint64_t best = UINT64_MAX;
  for (const auto& [e, c] : terms_) best = std::min<uint64_t>(best, e[var_index]);
  return best;
}

Poly Poly::initial_form(const Point& p) const {
  if (is_zero()) throw Error("initial form of zero polynomial is undefined");
  Poly t = translate(p);
  uint64_t nu = total_degree(t.terms_.begin()->first);
  Poly r(field_, vars_);
  for (const auto& [e, c] : t.terms_) {
    if (total_degree(e) == nu) r.add_term(e, c);
  }
  return r;
}

Poly Poly::divide_by_var_power(size_t var_index, uint64_t k) const {
  Poly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var_index] < k) {
      throw Error("divide_by_var_power: not divisible by " + vars_[var_index] + "^" +
                  std::to_string(k));
    }
    Exponents ne(e);
    ne[var_index] -= static_cast<uint32_t>(k);
    r.add_term(ne, c);
  }
  return r;
}

namespace {

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

Poly Poly::reduce(const std::vector<Poly>& divisors) const {
  Poly f(*this);
  Poly remainder(field_, vars_);
  while (!f.is_zero()) {
    auto [le, lc] = f.leading_term();
    bool reduced = false;
    for (const Poly& g : divisors) {
      if (g.is_zero()) continue;
      auto [ge, gc] = g.leading_term();
      if (monomial_divides(ge, le)) {
        Exponents q(le.size());
        for (size_t i = 0; i < q.size(); ++i) q[i] = le[i] - ge[i];
        f -= g * Poly::monomial(field_, vars_, q, lc / gc);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.add_term(le, lc);
      Poly lead = Poly::monomial(field_, vars_, le, lc);
      f -= lead;
    }
  }
  return remainder;
}

bool Poly::divisible_by(const Poly& g) const {
  if (g.is_zero()) return is_zero();
  return reduce({g}).is_zero();
}

Poly Poly::exact_divide(const Poly& g) const {
  if (g.is_zero()) throw Error("division by zero polynomial");
  // Single-divisor long division; with one divisor the remainder is zero
  // exactly when g divides f.
  Poly f(*this);
  Poly quotient(field_, vars_);
  auto [ge, gc] = g.leading_term();
  while (!f.is_zero()) {
    auto [le, lc] = f.leading_term();
    if (!monomial_divides(ge, le)) throw Error("exact_divide: not divisible");
    Exponents q(le.size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = le[i] - ge[i];
    Poly qt = Poly::monomial(field_, vars_, q, lc / gc);
    quotient += qt;
    f -= g * qt;
  }
  return quotient;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending grlex, leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational v = c.value();
    bool neg = v < 0;
    Rational av = neg ? Rational(-v) : v;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = total_degree(e) > 0;
    if (av != 1 || !has_vars) {
      os << av.str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace rees
