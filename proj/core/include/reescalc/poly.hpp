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

#ifndef REESCALC_POLY_HPP_
#define REESCALC_POLY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reescalc/field.hpp"

namespace rees {

using Exponents = std::vector<uint32_t>;

inline uint64_t total_degree(const Exponents& e) {
  uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded lexicographic order on exponent vectors. The canonical term order
/// used for structural polynomial equality and leading terms.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Closed point with coordinates in the prime field, aligned with a variable
/// list.
struct Point {
  std::vector<Coef> coords;

  static Point origin(const Field& field, size_t dim);
};

/// Exact multivariate polynomial over Q or F_p. Terms map exponent vectors to
/// nonzero coefficients; the map never stores a zero coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(Field field, std::vector<std::string> vars);

  static Poly zero(const Field& field, const std::vector<std::string>& vars);
  static Poly constant(const Field& field, const std::vector<std::string>& vars, Coef c);
  static Poly variable(const Field& field, const std::vector<std::string>& vars, size_t index);
  static Poly monomial(const Field& field, const std::vector<std::string>& vars,
                       const Exponents& e, Coef c);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Coef, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Leading (grlex-largest) term; throws on the zero polynomial.
  std::pair<Exponents, Coef> leading_term() const;
  uint64_t degree() const;

  void add_term(const Exponents& e, const Coef& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Coef& c) const;
  Poly pow(uint64_t e) const;
  /// Monic: leading coefficient 1 (no-op on the zero polynomial).
  Poly monic() const;

  Coef eval(const Point& p) const;
  /// f(z + p): translate the origin to p.
  Poly translate(const Point& p) const;
  /// Substitute subs[i] for variable i (same ambient variable list).
  Poly substitute(const std::vector<Poly>& subs) const;
  /// Substitute 0 for a variable and drop it from the variable list.
  Poly restrict_var(size_t index) const;
  /// Reinterpret on an extended variable list (old vars must be a prefix).
  Poly extend_vars(const std::vector<std::string>& new_vars) const;

  /// Hasse derivative: the coefficient of T^alpha in f(z + T).
  Poly hasse_derivative(const Exponents& alpha) const;
  /// nu_p(f): least total degree of f(z + p); nullopt iff f = 0.
  std::optional<uint64_t> order_at(const Point& p) const;
  /// Order of f along the subvariety defined by the given coordinate
  /// variables: min over terms of the total degree in those variables.
  std::optional<uint64_t> order_along(const std::vector<size_t>& var_indices) const;
  /// Largest k with v^k | f; throws on the zero polynomial.
  uint64_t divisor_order(size_t var_index) const;
  /// Homogeneous part of f(z + p) of degree nu_p(f); throws on zero.
  Poly initial_form(const Point& p) const;

  /// Exact division by v^k; throws if not divisible.
  Poly divide_by_var_power(size_t var_index, uint64_t k) const;
  /// True iff g divides f exactly (single-divisor long division).
  bool divisible_by(const Poly& g) const;
  /// f / g when g | f; throws otherwise.
  Poly exact_divide(const Poly& g) const;
  /// Remainder of f under division by the list (in order); deterministic.
  Poly reduce(const std::vector<Poly>& divisors) const;

  std::string str() const;

 private:
  void check_compatible(const Poly& o) const;

  Field field_;
  std::vector<std::string> vars_;
  std::map<Exponents, Coef, GrlexLess> terms_;
};

/// Parse the polynomial text grammar: signed integer coefficients, `*`, `^`,
/// parentheses, variable identifiers. Round-trips with Poly::str().
Poly parse_poly(const Field& field, const std::vector<std::string>& vars,
                const std::string& text);

/// Parse "z=0, x=1" against a variable list; unlisted variables default to 0.
Point parse_point(const Field& field, const std::vector<std::string>& vars,
                  const std::string& text);

}  // namespace rees

#endif  // REESCALC_POLY_HPP_
