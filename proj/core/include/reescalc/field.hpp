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

#ifndef REESCALC_FIELD_HPP_
#define REESCALC_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rees {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Prime field F_p (characteristic = p) or Q (characteristic = 0).
/// All coefficient arithmetic is exact.
class Field {
 public:
  Field() : p_(0) {}
  explicit Field(uint32_t characteristic);

  uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  uint32_t p_;
};

/// Exact field element: an arbitrary-precision rational in characteristic 0,
/// a residue in [0, p) otherwise.
class Coef {
 public:
  Coef() = default;
  Coef(Field field, long value) : field_(field), v_(value) { normalize(); }
  Coef(Field field, Rational value) : field_(field), v_(std::move(value)) { normalize(); }

  const Field& field() const { return field_; }
  const Rational& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Coef operator-() const;
  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  Coef& operator/=(const Coef& o);

  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(Coef a, const Coef& b) { return a *= b; }
  friend Coef operator/(Coef a, const Coef& b) { return a /= b; }
  friend bool operator==(const Coef& a, const Coef& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

  Coef inverse() const;
  Coef pow(uint64_t e) const;

  std::string str() const;

 private:
  void normalize();
  void check_same_field(const Coef& o) const;

  Field field_;
  Rational v_ = 0;
};

/// Binomial coefficient reduced into the given field. binom(n, k) = 0 for k > n.
Coef binomial(const Field& field, uint64_t n, uint64_t k);

}  // namespace rees

#endif  // REESCALC_FIELD_HPP_
