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

#include "reescalc/field.hpp"

namespace rees {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field::Field(uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_)) {
    throw Error("field characteristic must be 0 or prime, got " + std::to_string(p_));
  }
}

void Coef::normalize() {
  if (field_.is_rational()) return;
  const BigInt p = field_.characteristic();
  if (boost::multiprecision::denominator(v_) != 1) {
    // Clear the denominator by its inverse mod p.
    Coef den(field_, Rational(boost::multiprecision::denominator(v_)));
    Coef num(field_, Rational(boost::multiprecision::numerator(v_)));
    v_ = (num * den.inverse()).v_;
    return;
  }
  BigInt n = boost::multiprecision::numerator(v_) % p;
  if (n < 0) n += p;
  v_ = Rational(n);
}

void Coef::check_same_field(const Coef& o) const {
  if (field_ != o.field_) throw Error("coefficient field mismatch");
}

Coef Coef::operator-() const {
  Coef r(*this);
  r.v_ = -r.v_;
  r.normalize();
  return r;
}

Coef& Coef::operator+=(const Coef& o) {
  check_same_field(o);
  v_ += o.v_;
  normalize();
  return *this;
}

Coef& Coef::operator-=(const Coef& o) {
  check_same_field(o);
  v_ -= o.v_;
  normalize();
  return *this;
}

Coef& Coef::operator*=(const Coef& o) {
  check_same_field(o);
  v_ *= o.v_;
  normalize();
  return *this;
}

Coef& Coef::operator/=(const Coef& o) {
  check_same_field(o);
  if (o.is_zero()) throw Error("division by zero coefficient");
  if (field_.is_rational()) {
    v_ /= o.v_;
  } else {
    *this *= o.inverse();
  }
  return *this;
}

Coef Coef::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  if (field_.is_rational()) return Coef(field_, Rational(1) / v_);
  // Extended Euclid mod p.
  int64_t p = field_.characteristic();
  int64_t a = static_cast<int64_t>(boost::multiprecision::numerator(v_));
  int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return Coef(field_, t);
}

Coef Coef::pow(uint64_t e) const {
  Coef r(field_, 1);
  Coef base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string Coef::str() const { return v_.str(); }

Coef binomial(const Field& field, uint64_t n, uint64_t k) {
  if (k > n) return Coef(field, 0);
  if (k > n - k) k = n - k;
  BigInt num = 1;
  for (uint64_t i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    num /= BigInt(i + 1);
  }
  return Coef(field, Rational(num));
}

}  // namespace rees
