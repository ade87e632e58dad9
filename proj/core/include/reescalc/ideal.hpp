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

#ifndef REESCALC_IDEAL_HPP_
#define REESCALC_IDEAL_HPP_

#include <string>
#include <vector>

#include "reescalc/poly.hpp"

namespace rees {

/// Three-valued answer for questions that are only decidable on fragments
/// (monomial ideals, scalar spans). A plain bool is used where the answer is
/// always decidable.
enum class Truth { yes, no, undecided };

std::string to_string(Truth t);

/// Finitely generated ideal, represented by a list of nonzero generators.
/// Equality and membership are decided exactly only on the monomial fragment.
struct Ideal {
  std::vector<Poly> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_monomial() const;

  /// Drop zero generators, scalar duplicates, and (for monomials) generators
  /// divisible by another generator. Deterministic output order.
  Ideal minimalized() const;

  Ideal product(const Ideal& other) const;
  Ideal power(uint64_t k) const;

  /// Membership f in the ideal. Complete for monomial ideals (termwise
  /// divisibility); otherwise sound-only via reduction and constant spans.
  Truth contains(const Poly& f) const;

  std::string str() const;
};

/// Exact membership of a polynomial in a monomial ideal: every term must be
/// divisible by some generator.
bool poly_in_monomial_ideal(const Poly& f, const Ideal& monomial_ideal);

/// Is f a constant-coefficient linear combination of the given polynomials?
/// Exact Gaussian elimination over the coefficient field.
bool in_constant_span(const Poly& f, const std::vector<Poly>& gens);

/// Ideal equality up to the decidable fragment.
Truth ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace rees

#endif  // REESCALC_IDEAL_HPP_
