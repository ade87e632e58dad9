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

#ifndef REESCALC_INTEGRAL_HPP_
#define REESCALC_INTEGRAL_HPP_

#include "reescalc/rees_algebra.hpp"

namespace rees {

/// Three-valued answer with a human-readable certificate. Definite answers
/// always carry one.
struct Verdict {
  Truth truth = Truth::undecided;
  std::string certificate;
};

/// Newton-polyhedron membership: is the exponent vector of m in
/// conv(exponents of I) + R_{>=0}^d? Exact rational Fourier-Motzkin
/// feasibility; complete for monomial ideals.
bool monomial_ic_membership(const Poly& m, const Ideal& monomial_ideal);

/// Brute-force closure witness: smallest k <= k_max with f^k in I^k.
/// Complete when I is monomial (termwise membership); for non-monomial I the
/// check is sound-only and absence proves nothing.
std::optional<uint64_t> ic_power_witness(const Poly& f, const Ideal& ideal,
                                         uint64_t k_max);

/// Is B[J W^b] contained in the integral closure of B[I W^c]? Decided via
/// J^c subset-of IC(I^b): fully on monomial I, on principal divisorial forms
/// v^Q * unit, and undecided otherwise.
Verdict almost_rees_containment(const Ideal& j, uint64_t b, const Ideal& i, uint64_t c);

/// Divisorial comparison: [H^N W^n] absorbs [H^Q K W^q] iff Q/q >= N/n.
bool hypersurface_criterion(uint64_t big_n, uint64_t n, uint64_t big_q, uint64_t q);

struct CompareVerdict {
  Truth equivalent = Truth::undecided;
  Truth left_in_right = Truth::undecided;
  Truth right_in_left = Truth::undecided;
  std::string certificate;
};

/// Weak-equivalence test on the decidable fragment: saturate both algebras,
/// normalize to almost-Rees form, and compare integral closures in both
/// directions.
CompareVerdict canonical_compare(const ReesAlg& g, const ReesAlg& k,
                                 const Horizon& h = {});

}  // namespace rees

#endif  // REESCALC_INTEGRAL_HPP_
