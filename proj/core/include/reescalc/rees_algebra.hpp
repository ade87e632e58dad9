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

#ifndef REESCALC_REES_ALGEBRA_HPP_
#define REESCALC_REES_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "reescalc/chart.hpp"
#include "reescalc/ideal.hpp"

namespace rees {

/// Weighted generator f W^n, n >= 1, f != 0.
struct WeightedGen {
  Poly poly;
  uint32_t weight = 1;
};

/// Finitely generated graded subalgebra of B[W], represented by its weighted
/// generators on a chart. The graded slices are derived, never stored.
struct ReesAlg {
  Chart chart;
  std::vector<WeightedGen> gens;
  /// Evidence that diff_saturate ran to a fixed point on this value.
  bool diff_closed = false;

  bool empty() const { return gens.empty(); }

  /// Text form `[ <poly> @ <weight>, ... ]`; round-trips with parse_algebra.
  std::string str() const;
};

ReesAlg parse_algebra(const Chart& chart, const std::string& text);

/// Configurable search horizons (CLI flags --horizon / --check-depth).
struct Horizon {
  uint32_t a_max = 8;    // Veronese / almost-Rees search bound
  uint32_t k_check = 4;  // multiplicativity verification depth
};

/// Generators of the slice I_n: all power products of generators with total
/// weight exactly n.
Ideal degree_slice(const ReesAlg& g, uint64_t n);

struct VeroneseResult {
  ReesAlg alg;
  /// False when the enumeration horizon was exhausted before the generator
  /// set stabilized.
  bool verified = true;
};

/// Veronese action: the subalgebra of parts of weight divisible by M.
VeroneseResult veronese(const ReesAlg& g, uint32_t m, const Horizon& h = {});

struct AlmostRees {
  uint64_t n = 0;
  Ideal slice;
};

/// Smallest verified N = A * lcm(weights) such that the N-th Veronese equals
/// the almost-Rees ring B[I_N W^N] (multiplicativity checked up to k_check).
AlmostRees almost_rees_normalize(const ReesAlg& g, const Horizon& h = {});

/// Smallest Rees algebra containing both: generator concatenation.
ReesAlg join(const ReesAlg& g, const ReesAlg& k);

/// Point membership in Sing: every generator has order >= its weight.
bool sing_membership(const ReesAlg& g, const Point& p);

/// Witness set whose zero locus is Sing G: every generator polynomial of the
/// differential saturation (each lies in the degree-1 slice).
Ideal sing_ideal(const ReesAlg& g);

/// Hironaka order at a singular point: min over generators of nu_p(f)/n.
Rational order_at_point(const ReesAlg& g, const Point& p);

/// Order of the algebra along a coordinate center (generic point of
/// V(center)): min over generators of (order of f along the center)/n.
Rational order_along_center(const ReesAlg& g, const std::vector<size_t>& center);

/// Membership in the zero set V(G): every generator vanishes at p.
bool zero_set_membership(const ReesAlg& g, const Point& p);

}  // namespace rees

#endif  // REESCALC_REES_ALGEBRA_HPP_
