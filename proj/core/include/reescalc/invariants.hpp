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

#ifndef REESCALC_INVARIANTS_HPP_
#define REESCALC_INVARIANTS_HPP_

#include "reescalc/blowup.hpp"

namespace rees {

/// Sample points per trace record, used when maximizing the satellite
/// functions; record indices without declared samples fall back to the origin
/// and the generic points of visible exceptional strata.
using SampleSets = std::vector<std::vector<Point>>;

/// Pair presentation (J, b) of an algebra: verbatim when all generators share
/// one weight, otherwise through almost-Rees normalization.
std::pair<Ideal, uint64_t> pair_form(const ReesAlg& g, const Horizon& h = {});

/// w-ord at a singular point: factor the maximal power of every visible
/// exceptional variable out of the pair ideal, then order of the residual.
Rational word_at(const Trace& trace, size_t obj, size_t i, const Point& p,
                 const Horizon& h = {});

/// Max of w-ord at record i over declared samples, the origin, and the
/// generic points of visible exceptional strata.
Rational max_word(const Trace& trace, size_t obj, size_t i,
                  const SampleSets& samples, const Horizon& h = {});

/// The inductive pair t = (w-ord, number of old divisors through the point),
/// where "old" means born no later than the record where the current maximal
/// w-ord value was first attained.
std::pair<Rational, size_t> t_at(const Trace& trace, size_t obj, size_t i,
                                 const Point& p, const SampleSets& samples,
                                 const Horizon& h = {});

struct TangentData {
  Point point;
  std::vector<Poly> linear_forms;
  size_t tau_lower = 0;
  /// Caveat on positive-characteristic inputs, empty when the bound is exact.
  std::string note;
};

/// Lower bound for the tau invariant at a singular point: the rank of the
/// span of initial forms of weight-1 saturated generators of order exactly 1.
/// Exact in characteristic zero; a lower bound in characteristic p.
TangentData tau_lower_bound(const ReesAlg& g, const Point& p);

}  // namespace rees

#endif  // REESCALC_INVARIANTS_HPP_
