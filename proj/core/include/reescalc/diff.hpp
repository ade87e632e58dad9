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

#ifndef REESCALC_DIFF_HPP_
#define REESCALC_DIFF_HPP_

#include "reescalc/rees_algebra.hpp"

namespace rees {

/// Canonical form of a weighted generator list: monic generators, sorted by
/// (weight, grlex), each autoreduced against exact-weight power products of
/// the generators kept before it. Zero remainders are dropped.
std::vector<WeightedGen> canonical_minimalize(const Chart& chart,
                                              std::vector<WeightedGen> gens);

/// Differential saturation by Hasse derivatives: closes the generator set
/// under { Delta^alpha(f) W^{n - |alpha|} : 0 <= |alpha| < n }, runs to a
/// fixed point, and returns the canonical minimalized result with the
/// diff_closed flag set.
ReesAlg diff_saturate(const ReesAlg& g);

/// Restriction of a differentially saturated algebra to the coordinate
/// hypersurface {v = 0}. The result lives on the chart without v and is
/// itself differentially saturated.
ReesAlg restrict_to_hypersurface(const ReesAlg& g, const std::string& var);

}  // namespace rees

#endif  // REESCALC_DIFF_HPP_
