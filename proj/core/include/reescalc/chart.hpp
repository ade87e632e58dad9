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

#ifndef REESCALC_CHART_HPP_
#define REESCALC_CHART_HPP_

#include <optional>
#include <string>
#include <vector>

#include "reescalc/poly.hpp"

namespace rees {

/// Exceptional divisor bookkeeping. `defining` is the divisor's strict
/// transform in the current chart; nullopt when the divisor is not visible
/// in the chart being followed.
struct DivisorTag {
  int id = 0;
  int born_at_step = 0;
  std::optional<Poly> defining;
};

/// Affine chart: named variables, base field, exceptional-divisor registry,
/// open-restriction exclusions, and an audit trail of applied substitutions.
struct Chart {
  std::vector<std::string> vars;
  Field field;
  std::vector<DivisorTag> exceptionals;
  std::vector<Poly> exclusions;
  std::vector<std::string> lineage;

  static Chart make(const Field& field, std::vector<std::string> vars);

  size_t dim() const { return vars.size(); }
  size_t var_index(const std::string& name) const;

  /// A point is excluded when some open-restriction complement vanishes there.
  bool is_excluded(const Point& p) const;

  /// Visible exceptional variables: divisors whose strict transform is a
  /// single coordinate, as indices into `vars`.
  std::vector<size_t> exceptional_var_indices() const;

  bool same_space(const Chart& o) const { return field == o.field && vars == o.vars; }
};

}  // namespace rees

#endif  // REESCALC_CHART_HPP_
