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

#ifndef REESCALC_BLOWUP_HPP_
#define REESCALC_BLOWUP_HPP_

#include "reescalc/rees_algebra.hpp"

namespace rees {

/// A weighted algebra together with the ambient chart's divisor bookkeeping.
struct BasicObject {
  ReesAlg algebra;
  /// Ids of the divisors currently carried (mirrors chart.exceptionals).
  std::vector<int> e_list;

  const Chart& chart() const { return algebra.chart; }
};

/// One step of a local sequence. Polynomial payloads are kept as text and
/// parsed against the chart current when the step is applied, since products
/// and blow-ups change the variable list.
struct Step {
  enum class Kind { blowup, product, restrict_open, change };
  Kind kind = Kind::blowup;

  std::vector<std::string> center;  // blowup: coordinate center
  std::string chart_var;            // blowup: chart followed

  std::vector<std::string> new_vars;  // product: names of appended lines

  std::string h;  // restrict_open: complement polynomial text

  // change: substitutions var -> polynomial text
  std::vector<std::pair<std::string, std::string>> subs;

  std::string str() const;
};

/// Is blowing up the coordinate center permissible for this object: every
/// term of each generator has total center-variable degree >= the generator's
/// weight, and the center has normal crossings with the visible divisors.
bool check_permissible(const BasicObject& bo,
                       const std::vector<std::string>& center);

/// Weighted transform along the blow-up at the coordinate center, followed in
/// the given chart: substitutes v -> chart_var * v for the other center
/// variables, divides each generator exactly by chart_var^weight, registers a
/// fresh exceptional divisor defined by chart_var, and maps prior divisors by
/// strict transform.
BasicObject blow_up(const BasicObject& bo, const std::vector<std::string>& center,
                    const std::string& chart_var, int step_index = -1);

/// Product with affine lines: appends fresh variables, pulls everything back
/// verbatim.
BasicObject product_with_lines(const BasicObject& bo,
                               const std::vector<std::string>& new_vars);

/// Open restriction to {h != 0}: records the exclusion and divides factors of
/// h (units on the open set) out of the generators.
BasicObject restrict_open(const BasicObject& bo, const Poly& h);

/// Invertible affine substitution v -> c*v + g with g free of all substituted
/// variables. Rewrites generators, exclusions, and divisor equations.
BasicObject change_coordinates(
    const BasicObject& bo, const std::vector<std::pair<std::string, Poly>>& subs);

/// A local sequence: named algebras sharing one chart trajectory plus steps.
struct Scenario {
  Chart chart;
  std::vector<std::string> names;
  std::vector<ReesAlg> algebras;
  std::vector<Step> steps;
};

/// State after one step, for every carried algebra, plus blow-up metadata.
struct StepRecord {
  std::string description;
  std::vector<BasicObject> objects;
  std::optional<int> new_divisor;   // blow-up steps only
  std::vector<Rational> ord_center;     // per algebra, blow-up steps only
  std::vector<Rational> exc_exponent;   // ord_center - 1
};

struct Trace {
  std::vector<std::string> names;
  /// records[0] is the initial state; length = steps + 1.
  std::vector<StepRecord> records;
};

/// Executes the sequence. Every blow-up must be permissible for every carried
/// algebra; violations raise an error naming the algebra and step index.
Trace run_scenario(const Scenario& s);

}  // namespace rees

#endif  // REESCALC_BLOWUP_HPP_
