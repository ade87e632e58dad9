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

#ifndef REESCALC_SCENARIO_HPP_
#define REESCALC_SCENARIO_HPP_

#include <map>

#include "reescalc/blowup.hpp"
#include "reescalc/invariants.hpp"

namespace rees {

/// One expectation evaluated against a trace. `kind` is one of:
///   sing        - point membership in the singular locus (expect_bool)
///   order       - Hironaka order at a point (expect_value, a rational)
///   word        - w-ord at a point (expect_value)
///   t           - the pair (expect_value, expect_count)
///   permissible - blow-up permissibility of `center` (expect_bool)
///   exponent    - recorded exceptional exponent of the step (expect_value)
///   normalize   - almost-Rees weight N (expect_value) and optional slice
///                 generators (expect_gens)
struct Assertion {
  std::string kind;
  size_t step = 0;
  std::string algebra;
  std::string point;
  std::vector<std::string> center;
  bool expect_bool = true;
  std::string expect_value;
  size_t expect_count = 0;
  std::vector<std::string> expect_gens;
};

/// A scenario document: the executable sequence plus its expectations and
/// declared sample points (per record index, as point texts).
struct ScenarioDoc {
  std::string name;
  std::string description;
  Scenario scenario;
  std::vector<Assertion> assertions;
  std::map<size_t, std::vector<std::string>> samples;
};

/// Parse and validate a scenario document (JSON text with fields `char`,
/// `vars`, `algebras`, `steps`, `assertions`, and optional `name`,
/// `description`, `exclusions`, `samples`).
ScenarioDoc load_scenario(const std::string& json_text);
ScenarioDoc load_scenario_file(const std::string& path);

struct AssertionResult {
  Assertion assertion;
  bool passed = false;
  std::string detail;
};

struct Report {
  ScenarioDoc doc;
  Trace trace;
  std::vector<AssertionResult> results;

  bool all_passed() const;
  /// Deterministic plain-text report; with_trace adds every intermediate
  /// algebra.
  std::string text(bool with_trace) const;
  /// The same data as a JSON document.
  std::string json(bool with_trace) const;
};

/// Execute the scenario and evaluate every assertion.
Report evaluate(const ScenarioDoc& doc, const Horizon& h = {});

/// Parsed sample sets aligned with the trace records of the document.
SampleSets sample_sets(const ScenarioDoc& doc, const Trace& trace);

}  // namespace rees

#endif  // REESCALC_SCENARIO_HPP_
