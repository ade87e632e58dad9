// Copyright 2026 The reescalc authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "reescalc/diff.hpp"
#include "reescalc/invariants.hpp"

using namespace rees;

namespace {

Trace two_blowup_trace() {
  // The pair (x^2 y^2, 2) blown up twice at the origin, following the y
  // chart both times.
  Scenario s;
  s.chart = Chart::make(Field(0), {"x", "y"});
  s.names = {"P"};
  s.algebras = {parse_algebra(s.chart, "[ x^2*y^2 @ 2 ]")};
  Step blow;
  blow.kind = Step::Kind::blowup;
  blow.center = {"x", "y"};
  blow.chart_var = "y";
  s.steps = {blow, blow};
  return run_scenario(s);
}

Point pt(const Chart& chart, const std::string& text) {
  return parse_point(chart.field, chart.vars, text);
}

}  // namespace

TEST_CASE("word equals ord before any exceptional divisor exists") {
  Trace t = two_blowup_trace();
  const BasicObject& bo = t.records[0].objects[0];
  Point o = Point::origin(bo.chart().field, 2);
  CHECK(word_at(t, 0, 0, o) == Rational(2));
  CHECK(order_at_point(bo.algebra, o) == Rational(2));
}

TEST_CASE("word strips visible exceptional powers") {
  Trace t = two_blowup_trace();
  // After one blow-up the generator is x^2 y^2 again, but y is exceptional:
  // the residual pair is (x^2, 2).
  Point o = Point::origin(Field(0), 2);
  CHECK(word_at(t, 0, 1, o) == Rational(1));
  CHECK(word_at(t, 0, 2, o) == Rational(1));
  CHECK_THROWS_AS(word_at(t, 0, 1, pt(t.records[1].objects[0].chart(), "x=1, y=1")),
                  Error);
}

TEST_CASE("the pair t tracks the drop of the maximal word") {
  Trace t = two_blowup_trace();
  SampleSets samples(t.records.size());
  Point o = Point::origin(Field(0), 2);
  CHECK(t_at(t, 0, 0, o, samples) == std::pair<Rational, size_t>{2, 0});
  CHECK(t_at(t, 0, 1, o, samples) == std::pair<Rational, size_t>{1, 1});
  // The divisor counted at step 1 is no longer visible at step 2.
  CHECK(t_at(t, 0, 2, o, samples) == std::pair<Rational, size_t>{1, 0});
}

TEST_CASE("t is undefined when the maximal word vanishes") {
  Scenario s;
  s.chart = Chart::make(Field(0), {"x", "y"});
  s.names = {"P"};
  s.algebras = {parse_algebra(s.chart, "[ x*y^2 @ 1 ]")};
  Step blow;
  blow.kind = Step::Kind::blowup;
  blow.center = {"x", "y"};
  blow.chart_var = "y";
  s.steps = {blow};
  Trace t = run_scenario(s);
  // Transform x y^3 / y = x y^2; stripping y^2 leaves the pair (x, 1), whose
  // word is 1 at the origin -- but along the x-axis the word is 0.
  SampleSets samples(t.records.size());
  Point o = Point::origin(Field(0), 2);
  CHECK(word_at(t, 0, 1, o, {}) == Rational(1));
  CHECK(max_word(t, 0, 1, samples) == Rational(1));
}

TEST_CASE("max word never increases along these sequences") {
  Trace t = two_blowup_trace();
  SampleSets samples(t.records.size());
  Rational prev = max_word(t, 0, 0, samples);
  for (size_t i = 1; i < t.records.size(); ++i) {
    Rational cur = max_word(t, 0, i, samples);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("word is consistent with recorded exceptional exponents") {
  Trace t = two_blowup_trace();
  // ord = word + sum of exponents of visible divisors through the point.
  Point o = Point::origin(Field(0), 2);
  for (size_t i = 0; i < t.records.size(); ++i) {
    const BasicObject& bo = t.records[i].objects[0];
    Rational ord = order_at_point(bo.algebra, o);
    Rational expected = word_at(t, 0, i, o);
    for (size_t j = 1; j <= i; ++j) {
      const StepRecord& rec = t.records[j];
      if (!rec.new_divisor) continue;
      for (const auto& d : bo.chart().exceptionals) {
        if (d.id == *rec.new_divisor && d.defining &&
            d.defining->eval(o).is_zero()) {
          expected += rec.exc_exponent[0];
        }
      }
    }
    CHECK(ord == expected);
  }
}

TEST_CASE("tau lower bound counts independent linear initial forms") {
  Chart chart = Chart::make(Field(0), {"z", "x"});
  Point o = Point::origin(chart.field, 2);

  ReesAlg g = parse_algebra(chart, "[ z^2 + x^3 @ 2 ]");
  TangentData d = tau_lower_bound(g, o);
  CHECK(d.tau_lower == 1);
  REQUIRE(d.linear_forms.size() == 1);
  CHECK(d.linear_forms[0] == parse_poly(chart.field, chart.vars, "z"));
  CHECK(d.note.empty());

  ReesAlg two = parse_algebra(chart, "[ z @ 1, x @ 1 ]");
  CHECK(tau_lower_bound(two, o).tau_lower == 2);

  Chart c2 = Chart::make(Field(2), {"z", "x"});
  ReesAlg h = parse_algebra(c2, "[ z^2 + x^3 @ 2 ]");
  TangentData d2 = tau_lower_bound(h, Point::origin(c2.field, 2));
  CHECK(d2.tau_lower == 0);
  CHECK_FALSE(d2.note.empty());

  Point off = parse_point(chart.field, chart.vars, "z=1, x=0");
  CHECK_THROWS_AS(tau_lower_bound(g, off), Error);
}

TEST_CASE("tau lower bound never decreases under saturation") {
  for (uint32_t p : {0u, 2u, 3u, 5u}) {
    Chart chart = Chart::make(Field(p), {"z", "x"});
    ReesAlg g = parse_algebra(chart, "[ z^2 + x^3 @ 2, z @ 1 ]");
    Point o = Point::origin(chart.field, 2);
    size_t before = tau_lower_bound(g, o).tau_lower;
    ReesAlg sat = diff_saturate(g);
    CHECK(tau_lower_bound(sat, o).tau_lower >= before);
  }
}
