// Copyright 2026 The reescalc authors.
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "reescalc/rees_algebra.hpp"

using namespace rees;

namespace {

ReesAlg make_alg(uint32_t p, const std::vector<std::string>& vars,
                 const std::string& text) {
  return parse_algebra(Chart::make(Field(p), vars), text);
}

}  // namespace

TEST_CASE("algebra text form round-trips") {
  ReesAlg g = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2, z @ 1 ]");
  REQUIRE(g.gens.size() == 2);
  CHECK(g.gens[0].weight == 2);
  CHECK(g.gens[1].weight == 1);
  ReesAlg again = parse_algebra(g.chart, g.str());
  REQUIRE(again.gens.size() == 2);
  CHECK(again.gens[0].poly == g.gens[0].poly);
  CHECK_THROWS_AS(make_alg(0, {"z"}, "[ 0 @ 1 ]"), Error);
  CHECK_THROWS_AS(make_alg(0, {"z"}, "z @ 1"), Error);
}

TEST_CASE("degree slices enumerate weighted power products") {
  ReesAlg g = make_alg(0, {"x", "y"}, "[ x @ 2, y @ 3 ]");
  Ideal i6 = degree_slice(g, 6);
  REQUIRE(i6.gens.size() == 2);
  // x^3 and y^2 are the only products of total weight 6.
  Ideal expect;
  expect.gens = {parse_poly(g.chart.field, g.chart.vars, "x^3"),
                 parse_poly(g.chart.field, g.chart.vars, "y^2")};
  CHECK(ideal_equal(i6, expect) == Truth::yes);
  CHECK(degree_slice(g, 1).is_zero());
  CHECK_THROWS_AS(degree_slice(g, 0), Error);
}

TEST_CASE("veronese keeps exactly the weight-multiples") {
  ReesAlg g = make_alg(0, {"x", "y"}, "[ x @ 2, y @ 3 ]");
  VeroneseResult v = veronese(g, 6);
  CHECK(v.verified);
  for (const auto& wg : v.alg.gens) CHECK(wg.weight % 6 == 0);
  Ideal slice = degree_slice(v.alg, 6);
  Ideal expect;
  expect.gens = {parse_poly(g.chart.field, g.chart.vars, "x^3"),
                 parse_poly(g.chart.field, g.chart.vars, "y^2")};
  CHECK(ideal_equal(slice, expect) == Truth::yes);
}

TEST_CASE("almost-Rees normalization finds the stable weight") {
  ReesAlg g = make_alg(0, {"x", "y"}, "[ x @ 2, y @ 3 ]");
  AlmostRees ar = almost_rees_normalize(g);
  CHECK(ar.n == 6);
  Ideal expect;
  expect.gens = {parse_poly(g.chart.field, g.chart.vars, "x^3"),
                 parse_poly(g.chart.field, g.chart.vars, "y^2")};
  CHECK(ideal_equal(ar.slice, expect) == Truth::yes);

  // A single generator is already an almost-Rees ring.
  ReesAlg h = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2 ]");
  AlmostRees ar2 = almost_rees_normalize(h);
  CHECK(ar2.n == 2);
}

TEST_CASE("singular membership and order") {
  ReesAlg g = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2 ]");
  Point o = Point::origin(g.chart.field, 2);
  CHECK(sing_membership(g, o));
  CHECK(order_at_point(g, o) == Rational(1));
  Point p = parse_point(g.chart.field, g.chart.vars, "z=1, x=0");
  CHECK_FALSE(sing_membership(g, p));
  CHECK_THROWS_AS(order_at_point(g, p), Error);

  ReesAlg h = make_alg(0, {"z", "x"}, "[ x^3 @ 2 ]");
  CHECK(order_at_point(h, o) == Rational(3, 2));
}

TEST_CASE("membership at an excluded point is a contract violation") {
  ReesAlg g = make_alg(0, {"z", "x"}, "[ x^3 @ 2 ]");
  g.chart.exclusions.push_back(parse_poly(g.chart.field, g.chart.vars, "x - 1"));
  Point p = parse_point(g.chart.field, g.chart.vars, "x=1");
  CHECK_THROWS_AS(sing_membership(g, p), Error);
  CHECK(sing_membership(g, Point::origin(g.chart.field, 2)));
}

TEST_CASE("join concatenates without duplicates") {
  ReesAlg g = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2 ]");
  ReesAlg k = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2, z @ 1 ]");
  ReesAlg j = join(g, k);
  CHECK(j.gens.size() == 2);
  ReesAlg other = make_alg(0, {"x", "z"}, "[ z @ 1 ]");
  CHECK_THROWS_AS(join(g, other), Error);
}

TEST_CASE("order along coordinate centers matches the generic point") {
  ReesAlg g = make_alg(0, {"z", "x", "t"}, "[ z^2 + t^2*x^3 @ 2 ]");
  // Along the t-axis {z=0, x=0}: both terms vanish to order >= 2.
  CHECK(order_along_center(g, {0, 1}) == Rational(1));
  // Along {z=0} alone the x^3 term survives with z-degree 0.
  CHECK(order_along_center(g, {0}) == Rational(0));
}

TEST_CASE("zero set membership") {
  ReesAlg g = make_alg(0, {"z", "x"}, "[ z^2 + x^3 @ 2, z @ 1 ]");
  CHECK(zero_set_membership(g, Point::origin(g.chart.field, 2)));
  CHECK_FALSE(zero_set_membership(
      g, parse_point(g.chart.field, g.chart.vars, "z=1, x=0")));
}
