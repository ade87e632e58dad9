// Copyright 2026 The reescalc authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "reescalc/builtins.hpp"
#include "reescalc/diff.hpp"
#include "reescalc/integral.hpp"
#include "reescalc/scenario.hpp"

using namespace rees;

namespace {

struct Criterion {
  std::string description;
  std::function<void()> run;  // throws on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

// ---------------------------------------------------------------------------
// 1. The characteristic-2 separating sequence.
void criterion_separating_sequence() {
  const BuiltinScenario& b = find_builtin("char2-counterexample");
  Report r = evaluate(load_scenario(b.json_text));
  require(r.all_passed(), "builtin assertions failed");
  const StepRecord& last = r.trace.records.back();
  const BasicObject& g6 = last.objects[0];
  const BasicObject& h6 = last.objects[1];
  // Sweep the nonzero values of the middle coordinates (only 1 in F_2).
  for (int xv = 1; xv < 2; ++xv) {
    for (int tv = 1; tv < 2; ++tv) {
      std::ostringstream os;
      os << "z=0, x=" << xv << ", t=" << tv << ", s=0";
      Point p = parse_point(g6.chart().field, g6.chart().vars, os.str());
      require(sing_membership(g6.algebra, p), "expected singular for G");
      require(!sing_membership(h6.algebra, p), "expected nonsingular for H");
    }
  }
}

// ---------------------------------------------------------------------------
// 2. Exact saturated generator sets in characteristic zero.
void check_saturation(const std::string& input, const std::string& expect) {
  Chart chart = Chart::make(Field(0), {"z", "x"});
  ReesAlg sat = diff_saturate(parse_algebra(chart, input));
  auto want = canonical_minimalize(chart, parse_algebra(chart, expect).gens);
  require(sat.gens.size() == want.size(), "generator count mismatch");
  for (size_t i = 0; i < want.size(); ++i) {
    require(sat.gens[i].weight == want[i].weight &&
                sat.gens[i].poly == want[i].poly,
            "generator mismatch at " + std::to_string(i));
  }
}

void criterion_saturation() {
  check_saturation("[ z^2 + x^3 @ 2 ]", "[ z @ 1, x^2 @ 1, x^3 @ 2 ]");
  check_saturation("[ z^2 + x^5 @ 2 ]", "[ z @ 1, x^4 @ 1, x^5 @ 2 ]");
}

// ---------------------------------------------------------------------------
// 3. Singular loci commute with blow-ups through saturation and joins.
void criterion_transform_sing_equality() {
  for (const std::string& chart_var : {std::string("z"), std::string("x")}) {
    // Exact grid over F_5.
    {
      Chart chart = Chart::make(Field(5), {"z", "x"});
      ReesAlg g = parse_algebra(chart, "[ z^2 + x^3 @ 2 ]");
      ReesAlg sat = diff_saturate(g);
      ReesAlg k = join(g, ReesAlg{chart, {sat.gens[0]}, false});
      BasicObject bg{g, {}}, bk{k, {}}, br{sat, {}};
      BasicObject g1 = blow_up(bg, {"z", "x"}, chart_var);
      BasicObject k1 = blow_up(bk, {"z", "x"}, chart_var);
      BasicObject r1 = blow_up(br, {"z", "x"}, chart_var);
      for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
          Point p;
          p.coords = {Coef(chart.field, a), Coef(chart.field, b)};
          bool sg = sing_membership(g1.algebra, p);
          require(sg == sing_membership(k1.algebra, p), "join transform differs");
          require(sg == sing_membership(r1.algebra, p),
                  "saturated transform differs");
        }
      }
    }
    // Random rational points.
    {
      Chart chart = Chart::make(Field(0), {"z", "x"});
      ReesAlg g = parse_algebra(chart, "[ z^2 + x^3 @ 2 ]");
      ReesAlg sat = diff_saturate(g);
      ReesAlg k = join(g, ReesAlg{chart, {sat.gens[0]}, false});
      BasicObject bg{g, {}}, bk{k, {}}, br{sat, {}};
      BasicObject g1 = blow_up(bg, {"z", "x"}, chart_var);
      BasicObject k1 = blow_up(bk, {"z", "x"}, chart_var);
      BasicObject r1 = blow_up(br, {"z", "x"}, chart_var);
      std::mt19937 rng(99);
      std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
      for (int i = 0; i < 50; ++i) {
        Point p;
        p.coords = {Coef(chart.field, Rational(num(rng), den(rng))),
                    Coef(chart.field, Rational(num(rng), den(rng)))};
        bool sg = sing_membership(g1.algebra, p);
        require(sg == sing_membership(k1.algebra, p), "join transform differs");
        require(sg == sing_membership(r1.algebra, p),
                "saturated transform differs");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Exceptional multiplicities pay for exactly six divisorial blow-ups.
void criterion_divisorial_budget() {
  const BuiltinScenario& b = find_builtin("hironaka-trick");
  Report r = evaluate(load_scenario(b.json_text));
  require(r.all_passed(), "builtin assertions failed");
  // Re-run the accumulation phase and count the permissible divisorial
  // blow-ups programmatically.
  ScenarioDoc doc = load_scenario(b.json_text);
  doc.scenario.steps.resize(7);  // product + six point blow-ups
  Trace t = run_scenario(doc.scenario);
  BasicObject bo = t.records.back().objects[0];
  int count = 0;
  while (check_permissible(bo, {"y"})) {
    bo = blow_up(bo, {"y"}, "y");
    ++count;
    require(count < 100, "runaway divisorial sequence");
  }
  require(count == 6, "expected exactly 6 divisorial blow-ups, got " +
                          std::to_string(count));
}

// ---------------------------------------------------------------------------
// 5. The two integral-closure deciders agree exhaustively.
void criterion_closure_oracles() {
  Field q(0);
  const std::vector<std::string> vars = {"x", "y"};
  // All monomials of degree 1..4 as candidate generators.
  std::vector<Exponents> pool;
  for (uint32_t d = 1; d <= 4; ++d) {
    for (uint32_t i = 0; i <= d; ++i) pool.push_back({i, d - i});
  }
  std::vector<Exponents> probes;
  for (uint32_t d = 0; d <= 8; ++d) {
    for (uint32_t i = 0; i <= d; ++i) probes.push_back({i, d - i});
  }
  auto mono = [&](const Exponents& e) {
    return Poly::monomial(q, vars, e, Coef(q, 1));
  };
  const uint64_t kMax = 12;
  long checked = 0;
  auto test_ideal = [&](const std::vector<size_t>& picks) {
    Ideal ideal;
    for (size_t i : picks) ideal.gens.push_back(mono(pool[i]));
    ideal = ideal.minimalized();
    std::vector<Ideal> powers = {ideal};
    for (uint64_t k = 2; k <= kMax; ++k) {
      powers.push_back(powers.back().product(ideal));
    }
    for (const auto& e : probes) {
      Poly m = mono(e);
      bool newton = monomial_ic_membership(m, ideal);
      bool witness = false;
      Poly mk = m;
      for (uint64_t k = 1; k <= kMax && !witness; ++k) {
        if (k > 1) mk *= m;
        witness = poly_in_monomial_ideal(mk, powers[k - 1]);
      }
      require(newton == witness, "oracle disagreement on " + m.str() +
                                     " versus " + ideal.str());
      ++checked;
    }
  };
  for (size_t a = 0; a < pool.size(); ++a) {
    test_ideal({a});
    for (size_t b = a + 1; b < pool.size(); ++b) {
      test_ideal({a, b});
      for (size_t c = b + 1; c < pool.size(); ++c) test_ideal({a, b, c});
    }
  }
  require(checked > 20000, "exhaustive sweep was unexpectedly small");
}

// ---------------------------------------------------------------------------
// 6. Almost-Rees normalization and Veronese invariance.
void criterion_normalization() {
  Chart chart = Chart::make(Field(0), {"x", "y"});
  ReesAlg g = parse_algebra(chart, "[ x @ 2, y @ 3 ]");
  Horizon h;  // k_check = 4
  AlmostRees ar = almost_rees_normalize(g, h);
  require(ar.n == 6, "expected N = 6");
  Ideal expect;
  expect.gens = {parse_poly(chart.field, chart.vars, "x^3"),
                 parse_poly(chart.field, chart.vars, "y^2")};
  require(ideal_equal(ar.slice, expect) == Truth::yes, "slice mismatch");

  // Sing and ord agree between an algebra and its Veronese at sampled points.
  auto check_invariance = [&](const ReesAlg& alg, uint32_t m) {
    VeroneseResult v = veronese(alg, m);
    require(v.verified, "veronese horizon exhausted");
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int i = 0; i < 20; ++i) {
      Point p;
      p.coords = {Coef(chart.field, num(rng)), Coef(chart.field, num(rng))};
      bool sing = sing_membership(alg, p);
      require(sing == sing_membership(v.alg, p), "sing not veronese-invariant");
      if (sing) {
        require(order_at_point(alg, p) == order_at_point(v.alg, p),
                "ord not veronese-invariant");
      }
    }
  };
  check_invariance(g, 6);
  check_invariance(parse_algebra(chart, "[ x^3 @ 2, y^2 @ 1 ]"), 2);
}

// ---------------------------------------------------------------------------
// 7. Restriction to a coordinate hypersurface matches the join construction.
void criterion_restriction() {
  for (uint32_t p : {0u, 7u}) {
    Chart chart = Chart::make(Field(p), {"z", "x"});
    ReesAlg g = parse_algebra(chart, "[ z^2 + x^3 @ 2 ]");
    ReesAlg joined = join(g, parse_algebra(chart, "[ z @ 1 ]"));
    ReesAlg restricted = restrict_to_hypersurface(diff_saturate(g), "z");
    auto check_point = [&](const Coef& c) {
      Point on_x;  // point (z=0, x=c) of the hypersurface
      on_x.coords = {Coef(chart.field, 0), c};
      Point inner;
      inner.coords = {c};
      require(sing_membership(joined, on_x) ==
                  sing_membership(restricted, inner),
              "restricted singular locus differs");
    };
    if (p == 0) {
      std::mt19937 rng(13);
      std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
      for (int i = 0; i < 50; ++i) {
        check_point(Coef(chart.field, Rational(num(rng), den(rng))));
      }
    } else {
      for (uint32_t c = 0; c < p; ++c) {
        check_point(Coef(chart.field, static_cast<long>(c)));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 8. Satellite consistency: word = ord - sum of visible exceptional
//    exponents, and max t never increases.
void check_word_identity(const Trace& trace) {
  for (size_t obj = 0; obj < trace.names.size(); ++obj) {
    for (size_t i = 0; i < trace.records.size(); ++i) {
      const BasicObject& bo = trace.records[i].objects[obj];
      Point o = Point::origin(bo.chart().field, bo.chart().dim());
      if (bo.chart().is_excluded(o)) continue;
      if (!sing_membership(bo.algebra, o)) continue;
      Rational expected = order_at_point(bo.algebra, o);
      for (size_t j = 1; j <= i; ++j) {
        const StepRecord& rec = trace.records[j];
        if (!rec.new_divisor) continue;
        for (const auto& d : bo.chart().exceptionals) {
          if (d.id == *rec.new_divisor && d.defining &&
              d.defining->eval(o).is_zero()) {
            expected -= rec.exc_exponent[obj];
          }
        }
      }
      Rational w = word_at(trace, obj, i, o);
      require(w == expected, "word identity failed at record " +
                                 std::to_string(i) + " for " + trace.names[obj]);
    }
  }
}

void criterion_satellites() {
  check_word_identity(
      evaluate(load_scenario(find_builtin("char2-counterexample").json_text))
          .trace);
  check_word_identity(
      evaluate(load_scenario(find_builtin("hironaka-trick").json_text)).trace);

  // max t is non-increasing along the two-blow-up monomial sequence.
  Scenario s;
  s.chart = Chart::make(Field(0), {"x", "y"});
  s.names = {"P"};
  s.algebras = {parse_algebra(s.chart, "[ x^2*y^2 @ 2 ]")};
  Step blow;
  blow.kind = Step::Kind::blowup;
  blow.center = {"x", "y"};
  blow.chart_var = "y";
  s.steps = {blow, blow};
  Trace t = run_scenario(s);
  SampleSets samples(t.records.size());
  Point o = Point::origin(s.chart.field, 2);
  std::pair<Rational, size_t> prev = t_at(t, 0, 0, o, samples);
  for (size_t i = 1; i < t.records.size(); ++i) {
    auto cur = t_at(t, 0, i, o, samples);
    require(cur <= prev, "max t increased at record " + std::to_string(i));
    prev = cur;
  }
}

// ---------------------------------------------------------------------------
// 9. Randomized property suites (mirrors the doctest suites at full volume).
void criterion_property_suites() {
  for (uint32_t p : {0u, 2u, 3u, 5u}) {
    Field field(p);
    const std::vector<std::string> vars = {"z", "x"};
    std::mt19937 rng(1234 + p);
    auto rand_coef = [&]() {
      if (p == 0) {
        return Coef(field, std::uniform_int_distribution<int>(-4, 4)(rng));
      }
      return Coef(field,
                  std::uniform_int_distribution<int>(0, static_cast<int>(p) - 1)(rng));
    };
    auto rand_poly = [&]() {
      Poly f = Poly::zero(field, vars);
      int terms = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int t = 0; t < terms; ++t) {
        Exponents e = {static_cast<uint32_t>(
                           std::uniform_int_distribution<int>(0, 3)(rng)),
                       static_cast<uint32_t>(
                           std::uniform_int_distribution<int>(0, 3)(rng))};
        f.add_term(e, rand_coef());
      }
      return f;
    };
    auto rand_alpha = [&]() {
      return Exponents{
          static_cast<uint32_t>(std::uniform_int_distribution<int>(0, 2)(rng)),
          static_cast<uint32_t>(std::uniform_int_distribution<int>(0, 2)(rng))};
    };
    for (int c = 0; c < 200; ++c) {
      // Composition of divided powers.
      Poly f = rand_poly();
      Exponents a = rand_alpha(), b = rand_alpha();
      Exponents ab = {a[0] + b[0], a[1] + b[1]};
      Coef scale = binomial(field, ab[0], a[0]) * binomial(field, ab[1], a[1]);
      require(f.hasse_derivative(a).hasse_derivative(b) ==
                  f.hasse_derivative(ab).scaled(scale),
              "divided-power composition failed");
      // Additivity of the order under products.
      Poly g = rand_poly(), h = rand_poly();
      if (!g.is_zero() && !h.is_zero()) {
        Point q;
        q.coords = {rand_coef(), rand_coef()};
        require(*(g * h).order_at(q) == *g.order_at(q) + *h.order_at(q),
                "order additivity failed");
      }
      // Saturation: idempotent, and preserves Sing and ord on a sample point.
      if (c % 10 == 0 && !f.is_zero()) {
        ReesAlg alg;
        alg.chart = Chart::make(field, vars);
        alg.gens.push_back(
            {f, static_cast<uint32_t>(std::uniform_int_distribution<int>(1, 3)(rng))});
        ReesAlg s1 = diff_saturate(alg);
        ReesAlg s2 = diff_saturate(s1);
        require(s1.gens.size() == s2.gens.size(), "saturation not idempotent");
        for (size_t i = 0; i < s1.gens.size(); ++i) {
          require(s1.gens[i].poly == s2.gens[i].poly &&
                      s1.gens[i].weight == s2.gens[i].weight,
                  "saturation not idempotent");
        }
        Point q;
        q.coords = {rand_coef(), rand_coef()};
        bool in_alg = sing_membership(alg, q);
        require(in_alg == sing_membership(s1, q),
                "saturation changed the singular locus");
        if (in_alg) {
          require(order_at_point(alg, q) == order_at_point(s1, q),
                  "saturation changed the order");
        }
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"characteristic-2 separating sequence replays and separates",
       criterion_separating_sequence},
      {"differential saturation produces the exact generator sets",
       criterion_saturation},
      {"singular loci of transforms agree across join and saturation",
       criterion_transform_sing_equality},
      {"exceptional multiplicities admit exactly six divisorial blow-ups",
       criterion_divisorial_budget},
      {"newton-region and power-witness closure deciders agree exhaustively",
       criterion_closure_oracles},
      {"almost-Rees normalization and Veronese invariance",
       criterion_normalization},
      {"hypersurface restriction matches the join construction",
       criterion_restriction},
      {"satellite identities: word decomposition and monotone max t",
       criterion_satellites},
      {"randomized property suites over four characteristics",
       criterion_property_suites},
  };
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string status = "pass";
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      status = std::string("FAIL (") + e.what() + ")";
      all = false;
    }
    std::cout << "criterion " << (i + 1) << ": " << status << " - "
              << criteria[i].description << "\n";
  }
  std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return all ? 0 : 1;
}
