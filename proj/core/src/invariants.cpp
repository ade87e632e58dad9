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

#include "reescalc/invariants.hpp"

#include <algorithm>

#include "reescalc/diff.hpp"

namespace rees {

namespace {

const BasicObject& object_at(const Trace& trace, size_t obj, size_t i) {
  if (i >= trace.records.size()) throw Error("step index out of range");
  if (obj >= trace.records[i].objects.size()) {
    throw Error("algebra index out of range");
  }
  return trace.records[i].objects[obj];
}

// Factor the maximal power of every visible exceptional variable out of the
// pair ideal.
Ideal strip_exceptional(const Chart& chart, const Ideal& j) {
  Ideal out = j;
  for (size_t v : chart.exceptional_var_indices()) {
    uint64_t common = UINT64_MAX;
    for (const auto& g : out.gens) common = std::min(common, g.divisor_order(v));
    if (common == 0 || common == UINT64_MAX) continue;
    for (auto& g : out.gens) g = g.divide_by_var_power(v, common);
  }
  return out;
}

Rational residual_order_at(const Chart& chart, const Ideal& jt, uint64_t b,
                           const Point& p) {
  std::optional<uint64_t> best;
  for (const auto& g : jt.gens) {
    auto nu = g.order_at(p);
    if (nu && (!best || *nu < *best)) best = *nu;
  }
  if (!best) throw Error("w-ord: residual ideal is zero");
  (void)chart;
  return Rational(*best, b);
}

Rational residual_order_along(const Ideal& jt, uint64_t b,
                              const std::vector<size_t>& center) {
  std::optional<uint64_t> best;
  for (const auto& g : jt.gens) {
    auto nu = g.order_along(center);
    if (nu && (!best || *nu < *best)) best = *nu;
  }
  if (!best) throw Error("w-ord: residual ideal is zero");
  return Rational(*best, b);
}

}  // namespace

std::pair<Ideal, uint64_t> pair_form(const ReesAlg& g, const Horizon& h) {
  if (g.empty()) throw Error("pair_form: empty algebra");
  bool uniform = std::all_of(g.gens.begin(), g.gens.end(), [&](const WeightedGen& w) {
    return w.weight == g.gens[0].weight;
  });
  if (uniform) {
    Ideal j;
    for (const auto& w : g.gens) j.gens.push_back(w.poly);
    return {j.minimalized(), g.gens[0].weight};
  }
  AlmostRees ar = almost_rees_normalize(g, h);
  return {ar.slice, ar.n};
}

Rational word_at(const Trace& trace, size_t obj, size_t i, const Point& p,
                 const Horizon& h) {
  const BasicObject& bo = object_at(trace, obj, i);
  if (!sing_membership(bo.algebra, p)) {
    throw Error("w-ord: point is not in the singular locus");
  }
  auto [j, b] = pair_form(bo.algebra, h);
  Ideal jt = strip_exceptional(bo.chart(), j);
  return residual_order_at(bo.chart(), jt, b, p);
}

Rational max_word(const Trace& trace, size_t obj, size_t i,
                  const SampleSets& samples, const Horizon& h) {
  const BasicObject& bo = object_at(trace, obj, i);
  const Chart& chart = bo.chart();
  auto [j, b] = pair_form(bo.algebra, h);
  Ideal jt = strip_exceptional(chart, j);

  std::optional<Rational> best;
  auto consider = [&](const Rational& w) {
    if (!best || w > *best) best = w;
  };
  std::vector<Point> pts;
  if (i < samples.size()) pts = samples[i];
  pts.push_back(Point::origin(chart.field, chart.dim()));
  for (const Point& p : pts) {
    if (p.coords.size() != chart.dim()) continue;
    if (chart.is_excluded(p)) continue;
    if (!sing_membership(bo.algebra, p)) continue;
    consider(residual_order_at(chart, jt, b, p));
  }
  // Generic points of visible exceptional strata.
  for (size_t v : chart.exceptional_var_indices()) {
    consider(residual_order_along(jt, b, {v}));
  }
  if (!best) return Rational(0);
  return *best;
}

std::pair<Rational, size_t> t_at(const Trace& trace, size_t obj, size_t i,
                                 const Point& p, const SampleSets& samples,
                                 const Horizon& h) {
  std::vector<Rational> maxw;
  for (size_t j = 0; j <= i; ++j) {
    maxw.push_back(max_word(trace, obj, j, samples, h));
  }
  if (maxw[i] == 0) throw Error("t undefined: max w-ord is zero");
  // l = first record where the current maximal value was attained.
  size_t l = i;
  while (l > 0 && maxw[l - 1] == maxw[i]) --l;

  Rational w = word_at(trace, obj, i, p, h);
  const Chart& chart = object_at(trace, obj, i).chart();
  size_t count = 0;
  for (const auto& d : chart.exceptionals) {
    if (d.born_at_step > static_cast<int>(l)) continue;  // newer than stage l
    if (!d.defining) continue;  // not visible in this chart
    if (d.defining->eval(p).is_zero()) ++count;
  }
  return {w, count};
}

TangentData tau_lower_bound(const ReesAlg& g, const Point& p) {
  if (!sing_membership(g, p)) {
    throw Error("tau_lower_bound: point is not in the singular locus");
  }
  ReesAlg sat = g.diff_closed ? g : diff_saturate(g);
  TangentData out;
  out.point = p;
  for (const auto& wg : sat.gens) {
    if (wg.weight != 1) continue;
    auto nu = wg.poly.order_at(p);
    if (!nu || *nu != 1) continue;
    Poly lin = wg.poly.initial_form(p);
    if (!in_constant_span(lin, out.linear_forms)) {
      out.linear_forms.push_back(lin.monic());
    }
  }
  out.tau_lower = out.linear_forms.size();
  if (sat.chart.field.characteristic() != 0) {
    out.note = "positive characteristic: additive (non-linear) initial forms "
               "not analyzed; value is a lower bound";
  }
  return out;
}

}  // namespace rees
