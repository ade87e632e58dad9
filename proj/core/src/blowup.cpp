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

#include "reescalc/blowup.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

namespace {

std::vector<size_t> center_indices(const Chart& chart,
                                   const std::vector<std::string>& center) {
  if (center.empty()) throw Error("empty blow-up center");
  std::vector<size_t> idx;
  for (const auto& v : center) {
    size_t i = chart.var_index(v);
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
      throw Error("repeated variable in blow-up center: " + v);
    }
    idx.push_back(i);
  }
  return idx;
}

// Is the divisor's equation a single coordinate variable (up to scalar)?
std::optional<size_t> coordinate_divisor(const Poly& f) {
  if (f.is_monomial()) {
    const Exponents& e = f.leading_term().first;
    if (total_degree(e) == 1) {
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 1) return i;
      }
    }
  }
  return std::nullopt;
}

int next_divisor_id(const Chart& chart) {
  int id = 0;
  for (const auto& d : chart.exceptionals) id = std::max(id, d.id);
  return id + 1;
}

}  // namespace

std::string Step::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::blowup: {
      os << "blowup <";
      for (size_t i = 0; i < center.size(); ++i) os << (i ? "," : "") << center[i];
      os << "> chart " << chart_var;
      break;
    }
    case Kind::product: {
      os << "product";
      for (const auto& v : new_vars) os << " " << v;
      break;
    }
    case Kind::restrict_open:
      os << "restrict {" << h << " != 0}";
      break;
    case Kind::change: {
      os << "change {";
      for (size_t i = 0; i < subs.size(); ++i) {
        os << (i ? ", " : "") << subs[i].first << " -> " << subs[i].second;
      }
      os << "}";
      break;
    }
  }
  return os.str();
}

bool check_permissible(const BasicObject& bo,
                       const std::vector<std::string>& center) {
  const Chart& chart = bo.chart();
  std::vector<size_t> idx = center_indices(chart, center);
  // (a) Symbolic containment of the center in Sing: every term of every
  // generator has total center-variable degree >= the weight.
  for (const auto& wg : bo.algebra.gens) {
    for (const auto& [e, c] : wg.poly.terms()) {
      uint64_t d = 0;
      for (size_t i : idx) d += e[i];
      if (d < wg.weight) return false;
    }
  }
  // (b) Normal crossings with the visible divisors. For coordinate divisors
  // this is automatic against a coordinate center; non-coordinate equations
  // only arise through affine unit translations, which stay transversal to
  // coordinate subspaces through the origin.
  return true;
}

BasicObject blow_up(const BasicObject& bo, const std::vector<std::string>& center,
                    const std::string& chart_var, int step_index) {
  const Chart& chart = bo.chart();
  std::vector<size_t> idx = center_indices(chart, center);
  size_t cv = chart.var_index(chart_var);
  if (std::find(idx.begin(), idx.end(), cv) == idx.end()) {
    throw Error("blow_up: chart variable must belong to the center");
  }
  if (!check_permissible(bo, center)) {
    throw Error("blow_up: center is not permissible for " + bo.algebra.str());
  }

  // v -> chart_var * v for the other center variables.
  std::vector<Poly> subs;
  Poly t = Poly::variable(chart.field, chart.vars, cv);
  for (size_t i = 0; i < chart.dim(); ++i) {
    Poly v = Poly::variable(chart.field, chart.vars, i);
    bool in_center = std::find(idx.begin(), idx.end(), i) != idx.end();
    subs.push_back(in_center && i != cv ? t * v : v);
  }

  Chart next = chart;
  for (auto& d : next.exceptionals) {
    if (!d.defining) continue;
    Poly f = d.defining->substitute(subs);
    uint64_t k = f.is_zero() ? 0 : f.divisor_order(cv);
    if (k > 0) f = f.divide_by_var_power(cv, k);
    // The chart variable's own divisor is swallowed by the new exceptional:
    // its strict transform misses this chart.
    d.defining = (f.is_zero() || f.is_constant()) ? std::nullopt
                                                  : std::optional<Poly>(std::move(f));
  }
  for (auto& h : next.exclusions) h = h.substitute(subs);
  DivisorTag fresh;
  fresh.id = next_divisor_id(chart);
  fresh.born_at_step = step_index;
  fresh.defining = t;
  next.exceptionals.push_back(std::move(fresh));
  {
    std::ostringstream os;
    os << "blow up center <";
    for (size_t i = 0; i < center.size(); ++i) os << (i ? "," : "") << center[i];
    os << ">, chart " << chart_var;
    next.lineage.push_back(os.str());
  }

  BasicObject out;
  out.algebra.chart = next;
  for (const auto& wg : bo.algebra.gens) {
    Poly f = wg.poly.substitute(subs);
    Poly g = f.divide_by_var_power(cv, wg.weight);  // weighted transform
    out.algebra.gens.push_back({std::move(g), wg.weight});
  }
  out.algebra.diff_closed = false;
  for (const auto& d : next.exceptionals) out.e_list.push_back(d.id);
  return out;
}

BasicObject product_with_lines(const BasicObject& bo,
                               const std::vector<std::string>& new_vars) {
  const Chart& chart = bo.chart();
  Chart next = chart;
  for (const auto& v : new_vars) {
    if (std::find(next.vars.begin(), next.vars.end(), v) != next.vars.end()) {
      throw Error("product_with_lines: variable already exists: " + v);
    }
    next.vars.push_back(v);
  }
  for (auto& d : next.exceptionals) {
    if (d.defining) d.defining = d.defining->extend_vars(next.vars);
  }
  for (auto& h : next.exclusions) h = h.extend_vars(next.vars);
  if (!new_vars.empty()) {
    std::ostringstream os;
    os << "product with lines";
    for (const auto& v : new_vars) os << " " << v;
    next.lineage.push_back(os.str());
  }

  BasicObject out;
  out.algebra.chart = next;
  for (const auto& wg : bo.algebra.gens) {
    out.algebra.gens.push_back({wg.poly.extend_vars(next.vars), wg.weight});
  }
  out.algebra.diff_closed = bo.algebra.diff_closed;
  out.e_list = bo.e_list;
  return out;
}

BasicObject restrict_open(const BasicObject& bo, const Poly& h) {
  if (h.is_zero()) throw Error("restrict_open: complement polynomial is zero");
  BasicObject out = bo;
  if (h.is_constant()) return out;  // {h != 0} is everything
  Chart& next = out.algebra.chart;
  next.exclusions.push_back(h);
  next.lineage.push_back("restrict to {" + h.str() + " != 0}");
  // Factors of h are units on the open set; divide them out of generators.
  bool divided = false;
  for (auto& wg : out.algebra.gens) {
    while (!wg.poly.is_constant() && wg.poly.divisible_by(h)) {
      wg.poly = wg.poly.exact_divide(h);
      divided = true;
    }
  }
  if (divided) {
    next.lineage.push_back("divided unit factors of " + h.str() +
                           " out of generators");
    out.algebra.diff_closed = false;
  }
  return out;
}

BasicObject change_coordinates(
    const BasicObject& bo, const std::vector<std::pair<std::string, Poly>>& subs) {
  const Chart& chart = bo.chart();
  // Validate: v -> c*v + g with c a nonzero constant and g free of every
  // substituted variable; such maps invert as v -> (v - g)/c.
  std::vector<size_t> targets;
  for (const auto& [name, f] : subs) targets.push_back(chart.var_index(name));
  std::vector<Poly> map;
  for (size_t i = 0; i < chart.dim(); ++i) {
    map.push_back(Poly::variable(chart.field, chart.vars, i));
  }
  for (size_t s = 0; s < subs.size(); ++s) {
    size_t v = targets[s];
    const Poly& f = subs[s].second;
    Exponents unit(chart.dim(), 0);
    unit[v] = 1;
    auto it = f.terms().find(unit);
    if (it == f.terms().end()) {
      throw Error("change_coordinates: substitution for " + subs[s].first +
                  " has no " + subs[s].first + " term (not invertible)");
    }
    for (const auto& [e, c] : f.terms()) {
      if (e == unit) continue;
      for (size_t t : targets) {
        if (e[t] > 0) {
          throw Error(
              "change_coordinates: substitution depends on a substituted "
              "variable (not triangular)");
        }
      }
    }
    map[v] = f;
  }

  Chart next = chart;
  for (auto& d : next.exceptionals) {
    if (d.defining) d.defining = d.defining->substitute(map);
  }
  for (auto& h : next.exclusions) {
    h = h.substitute(map);
    if (h.is_zero()) throw Error("change_coordinates: exclusion became zero");
  }
  {
    std::ostringstream os;
    os << "change coordinates {";
    for (size_t i = 0; i < subs.size(); ++i) {
      os << (i ? ", " : "") << subs[i].first << " -> " << subs[i].second.str();
    }
    os << "}";
    next.lineage.push_back(os.str());
  }

  BasicObject out;
  out.algebra.chart = next;
  for (const auto& wg : bo.algebra.gens) {
    out.algebra.gens.push_back({wg.poly.substitute(map), wg.weight});
  }
  out.algebra.diff_closed = false;
  out.e_list = bo.e_list;
  return out;
}

Trace run_scenario(const Scenario& s) {
  if (s.names.size() != s.algebras.size()) {
    throw Error("run_scenario: names/algebras length mismatch");
  }
  Trace trace;
  trace.names = s.names;
  StepRecord initial;
  initial.description = "initial";
  for (const auto& g : s.algebras) {
    BasicObject bo;
    bo.algebra = g;
    bo.algebra.chart = s.chart;
    for (const auto& d : s.chart.exceptionals) bo.e_list.push_back(d.id);
    initial.objects.push_back(std::move(bo));
  }
  trace.records.push_back(std::move(initial));

  for (size_t si = 0; si < s.steps.size(); ++si) {
    const Step& step = s.steps[si];
    const StepRecord& prev = trace.records.back();
    StepRecord rec;
    rec.description = step.str();
    switch (step.kind) {
      case Step::Kind::blowup: {
        // The sequence must be permissible for every carried algebra.
        for (size_t a = 0; a < prev.objects.size(); ++a) {
          if (!check_permissible(prev.objects[a], step.center)) {
            throw Error("step " + std::to_string(si + 1) +
                        ": blow-up center not permissible for algebra " +
                        trace.names[a]);
          }
        }
        std::vector<size_t> idx =
            center_indices(prev.objects[0].chart(), step.center);
        for (size_t a = 0; a < prev.objects.size(); ++a) {
          Rational ord = order_along_center(prev.objects[a].algebra, idx);
          rec.ord_center.push_back(ord);
          rec.exc_exponent.push_back(ord - 1);
          rec.objects.push_back(blow_up(prev.objects[a], step.center,
                                        step.chart_var, static_cast<int>(si + 1)));
        }
        rec.new_divisor = rec.objects[0].chart().exceptionals.back().id;
        break;
      }
      case Step::Kind::product: {
        for (const auto& bo : prev.objects) {
          rec.objects.push_back(product_with_lines(bo, step.new_vars));
        }
        break;
      }
      case Step::Kind::restrict_open: {
        for (const auto& bo : prev.objects) {
          Poly h = parse_poly(bo.chart().field, bo.chart().vars, step.h);
          rec.objects.push_back(restrict_open(bo, h));
        }
        break;
      }
      case Step::Kind::change: {
        for (const auto& bo : prev.objects) {
          std::vector<std::pair<std::string, Poly>> parsed;
          for (const auto& [v, text] : step.subs) {
            parsed.emplace_back(
                v, parse_poly(bo.chart().field, bo.chart().vars, text));
          }
          rec.objects.push_back(change_coordinates(bo, parsed));
        }
        break;
      }
    }
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace rees
