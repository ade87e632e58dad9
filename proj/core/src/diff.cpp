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

#include "reescalc/diff.hpp"

#include <algorithm>

namespace rees {

namespace {

bool gen_less(const WeightedGen& a, const WeightedGen& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  GrlexLess lt;
  auto la = a.poly.leading_term().first, lb = b.poly.leading_term().first;
  if (lt(la, lb)) return true;
  if (lt(lb, la)) return false;
  return a.poly.str() < b.poly.str();
}

bool gen_equal(const WeightedGen& a, const WeightedGen& b) {
  return a.weight == b.weight && a.poly == b.poly;
}

// Power products of `kept` with total weight exactly m.
void products_of_weight(const Chart& chart, const std::vector<WeightedGen>& kept,
                        uint64_t m, size_t i, const Poly& acc,
                        std::vector<Poly>& out) {
  if (m == 0) {
    out.push_back(acc);
    return;
  }
  if (i == kept.size()) return;
  products_of_weight(chart, kept, m, i + 1, acc, out);
  if (kept[i].weight <= m) {
    products_of_weight(chart, kept, m - kept[i].weight, i, acc * kept[i].poly, out);
  }
}

std::vector<Poly> slice_products(const Chart& chart,
                                 const std::vector<WeightedGen>& kept, uint64_t m) {
  std::vector<Poly> out;
  Poly one = Poly::constant(chart.field, chart.vars, Coef(chart.field, 1));
  products_of_weight(chart, kept, m, 0, one, out);
  // Drop the empty product (only produced when m == 0, which cannot happen
  // here) and order deterministically, highest leading term first so the
  // reduction prefers high-degree divisors.
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    GrlexLess lt;
    return lt(b.leading_term().first, a.leading_term().first);
  });
  return out;
}

// All alpha with |alpha| in [0, max_total) and alpha_j <= cap_j.
void enumerate_alphas(const Exponents& caps, uint64_t max_total, size_t i,
                      Exponents& acc, uint64_t used, std::vector<Exponents>& out) {
  if (i == caps.size()) {
    out.push_back(acc);
    return;
  }
  for (uint32_t a = 0; a <= caps[i] && used + a < max_total; ++a) {
    acc[i] = a;
    enumerate_alphas(caps, max_total, i + 1, acc, used + a, out);
  }
  acc[i] = 0;
}

}  // namespace

std::vector<WeightedGen> canonical_minimalize(const Chart& chart,
                                              std::vector<WeightedGen> gens) {
  std::vector<WeightedGen> work;
  for (auto& g : gens) {
    if (!g.poly.is_zero()) work.push_back({g.poly.monic(), g.weight});
  }
  std::sort(work.begin(), work.end(), gen_less);
  work.erase(std::unique(work.begin(), work.end(), gen_equal), work.end());
  std::vector<WeightedGen> kept;
  for (const auto& g : work) {
    Poly r = g.poly.reduce(slice_products(chart, kept, g.weight));
    if (!r.is_zero()) kept.push_back({r.monic(), g.weight});
  }
  std::sort(kept.begin(), kept.end(), gen_less);
  return kept;
}

ReesAlg diff_saturate(const ReesAlg& g) {
  const Chart& chart = g.chart;
  std::vector<WeightedGen> current = canonical_minimalize(chart, g.gens);
  const int max_rounds = 10;
  for (int round = 0; round < max_rounds; ++round) {
    std::vector<WeightedGen> fan = current;
    for (const auto& wg : current) {
      // Per-variable caps: a derivative past the degree in a variable is zero.
      Exponents caps(chart.dim(), 0);
      for (const auto& [e, c] : wg.poly.terms()) {
        for (size_t i = 0; i < e.size(); ++i) caps[i] = std::max(caps[i], e[i]);
      }
      std::vector<Exponents> alphas;
      Exponents acc(chart.dim(), 0);
      enumerate_alphas(caps, wg.weight, 0, acc, 0, alphas);
      for (const auto& alpha : alphas) {
        uint64_t r = total_degree(alpha);
        if (r == 0) continue;
        Poly d = wg.poly.hasse_derivative(alpha);
        if (!d.is_zero()) {
          fan.push_back({std::move(d), static_cast<uint32_t>(wg.weight - r)});
        }
      }
    }
    std::vector<WeightedGen> next = canonical_minimalize(chart, std::move(fan));
    bool stable = next.size() == current.size() &&
                  std::equal(next.begin(), next.end(), current.begin(), gen_equal);
    current = std::move(next);
    if (stable) {
      ReesAlg out;
      out.chart = chart;
      out.gens = std::move(current);
      out.diff_closed = true;
      return out;
    }
  }
  throw Error("diff_saturate: no fixed point within iteration bound");
}

ReesAlg restrict_to_hypersurface(const ReesAlg& g, const std::string& var) {
  if (!g.diff_closed) {
    throw Error("restrict_to_hypersurface requires a differentially saturated algebra");
  }
  size_t idx = g.chart.var_index(var);
  Chart restricted = g.chart;
  restricted.vars.erase(restricted.vars.begin() + static_cast<long>(idx));
  restricted.exceptionals.clear();
  for (const DivisorTag& d : g.chart.exceptionals) {
    DivisorTag nd = d;
    if (nd.defining) {
      Poly f = nd.defining->restrict_var(idx);
      nd.defining = f.is_zero() ? std::nullopt : std::optional<Poly>(std::move(f));
    }
    restricted.exceptionals.push_back(std::move(nd));
  }
  restricted.exclusions.clear();
  for (const Poly& h : g.chart.exclusions) {
    Poly r = h.restrict_var(idx);
    if (r.is_zero()) {
      throw Error("restrict_to_hypersurface: hypersurface lies in an excluded locus");
    }
    restricted.exclusions.push_back(std::move(r));
  }
  restricted.lineage.push_back("restrict to {" + var + " = 0}");

  ReesAlg out;
  out.chart = restricted;
  for (const auto& wg : g.gens) {
    Poly r = wg.poly.restrict_var(idx);
    if (!r.is_zero()) out.gens.push_back({std::move(r), wg.weight});
  }
  out.gens = canonical_minimalize(restricted, std::move(out.gens));
  out.diff_closed = true;
  return out;
}

Ideal sing_ideal(const ReesAlg& g) {
  ReesAlg sat = g.diff_closed ? g : diff_saturate(g);
  Ideal out;
  for (const auto& wg : sat.gens) out.gens.push_back(wg.poly);
  return out.minimalized();
}

}  // namespace rees
