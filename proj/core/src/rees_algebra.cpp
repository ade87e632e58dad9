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

#include "reescalc/rees_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rees {

std::string ReesAlg::str() const {
  std::ostringstream os;
  os << "[ ";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].poly.str() << " @ " << gens[i].weight;
  }
  os << " ]";
  return os.str();
}

ReesAlg parse_algebra(const Chart& chart, const std::string& text) {
  std::string s = text;
  auto l = s.find('[');
  auto r = s.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l) {
    throw Error("algebra text must be of the form \"[ <poly> @ <weight>, ... ]\"");
  }
  s = s.substr(l + 1, r - l - 1);
  ReesAlg g;
  g.chart = chart;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (item.find_first_not_of(" \t\n") == std::string::npos) continue;
    size_t at = item.find('@');
    uint32_t weight = 1;
    std::string poly_text = item;
    if (at != std::string::npos) {
      poly_text = item.substr(0, at);
      weight = static_cast<uint32_t>(std::stoul(item.substr(at + 1)));
    }
    Poly f = parse_poly(chart.field, chart.vars, poly_text);
    if (f.is_zero()) throw Error("zero generator in algebra text");
    if (weight < 1) throw Error("generator weight must be >= 1");
    g.gens.push_back({std::move(f), weight});
  }
  return g;
}

namespace {

// All a in N^s with sum a_i * w_i == n.
void enumerate_weighted(const std::vector<uint32_t>& weights, uint64_t n, size_t i,
                        std::vector<uint32_t>& acc,
                        std::vector<std::vector<uint32_t>>& out) {
  if (i == weights.size()) {
    if (n == 0) out.push_back(acc);
    return;
  }
  for (uint64_t a = 0; a * weights[i] <= n; ++a) {
    acc[i] = static_cast<uint32_t>(a);
    enumerate_weighted(weights, n - a * weights[i], i + 1, acc, out);
  }
  acc[i] = 0;
}

std::vector<std::vector<uint32_t>> weighted_solutions(const ReesAlg& g, uint64_t n) {
  std::vector<uint32_t> weights;
  for (const auto& w : g.gens) weights.push_back(w.weight);
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> acc(weights.size(), 0);
  enumerate_weighted(weights, n, 0, acc, out);
  return out;
}

Poly power_product(const ReesAlg& g, const std::vector<uint32_t>& a) {
  Poly r = Poly::constant(g.chart.field, g.chart.vars, Coef(g.chart.field, 1));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) r *= g.gens[i].poly.pow(a[i]);
  }
  return r;
}

uint64_t solution_weight(const ReesAlg& g, const std::vector<uint32_t>& a) {
  uint64_t w = 0;
  for (size_t i = 0; i < a.size(); ++i) w += uint64_t(a[i]) * g.gens[i].weight;
  return w;
}

}  // namespace

Ideal degree_slice(const ReesAlg& g, uint64_t n) {
  if (n < 1) throw Error("degree_slice requires n >= 1");
  Ideal out;
  for (const auto& a : weighted_solutions(g, n)) {
    bool nonzero = std::any_of(a.begin(), a.end(), [](uint32_t x) { return x > 0; });
    if (nonzero) out.gens.push_back(power_product(g, a));
  }
  return out.minimalized();
}

VeroneseResult veronese(const ReesAlg& g, uint32_t m, const Horizon& h) {
  if (m < 1) throw Error("veronese requires M >= 1");
  // Enumerate power products with total weight a positive multiple of M, up
  // to the horizon, and keep the irreducible solutions: those that do not
  // split as a sum of two smaller solutions of weight divisible by M.
  std::vector<std::vector<uint32_t>> solutions;
  for (uint64_t k = 1; k <= h.a_max; ++k) {
    for (auto& a : weighted_solutions(g, uint64_t(m) * k)) {
      if (std::any_of(a.begin(), a.end(), [](uint32_t x) { return x > 0; })) {
        solutions.push_back(std::move(a));
      }
    }
  }
  auto is_solution = [&](const std::vector<uint32_t>& a) {
    uint64_t w = solution_weight(g, a);
    return w > 0 && w % m == 0;
  };
  std::vector<std::vector<uint32_t>> irreducible;
  uint64_t max_irreducible_weight = 0;
  for (const auto& a : solutions) {
    bool splits = false;
    for (const auto& b : solutions) {
      if (b == a) continue;
      bool le = true;
      std::vector<uint32_t> rest(a.size());
      for (size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) {
          le = false;
          break;
        }
        rest[i] = a[i] - b[i];
      }
      if (le && is_solution(rest)) {
        splits = true;
        break;
      }
    }
    if (!splits) {
      irreducible.push_back(a);
      max_irreducible_weight = std::max(max_irreducible_weight, solution_weight(g, a));
    }
  }
  VeroneseResult res;
  res.alg.chart = g.chart;
  for (const auto& a : irreducible) {
    res.alg.gens.push_back(
        {power_product(g, a), static_cast<uint32_t>(solution_weight(g, a))});
  }
  // Stable below the horizon: no irreducible generator in the top band means
  // nothing new can appear past it on these inputs.
  res.verified = h.a_max >= 2 && max_irreducible_weight <= uint64_t(m) * (h.a_max - 1);
  return res;
}

AlmostRees almost_rees_normalize(const ReesAlg& g, const Horizon& h) {
  if (g.empty()) throw Error("almost_rees_normalize requires a nonempty algebra");
  uint64_t m = 1;
  for (const auto& w : g.gens) m = std::lcm<uint64_t>(m, w.weight);
  std::string best;
  for (uint32_t a = 1; a <= h.a_max; ++a) {
    uint64_t n = a * m;
    Ideal slice = degree_slice(g, n);
    bool ok = true;
    for (uint32_t k = 2; k <= h.k_check; ++k) {
      Truth eq = ideal_equal(degree_slice(g, k * n), slice.power(k));
      if (eq != Truth::yes) {
        ok = false;
        best = "A=" + std::to_string(a) + ": I_" + std::to_string(k * n) +
               " != (I_" + std::to_string(n) + ")^" + std::to_string(k) + " [" +
               to_string(eq) + "]";
        break;
      }
    }
    if (ok) return AlmostRees{n, slice};
  }
  throw Error("almost_rees_normalize: horizon exceeded; best candidate " + best);
}

ReesAlg join(const ReesAlg& g, const ReesAlg& k) {
  if (!g.chart.same_space(k.chart)) throw Error("join: chart mismatch");
  ReesAlg r = g;
  r.diff_closed = false;
  for (const auto& wg : k.gens) {
    bool dup = std::any_of(r.gens.begin(), r.gens.end(), [&](const WeightedGen& x) {
      return x.weight == wg.weight && x.poly == wg.poly;
    });
    if (!dup) r.gens.push_back(wg);
  }
  return r;
}

bool sing_membership(const ReesAlg& g, const Point& p) {
  if (g.chart.is_excluded(p)) {
    throw Error("sing_membership: point lies in an excluded open-restriction locus");
  }
  for (const auto& wg : g.gens) {
    auto nu = wg.poly.order_at(p);
    if (nu.has_value() && *nu < wg.weight) return false;
  }
  return true;
}

Rational order_at_point(const ReesAlg& g, const Point& p) {
  if (!sing_membership(g, p)) {
    throw Error("order_at_point: point is not in the singular locus");
  }
  if (g.empty()) throw Error("order_at_point: undefined for the empty algebra");
  std::optional<Rational> best;
  for (const auto& wg : g.gens) {
    auto nu = wg.poly.order_at(p);
    if (!nu.has_value()) continue;  // zero slice contributes infinity
    Rational v(*nu, wg.weight);
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error("order_at_point: all generators vanish identically");
  return *best;
}

Rational order_along_center(const ReesAlg& g, const std::vector<size_t>& center) {
  if (g.empty()) throw Error("order_along_center: undefined for the empty algebra");
  std::optional<Rational> best;
  for (const auto& wg : g.gens) {
    auto nu = wg.poly.order_along(center);
    if (!nu.has_value()) continue;
    Rational v(*nu, wg.weight);
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error("order_along_center: all generators vanish identically");
  return *best;
}

bool zero_set_membership(const ReesAlg& g, const Point& p) {
  for (const auto& wg : g.gens) {
    if (!wg.poly.eval(p).is_zero()) return false;
  }
  return true;
}

}  // namespace rees
