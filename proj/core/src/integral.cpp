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

#include "reescalc/integral.hpp"

#include <algorithm>
#include <sstream>

#include "reescalc/diff.hpp"

namespace rees {

namespace {

// A linear constraint c . x <= b over the rationals.
struct Constraint {
  std::vector<Rational> c;
  Rational b;
};

// Exact Fourier-Motzkin feasibility test for a system of <= constraints.
bool feasible(std::vector<Constraint> sys, size_t nvars) {
  for (size_t v = 0; v < nvars; ++v) {
    std::vector<Constraint> pos, neg, rest;
    for (auto& k : sys) {
      if (k.c[v] > 0) {
        pos.push_back(std::move(k));
      } else if (k.c[v] < 0) {
        neg.push_back(std::move(k));
      } else {
        rest.push_back(std::move(k));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // Scale so the coefficients of v cancel: p / p.c[v] + n / (-n.c[v]).
        Constraint k;
        k.c.assign(nvars, Rational(0));
        for (size_t i = 0; i < nvars; ++i) {
          k.c[i] = p.c[i] / p.c[v] - n.c[i] / n.c[v];
        }
        k.b = p.b / p.c[v] - n.b / n.c[v];
        rest.push_back(std::move(k));
      }
    }
    sys = std::move(rest);
  }
  for (const auto& k : sys) {
    if (k.b < 0) return false;  // 0 <= b violated
  }
  return true;
}

// Exponent vectors of the generators of a monomial ideal.
std::vector<Exponents> monomial_exponents(const Ideal& ideal) {
  std::vector<Exponents> out;
  for (const auto& g : ideal.gens) out.push_back(g.leading_term().first);
  return out;
}

// Is e in conv(gens) + R_{>=0}^d?
bool in_newton_region(const Exponents& e, const std::vector<Exponents>& gens) {
  if (gens.empty()) return false;
  // Quick exact hit: some generator divides the monomial.
  for (const auto& g : gens) {
    bool le = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (g[i] > e[i]) {
        le = false;
        break;
      }
    }
    if (le) return true;
  }
  // Variables: lambda_1..lambda_s with lambda >= 0, sum lambda = 1,
  // sum lambda_i g_i <= e coordinatewise.
  size_t s = gens.size(), d = e.size();
  std::vector<Constraint> sys;
  for (size_t i = 0; i < s; ++i) {
    Constraint k;
    k.c.assign(s, Rational(0));
    k.c[i] = -1;
    k.b = 0;
    sys.push_back(std::move(k));
  }
  Constraint sum_le, sum_ge;
  sum_le.c.assign(s, Rational(1));
  sum_le.b = 1;
  sum_ge.c.assign(s, Rational(-1));
  sum_ge.b = -1;
  sys.push_back(std::move(sum_le));
  sys.push_back(std::move(sum_ge));
  for (size_t j = 0; j < d; ++j) {
    Constraint k;
    k.c.assign(s, Rational(0));
    for (size_t i = 0; i < s; ++i) k.c[i] = Rational(gens[i][j]);
    k.b = Rational(e[j]);
    sys.push_back(std::move(k));
  }
  return feasible(std::move(sys), s);
}

// f = v^Q * u with u(0) != 0, for a single coordinate v? Returns (v, Q).
std::optional<std::pair<size_t, uint64_t>> divisorial_form(const Poly& f) {
  if (f.is_zero()) return std::nullopt;
  size_t dim = f.vars().size();
  for (size_t v = 0; v < dim; ++v) {
    uint64_t q = f.divisor_order(v);
    if (q == 0) continue;
    Poly u = f.divide_by_var_power(v, q);
    Exponents origin(dim, 0);
    if (u.terms().count(origin)) return std::make_pair(v, q);
  }
  return std::nullopt;
}

}  // namespace

bool monomial_ic_membership(const Poly& m, const Ideal& monomial_ideal) {
  if (!m.is_monomial()) {
    throw Error("monomial_ic_membership expects a monomial");
  }
  if (!monomial_ideal.is_monomial()) {
    throw Error("monomial_ic_membership expects a monomial ideal");
  }
  return in_newton_region(m.leading_term().first,
                          monomial_exponents(monomial_ideal.minimalized()));
}

std::optional<uint64_t> ic_power_witness(const Poly& f, const Ideal& ideal,
                                         uint64_t k_max) {
  if (f.is_zero()) return 1;
  Ideal base = ideal.minimalized();
  if (base.is_zero()) return std::nullopt;
  Poly fk = f;
  Ideal ik = base;
  for (uint64_t k = 1; k <= k_max; ++k) {
    if (k > 1) {
      fk *= f;
      ik = ik.product(base);
    }
    if (ik.contains(fk) == Truth::yes) return k;
  }
  return std::nullopt;
}

Verdict almost_rees_containment(const Ideal& j, uint64_t b, const Ideal& i,
                                uint64_t c) {
  if (b < 1 || c < 1) throw Error("almost_rees_containment requires weights >= 1");
  // B[J W^b] inside IC(B[I W^c]) iff J^c inside IC(I^b).
  Ideal jc = j.power(c).minimalized();
  Ideal ib = i.power(b).minimalized();
  if (jc.is_zero()) return {Truth::yes, "J^c = 0"};
  if (ib.is_zero()) return {Truth::no, "I^b = 0 but J^c != 0"};

  if (ib.is_monomial()) {
    // IC of a monomial ideal is the monomial ideal of its Newton region, so
    // membership of any polynomial is termwise.
    auto exps = monomial_exponents(ib);
    for (const auto& g : jc.gens) {
      for (const auto& [e, coef] : g.terms()) {
        if (!in_newton_region(e, exps)) {
          std::ostringstream os;
          os << "term of " << g.str() << " outside the Newton region of I^" << b;
          return {Truth::no, os.str()};
        }
      }
    }
    return {Truth::yes,
            "every term of J^" + std::to_string(c) +
                " lies in the Newton region of I^" + std::to_string(b)};
  }

  // Divisorial reduction: every generator of I^b of the form v^N * unit with
  // a common v. Then elements of the closure have v-order >= min N, and any
  // generator of J^c with v-order >= min N is absorbed.
  std::optional<size_t> var;
  std::optional<uint64_t> min_n;
  bool divisorial = true;
  for (const auto& g : ib.gens) {
    auto form = divisorial_form(g);
    if (!form || (var && *var != form->first)) {
      divisorial = false;
      break;
    }
    var = form->first;
    min_n = min_n ? std::min(*min_n, form->second) : form->second;
  }
  if (divisorial && var) {
    uint64_t n = *min_n;
    for (const auto& g : jc.gens) {
      uint64_t q = g.divisor_order(*var);
      if (q < n) {
        std::ostringstream os;
        os << g.str() << " has " << jc.gens[0].vars()[*var] << "-order " << q
           << " < " << n;
        return {Truth::no, os.str()};
      }
    }
    std::ostringstream os;
    os << "divisorial: every generator of J^" << c << " has "
       << jc.gens[0].vars()[*var] << "-order >= " << n;
    return {Truth::yes, os.str()};
  }

  // Last resort, sound only: direct ideal membership certifies closure
  // membership.
  bool all_yes = true;
  for (const auto& g : jc.gens) {
    if (ib.contains(g) != Truth::yes) {
      all_yes = false;
      break;
    }
  }
  if (all_yes) {
    return {Truth::yes, "J^" + std::to_string(c) + " is contained in I^" +
                            std::to_string(b) + " itself"};
  }
  return {Truth::undecided, "outside the decidable fragment"};
}

bool hypersurface_criterion(uint64_t big_n, uint64_t n, uint64_t big_q,
                            uint64_t q) {
  if (n < 1 || q < 1) throw Error("hypersurface_criterion requires weights >= 1");
  // Q/q >= N/n without rationals.
  return big_q * n >= big_n * q;
}

CompareVerdict canonical_compare(const ReesAlg& g, const ReesAlg& k,
                                 const Horizon& h) {
  if (!g.chart.same_space(k.chart)) throw Error("canonical_compare: chart mismatch");
  CompareVerdict out;
  ReesAlg sg, sk;
  AlmostRees ag, ak;
  try {
    sg = g.diff_closed ? g : diff_saturate(g);
    sk = k.diff_closed ? k : diff_saturate(k);
    ag = almost_rees_normalize(sg, h);
    ak = almost_rees_normalize(sk, h);
  } catch (const Error& e) {
    out.certificate = std::string("normalization failed: ") + e.what();
    return out;
  }
  Verdict lr = almost_rees_containment(ag.slice, ag.n, ak.slice, ak.n);
  Verdict rl = almost_rees_containment(ak.slice, ak.n, ag.slice, ag.n);
  out.left_in_right = lr.truth;
  out.right_in_left = rl.truth;
  if (lr.truth == Truth::yes && rl.truth == Truth::yes) {
    out.equivalent = Truth::yes;
    out.certificate = "both containments certified: [" + lr.certificate +
                      "] and [" + rl.certificate + "]";
  } else if (lr.truth == Truth::no || rl.truth == Truth::no) {
    out.equivalent = Truth::no;
    out.certificate = lr.truth == Truth::no ? lr.certificate : rl.certificate;
  } else {
    out.certificate = "outside the decidable fragment";
  }
  return out;
}

}  // namespace rees
