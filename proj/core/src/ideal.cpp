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

#include "reescalc/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rees {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes:
      return "yes";
    case Truth::no:
      return "no";
    default:
      return "undecided";
  }
}

bool Ideal::is_monomial() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Poly& g) { return g.is_monomial(); });
}

namespace {

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool is_scalar_multiple(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  return a.monic() == b.monic();
}

struct GrlexPolyLess {
  bool operator()(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() < !b.is_zero();
    GrlexLess lt;
    auto la = a.leading_term().first, lb = b.leading_term().first;
    if (lt(la, lb)) return true;
    if (lt(lb, la)) return false;
    return a.str() < b.str();
  }
};

}  // namespace

Ideal Ideal::minimalized() const {
  std::vector<Poly> kept;
  std::vector<Poly> sorted;
  for (const Poly& g : gens) {
    if (!g.is_zero()) sorted.push_back(g.monic());
  }
  std::sort(sorted.begin(), sorted.end(), GrlexPolyLess{});
  for (const Poly& g : sorted) {
    bool redundant = false;
    for (const Poly& h : kept) {
      if (is_scalar_multiple(g, h)) {
        redundant = true;
        break;
      }
      if (g.is_monomial() && h.is_monomial() &&
          monomial_divides(h.leading_term().first, g.leading_term().first)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return Ideal{kept};
}

Ideal Ideal::product(const Ideal& other) const {
  Ideal r;
  for (const Poly& a : gens) {
    for (const Poly& b : other.gens) r.gens.push_back(a * b);
  }
  return r.minimalized();
}

Ideal Ideal::power(uint64_t k) const {
  if (k == 0) throw Error("ideal power 0 not represented");
  Ideal r = *this;
  for (uint64_t i = 1; i < k; ++i) r = r.product(*this);
  return r;
}

bool poly_in_monomial_ideal(const Poly& f, const Ideal& monomial_ideal) {
  if (f.is_zero()) return true;
  for (const auto& [e, c] : f.terms()) {
    bool hit = false;
    for (const Poly& g : monomial_ideal.gens) {
      if (monomial_divides(g.leading_term().first, e)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool in_constant_span(const Poly& f, const std::vector<Poly>& gens) {
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  const Field& field = f.field();
  // Collect the monomial support, one row per monomial.
  std::map<Exponents, size_t, GrlexLess> rows;
  auto note = [&](const Poly& p) {
    for (const auto& [e, c] : p.terms()) {
      rows.emplace(e, rows.size());
    }
  };
  note(f);
  for (const Poly& g : gens) note(g);
  size_t nrows = rows.size(), ncols = gens.size();
  std::vector<std::vector<Coef>> m(nrows, std::vector<Coef>(ncols + 1, Coef(field, 0)));
  for (size_t j = 0; j < ncols; ++j) {
    for (const auto& [e, c] : gens[j].terms()) m[rows.at(e)][j] = c;
  }
  for (const auto& [e, c] : f.terms()) m[rows.at(e)][ncols] = c;
  // Gaussian elimination; the system is consistent iff f lies in the span.
  size_t rank_row = 0;
  for (size_t col = 0; col < ncols && rank_row < nrows; ++col) {
    size_t pivot = nrows;
    for (size_t r = rank_row; r < nrows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == nrows) continue;
    std::swap(m[rank_row], m[pivot]);
    Coef inv = m[rank_row][col].inverse();
    for (size_t j = col; j <= ncols; ++j) m[rank_row][j] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank_row || m[r][col].is_zero()) continue;
      Coef factor = m[r][col];
      for (size_t j = col; j <= ncols; ++j) m[r][j] -= factor * m[rank_row][j];
    }
    ++rank_row;
  }
  for (size_t r = 0; r < nrows; ++r) {
    bool all_zero = true;
    for (size_t j = 0; j < ncols; ++j) {
      if (!m[r][j].is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero && !m[r][ncols].is_zero()) return false;
  }
  return true;
}

Truth Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return Truth::yes;
  if (is_zero()) return Truth::no;
  if (is_monomial()) {
    return poly_in_monomial_ideal(f, minimalized()) ? Truth::yes : Truth::no;
  }
  if (f.reduce(gens).is_zero()) return Truth::yes;
  if (in_constant_span(f, gens)) return Truth::yes;
  return Truth::undecided;
}

Truth ideal_equal(const Ideal& a, const Ideal& b) {
  Ideal ma = a.minimalized(), mb = b.minimalized();
  if (ma.is_zero() || mb.is_zero()) {
    return (ma.is_zero() == mb.is_zero()) ? Truth::yes : Truth::no;
  }
  if (ma.is_monomial() && mb.is_monomial()) {
    std::vector<Exponents> ea, eb;
    for (const Poly& g : ma.gens) ea.push_back(g.leading_term().first);
    for (const Poly& g : mb.gens) eb.push_back(g.leading_term().first);
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb ? Truth::yes : Truth::no;
  }
  // Mutual containment via generator matching up to scalars.
  auto matched = [](const Ideal& x, const Ideal& y) {
    for (const Poly& g : x.gens) {
      bool hit = false;
      for (const Poly& h : y.gens) {
        if (is_scalar_multiple(g, h)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  if (matched(ma, mb) && matched(mb, ma)) return Truth::yes;
  // Sound containment both ways.
  auto contained = [](const Ideal& x, const Ideal& y) {
    for (const Poly& g : x.gens) {
      if (y.contains(g) != Truth::yes) return false;
    }
    return true;
  };
  if (contained(ma, mb) && contained(mb, ma)) return Truth::yes;
  return Truth::undecided;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << ">";
  return os.str();
}

}  // namespace rees
