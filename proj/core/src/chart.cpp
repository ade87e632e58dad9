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

#include "reescalc/chart.hpp"

namespace rees {

Chart Chart::make(const Field& field, std::vector<std::string> vars) {
  Chart c;
  c.field = field;
  c.vars = std::move(vars);
  return c;
}

size_t Chart::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  throw Error("unknown chart variable '" + name + "'");
}

bool Chart::is_excluded(const Point& p) const {
  for (const Poly& h : exclusions) {
    if (h.eval(p).is_zero()) return true;
  }
  return false;
}

std::vector<size_t> Chart::exceptional_var_indices() const {
  std::vector<size_t> out;
  for (const DivisorTag& d : exceptionals) {
    if (!d.defining) continue;
    const Poly& f = *d.defining;
    if (f.is_monomial()) {
      auto [e, c] = f.leading_term();
      if (total_degree(e) == 1) {
        for (size_t i = 0; i < e.size(); ++i) {
          if (e[i] == 1) out.push_back(i);
        }
      }
    }
  }
  return out;
}

}  // namespace rees
