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

#include "reescalc/builtins.hpp"

#include "reescalc/field.hpp"

namespace rees {

namespace {

const char kChar2Counterexample[] = R"json({
  "name": "char2-counterexample",
  "description": "Characteristic 2: two algebras with matching singular loci, orders, and permissible centers along the whole sequence until two final point blow-ups separate them on the last exceptional divisor.",
  "char": 2,
  "vars": ["z", "x"],
  "algebras": {
    "G": "[ z^2 + x^3 @ 2 ]",
    "H": "[ z @ 1, x^3 @ 2 ]"
  },
  "steps": [
    {"kind": "restrict", "h": "x+1"},
    {"kind": "product", "vars": ["t"]},
    {"kind": "blowup", "center": ["z", "x", "t"], "chart": "t"},
    {"kind": "blowup", "center": ["z", "x", "t"], "chart": "t"},
    {"kind": "change", "subs": {"z": "z+t", "x": "x+1"}},
    {"kind": "restrict", "h": "x+1"},
    {"kind": "product", "vars": ["s"]},
    {"kind": "blowup", "center": ["z", "x", "t", "s"], "chart": "s"},
    {"kind": "blowup", "center": ["z", "x", "t", "s"], "chart": "s"}
  ],
  "assertions": [
    {"kind": "sing", "step": 0, "algebra": "G", "point": "z=0, x=0", "expect": true},
    {"kind": "sing", "step": 0, "algebra": "H", "point": "z=0, x=0", "expect": true},
    {"kind": "order", "step": 0, "algebra": "G", "point": "z=0, x=0", "expect": "1"},
    {"kind": "order", "step": 0, "algebra": "H", "point": "z=0, x=0", "expect": "1"},
    {"kind": "sing", "step": 3, "algebra": "G", "point": "z=0, x=0, t=0", "expect": true},
    {"kind": "sing", "step": 3, "algebra": "H", "point": "z=0, x=0, t=0", "expect": true},
    {"kind": "sing", "step": 4, "algebra": "G", "point": "z=0, x=0, t=0", "expect": true},
    {"kind": "sing", "step": 4, "algebra": "H", "point": "z=0, x=0, t=0", "expect": true},
    {"kind": "sing", "step": 9, "algebra": "G", "point": "z=0, x=0, t=0, s=0", "expect": true},
    {"kind": "sing", "step": 9, "algebra": "H", "point": "z=0, x=0, t=0, s=0", "expect": true},
    {"kind": "sing", "step": 9, "algebra": "G", "point": "z=0, x=1, t=1, s=0", "expect": true},
    {"kind": "sing", "step": 9, "algebra": "H", "point": "z=0, x=1, t=1, s=0", "expect": false}
  ]
})json";

const char kHironakaTrick[] = R"json({
  "name": "hironaka-trick",
  "description": "A surface pair (x^2, 1): six point blow-ups build exceptional multiplicities 1..6, which then pay for exactly six codimension-one blow-ups; a seventh is impermissible.",
  "char": 0,
  "vars": ["x"],
  "algebras": {
    "H": "[ x^2 @ 1 ]"
  },
  "steps": [
    {"kind": "product", "vars": ["y"]},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["x", "y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"},
    {"kind": "blowup", "center": ["y"], "chart": "y"}
  ],
  "assertions": [
    {"kind": "exponent", "step": 2, "algebra": "H", "expect": "1"},
    {"kind": "exponent", "step": 3, "algebra": "H", "expect": "2"},
    {"kind": "exponent", "step": 4, "algebra": "H", "expect": "3"},
    {"kind": "exponent", "step": 5, "algebra": "H", "expect": "4"},
    {"kind": "exponent", "step": 6, "algebra": "H", "expect": "5"},
    {"kind": "exponent", "step": 7, "algebra": "H", "expect": "6"},
    {"kind": "permissible", "step": 12, "algebra": "H", "center": ["y"], "expect": true},
    {"kind": "permissible", "step": 13, "algebra": "H", "center": ["y"], "expect": false},
    {"kind": "sing", "step": 13, "algebra": "H", "point": "x=0, y=0", "expect": true},
    {"kind": "word", "step": 13, "algebra": "H", "point": "x=0, y=0", "expect": "2"}
  ]
})json";

const char kGiraudCheck[] = R"json({
  "name": "giraud-check",
  "description": "Characteristic 2: the singular loci of the transform of an algebra and of the transform of its differential saturation agree pointwise.",
  "char": 2,
  "vars": ["z", "x"],
  "algebras": {
    "G": "[ z^2 + x^5 @ 2 ]",
    "K": "[ x^4 @ 1, z^2 + x^5 @ 2 ]"
  },
  "steps": [
    {"kind": "blowup", "center": ["z", "x"], "chart": "x"}
  ],
  "assertions": [
    {"kind": "sing", "step": 1, "algebra": "G", "point": "z=0, x=0", "expect": true},
    {"kind": "sing", "step": 1, "algebra": "K", "point": "z=0, x=0", "expect": true},
    {"kind": "sing", "step": 1, "algebra": "G", "point": "z=1, x=0", "expect": false},
    {"kind": "sing", "step": 1, "algebra": "K", "point": "z=1, x=0", "expect": false},
    {"kind": "sing", "step": 1, "algebra": "G", "point": "z=0, x=1", "expect": false},
    {"kind": "sing", "step": 1, "algebra": "K", "point": "z=0, x=1", "expect": false},
    {"kind": "sing", "step": 1, "algebra": "G", "point": "z=1, x=1", "expect": false},
    {"kind": "sing", "step": 1, "algebra": "K", "point": "z=1, x=1", "expect": false}
  ]
})json";

const char kRestrictionCheck[] = R"json({
  "name": "restriction-check",
  "description": "Characteristic 2: an open restriction turns the unit factor (x+1)^2 into a unit, removing the spurious singular point at x=1 while preserving the order at the origin.",
  "char": 2,
  "vars": ["z", "x"],
  "algebras": {
    "A": "[ x^3*(x+1)^2 @ 2 ]"
  },
  "steps": [
    {"kind": "restrict", "h": "x+1"}
  ],
  "assertions": [
    {"kind": "sing", "step": 0, "algebra": "A", "point": "x=1", "expect": true},
    {"kind": "order", "step": 0, "algebra": "A", "point": "z=0, x=0", "expect": "3/2"},
    {"kind": "sing", "step": 1, "algebra": "A", "point": "z=0, x=0", "expect": true},
    {"kind": "order", "step": 1, "algebra": "A", "point": "z=0, x=0", "expect": "3/2"}
  ]
})json";

const char kVeroneseNormalizeDemo[] = R"json({
  "name": "veronese-normalize-demo",
  "description": "Almost-Rees normal forms: [xW^2, yW^3] normalizes at weight 6 with slice (x^3, y^2); a saturated hypersurface algebra normalizes at weight 2.",
  "char": 0,
  "vars": ["z", "x", "y"],
  "algebras": {
    "A": "[ x @ 2, y @ 3 ]",
    "B": "[ z @ 1, x^2 @ 1, x^3 @ 2 ]"
  },
  "steps": [],
  "assertions": [
    {"kind": "normalize", "step": 0, "algebra": "A", "expect": "6", "gens": ["x^3", "y^2"]},
    {"kind": "normalize", "step": 0, "algebra": "B", "expect": "2", "gens": ["z^2", "z*x^2", "x^3"]}
  ]
})json";

}  // namespace

const std::vector<BuiltinScenario>& list_builtins() {
  static const std::vector<BuiltinScenario> builtins = {
      {"char2-counterexample",
       "two algebras in characteristic 2 whose local sequences eventually "
       "separate",
       kChar2Counterexample},
      {"hironaka-trick",
       "exceptional multiplicities paying for codimension-one blow-ups",
       kHironakaTrick},
      {"giraud-check",
       "singular loci commute with transforms through differential saturation",
       kGiraudCheck},
      {"restriction-check",
       "open restriction divides out unit factors and trims the singular locus",
       kRestrictionCheck},
      {"veronese-normalize-demo", "almost-Rees normal forms of weighted algebras",
       kVeroneseNormalizeDemo},
  };
  return builtins;
}

const BuiltinScenario& find_builtin(const std::string& name) {
  for (const auto& b : list_builtins()) {
    if (b.name == name) return b;
  }
  throw Error("unknown builtin scenario: " + name);
}

}  // namespace rees
