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

#ifndef REESCALC_BUILTINS_HPP_
#define REESCALC_BUILTINS_HPP_

#include <string>
#include <vector>

namespace rees {

/// A named, embedded scenario document. Every builtin passes on a correct
/// build.
struct BuiltinScenario {
  std::string name;
  std::string description;
  std::string json_text;
};

const std::vector<BuiltinScenario>& list_builtins();

/// Throws on unknown names.
const BuiltinScenario& find_builtin(const std::string& name);

}  // namespace rees

#endif  // REESCALC_BUILTINS_HPP_
