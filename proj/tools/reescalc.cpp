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

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "reescalc/builtins.hpp"
#include "reescalc/diff.hpp"
#include "reescalc/integral.hpp"
#include "reescalc/scenario.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rees;

struct GlobalOpts {
  uint64_t characteristic = 0;
  bool json = false;
  Horizon horizon;
  std::vector<std::string> vars;
};

Chart make_chart(const GlobalOpts& g) {
  if (g.vars.empty()) {
    throw Error("this subcommand requires --vars (comma-separated names)");
  }
  return Chart::make(Field(g.characteristic), g.vars);
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

void emit(const GlobalOpts& g, const Json& machine, const std::string& human) {
  if (g.json) {
    std::cout << machine.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int cmd_saturate(const GlobalOpts& g, const std::string& algebra_text) {
  ReesAlg alg = parse_algebra(make_chart(g), algebra_text);
  ReesAlg sat = diff_saturate(alg);
  Json j;
  j["saturated"] = sat.str();
  emit(g, j, sat.str() + "\n");
  return 0;
}

int cmd_sing(const GlobalOpts& g, const std::string& algebra_text,
             const std::string& point_text) {
  Chart chart = make_chart(g);
  ReesAlg alg = parse_algebra(chart, algebra_text);
  Json j;
  std::ostringstream os;
  if (point_text.empty()) {
    Ideal witness = sing_ideal(alg);
    j["sing_ideal"] = witness.str();
    os << witness.str() << "\n";
    emit(g, j, os.str());
    return 0;
  }
  Point p = parse_point(chart.field, chart.vars, point_text);
  bool member = sing_membership(alg, p);
  j["member"] = member;
  os << (member ? "true" : "false") << "\n";
  emit(g, j, os.str());
  return member ? 0 : 1;
}

int cmd_order(const GlobalOpts& g, const std::string& algebra_text,
              const std::string& point_text) {
  Chart chart = make_chart(g);
  ReesAlg alg = parse_algebra(chart, algebra_text);
  Point p = parse_point(chart.field, chart.vars, point_text);
  Rational ord = order_at_point(alg, p);
  Json j;
  j["order"] = rat_str(ord);
  emit(g, j, rat_str(ord) + "\n");
  return 0;
}

int cmd_blowup(const GlobalOpts& g, const std::string& algebra_text,
               const std::vector<std::string>& center,
               const std::string& chart_var) {
  Chart chart = make_chart(g);
  BasicObject bo;
  bo.algebra = parse_algebra(chart, algebra_text);
  BasicObject out = blow_up(bo, center, chart_var);
  Json j;
  j["transform"] = out.algebra.str();
  emit(g, j, out.algebra.str() + "\n");
  return 0;
}

int cmd_compare(const GlobalOpts& g, const std::string& left_text,
                const std::string& right_text) {
  Chart chart = make_chart(g);
  ReesAlg left = parse_algebra(chart, left_text);
  ReesAlg right = parse_algebra(chart, right_text);
  CompareVerdict v = canonical_compare(left, right, g.horizon);
  Json j;
  j["equivalent"] = to_string(v.equivalent);
  j["left_in_right"] = to_string(v.left_in_right);
  j["right_in_left"] = to_string(v.right_in_left);
  j["certificate"] = v.certificate;
  std::ostringstream os;
  os << "equivalent: " << to_string(v.equivalent) << "\n"
     << "left in right: " << to_string(v.left_in_right) << "\n"
     << "right in left: " << to_string(v.right_in_left) << "\n"
     << "certificate: " << v.certificate << "\n";
  emit(g, j, os.str());
  return v.equivalent == Truth::yes ? 0 : 1;
}

int cmd_invariants(const GlobalOpts& g, const std::string& path, size_t step,
                   const std::string& point_text, const std::string& algebra) {
  ScenarioDoc doc = load_scenario_file(path);
  Trace trace = run_scenario(doc.scenario);
  SampleSets samples = sample_sets(doc, trace);
  size_t obj = 0;
  if (!algebra.empty()) {
    for (size_t i = 0; i < doc.scenario.names.size(); ++i) {
      if (doc.scenario.names[i] == algebra) obj = i;
    }
  }
  if (step >= trace.records.size()) throw Error("--step out of range");
  const BasicObject& bo = trace.records[step].objects[obj];
  Point p = parse_point(bo.chart().field, bo.chart().vars, point_text);
  Rational ord = order_at_point(bo.algebra, p);
  Rational w = word_at(trace, obj, step, p, g.horizon);
  Json j;
  j["algebra"] = doc.scenario.names[obj];
  j["step"] = step;
  j["order"] = rat_str(ord);
  j["word"] = rat_str(w);
  std::ostringstream os;
  os << "algebra: " << doc.scenario.names[obj] << "\n"
     << "step: " << step << "\n"
     << "order: " << rat_str(ord) << "\n"
     << "word: " << rat_str(w) << "\n";
  try {
    auto [tw, tc] = t_at(trace, obj, step, p, samples, g.horizon);
    j["t"] = Json::array({rat_str(tw), tc});
    os << "t: (" << rat_str(tw) << ", " << tc << ")\n";
  } catch (const Error& e) {
    j["t"] = e.what();
    os << "t: " << e.what() << "\n";
  }
  TangentData tau = tau_lower_bound(bo.algebra, p);
  j["tau_lower"] = tau.tau_lower;
  os << "tau lower bound: " << tau.tau_lower << "\n";
  if (!tau.note.empty()) {
    j["tau_note"] = tau.note;
    os << "tau note: " << tau.note << "\n";
  }
  emit(g, j, os.str());
  return 0;
}

int run_report(const GlobalOpts& g, const ScenarioDoc& doc, bool with_trace) {
  Report report = evaluate(doc, g.horizon);
  if (g.json) {
    std::cout << report.json(with_trace);
  } else {
    std::cout << report.text(with_trace);
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Rees-algebra calculus for local resolution sequences"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--char", g.characteristic,
                 "field characteristic (0 or a prime)");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--horizon", g.horizon.a_max, "normalization search bound");
  app.add_option("--check-depth", g.horizon.k_check,
                 "multiplicativity verification depth");

  std::string algebra_text, right_text, point_text, path, chart_var, builtin_name,
      algebra_name;
  std::vector<std::string> center;
  size_t step = 0;
  bool with_trace = false, list = false;

  auto add_vars = [&](CLI::App* cmd) {
    cmd->add_option("--vars", g.vars, "variable names")->delimiter(',');
  };

  auto* saturate = app.add_subcommand("saturate", "differential saturation");
  add_vars(saturate);
  saturate->add_option("algebra", algebra_text)->required();

  auto* sing = app.add_subcommand(
      "sing", "singular locus: membership with --point, witness ideal without");
  add_vars(sing);
  sing->add_option("algebra", algebra_text)->required();
  sing->add_option("--point", point_text);

  auto* order = app.add_subcommand("order", "Hironaka order at a point");
  add_vars(order);
  order->add_option("algebra", algebra_text)->required();
  order->add_option("--point", point_text)->required();

  auto* blowup = app.add_subcommand("blowup", "weighted transform of a blow-up");
  add_vars(blowup);
  blowup->add_option("algebra", algebra_text)->required();
  blowup->add_option("--center", center)->required()->delimiter(',');
  blowup->add_option("--chart", chart_var)->required();

  auto* compare =
      app.add_subcommand("compare", "weak-equivalence test of two algebras");
  add_vars(compare);
  compare->add_option("left", algebra_text)->required();
  compare->add_option("right", right_text)->required();

  auto* invariants =
      app.add_subcommand("invariants", "ord, w-ord, t, tau at a traced point");
  invariants->add_option("scenario", path)->required();
  invariants->add_option("--step", step)->required();
  invariants->add_option("--point", point_text)->required();
  invariants->add_option("--algebra", algebra_name);

  auto* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", path)->required();
  run->add_flag("--trace", with_trace, "print every intermediate algebra");

  auto* builtin = app.add_subcommand("builtin", "embedded scenarios");
  builtin->add_option("name", builtin_name);
  builtin->add_flag("--list", list);
  builtin->add_flag("--trace", with_trace);

  CLI11_PARSE(app, argc, argv);

  try {
    if (saturate->parsed()) return cmd_saturate(g, algebra_text);
    if (sing->parsed()) return cmd_sing(g, algebra_text, point_text);
    if (order->parsed()) return cmd_order(g, algebra_text, point_text);
    if (blowup->parsed()) return cmd_blowup(g, algebra_text, center, chart_var);
    if (compare->parsed()) return cmd_compare(g, algebra_text, right_text);
    if (invariants->parsed()) {
      return cmd_invariants(g, path, step, point_text, algebra_name);
    }
    if (run->parsed()) return run_report(g, load_scenario_file(path), with_trace);
    if (builtin->parsed()) {
      if (list) {
        Json j = Json::array();
        std::ostringstream os;
        for (const auto& b : rees::list_builtins()) {
          Json e;
          e["name"] = b.name;
          e["description"] = b.description;
          j.push_back(e);
          os << b.name << ": " << b.description << "\n";
        }
        emit(g, j, os.str());
        return 0;
      }
      if (builtin_name.empty()) {
        throw Error("builtin requires a name or --list");
      }
      const BuiltinScenario& b = find_builtin(builtin_name);
      return run_report(g, load_scenario(b.json_text), with_trace);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
