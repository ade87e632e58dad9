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

#include "reescalc/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rees {

namespace {

using Json = nlohmann::ordered_json;

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw Error("bad rational literal: " + text);
  }
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Step parse_step(const Json& j) {
  Step s;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "blowup") {
    s.kind = Step::Kind::blowup;
    for (const auto& v : j.at("center")) s.center.push_back(v.get<std::string>());
    s.chart_var = j.at("chart").get<std::string>();
  } else if (kind == "product") {
    s.kind = Step::Kind::product;
    for (const auto& v : j.at("vars")) s.new_vars.push_back(v.get<std::string>());
  } else if (kind == "restrict") {
    s.kind = Step::Kind::restrict_open;
    s.h = j.at("h").get<std::string>();
  } else if (kind == "change") {
    s.kind = Step::Kind::change;
    for (const auto& [var, text] : j.at("subs").items()) {
      s.subs.emplace_back(var, text.get<std::string>());
    }
  } else {
    throw Error("unknown step kind: " + kind);
  }
  return s;
}

Assertion parse_assertion(const Json& j) {
  Assertion a;
  a.kind = j.at("kind").get<std::string>();
  static const std::vector<std::string> kinds = {
      "sing", "order", "word", "t", "permissible", "exponent", "normalize"};
  if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) {
    throw Error("unknown assertion kind: " + a.kind);
  }
  a.step = j.value("step", size_t{0});
  a.algebra = j.at("algebra").get<std::string>();
  a.point = j.value("point", std::string());
  if (j.contains("center")) {
    for (const auto& v : j.at("center")) a.center.push_back(v.get<std::string>());
  }
  if (j.contains("expect")) {
    const Json& e = j.at("expect");
    if (e.is_boolean()) {
      a.expect_bool = e.get<bool>();
    } else if (e.is_number_integer()) {
      a.expect_value = std::to_string(e.get<long long>());
    } else if (e.is_string()) {
      a.expect_value = e.get<std::string>();
    } else if (e.is_array() && e.size() == 2) {
      // the pair form used by "t": [word, count]
      a.expect_value = e[0].is_string() ? e[0].get<std::string>()
                                        : std::to_string(e[0].get<long long>());
      a.expect_count = e[1].get<size_t>();
    } else {
      throw Error("bad expect field in assertion");
    }
  }
  if (j.contains("gens")) {
    for (const auto& g : j.at("gens")) a.expect_gens.push_back(g.get<std::string>());
  }
  return a;
}

size_t algebra_index(const ScenarioDoc& doc, const std::string& name) {
  for (size_t i = 0; i < doc.scenario.names.size(); ++i) {
    if (doc.scenario.names[i] == name) return i;
  }
  throw Error("unknown algebra name: " + name);
}

AssertionResult evaluate_assertion(const ScenarioDoc& doc, const Trace& trace,
                                   const SampleSets& samples, const Assertion& a,
                                   const Horizon& h) {
  AssertionResult res;
  res.assertion = a;
  try {
    size_t obj = algebra_index(doc, a.algebra);
    if (a.step >= trace.records.size()) throw Error("assertion step out of range");
    const BasicObject& bo = trace.records[a.step].objects[obj];
    const Chart& chart = bo.chart();
    auto point = [&]() {
      return parse_point(chart.field, chart.vars, a.point);
    };
    if (a.kind == "sing") {
      bool got = sing_membership(bo.algebra, point());
      res.passed = got == a.expect_bool;
      res.detail = std::string("got ") + (got ? "true" : "false");
    } else if (a.kind == "order") {
      Rational got = order_at_point(bo.algebra, point());
      res.passed = got == parse_rational(a.expect_value);
      res.detail = "got " + rational_str(got);
    } else if (a.kind == "word") {
      Rational got = word_at(trace, obj, a.step, point(), h);
      res.passed = got == parse_rational(a.expect_value);
      res.detail = "got " + rational_str(got);
    } else if (a.kind == "t") {
      auto [w, c] = t_at(trace, obj, a.step, point(), samples, h);
      res.passed = w == parse_rational(a.expect_value) && c == a.expect_count;
      res.detail = "got (" + rational_str(w) + ", " + std::to_string(c) + ")";
    } else if (a.kind == "permissible") {
      bool got = check_permissible(bo, a.center);
      res.passed = got == a.expect_bool;
      res.detail = std::string("got ") + (got ? "true" : "false");
    } else if (a.kind == "exponent") {
      const StepRecord& rec = trace.records[a.step];
      if (obj >= rec.exc_exponent.size()) {
        throw Error("no exceptional exponent recorded at this step");
      }
      Rational got = rec.exc_exponent[obj];
      res.passed = got == parse_rational(a.expect_value);
      res.detail = "got " + rational_str(got);
    } else if (a.kind == "normalize") {
      AlmostRees ar = almost_rees_normalize(bo.algebra, h);
      res.passed = ar.n == std::stoull(a.expect_value);
      res.detail = "got N=" + std::to_string(ar.n);
      if (res.passed && !a.expect_gens.empty()) {
        Ideal expect;
        for (const auto& g : a.expect_gens) {
          expect.gens.push_back(parse_poly(chart.field, chart.vars, g));
        }
        Truth eq = ideal_equal(ar.slice, expect.minimalized());
        res.passed = eq == Truth::yes;
        res.detail += ", slice " + ar.slice.str() + " [" + to_string(eq) + "]";
      }
    }
  } catch (const Error& e) {
    res.passed = false;
    res.detail = std::string("error: ") + e.what();
  }
  return res;
}

}  // namespace

ScenarioDoc load_scenario(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("scenario parse error: ") + e.what());
  }
  ScenarioDoc doc;
  doc.name = j.value("name", std::string());
  doc.description = j.value("description", std::string());
  uint64_t p = j.value("char", uint64_t{0});
  std::vector<std::string> vars;
  for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
  doc.scenario.chart = Chart::make(Field(p), vars);
  if (j.contains("exclusions")) {
    for (const auto& h : j.at("exclusions")) {
      doc.scenario.chart.exclusions.push_back(
          parse_poly(doc.scenario.chart.field, vars, h.get<std::string>()));
    }
  }
  if (!j.contains("algebras") || j.at("algebras").empty()) {
    throw Error("scenario must declare at least one algebra");
  }
  for (const auto& [name, text] : j.at("algebras").items()) {
    doc.scenario.names.push_back(name);
    doc.scenario.algebras.push_back(
        parse_algebra(doc.scenario.chart, text.get<std::string>()));
  }
  if (j.contains("steps")) {
    for (const auto& s : j.at("steps")) doc.scenario.steps.push_back(parse_step(s));
  }
  if (j.contains("assertions")) {
    for (const auto& a : j.at("assertions")) {
      doc.assertions.push_back(parse_assertion(a));
    }
  }
  if (j.contains("samples")) {
    for (const auto& [key, pts] : j.at("samples").items()) {
      size_t step = std::stoull(key);
      for (const auto& p2 : pts) {
        doc.samples[step].push_back(p2.get<std::string>());
      }
    }
  }
  return doc;
}

ScenarioDoc load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

SampleSets sample_sets(const ScenarioDoc& doc, const Trace& trace) {
  SampleSets out(trace.records.size());
  for (const auto& [step, texts] : doc.samples) {
    if (step >= trace.records.size()) {
      throw Error("sample step index out of range");
    }
    const Chart& chart = trace.records[step].objects[0].chart();
    for (const auto& t : texts) {
      out[step].push_back(parse_point(chart.field, chart.vars, t));
    }
  }
  return out;
}

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AssertionResult& r) { return r.passed; });
}

std::string Report::text(bool with_trace) const {
  std::ostringstream os;
  if (!doc.name.empty()) os << "scenario: " << doc.name << "\n";
  if (!doc.description.empty()) os << doc.description << "\n";
  for (size_t i = 0; i < trace.records.size(); ++i) {
    const StepRecord& rec = trace.records[i];
    os << "step " << i << ": " << rec.description;
    if (!rec.exc_exponent.empty()) {
      os << "  (exceptional exponents:";
      for (size_t a = 0; a < rec.exc_exponent.size(); ++a) {
        os << " " << trace.names[a] << "=" << rec.exc_exponent[a];
      }
      os << ")";
    }
    os << "\n";
    if (with_trace) {
      for (size_t a = 0; a < rec.objects.size(); ++a) {
        os << "  " << trace.names[a] << " = " << rec.objects[a].algebra.str()
           << "\n";
      }
    }
  }
  size_t passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "pass" : "FAIL") << ": " << r.assertion.kind << " step="
       << r.assertion.step << " " << r.assertion.algebra;
    if (!r.assertion.point.empty()) os << " at \"" << r.assertion.point << "\"";
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
    if (r.passed) ++passed;
  }
  os << "result: " << (all_passed() ? "PASS" : "FAIL") << " (" << passed << "/"
     << results.size() << " assertions)\n";
  return os.str();
}

std::string Report::json(bool with_trace) const {
  Json j;
  j["name"] = doc.name;
  j["passed"] = all_passed();
  Json steps = Json::array();
  for (size_t i = 0; i < trace.records.size(); ++i) {
    const StepRecord& rec = trace.records[i];
    Json s;
    s["index"] = i;
    s["description"] = rec.description;
    if (!rec.exc_exponent.empty()) {
      Json exps = Json::object();
      for (size_t a = 0; a < rec.exc_exponent.size(); ++a) {
        std::ostringstream os;
        os << rec.exc_exponent[a];
        exps[trace.names[a]] = os.str();
      }
      s["exceptional_exponents"] = exps;
    }
    if (with_trace) {
      Json algs = Json::object();
      for (size_t a = 0; a < rec.objects.size(); ++a) {
        algs[trace.names[a]] = rec.objects[a].algebra.str();
      }
      s["algebras"] = algs;
    }
    steps.push_back(s);
  }
  j["steps"] = steps;
  Json asserts = Json::array();
  for (const auto& r : results) {
    Json a;
    a["kind"] = r.assertion.kind;
    a["step"] = r.assertion.step;
    a["algebra"] = r.assertion.algebra;
    if (!r.assertion.point.empty()) a["point"] = r.assertion.point;
    a["passed"] = r.passed;
    a["detail"] = r.detail;
    asserts.push_back(a);
  }
  j["assertions"] = asserts;
  return j.dump(2) + "\n";
}

Report evaluate(const ScenarioDoc& doc, const Horizon& h) {
  Report report;
  report.doc = doc;
  report.trace = run_scenario(doc.scenario);
  SampleSets samples = sample_sets(doc, report.trace);
  for (const auto& a : doc.assertions) {
    report.results.push_back(
        evaluate_assertion(doc, report.trace, samples, a, h));
  }
  return report;
}

}  // namespace rees
