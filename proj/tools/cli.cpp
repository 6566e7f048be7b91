// Copyright 2026 The nmr Authors. All Rights Reserved.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nmr/defaults/default_logic.h"
#include "nmr/defeat/defeat.h"
#include "nmr/dsl/document.h"
#include "nmr/dsl/parser.h"
#include "nmr/dsl/printer.h"
#include "nmr/errors.h"
#include "nmr/io/json.h"
#include "nmr/prob/checks.h"
#include "nmr/prob/lotteryization.h"
#include "nmr/scenarios/scenarios.h"

namespace nmr::cli {

namespace {

enum class Format { kText, kJson, kCsv };

Format format_of(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

std::string exact(const Rational& r) { return to_string(r) + " (" + to_decimal(r, 6) + ")"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class FileError : public InputError {
 public:
  FileError(const std::string& path, const ParseError& e)
      : InputError(path + ":" + e.what()) {}
};

TheoryDocument load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw FileError(path, e);
  }
}

std::vector<std::string> conclusions_of(const DefaultTheory& t, const Extension& e) {
  std::map<std::string, const DefaultRule*> by_id;
  for (const auto& d : t.defaults) by_id[d.id] = &d;
  std::vector<std::string> out;
  for (const auto& id : e.generating_defaults) out.push_back(by_id.at(id)->consequent.to_string());
  return out;
}

// Key/value reports shared by the verify subcommands.
struct Field {
  std::string key;
  Json json;
  std::string text;
};

Field field(std::string key, const Rational& r) { return {std::move(key), to_string(r), exact(r)}; }
Field field(std::string key, bool b) { return {std::move(key), b, b ? "true" : "false"}; }
Field field(std::string key, long long n) { return {std::move(key), n, std::to_string(n)}; }
Field field(std::string key, std::string s) { return {key, s, s}; }

void emit(std::ostream& out, Format format, const std::vector<Field>& fields) {
  switch (format) {
    case Format::kJson: {
      Json j = Json::object();
      for (const auto& f : fields) j[f.key] = f.json;
      out << j.dump(2) << "\n";
      return;
    }
    case Format::kCsv:
      csv_row(out, {"key", "value"});
      for (const auto& f : fields) csv_row(out, {f.key, f.json.is_string() ? f.json.get<std::string>() : f.json.dump()});
      return;
    case Format::kText: {
      std::size_t width = 0;
      for (const auto& f : fields) width = std::max(width, f.key.size());
      for (const auto& f : fields) out << pad(f.key, width + 2) << f.text << "\n";
      return;
    }
  }
}

struct Style {
  bool color = false;

  std::string status(WarrantStatus s) const {
    const std::string name(to_string(s));
    if (!color) return name;
    const char* code = s == WarrantStatus::kWarranted ? "32" : s == WarrantStatus::kBelowThreshold ? "2" : "31";
    return "\033[" + std::string(code) + "m" + name + "\033[0m";
  }
};

// --- extensions and query -------------------------------------------------

void print_extensions(std::ostream& out, Format format, const DefaultTheory& t,
                      const std::vector<Extension>& exts) {
  switch (format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const auto& e : exts) {
        Json j = to_json(e);
        j["conclusions"] = conclusions_of(t, e);
        list.push_back(std::move(j));
      }
      out << Json{{"count", exts.size()}, {"extensions", std::move(list)}}.dump(2) << "\n";
      return;
    }
    case Format::kCsv:
      csv_row(out, {"extension", "generating_defaults", "conclusions", "trivial"});
      for (std::size_t i = 0; i < exts.size(); ++i)
        csv_row(out, {std::to_string(i + 1), join(exts[i].generating_defaults, ";"),
                      join(conclusions_of(t, exts[i]), ";"), exts[i].trivial ? "true" : "false"});
      return;
    case Format::kText:
      out << exts.size() << (exts.size() == 1 ? " extension" : " extensions") << "\n";
      for (std::size_t i = 0; i < exts.size(); ++i) {
        const auto& e = exts[i];
        out << "extension " << i + 1 << ": ";
        if (e.trivial) {
          out << "trivial (facts are inconsistent)\n";
          continue;
        }
        out << "{" << join(e.generating_defaults, ", ") << "}\n";
        const auto cs = conclusions_of(t, e);
        if (!cs.empty()) out << "  conclusions: " << join(cs, "; ") << "\n";
      }
      return;
  }
}

// --- warrant reports ------------------------------------------------------

std::string describe(const CandidateReport& e) {
  std::string s = e.conclusion.to_string();
  if (e.evidence.kind() != Connective::kTrue) s += " given " + e.evidence.to_string();
  return s;
}

void print_report(std::ostream& out, Format format, const WarrantReport& r, const Style& style) {
  switch (format) {
    case Format::kJson:
      out << to_json(r).dump(2) << "\n";
      return;
    case Format::kCsv:
      csv_row(out, {"conclusion", "evidence", "status", "probability", "strength", "defeaters", "provenance"});
      for (const auto& e : r.entries) {
        std::vector<std::string> rules;
        for (const auto& p : e.provenance) rules.push_back(p.rule);
        csv_row(out, {e.conclusion.to_string(), e.evidence.to_string(), std::string(to_string(e.status)),
                      to_string(e.probability), e.reason ? to_string(e.reason->strength) : "",
                      std::to_string(e.defeaters.size()), join(rules, ";")});
      }
      return;
    case Format::kText: {
      const auto& c = r.config;
      out << "config: threshold " << to_string(c.acceptance_threshold) << ", tie_epsilon "
          << to_string(c.tie_epsilon) << ", gate " << to_string(c.gate) << ", relevance "
          << to_string(c.relevance) << "\n";
      std::size_t width = 10;
      for (const auto& e : r.entries) width = std::max(width, describe(e).size());
      for (const auto& e : r.entries) {
        out << pad(describe(e), width + 2) << pad(style.status(e.status), style.color ? 31 : 22)
            << "Pr " << exact(e.probability) << "\n";
        for (const auto& p : e.provenance) out << "    " << p.rule << ": " << p.detail << "\n";
      }
      if (!r.sets.empty()) out << "minimal inconsistent sets:\n";
      for (const auto& s : r.sets) {
        std::vector<std::string> members;
        for (auto i : s.members) members.push_back(r.entries[i].conclusion.to_string());
        out << "  #" << s.id << " {" << join(members, ", ") << "}";
        if (s.relevance) out << " relevance " << to_string(s.relevance->relevance);
        out << (s.defeated ? " defeated" : " not defeated");
        if (!s.note.empty()) out << " (" << s.note << ")";
        out << "\n";
      }
      for (const auto& w : r.warnings) out << "warning: " << w << "\n";
      return;
    }
  }
}

void print_check(std::ostream& out, Format format, const DefeaterCheck& c) {
  switch (format) {
    case Format::kJson:
      out << to_json(c).dump(2) << "\n";
      return;
    case Format::kCsv:
      csv_row(out, {"i", "condition", "lhs", "rhs", "below_rhs"});
      for (std::size_t i = 0; i < c.lhs.size(); ++i)
        csv_row(out, {std::to_string(i + 1), c.conditions[i].to_string(), to_string(c.lhs[i]),
                      to_string(c.rhs), c.lhs[i] < c.rhs ? "true" : "false"});
      return;
    case Format::kText:
      out << "target     " << c.target.to_string() << "\n";
      out << "rhs        " << exact(c.rhs) << "\n";
      for (std::size_t i = 0; i < c.lhs.size(); ++i)
        out << "lhs[" << i + 1 << "]     " << exact(c.lhs[i]) << (c.lhs[i] < c.rhs ? "  <" : "  >=")
            << " rhs  given " << c.conditions[i].to_string() << "\n";
      out << "holds      " << (c.holds ? "true" : "false") << "\n";
      if (c.relevance) out << "relevance  " << to_string(c.relevance->relevance) << "\n";
      for (const auto& w : c.warnings) out << "warning: " << w << "\n";
      return;
  }
}

// --- shared option groups -------------------------------------------------

struct ScenarioFlags {
  std::optional<int> n, m;
  std::optional<std::string> q, fair_weight, good_rate, p_good, p_bad;

  void add(CLI::App* app) {
    app->add_option("--n", n, "Number of tickets, statements or partition cells")->check(CLI::PositiveNumber);
    app->add_option("--m", m, "Size of the second partition (korb)")->check(CLI::PositiveNumber);
    app->add_option("--q", q, "Probability of the small side, as p/q or decimal");
    app->add_option("--fair-weight", fair_weight, "Probability that a draw has a winner");
    app->add_option("--good-rate", good_rate, "Probability that the author is competent");
    app->add_option("--p-good", p_good, "Pr(statement | competent)");
    app->add_option("--p-bad", p_bad, "Pr(statement | not competent)");
  }

  bool any() const { return n || m || q || fair_weight || good_rate || p_good || p_bad; }

  ScenarioParams params() const {
    auto r = [](const std::optional<std::string>& s) -> std::optional<Rational> {
      if (!s) return std::nullopt;
      return parse_rational(*s);
    };
    return {n, m, r(q), r(fair_weight), r(good_rate), r(p_good), r(p_bad)};
  }
};

struct ConfigFlags {
  std::optional<std::string> gate, relevance, threshold, tie_epsilon, tolerance;

  void add(CLI::App* app) {
    app->add_option("--gate", gate, "Acceptance gate for undercutters")->check(CLI::IsMember({"on", "off"}));
    app->add_option("--relevance", relevance, "Collective defeat relevance requirement")
        ->check(CLI::IsMember({"always", "pollock"}));
    app->add_option("--threshold", threshold, "Acceptance threshold (strict)");
    app->add_option("--tie-epsilon", tie_epsilon, "Strength difference still counted as a tie");
    app->add_option("--relevance-tolerance", tolerance, "Margin treated as zero in relevance tests");
  }

  EngineConfig config(const ConfigOverrides& base = {}) const {
    EngineConfig c;
    base.apply_to(c);
    if (gate) c.gate = *gate == "on" ? GateMode::kOn : GateMode::kOff;
    if (relevance) c.relevance = *relevance == "always" ? RelevanceMode::kAlways : RelevanceMode::kPollock;
    if (threshold) c.acceptance_threshold = parse_rational(*threshold);
    if (tie_epsilon) c.tie_epsilon = parse_rational(*tie_epsilon);
    if (tolerance) c.relevance_tolerance = parse_rational(*tolerance);
    c.validate();
    return c;
  }
};

bool is_scenario(const std::string& name) {
  const auto& names = scenario_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string scenario_summary(const std::string& name) {
  static const std::map<std::string, std::string> text{
      {"fair_lottery", "exactly one of n tickets wins (--n)"},
      {"korb", "p split into m cells, its complement q into n cells (--m --n --q)"},
      {"lotteryization", "a probable p split into n equiprobable disjuncts (--q --n)"},
      {"nixon", "quaker republican with conflicting defaults"},
      {"preface", "n statements with a shared competence cause (--n --good-rate --p-good --p-bad)"},
      {"tweety", "bird kinds excluded by default"},
      {"unfair_lottery", "some draws have no winner (--n --fair-weight)"},
  };
  return text.at(name);
}

std::optional<DefeaterCheck> scenario_check(const Scenario& s) {
  if (!s.model) return std::nullopt;
  if (s.name == "preface") return check_preface_defeater(*s.model, s.statements);
  if (s.name == "unfair_lottery") return check_unfair_lottery(*s.model, s.statements);
  return std::nullopt;
}

// --- verify ---------------------------------------------------------------

const std::map<std::string, std::string>& verify_aliases() {
  static const std::map<std::string, std::string> aliases{
      {"eq5", "preface-defeater"},      {"eq10", "unfair-lottery"},
      {"eq15", "condition-probability"}, {"eq16", "lottery-value"},
      {"eq18", "warrant-threshold"}};
  return aliases;
}

int run_verify(std::ostream& out, Format format, std::string what, const ScenarioFlags& sf,
               const std::string& mode_name) {
  if (auto it = verify_aliases().find(what); it != verify_aliases().end()) what = it->second;
  const ValueMode mode = mode_name == "exact" ? ValueMode::kExact : ValueMode::kPaper;
  const ScenarioParams p = sf.params();
  if (what == "preface-defeater") {
    const Scenario s = make_preface(p.n.value_or(4), p.good_rate.value_or(Rational(9, 10)),
                                    p.p_good.value_or(Rational(19, 20)), p.p_bad.value_or(Rational(1, 2)));
    print_check(out, format, check_preface_defeater(*s.model, s.statements));
    return kOk;
  }
  if (what == "unfair-lottery") {
    const Scenario s = make_unfair_lottery(p.n.value_or(5), p.fair_weight.value_or(Rational(99, 100)));
    print_check(out, format, check_unfair_lottery(*s.model, s.statements));
    return kOk;
  }
  const Rational q = p.q.value_or(Rational(1, 10));
  if (what == "warrant-threshold") {
    const WarrantThreshold t = warrant_threshold(q, mode);
    std::vector<Field> fields{field("mode", std::string(to_string(t.mode))), field("q", q),
                              field("threshold", static_cast<long long>(t.n)), field("value", t.value)};
    if (t.n > 2) fields.push_back(field("previous_value", t.previous_value));
    fields.push_back(field("bound", t.bound));
    emit(out, format, fields);
    return kOk;
  }
  const LotteryizationParams lp{q, p.n.value_or(5)};
  lp.validate();
  if (what == "lottery-value") {
    const Rational v = mode == ValueMode::kPaper ? lotteryization_value_paper(lp) : lotteryization_value_exact(lp);
    emit(out, format, {field("mode", std::string(to_string(mode))), field("q", q),
                       field("n", static_cast<long long>(lp.n)), field("value", v),
                       field("above_half", v > Rational(1, 2))});
    return kOk;
  }
  if (what == "condition-probability") {
    const auto c = compare_lotteryization(lp);
    emit(out, format, {field("q", q), field("n", static_cast<long long>(lp.n)),
                       field("paper_condition_probability", c.paper_condition_probability),
                       field("exact_condition_probability", c.exact_condition_probability),
                       field("paper_value", c.paper_value), field("exact_value", c.exact_value),
                       field("discrepancy", c.discrepancy)});
    return kOk;
  }
  throw InputError("unknown check '" + what + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Options& options) {
  CLI::App app{"Default logic, defeasible warrant and exact probability checks", "nmr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nmr 0.1.0");

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  // extensions
  auto* ext_cmd = app.add_subcommand("extensions", "List the extensions of a default theory");
  std::string ext_file;
  std::optional<std::size_t> max_defaults;
  ext_cmd->add_option("file", ext_file, "Theory file (.dt)")->required();
  ext_cmd->add_option("--max-defaults", max_defaults, "Refuse theories with more ground defaults");
  add_format(ext_cmd);

  // query
  auto* query_cmd = app.add_subcommand("query", "Ask whether a formula follows from a theory");
  std::string query_file, query_text, mode_name = "skeptical";
  query_cmd->add_option("file", query_file, "Theory file (.dt)")->required();
  query_cmd->add_option("formula", query_text, "Ground formula")->required();
  query_cmd->add_option("--mode", mode_name, "Entailment mode")
      ->check(CLI::IsMember({"skeptical", "credulous"}));
  query_cmd->add_option("--max-defaults", max_defaults, "Refuse theories with more ground defaults");
  add_format(query_cmd);

  // warrant
  auto* warrant_cmd = app.add_subcommand("warrant", "Compute warrant statuses for a scenario or file");
  std::string warrant_target;
  ScenarioFlags warrant_sf;
  ConfigFlags warrant_cf;
  warrant_cmd->add_option("source", warrant_target, "Scenario name or .dt file")->required();
  warrant_sf.add(warrant_cmd);
  warrant_cf.add(warrant_cmd);
  add_format(warrant_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate a probabilistic identity exactly");
  std::string verify_what, value_mode = "paper";
  ScenarioFlags verify_sf;
  std::vector<std::string> checks;
  for (const auto& [alias, name] : verify_aliases()) {
    checks.push_back(alias);
    checks.push_back(name);
  }
  verify_cmd->add_option("check", verify_what, "preface-defeater, unfair-lottery, condition-probability, "
                                                "lottery-value or warrant-threshold")
      ->required()
      ->check(CLI::IsMember(checks));
  verify_sf.add(verify_cmd);
  verify_cmd->add_option("--mode", value_mode, "Value function")->check(CLI::IsMember({"paper", "exact"}));
  add_format(verify_cmd);

  // scenario
  auto* scenario_cmd = app.add_subcommand("scenario", "Built-in scenarios");
  scenario_cmd->require_subcommand(1);
  auto* list_cmd = scenario_cmd->add_subcommand("list", "List scenario names");
  add_format(list_cmd);
  auto* run_cmd = scenario_cmd->add_subcommand("run", "Run every applicable engine on a scenario");
  auto* dump_cmd = scenario_cmd->add_subcommand("dump", "Print a scenario as a theory document");
  std::string scenario_name;
  ScenarioFlags scenario_sf;
  ConfigFlags scenario_cf;
  for (auto* sub : {run_cmd, dump_cmd}) {
    sub->add_option("name", scenario_name, "Scenario name")->required()->check(CLI::IsMember(scenario_names()));
    scenario_sf.add(sub);
    add_format(sub);
  }
  scenario_cf.add(run_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const Format format = format_of(format_name);
  const Style style{options.color && format == Format::kText};
  try {
    if (*ext_cmd || *query_cmd) {
      const bool is_query = static_cast<bool>(*query_cmd);
      const TheoryDocument doc = load(is_query ? query_file : ext_file);
      if (!doc.has_theory()) throw InputError("file declares no facts or defaults");
      ExtensionOptions eo;
      doc.config.apply_to(eo);
      if (max_defaults) eo.max_defaults = *max_defaults;
      const DefaultTheory theory = theory_of(doc);
      const auto exts = extensions(theory, eo);
      if (!is_query) {
        print_extensions(out, format, theory, exts);
        return kOk;
      }
      const Formula q = parse_formula(query_text);
      if (!q.is_ground()) throw InputError("query must be ground");
      const QueryMode mode = mode_name == "credulous" ? QueryMode::kCredulous : QueryMode::kSkeptical;
      const QueryResult r = query(exts, q, mode);
      switch (format) {
        case Format::kJson: {
          Json witnesses = Json::array();
          for (auto i : r.witnesses)
            witnesses.push_back({{"extension", i + 1}, {"generating_defaults", exts[i].generating_defaults}});
          out << Json{{"query", q.to_string()}, {"mode", mode_name}, {"answer", r.answer},
                      {"vacuous", r.vacuous}, {"witnesses", std::move(witnesses)}}
                     .dump(2)
              << "\n";
          break;
        }
        case Format::kCsv:
          csv_row(out, {"query", "mode", "answer", "witnesses"});
          {
            std::vector<std::string> ws;
            for (auto i : r.witnesses) ws.push_back(std::to_string(i + 1));
            csv_row(out, {q.to_string(), mode_name, r.answer ? "true" : "false", join(ws, ";")});
          }
          break;
        case Format::kText:
          out << (r.answer ? "true" : "false") << "\n";
          if (r.vacuous) out << "(no extensions)\n";
          for (auto i : r.witnesses)
            out << (r.answer ? "witness" : "counterexample") << ": extension " << i + 1 << " {"
                << join(exts[i].generating_defaults, ", ") << "}\n";
          break;
      }
      return r.answer ? kOk : kFalse;
    }

    if (*warrant_cmd) {
      WarrantProblem problem{WorldModel({"unused"}, {{{true}, 1}}), {}, {}, {}};
      EngineConfig config;
      if (is_scenario(warrant_target)) {
        problem = make_scenario(warrant_target, warrant_sf.params()).warrant_problem();
        config = warrant_cf.config();
      } else {
        if (warrant_sf.any()) throw InputError("scenario parameters only apply to built-in scenarios");
        if (!std::filesystem::exists(warrant_target))
          throw InputError("'" + warrant_target + "' is neither a scenario nor a readable file");
        const TheoryDocument doc = load(warrant_target);
        if (!doc.has_model()) throw InputError("file declares no worlds");
        if (doc.candidates.empty()) throw InputError("file declares no candidates");
        problem = problem_of(doc);
        config = warrant_cf.config(doc.config);
      }
      print_report(out, format, compute_warrants(problem, config), style);
      return kOk;
    }

    if (*verify_cmd) return run_verify(out, format, verify_what, verify_sf, value_mode);

    if (*list_cmd) {
      switch (format) {
        case Format::kJson: {
          Json list = Json::array();
          for (const auto& n : scenario_names()) list.push_back({{"name", n}, {"description", scenario_summary(n)}});
          out << list.dump(2) << "\n";
          break;
        }
        case Format::kCsv:
          csv_row(out, {"name", "description"});
          for (const auto& n : scenario_names()) csv_row(out, {n, scenario_summary(n)});
          break;
        case Format::kText:
          for (const auto& n : scenario_names()) out << pad(n, 16) << scenario_summary(n) << "\n";
          break;
      }
      return kOk;
    }

    if (*dump_cmd) {
      const Scenario s = make_scenario(scenario_name, scenario_sf.params());
      const std::string dsl = print_document(to_document(s));
      if (format == Format::kJson) {
        Json j{{"name", s.name}, {"document", dsl}};
        j["model"] = s.model ? model_to_json(*s.model) : Json(nullptr);
        out << j.dump(2) << "\n";
      } else {
        out << "% scenario " << s.name << "\n" << dsl;
      }
      return kOk;
    }

    if (*run_cmd) {
      const Scenario s = make_scenario(scenario_name, scenario_sf.params());
      const EngineConfig config = scenario_cf.config();
      std::optional<DefaultTheory> theory;
      std::vector<Extension> exts;
      if (s.theory) {
        theory = s.grounded_theory();
        exts = extensions(*theory);
      }
      std::optional<WarrantReport> report;
      if (s.model && !s.candidates.empty()) report = compute_warrants(s.warrant_problem(), config);
      const auto check = scenario_check(s);
      switch (format) {
        case Format::kJson: {
          Json j{{"name", s.name}};
          if (theory) {
            Json list = Json::array();
            for (const auto& e : exts) {
              Json x = to_json(e);
              x["conclusions"] = conclusions_of(*theory, e);
              list.push_back(std::move(x));
            }
            j["extensions"] = std::move(list);
          }
          if (report) j["warrant"] = to_json(*report);
          if (check) j["check"] = to_json(*check);
          j["notes"] = s.expectations.notes;
          out << j.dump(2) << "\n";
          break;
        }
        case Format::kCsv:
          if (report) print_report(out, format, *report, style);
          else if (theory) print_extensions(out, format, *theory, exts);
          break;
        case Format::kText:
          out << "scenario " << s.name << "\n";
          for (const auto& n : s.expectations.notes) out << "note: " << n << "\n";
          if (theory) {
            out << "\n";
            print_extensions(out, format, *theory, exts);
          }
          if (check) {
            out << "\n";
            print_check(out, format, *check);
          }
          if (report) {
            out << "\n";
            print_report(out, format, *report, style);
          }
          break;
      }
      return kOk;
    }
  } catch (const LimitError& e) {
    err << "nmr: limit: " << e.what() << "\n";
    return kLimit;
  } catch (const InputError& e) {
    err << "nmr: error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "nmr: internal error: " << e.what() << "\n";
    return kLimit;
  }
  return kOk;
}

}  // namespace nmr::cli
