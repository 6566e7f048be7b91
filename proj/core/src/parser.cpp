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

#include "nmr/dsl/parser.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "nmr/rational.h"

namespace nmr {

ParseError::ParseError(int line, int column, const std::string& message)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::set<std::string, std::less<>> kReserved = {"true", "false", "exactly_one",
                                                      "at_least_one", "given", "by"};

struct Position {
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TheoryDocument document() {
    TheoryDocument doc;
    skip_space();
    while (!at_end()) {
      statement(doc);
      skip_space();
    }
    finish(doc);
    return doc;
  }

  Formula lone_formula() {
    skip_space();
    Formula f = formula();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "' after formula");
    return f;
  }

 private:
  // --- scanning -----------------------------------------------------------

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(here_, message); }
  [[noreturn]] void fail_at(Position p, const std::string& message) const {
    throw ParseError(p.line, p.column, message);
  }

  std::string describe_next() const {
    if (at_end()) return "end of input";
    return "'" + std::string(1, peek()) + "'";
  }

  bool accept(std::string_view sym) {
    skip_space();
    if (text_.substr(pos_, sym.size()) != sym) return false;
    for (std::size_t i = 0; i < sym.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view sym, std::string_view what) {
    if (!accept(sym)) fail("expected '" + std::string(sym) + "' " + std::string(what) + ", found " + describe_next());
  }

  // A maximal run of word characters, or empty.
  std::string word() {
    skip_space();
    std::string out;
    while (!at_end() && is_word(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  std::string identifier(std::string_view what) {
    skip_space();
    const Position start = here_;
    if (!is_lower(peek())) fail("expected " + std::string(what) + ", found " + describe_next());
    std::string id = word();
    for (char c : id)
      if (is_upper(c)) fail_at(start, "identifiers must be lowercase: '" + id + "'");
    return id;
  }

  // Characters that can make up a rational literal.
  std::string rational_text() {
    skip_space();
    std::string out;
    while (!at_end()) {
      const char c = peek();
      const bool sign_after_exp = (c == '-' || c == '+') && !out.empty() && (out.back() == 'e' || out.back() == 'E');
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == 'e' || c == 'E' ||
            sign_after_exp || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))))
        break;
      out += c;
      advance();
    }
    return out;
  }

  Rational rational(std::string_view what) {
    skip_space();
    const Position start = here_;
    const std::string text = rational_text();
    if (text.empty()) fail("expected " + std::string(what) + ", found " + describe_next());
    try {
      return parse_rational(text);
    } catch (const InputError& e) {
      fail_at(start, e.what());
    }
  }

  // --- formulas -----------------------------------------------------------

  Formula formula() {
    Formula lhs = implication();
    while (accept("<->")) lhs = Formula::Iff(lhs, implication());
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    skip_space();
    if (peek() == '-' && peek(1) == '>') {
      accept("->");
      return Formula::Implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept("|")) parts.push_back(conjunction());
    return Formula::Or(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept("&")) parts.push_back(unary());
    return Formula::And(std::move(parts));
  }

  Formula unary() {
    if (accept("~")) return Formula::Not(unary());
    return primary();
  }

  std::vector<Formula> formula_list() {
    expect("(", "to open the argument list");
    std::vector<Formula> out{formula()};
    while (accept(",")) out.push_back(formula());
    expect(")", "to close the argument list");
    return out;
  }

  Formula primary() {
    skip_space();
    if (accept("(")) {
      Formula f = formula();
      expect(")", "to close the parenthesis");
      return f;
    }
    const Position start = here_;
    if (is_upper(peek())) fail("variables may only appear as predicate arguments");
    if (!is_lower(peek())) fail("expected a formula, found " + describe_next());
    const std::string id = identifier("an atom");
    if (id == "true") return Formula::True();
    if (id == "false") return Formula::False();
    if (id == "exactly_one") return Formula::ExactlyOne(formula_list());
    if (id == "at_least_one") return Formula::AtLeastOne(formula_list());
    if (kReserved.contains(id)) fail_at(start, "unexpected keyword '" + id + "'");
    skip_space();
    if (peek() != '(') return Formula::Atom(id);
    accept("(");
    std::vector<std::string> args;
    do {
      skip_space();
      if (!is_lower(peek()) && !is_upper(peek())) fail("expected a constant or variable, found " + describe_next());
      args.push_back(word());
    } while (accept(","));
    expect(")", "to close the predicate arguments");
    return Formula::Apply(id, std::move(args));
  }

  // --- statements ---------------------------------------------------------

  void end_statement() { expect(".", "at end of statement"); }

  void statement(TheoryDocument& doc) {
    const Position start = here_;
    const std::string kw = word();
    if (kw.empty()) fail("expected a statement, found " + describe_next());
    if (kw == "domain") {
      expect("{", "after 'domain'");
      if (!accept("}")) {
        do doc.domain.push_back(identifier("a constant"));
        while (accept(","));
        expect("}", "to close the domain");
      }
    } else if (kw == "fact") {
      expect(":", "after 'fact'");
      doc.facts.push_back(formula());
    } else if (kw == "default") {
      default_rule(doc);
    } else if (kw == "atoms") {
      if (atoms_declared_) fail_at(start, "atoms declared twice");
      atoms_declared_ = true;
      do {
        skip_space();
        const Position at = here_;
        std::string a = identifier("an atom name");
        if (!atom_set_.insert(a).second) fail_at(at, "duplicate atom '" + a + "'");
        doc.atoms.push_back(std::move(a));
      } while (accept(","));
    } else if (kw == "world") {
      world(doc);
    } else if (kw == "background") {
      expect(":", "after 'background'");
      doc.background.push_back(formula());
      model_refs_.emplace_back(start, doc.background.back());
    } else if (kw == "candidate") {
      expect(":", "after 'candidate'");
      Candidate c{formula(), Formula::True()};
      skip_space();
      if (is_lower(peek()) && text_.substr(pos_, 5) == "given" && !is_word(peek(5))) {
        word();
        c.evidence = formula();
      }
      model_refs_.emplace_back(start, c.conclusion);
      model_refs_.emplace_back(start, c.evidence);
      doc.candidates.push_back(std::move(c));
    } else if (kw == "undercut") {
      expect(":", "after 'undercut'");
      UndercutProbe u;
      u.target = formula();
      skip_space();
      const Position at = here_;
      if (word() != "by") fail_at(at, "expected 'by' in undercut statement");
      u.condition = formula();
      model_refs_.emplace_back(start, u.target);
      model_refs_.emplace_back(start, u.condition);
      doc.undercuts.push_back(std::move(u));
    } else if (kw == "config") {
      config(doc);
    } else {
      fail_at(start, "unknown statement '" + kw + "'");
    }
    end_statement();
    last_ = start;
  }

  void default_rule(TheoryDocument& doc) {
    skip_space();
    const Position at = here_;
    DefaultRule d;
    d.id = identifier("a default id");
    if (!default_ids_.insert(d.id).second) fail_at(at, "duplicate default id '" + d.id + "'");
    expect(":", "after the default id");
    skip_space();
    d.prerequisite = peek() == ':' ? Formula::True() : formula();
    expect(":", "after the prerequisite");
    d.justifications.push_back(formula());
    while (accept(",")) d.justifications.push_back(formula());
    expect("/", "before the consequent");
    d.consequent = formula();
    doc.defaults.push_back(std::move(d));
  }

  void world(TheoryDocument& doc) {
    skip_space();
    const Position at = here_;
    std::string bits;
    while (!at_end() && is_word(peek())) {
      bits += peek();
      advance();
    }
    if (bits.empty()) fail("expected world bits, found " + describe_next());
    for (char c : bits)
      if (c != '0' && c != '1') fail_at(at, "world bits must be 0 or 1: '" + bits + "'");
    if (!atoms_declared_) fail_at(at, "world bits refer to undeclared atoms; declare 'atoms' first");
    if (bits.size() != doc.atoms.size())
      fail_at(at, "world has " + std::to_string(bits.size()) + " bits but " +
                      std::to_string(doc.atoms.size()) + " atoms are declared");
    if (!world_set_.insert(bits).second) fail_at(at, "duplicate world " + bits);
    skip_space();
    const Position kw = here_;
    if (word() != "weight") fail_at(kw, "expected 'weight' after world bits");
    skip_space();
    const Position wpos = here_;
    Rational w = rational("a weight");
    if (w < 0) fail_at(wpos, "weight must be a nonnegative rational");
    doc.worlds.push_back({bits_from_string(bits), std::move(w)});
    last_world_ = at;
  }

  void config(TheoryDocument& doc) {
    skip_space();
    const Position at = here_;
    const std::string key = word();
    auto& c = doc.config;
    if (key == "threshold") {
      c.threshold = rational("a threshold");
    } else if (key == "tie_epsilon") {
      c.tie_epsilon = rational("a tie epsilon");
    } else if (key == "relevance_tolerance") {
      c.relevance_tolerance = rational("a tolerance");
    } else if (key == "gate") {
      skip_space();
      const Position v = here_;
      const std::string mode = word();
      if (mode == "on") c.gate = GateMode::kOn;
      else if (mode == "off") c.gate = GateMode::kOff;
      else fail_at(v, "gate must be 'on' or 'off'");
    } else if (key == "relevance") {
      skip_space();
      const Position v = here_;
      const std::string mode = word();
      if (mode == "always") c.relevance = RelevanceMode::kAlways;
      else if (mode == "pollock") c.relevance = RelevanceMode::kPollock;
      else fail_at(v, "relevance must be 'always' or 'pollock'");
    } else if (key == "max_defaults") {
      skip_space();
      const Position v = here_;
      const std::string n = word();
      if (n.empty() || n.size() > 9 || !std::all_of(n.begin(), n.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        fail_at(v, "max_defaults must be a nonnegative integer");
      c.max_defaults = std::stoul(n);
    } else {
      fail_at(at, "unknown config key '" + key + "'");
    }
  }

  void finish(const TheoryDocument& doc) {
    if (!doc.worlds.empty()) {
      Rational total = 0;
      for (const auto& w : doc.worlds) total += w.weight;
      if (total == 0) fail_at(last_world_, "world weights sum to zero");
    }
    if (atoms_declared_) {
      for (const auto& [at, f] : model_refs_)
        for (const auto& a : f.atoms())
          if (!atom_set_.contains(a)) fail_at(at, "atom '" + a + "' is not among the declared atoms");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Position here_;
  Position last_;
  Position last_world_;
  bool atoms_declared_ = false;
  std::set<std::string> atom_set_;
  std::set<std::string> world_set_;
  std::set<std::string> default_ids_;
  std::vector<std::pair<Position, Formula>> model_refs_;
};

}  // namespace

TheoryDocument parse_document(std::string_view text) { return Parser(text).document(); }

Formula parse_formula(std::string_view text) { return Parser(text).lone_formula(); }

}  // namespace nmr
