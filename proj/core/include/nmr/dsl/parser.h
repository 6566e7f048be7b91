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

#ifndef NMR_DSL_PARSER_H_
#define NMR_DSL_PARSER_H_

#include <string>
#include <string_view>

#include "nmr/dsl/document.h"
#include "nmr/errors.h"
#include "nmr/logic/formula.h"

namespace nmr {

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Statements, each terminated by '.':
//
//   domain {c1, c2}.
//   fact: <formula>.
//   default <id>: [<formula>] : <formula>{, <formula>} / <formula>.
//   atoms a, b, c.
//   world 010 weight 3/100.
//   background: <formula>.
//   candidate: <formula> [given <formula>].
//   undercut: <formula> by <formula>.
//   config threshold|tie_epsilon|relevance_tolerance <rational>.
//   config gate on|off.  config relevance always|pollock.
//   config max_defaults <n>.
//
// Formulas use ~ & | -> <-> with that precedence (tightest first), true,
// false, exactly_one(...), at_least_one(...) and atoms `[a-z][a-z0-9_]*`,
// optionally applied to constants or uppercase variables. `%` starts a
// comment. Throws ParseError with the position of the offending token.
TheoryDocument parse_document(std::string_view text);

Formula parse_formula(std::string_view text);

}  // namespace nmr

#endif  // NMR_DSL_PARSER_H_
