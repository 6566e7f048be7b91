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

#include "nmr/dsl/printer.h"

#include <sstream>

namespace nmr {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

}  // namespace

std::string print_default(const DefaultRule& d) {
  std::string out = "default " + d.id + ": " + d.prerequisite.to_string() + " : ";
  for (std::size_t i = 0; i < d.justifications.size(); ++i) {
    if (i) out += ", ";
    out += d.justifications[i].to_string();
  }
  return out + " / " + d.consequent.to_string() + ".";
}

std::string print_document(const TheoryDocument& doc) {
  std::ostringstream os;
  if (!doc.domain.empty()) os << "domain {" << join(doc.domain) << "}.\n";
  for (const auto& f : doc.facts) os << "fact: " << f.to_string() << ".\n";
  for (const auto& d : doc.defaults) os << print_default(d) << "\n";
  if (!doc.atoms.empty()) os << "atoms " << join(doc.atoms) << ".\n";
  for (const auto& w : doc.worlds)
    os << "world " << bits_to_string(w.bits) << " weight " << to_string(w.weight) << ".\n";
  for (const auto& f : doc.background) os << "background: " << f.to_string() << ".\n";
  for (const auto& c : doc.candidates) {
    os << "candidate: " << c.conclusion.to_string();
    if (c.evidence.kind() != Connective::kTrue) os << " given " << c.evidence.to_string();
    os << ".\n";
  }
  for (const auto& u : doc.undercuts)
    os << "undercut: " << u.target.to_string() << " by " << u.condition.to_string() << ".\n";
  const auto& c = doc.config;
  if (c.threshold) os << "config threshold " << to_string(*c.threshold) << ".\n";
  if (c.tie_epsilon) os << "config tie_epsilon " << to_string(*c.tie_epsilon) << ".\n";
  if (c.relevance_tolerance)
    os << "config relevance_tolerance " << to_string(*c.relevance_tolerance) << ".\n";
  if (c.gate) os << "config gate " << (*c.gate == GateMode::kOn ? "on" : "off") << ".\n";
  if (c.relevance)
    os << "config relevance " << (*c.relevance == RelevanceMode::kPollock ? "pollock" : "always")
       << ".\n";
  if (c.max_defaults) os << "config max_defaults " << *c.max_defaults << ".\n";
  return os.str();
}

}  // namespace nmr
