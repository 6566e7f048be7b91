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

#include "nmr/io/json.h"

#include "nmr/errors.h"

namespace nmr {

namespace {

Json rational(const Rational& r) { return to_string(r); }

Json formulas(std::span<const Formula> fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

Json defeater(const Defeater& d) {
  Json j{{"kind", to_string(d.kind)}, {"target", d.target}, {"condition", d.condition.to_string()}};
  if (d.kind == DefeaterKind::kUndercutting) {
    j["conditioned"] = rational(d.conditioned);
    j["unconditioned"] = rational(d.unconditioned);
    j["gate_probability"] = rational(d.gate_probability);
  } else {
    j["source"] = d.source;
    j["source_strength"] = rational(d.source_strength);
  }
  return j;
}

Json defeaters(const std::vector<Defeater>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(defeater(d));
  return out;
}

}  // namespace

Json model_to_json(const WorldModel& m) {
  Json worlds = Json::array();
  for (const auto& w : m.worlds())
    worlds.push_back({{"bits", bits_to_string(w.bits)}, {"weight", rational(w.weight)}});
  return {{"atoms", m.atoms()}, {"worlds", std::move(worlds)}};
}

WorldModel model_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("atoms") || !j.contains("worlds"))
      throw InputError("world model needs 'atoms' and 'worlds'");
    auto atoms = j.at("atoms").get<std::vector<std::string>>();
    std::vector<World> worlds;
    for (const auto& w : j.at("worlds")) {
      const auto bits = w.at("bits").get<std::string>();
      if (bits.find_first_not_of("01") != std::string::npos)
        throw InputError("world bits must be 0 or 1: '" + bits + "'");
      worlds.push_back({bits_from_string(bits), parse_rational(w.at("weight").get<std::string>())});
    }
    return WorldModel(std::move(atoms), std::move(worlds));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed world model: ") + e.what());
  }
}

Json to_json(const RelevanceReport& r) {
  Json margins = Json::array();
  for (const auto& m : r.margins) margins.push_back(m ? rational(*m) : Json(nullptr));
  return {{"relevance", to_string(r.relevance)}, {"margins", std::move(margins)}};
}

Json to_json(const DefeaterCheck& c) {
  Json lhs = Json::array();
  for (const auto& r : c.lhs) lhs.push_back(rational(r));
  Json j{{"target", c.target.to_string()},
         {"conditions", formulas(c.conditions)},
         {"lhs", std::move(lhs)},
         {"rhs", rational(c.rhs)},
         {"holds", c.holds}};
  j["relevance"] = c.relevance ? to_json(*c.relevance) : Json(nullptr);
  j["warnings"] = c.warnings;
  return j;
}

Json to_json(const Extension& e) {
  return {{"generating_defaults", e.generating_defaults},
          {"base", formulas(e.base)},
          {"trivial", e.trivial}};
}

Json to_json(std::span<const Extension> exts) {
  Json out = Json::array();
  for (const auto& e : exts) out.push_back(to_json(e));
  return out;
}

Json to_json(const EngineConfig& c) {
  return {{"acceptance_threshold", rational(c.acceptance_threshold)},
          {"tie_epsilon", rational(c.tie_epsilon)},
          {"gate", to_string(c.gate)},
          {"relevance", to_string(c.relevance)},
          {"relevance_tolerance", rational(c.relevance_tolerance)}};
}

Json to_json(const WarrantReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"conclusion", e.conclusion.to_string()},
           {"evidence", e.evidence.to_string()},
           {"status", to_string(e.status)},
           {"probability", rational(e.probability)}};
    if (e.reason) {
      j["reason"] = {{"id", e.reason->id},
                     {"strength", rational(e.reason->strength)},
                     {"kind", e.reason->kind == ReasonKind::kDeductive ? "deductive" : "prima_facie"}};
    } else {
      j["reason"] = nullptr;
    }
    j["defeaters"] = defeaters(e.defeaters);
    j["suppressed"] = defeaters(e.suppressed);
    Json prov = Json::array();
    for (const auto& p : e.provenance) prov.push_back({{"rule", p.rule}, {"detail", p.detail}});
    j["provenance"] = std::move(prov);
    entries.push_back(std::move(j));
  }
  Json sets = Json::array();
  for (const auto& s : r.sets) {
    Json j{{"id", s.id}, {"members", s.members}, {"context", formulas(s.context)}};
    j["relevance"] = s.relevance ? to_json(*s.relevance) : Json(nullptr);
    j["defeated"] = s.defeated;
    j["note"] = s.note;
    sets.push_back(std::move(j));
  }
  return {{"config", to_json(r.config)},
          {"entries", std::move(entries)},
          {"sets", std::move(sets)},
          {"warnings", r.warnings}};
}

Json to_json(const LotteryizationComparison& c) {
  return {{"paper_value", rational(c.paper_value)},
          {"exact_value", rational(c.exact_value)},
          {"paper_condition_probability", rational(c.paper_condition_probability)},
          {"exact_condition_probability", rational(c.exact_condition_probability)},
          {"discrepancy", c.discrepancy}};
}

Json to_json(const WarrantThreshold& t) {
  return {{"mode", to_string(t.mode)},
          {"n", t.n},
          {"value", rational(t.value)},
          {"previous_value", t.n > 2 ? rational(t.previous_value) : Json(nullptr)},
          {"bound", rational(t.bound)}};
}

}  // namespace nmr
