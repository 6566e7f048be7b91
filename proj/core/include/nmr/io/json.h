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

#ifndef NMR_IO_JSON_H_
#define NMR_IO_JSON_H_

#include <span>

#include "json.hpp"
#include "nmr/defaults/default_logic.h"
#include "nmr/defeat/defeat.h"
#include "nmr/prob/checks.h"
#include "nmr/prob/lotteryization.h"
#include "nmr/prob/relevance.h"
#include "nmr/prob/world_model.h"

namespace nmr {

using Json = nlohmann::ordered_json;

// {"atoms": [...], "worlds": [{"bits": "0101", "weight": "3/100"}]}
Json model_to_json(const WorldModel& m);
// Throws InputError on malformed documents.
WorldModel model_from_json(const Json& j);

Json to_json(const RelevanceReport& r);
Json to_json(const DefeaterCheck& c);
Json to_json(const Extension& e);
Json to_json(std::span<const Extension> exts);
Json to_json(const EngineConfig& c);
Json to_json(const WarrantReport& r);
Json to_json(const LotteryizationComparison& c);
Json to_json(const WarrantThreshold& t);

}  // namespace nmr

#endif  // NMR_IO_JSON_H_
