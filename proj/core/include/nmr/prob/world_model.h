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

#ifndef NMR_PROB_WORLD_MODEL_H_
#define NMR_PROB_WORLD_MODEL_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nmr/logic/formula.h"
#include "nmr/rational.h"

namespace nmr {

struct World {
  std::vector<bool> bits;  // bits[i] is the value of atoms()[i]
  Rational weight;

  bool operator==(const World&) const = default;
};

// A finite set of weighted truth assignments. Probabilities are weight
// ratios; the weights need not sum to one.
class WorldModel {
 public:
  // Throws InputError on duplicate atoms, bit vectors of the wrong width,
  // duplicate assignments, negative weights or zero total weight.
  WorldModel(std::vector<std::string> atoms, std::vector<World> worlds);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<World>& worlds() const { return worlds_; }
  const Rational& total_weight() const { return total_; }

  // -1 when absent.
  int index_of(const std::string& atom) const;

  bool operator==(const WorldModel& other) const {
    return atoms_ == other.atoms_ && worlds_ == other.worlds_;
  }

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, int> index_;
  std::vector<World> worlds_;
  Rational total_;
};

// "01001" style rendering of a world's bits, atom order.
std::string bits_to_string(const std::vector<bool>& bits);
std::vector<bool> bits_from_string(std::string_view text);

// Pr(f) as an exact weight ratio. Throws InputError if `f` mentions an atom
// the model does not know.
Rational probability(const WorldModel& m, const Formula& f);

// Pr(f | given). Throws ZeroProbabilityError when Pr(given) = 0.
Rational conditional(const WorldModel& m, const Formula& f, const Formula& given);

// Product model: every assignment to `atoms`, weighted by the product of the
// per-atom marginals. Used for independence baselines.
WorldModel independent_model(std::span<const std::string> atoms,
                             std::span<const Rational> marginals);

}  // namespace nmr

#endif  // NMR_PROB_WORLD_MODEL_H_
