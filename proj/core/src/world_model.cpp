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

#include "nmr/prob/world_model.h"

#include <set>

#include "nmr/errors.h"

namespace nmr {

namespace {

// Formula with atoms resolved to bit positions.
class BoundFormula {
 public:
  BoundFormula(const WorldModel& m, const Formula& f) : f_(f) {
    for (const auto& a : f.atoms()) {
      const int i = m.index_of(a);
      if (i < 0) throw InputError("unknown atom '" + a + "' in " + f.to_string());
      index_.emplace(a, i);
    }
  }

  bool holds(const std::vector<bool>& bits) const {
    return evaluate(f_, [&](const std::string& a) { return static_cast<bool>(bits[index_.at(a)]); });
  }

 private:
  Formula f_;
  std::map<std::string, int> index_;
};

Rational mass(const WorldModel& m, const Formula& f) {
  const BoundFormula bound(m, f);
  Rational sum = 0;
  for (const auto& w : m.worlds())
    if (w.weight != 0 && bound.holds(w.bits)) sum += w.weight;
  return sum;
}

}  // namespace

WorldModel::WorldModel(std::vector<std::string> atoms, std::vector<World> worlds)
    : atoms_(std::move(atoms)), worlds_(std::move(worlds)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!index_.emplace(atoms_[i], static_cast<int>(i)).second)
      throw InputError("duplicate atom '" + atoms_[i] + "' in world model");
  std::set<std::vector<bool>> seen;
  total_ = 0;
  for (const auto& w : worlds_) {
    if (w.bits.size() != atoms_.size())
      throw InputError("world " + bits_to_string(w.bits) + " has " + std::to_string(w.bits.size()) +
                       " bits but the model has " + std::to_string(atoms_.size()) + " atoms");
    if (!seen.insert(w.bits).second)
      throw InputError("duplicate world " + bits_to_string(w.bits));
    if (w.weight < 0) throw InputError("negative weight for world " + bits_to_string(w.bits));
    total_ += w.weight;
  }
  if (total_ <= 0) throw InputError("world model has zero total weight");
}

int WorldModel::index_of(const std::string& atom) const {
  auto it = index_.find(atom);
  return it == index_.end() ? -1 : it->second;
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::vector<bool> bits_from_string(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("world bits must be 0/1, got '" + std::string(text) + "'");
    bits.push_back(c == '1');
  }
  return bits;
}

Rational probability(const WorldModel& m, const Formula& f) {
  return mass(m, f) / m.total_weight();
}

Rational conditional(const WorldModel& m, const Formula& f, const Formula& given) {
  const Rational denom = mass(m, given);
  if (denom == 0)
    throw ZeroProbabilityError("conditioning on zero-probability event " + given.to_string());
  return mass(m, Formula::And({f, given})) / denom;
}

WorldModel independent_model(std::span<const std::string> atoms,
                             std::span<const Rational> marginals) {
  if (atoms.size() != marginals.size()) throw InputError("one marginal per atom required");
  if (atoms.size() > 20) throw LimitError("independent model over more than 20 atoms");
  std::vector<World> worlds;
  const std::size_t n = atoms.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    World w{std::vector<bool>(n), Rational(1)};
    for (std::size_t i = 0; i < n; ++i) {
      w.bits[i] = (mask >> (n - 1 - i)) & 1;
      w.weight *= w.bits[i] ? marginals[i] : Rational(1 - marginals[i]);
    }
    worlds.push_back(std::move(w));
  }
  return WorldModel({atoms.begin(), atoms.end()}, std::move(worlds));
}

}  // namespace nmr
