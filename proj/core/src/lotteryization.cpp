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

#include "nmr/prob/lotteryization.h"

#include <limits>
#include <stdexcept>
#include <vector>

#include "nmr/errors.h"
#include "nmr/prob/relevance.h"

namespace nmr {

namespace {

std::vector<Formula> losing_all(int n) {
  std::vector<Formula> out;
  for (int k = 1; k <= n; ++k) out.push_back(Formula::Not(Formula::Atom("p_" + std::to_string(k))));
  return out;
}

Rational floor(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (q * den > num) --q;
  return Rational(q);
}

Rational ceil(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  cpp_int q = num / den;
  if (q * den < num) ++q;
  return Rational(q);
}

Rational value(const Rational& q, int n, ValueMode mode) {
  const LotteryizationParams p{q, n};
  return mode == ValueMode::kPaper ? lotteryization_value_paper(p) : lotteryization_closed_form(p);
}

}  // namespace

void LotteryizationParams::validate() const {
  if (q <= 0 || q >= 1) throw InputError("q = Pr(~P) must lie strictly between 0 and 1");
  if (n < 2) throw InputError("lotteryization needs N >= 2");
}

WorldModel lotteryization_model(const LotteryizationParams& p) {
  p.validate();
  std::vector<std::string> atoms;
  for (int k = 1; k <= p.n; ++k) atoms.push_back("p_" + std::to_string(k));
  std::vector<World> worlds;
  worlds.push_back({std::vector<bool>(p.n, false), p.q});
  const Rational share = (1 - p.q) / p.n;
  for (int k = 0; k < p.n; ++k) {
    std::vector<bool> bits(p.n, false);
    bits[k] = true;
    worlds.push_back({std::move(bits), share});
  }
  return WorldModel(std::move(atoms), std::move(worlds));
}

Rational lotteryization_value_paper(const LotteryizationParams& p) {
  p.validate();
  return 1 - p.q / (p.q + Rational(1, p.n));
}

Rational lotteryization_closed_form(const LotteryizationParams& p) {
  p.validate();
  return 1 - p.q / (p.q + (1 - p.q) / p.n);
}

Rational lotteryization_value_exact(const LotteryizationParams& p) {
  const WorldModel m = lotteryization_model(p);
  const auto losing = losing_all(p.n);
  const Rational enumerated = conditional(m, Formula::Atom("p_1"), conjoin_except(losing, 0));
  if (enumerated != lotteryization_closed_form(p))
    throw std::logic_error("lotteryization enumeration disagrees with its closed form");
  return enumerated;
}

LotteryizationComparison compare_lotteryization(const LotteryizationParams& p) {
  LotteryizationComparison c;
  c.paper_value = lotteryization_value_paper(p);
  c.exact_value = lotteryization_value_exact(p);
  c.paper_condition_probability = p.q + Rational(1, p.n);
  const WorldModel m = lotteryization_model(p);
  c.exact_condition_probability = probability(m, conjoin_except(losing_all(p.n), 0));
  c.discrepancy = c.paper_value != c.exact_value ||
                  c.paper_condition_probability != c.exact_condition_probability;
  return c;
}

std::string_view to_string(ValueMode m) { return m == ValueMode::kPaper ? "paper" : "exact"; }

WarrantThreshold warrant_threshold(const Rational& q, ValueMode mode) {
  LotteryizationParams{q, 2}.validate();
  WarrantThreshold t;
  t.mode = mode;
  t.bound = mode == ValueMode::kPaper ? ceil(1 / q) : (1 - q) / q;
  // The paper value is below 1/2 iff N > 1/q and the exact one iff
  // N > (1 - q)/q; take the first integer past the cut and confirm by
  // evaluation.
  const Rational cut = mode == ValueMode::kPaper ? 1 / q : (1 - q) / q;
  Rational first = floor(cut) + 1;
  if (first < 2) first = 2;
  if (first > std::numeric_limits<int>::max() / 2) throw LimitError("threshold N out of range");
  const int n = first.convert_to<int>();
  const Rational half(1, 2);
  t.n = n;
  t.value = value(q, n, mode);
  if (n > 2) t.previous_value = value(q, n - 1, mode);
  if (!(t.value < half) || (n > 2 && t.previous_value < half))
    throw std::logic_error("warrant threshold does not match its value function");
  return t;
}

}  // namespace nmr
