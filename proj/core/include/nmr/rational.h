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

#ifndef NMR_RATIONAL_H_
#define NMR_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nmr {

// Exact arbitrary-precision rational. All probabilities are kept exact so
// that strict inequalities are decided without rounding.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                           boost::multiprecision::et_off>;

// Accepts "p/q", integers and plain decimals ("0.99", "1e-3"); decimals are
// converted exactly. Throws InputError on malformed input or a zero
// denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "n" for integers.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Six-decimal approximation for human-readable output.
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace nmr

#endif  // NMR_RATIONAL_H_
