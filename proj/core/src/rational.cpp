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

#include "nmr/rational.h"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "nmr/errors.h"

namespace nmr {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

cpp_int parse_int(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw InputError("malformed rational '" + std::string(whole) + "'");
  // cpp_int reads a leading zero as an octal prefix.
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? cpp_int(0) : cpp_int(std::string(s.substr(first)));
}

cpp_int pow10(long n) {
  cpp_int p = 1;
  for (long i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InputError("empty rational");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_int(s.substr(0, slash), text);
    const cpp_int den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
        exp_negative = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!all_digits(exp) || exp.size() > 6)
        throw InputError("malformed rational '" + std::string(text) + "'");
      exponent = std::stol(std::string(exp));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits(s);
    if (auto dot = digits.find('.'); dot != std::string::npos) {
      exponent -= static_cast<long>(digits.size() - dot - 1);
      digits.erase(dot, 1);
    }
    const cpp_int mantissa = parse_int(digits, text);
    value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                          : Rational(mantissa, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_decimal(const Rational& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
  return buf;
}

}  // namespace nmr
