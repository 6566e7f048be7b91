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

#ifndef NMR_ERRORS_H_
#define NMR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace nmr {

// Malformed or out-of-contract input: unknown atoms, bad weights, invalid
// parameters, syntax errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Conditioning on an event of probability zero.
class ZeroProbabilityError : public InputError {
 public:
  using InputError::InputError;
};

// A configured size cap was exceeded (e.g. too many grounded defaults).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nmr

#endif  // NMR_ERRORS_H_
