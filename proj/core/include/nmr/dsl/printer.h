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

#ifndef NMR_DSL_PRINTER_H_
#define NMR_DSL_PRINTER_H_

#include <string>

#include "nmr/dsl/document.h"

namespace nmr {

// Canonical text for `doc`: one statement per line, grouped by kind.
// parse_document(print_document(d)) == d.
std::string print_document(const TheoryDocument& doc);

std::string print_default(const DefaultRule& d);

}  // namespace nmr

#endif  // NMR_DSL_PRINTER_H_
