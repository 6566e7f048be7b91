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

#ifndef NMR_TOOLS_CLI_H_
#define NMR_TOOLS_CLI_H_

#include <ostream>

namespace nmr::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kInputError = 2,
  kLimit = 3,
};

struct Options {
  // ANSI colour for statuses in text mode.
  bool color = false;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const Options& options = {});

}  // namespace nmr::cli

#endif  // NMR_TOOLS_CLI_H_
