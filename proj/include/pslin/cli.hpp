// Copyright 2026 The pslin Authors
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


// Command-line front end. Every subcommand writes one JSON object per result
// line followed by a manifest record that is enough to replay the run.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pslin::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitPrecision = 3;

// Environment override for the precision cap in bits; --prec-cap wins.
inline constexpr const char* kPrecCapEnv = "PSLIN_PREC_CAP";

// `args` excludes the program name. Results go to `out` (or to --out FILE),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pslin::cli
