// Copyright 2026 The hybridwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file cli.hpp
 * Entry point of the hybridwit command-line tool, kept in a library so the
 * tests can drive it in-process.
 *
 * Exit codes: 0 success, 1 oracle falsification, 2 validation error,
 * 3 I/O error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hybridwit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hybridwit::cli
