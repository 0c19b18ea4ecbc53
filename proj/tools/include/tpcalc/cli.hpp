// Copyright 2026 The tpcalc Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tpcalc/semiring.hpp"

namespace tpcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDistinct = 1;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitInternal = 3;

enum class FragmentMode { Functional, Full, Auto };
enum class Format { Text, Json, Dot };

struct CliConfig {
  SemiringTag tag = SemiringTag::Rational;
  FragmentMode fragment = FragmentMode::Auto;
  std::vector<std::string> inputs;
  std::uint64_t seed = 42;
  std::size_t iterations = 50;
  Format format = Format::Text;
};

// Parses argv and dispatches one subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tpcalc::cli
