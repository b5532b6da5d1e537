// Copyright 2026 The cosetlab Authors.
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

// Subcommands of the `cosetlab` tool, callable in-process so tests can drive
// them without spawning a shell.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosetlab/free_group.hpp"
#include "cosetlab/spectral.hpp"

namespace cosetlab::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2, kResource = 3 };

struct CommandResult {
  nlohmann::json report;
  int exit_code = kPass;
  std::string csv;  // kesten only
};

// "x5 x3 x5^-1, x1" or "{x0}": comma-separated word literals.
std::vector<Word> parse_word_set(const std::string& text);

// Comma-separated generators: `t`, `t^-1`, `(n; word)`, or a bare word w
// standing for (0; w).
std::vector<GElement> parse_generator_list(const std::string& text);

// "1..10" or "1,2,5".
std::vector<int> parse_radii(const std::string& text);

CommandResult eymard_verify(const std::string& word_set);
CommandResult kesten(int k, const std::vector<int>& radii, const ProfileOptions& options);
CommandResult reiter(const std::string& generators, double epsilon, std::size_t max_window);
CommandResult reciprocity(const std::string& suite_path);
CommandResult congruence(int n, int modulus, std::size_t cap, const std::optional<std::string>& witness);
CommandResult orbit(const std::string& generators, GenIndex first_level, GenIndex last_level, int radius,
                    std::size_t cap, bool text_format);

// Full command line handling; JSON goes to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string default_suite_path();

}  // namespace cosetlab::cli
