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

// Reciprocity suites: a small line-oriented file naming finite groups,
// subgroups, curated irreducible character tables and the checks to run.
//
//   group <name> perm <degree> <gen>, <gen>, ...
//   group <name> matrix <n> <modulus> <gen>, ...
//   group <name> congruence <n> <modulus>
//   subgroup <name> of <group> <gen>, ...        (no generators: trivial)
//   subgroup <name> of <group> upper-triangular
//   characters <group> <path>                    (relative to the suite file)
//   frobenius <H> <G>
//   stages <F> <H> <G>
//   shadow <H> <G>
//
// `#` starts a comment. Checks run after the whole file is read.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosetlab/character.hpp"
#include "cosetlab/finite_group.hpp"

namespace cosetlab {

struct SuiteIssue {
  std::size_t line = 0;
  std::string message;
};

struct SuiteCheck {
  std::size_t line = 0;
  std::string kind;  // frobenius | stages | shadow | characters
  std::string subject;
  bool pass = false;
  nlohmann::json details;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  std::vector<SuiteIssue> parse_errors;
  std::vector<std::string> warnings;

  bool all_pass() const;
  // 0 all checks hold, 1 some claim failed, 2 malformed suite.
  int exit_code() const;
  nlohmann::json to_json() const;
};

struct SuiteGroup {
  GroupPtr group;
  std::vector<Character> irreducibles;
  bool table_loaded = false;
};

class ReciprocitySuite {
 public:
  // base_dir resolves relative character paths.
  static ReciprocitySuite parse(std::istream& in, const std::string& base_dir, SuiteReport& report);
  static ReciprocitySuite load(const std::string& path, SuiteReport& report);

  SuiteReport run(SuiteReport report) const;

  const std::map<std::string, SuiteGroup>& groups() const noexcept { return groups_; }

 private:
  struct Command {
    std::size_t line;
    std::string kind;
    std::vector<std::string> args;
  };

  std::map<std::string, SuiteGroup> groups_;
  std::vector<Command> commands_;
};

SuiteReport run_suite_file(const std::string& path);

}  // namespace cosetlab
