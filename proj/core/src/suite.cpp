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

#include "cosetlab/suite.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cosetlab/errors.hpp"

namespace cosetlab {

namespace {

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Text after the first `count` whitespace-separated fields.
std::string rest_after(const std::string& s, std::size_t count) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k < count; ++k) {
    pos = s.find_first_not_of(" \t", pos);
    if (pos == std::string::npos) return {};
    pos = s.find_first_of(" \t", pos);
    if (pos == std::string::npos) return {};
  }
  return s.substr(pos);
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw DomainError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw DomainError("expected an integer, got '" + s + "'");
  return v;
}

std::vector<Element> parse_generators(const std::string& text, const GroupShape& shape) {
  std::vector<Element> gens;
  for (const std::string& g : split_top_level(text, ',')) {
    if (g.empty()) throw DomainError("empty generator in list");
    gens.push_back(parse_element(g, shape));
  }
  return gens;
}

bool upper_triangular(const Element& e, const GroupShape& shape) {
  for (int i = 0; i < shape.size; ++i) {
    for (int j = 0; j < i; ++j) {
      if (e[static_cast<std::size_t>(i * shape.size + j)] != 0) return false;
    }
  }
  return true;
}

nlohmann::json values_json(const Character& chi) {
  nlohmann::json v = nlohmann::json::array();
  for (const Complex& z : chi.values()) v.push_back(format_complex(z));
  return v;
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const SuiteCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

int SuiteReport::exit_code() const {
  if (!parse_errors.empty()) return 2;
  return all_pass() ? 0 : 1;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["pass"] = parse_errors.empty() && all_pass();
  j["checks"] = nlohmann::json::array();
  std::size_t failed = 0;
  for (const SuiteCheck& c : checks) {
    if (!c.pass) ++failed;
    j["checks"].push_back(
        {{"line", c.line}, {"kind", c.kind}, {"subject", c.subject}, {"pass", c.pass}, {"details", c.details}});
  }
  j["summary"] = {{"checks", checks.size()}, {"failed", failed}};
  j["errors"] = nlohmann::json::array();
  for (const SuiteIssue& e : parse_errors) j["errors"].push_back({{"line", e.line}, {"message", e.message}});
  j["warnings"] = warnings;
  return j;
}

ReciprocitySuite ReciprocitySuite::load(const std::string& path, SuiteReport& report) {
  std::ifstream in(path);
  if (!in) {
    report.parse_errors.push_back({0, "cannot open suite file '" + path + "'"});
    return {};
  }
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse(in, dir, report);
}

ReciprocitySuite ReciprocitySuite::parse(std::istream& in, const std::string& base_dir, SuiteReport& report) {
  ReciprocitySuite suite;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto w = words_of(line);
    if (w.empty()) continue;
    try {
      const std::string& kind = w[0];
      if (kind == "group") {
        if (w.size() < 3) throw DomainError("group needs a name and a kind");
        const std::string& name = w[1];
        if (suite.groups_.contains(name)) throw DomainError("group '" + name + "' defined twice");
        FiniteGroup G = [&] {
          if (w[2] == "perm") {
            if (w.size() < 4) throw DomainError("perm group needs a degree");
            const GroupShape shape{GroupKind::Permutation, to_int(w[3]), 0};
            return FiniteGroup::generate(shape, parse_generators(rest_after(line, 4), shape));
          }
          if (w[2] == "matrix") {
            if (w.size() < 5) throw DomainError("matrix group needs a size and a modulus");
            const GroupShape shape{GroupKind::Matrix, to_int(w[3]), to_int(w[4])};
            return FiniteGroup::generate(shape, parse_generators(rest_after(line, 5), shape));
          }
          if (w[2] == "congruence") {
            if (w.size() != 5) throw DomainError("congruence group needs n and m");
            return congruence_group(to_int(w[3]), to_int(w[4]));
          }
          throw DomainError("unknown group kind '" + w[2] + "'");
        }();
        suite.groups_[name] = SuiteGroup{share(std::move(G)), {}, false};
      } else if (kind == "subgroup") {
        if (w.size() < 4 || w[2] != "of") throw DomainError("expected: subgroup <name> of <group> ...");
        const std::string& name = w[1];
        if (suite.groups_.contains(name)) throw DomainError("group '" + name + "' defined twice");
        const auto parent = suite.groups_.find(w[3]);
        if (parent == suite.groups_.end()) throw DomainError("unknown group '" + w[3] + "'");
        const GroupPtr& P = parent->second.group;
        std::optional<Subgroup> sub;
        if (w.size() == 5 && w[4] == "upper-triangular") {
          if (P->shape().kind != GroupKind::Matrix) throw DomainError("upper-triangular needs a matrix group");
          const GroupShape shape = P->shape();
          sub.emplace(Subgroup::where(P, [&](const Element& e) { return upper_triangular(e, shape); }));
        } else {
          std::vector<std::size_t> gens;
          for (const Element& e : parse_generators(rest_after(line, 4), P->shape())) gens.push_back(P->index_of(e));
          sub.emplace(Subgroup::generated_by(P, gens));
        }
        suite.groups_[name] = SuiteGroup{sub->group(), {}, false};
      } else if (kind == "characters") {
        if (w.size() != 3) throw DomainError("expected: characters <group> <path>");
        const auto g = suite.groups_.find(w[1]);
        if (g == suite.groups_.end()) throw DomainError("unknown group '" + w[1] + "'");
        std::filesystem::path p(w[2]);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        g->second.irreducibles = load_characters(p.string(), g->second.group);
        g->second.table_loaded = true;
        suite.commands_.push_back({lineno, kind, {w[1], p.string()}});
      } else if (kind == "frobenius" || kind == "shadow") {
        if (w.size() != 3) throw DomainError("expected: " + kind + " <H> <G>");
        suite.commands_.push_back({lineno, kind, {w[1], w[2]}});
      } else if (kind == "stages") {
        if (w.size() != 4) throw DomainError("expected: stages <F> <H> <G>");
        suite.commands_.push_back({lineno, kind, {w[1], w[2], w[3]}});
      } else {
        throw DomainError("unknown directive '" + kind + "'");
      }
    } catch (const std::exception& e) {
      report.parse_errors.push_back({lineno, e.what()});
    }
  }
  if (suite.commands_.empty() && report.parse_errors.empty()) report.warnings.push_back("suite contains no checks");
  return suite;
}

SuiteReport ReciprocitySuite::run(SuiteReport report) const {
  auto group = [&](const std::string& name) -> const SuiteGroup& {
    const auto it = groups_.find(name);
    if (it == groups_.end()) throw DomainError("unknown group '" + name + "'");
    return it->second;
  };
  auto table = [&](const std::string& name) -> const std::vector<Character>& {
    const SuiteGroup& g = group(name);
    if (!g.table_loaded) throw DomainError("no character table loaded for '" + name + "'");
    return g.irreducibles;
  };
  auto subgroup = [&](const std::string& sub, const std::string& parent) {
    try {
      return Subgroup(group(parent).group, group(sub).group);
    } catch (const DomainError& e) {
      throw DomainError(sub + " is not a subgroup of " + parent + ": " + e.what());
    }
  };

  for (const Command& cmd : commands_) {
    const auto& a = cmd.args;
    try {
      if (cmd.kind == "characters") {
        const auto& chars = table(a[0]);
        const double defect = orthonormality_defect(chars);
        const bool complete = chars.size() == group(a[0]).group->class_count();
        SuiteCheck c{cmd.line, "characters", a[0], defect <= kIntegralityTolerance && complete, {}};
        c.details = {{"file", a[1]}, {"count", chars.size()}, {"classes", group(a[0]).group->class_count()},
                     {"orthonormality_defect", defect}};
        report.checks.push_back(std::move(c));
      } else if (cmd.kind == "frobenius") {
        const Subgroup h = subgroup(a[0], a[1]);
        const auto& irr_h = table(a[0]);
        const auto& irr_g = table(a[1]);
        for (std::size_t i = 0; i < irr_h.size(); ++i) {
          for (std::size_t j = 0; j < irr_g.size(); ++j) {
            SuiteCheck c{cmd.line, "frobenius",
                         a[0] + "[" + std::to_string(i) + "] -> " + a[1] + "[" + std::to_string(j) + "]", false, {}};
            try {
              const FrobeniusResult r = frobenius_check(h, irr_h[i], irr_g[j]);
              c.pass = r.holds();
              c.details = {{"mult_up", r.mult_up}, {"mult_down", r.mult_down}};
            } catch (const IntegralityError& e) {
              c.details = {{"error", e.what()}};
            }
            report.checks.push_back(std::move(c));
          }
        }
      } else if (cmd.kind == "stages") {
        const Subgroup f_in_h = subgroup(a[0], a[1]);
        const Subgroup h_in_g = subgroup(a[1], a[2]);
        std::vector<Character> chars{trivial_character(f_in_h.group())};
        if (group(a[0]).table_loaded) {
          for (const Character& chi : group(a[0]).irreducibles) chars.push_back(chi);
        }
        for (std::size_t i = 0; i < chars.size(); ++i) {
          const StagesResult r = stages_check(f_in_h, h_in_g, chars[i]);
          SuiteCheck c{cmd.line, "stages",
                       a[0] + " <= " + a[1] + " <= " + a[2] + (i == 0 ? " (trivial)" : " [" + std::to_string(i - 1) + "]"),
                       r.holds(), {}};
          c.details = {{"two_step_vs_direct", r.two_step_vs_direct},
                       {"quasi_regular_mismatch", r.quasi_regular_mismatch},
                       {"induced", values_json(r.direct)}};
          if (f_in_h.group()->order() == 1 && i == 0) {
            const Character reg = regular_character(h_in_g.parent());
            const bool exact = std::equal(r.two_step.values().begin(), r.two_step.values().end(), reg.values().begin()) &&
                               std::equal(r.direct.values().begin(), r.direct.values().end(), reg.values().begin());
            c.details["equals_regular"] = exact;
            c.pass = c.pass && exact;
          }
          report.checks.push_back(std::move(c));
        }
      } else if (cmd.kind == "shadow") {
        const Subgroup h = subgroup(a[0], a[1]);
        const auto& irr_h = table(a[0]);
        const Character one_g = trivial_character(h.parent());
        for (std::size_t i = 0; i < irr_h.size(); ++i) {
          SuiteCheck c{cmd.line, "shadow", a[0] + "[" + std::to_string(i) + "] -> " + a[1], false, {}};
          try {
            const long fixed_in_h = invariant_dimension(irr_h[i]);
            if (fixed_in_h != 0) continue;  // only characters without H-invariant vectors
            const long fixed_in_g = invariant_dimension(induce_character(irr_h[i], h));
            const FrobeniusResult r = frobenius_check(h, irr_h[i], one_g);
            c.pass = fixed_in_g == 0 && r.holds();
            c.details = {{"degree", format_complex(irr_h[i].degree())},
                         {"invariant_dimension", fixed_in_g},
                         {"mult_up", r.mult_up},
                         {"mult_down", r.mult_down}};
          } catch (const IntegralityError& e) {
            c.details = {{"error", e.what()}};
          }
          report.checks.push_back(std::move(c));
        }
      }
    } catch (const std::exception& e) {
      SuiteCheck c{cmd.line, cmd.kind, "", false, {{"error", e.what()}}};
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

SuiteReport run_suite_file(const std::string& path) {
  SuiteReport report;
  const ReciprocitySuite suite = ReciprocitySuite::load(path, report);
  return suite.run(std::move(report));
}

}  // namespace cosetlab
