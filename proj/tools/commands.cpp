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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cosetlab/coset_space.hpp"
#include "cosetlab/errors.hpp"
#include "cosetlab/finite_group.hpp"
#include "cosetlab/report.hpp"
#include "cosetlab/suite.hpp"

#ifndef COSETLAB_DATA_DIR
#define COSETLAB_DATA_DIR "data"
#endif

namespace cosetlab::cli {

namespace {

std::string strip_braces(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  if (first == std::string::npos) return {};
  std::string t = text.substr(first, last - first + 1);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  return t;
}

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// |SL(n, F_p)| = p^(n(n-1)/2) prod_{k=2..n} (p^k - 1)
unsigned long long sl_order(int n, int p) {
  unsigned long long order = 1;
  for (int k = 0; k < n * (n - 1) / 2; ++k) order *= static_cast<unsigned long long>(p);
  for (int k = 2; k <= n; ++k) {
    unsigned long long pk = 1;
    for (int j = 0; j < k; ++j) pk *= static_cast<unsigned long long>(p);
    order *= pk - 1;
  }
  return order;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

// COSETLAB_DATA overrides; otherwise the source tree when it is still
// around, then the installed copy.
std::string default_suite_path() {
  if (const char* env = std::getenv("COSETLAB_DATA")) return std::string(env) + "/default.suite";
  const std::filesystem::path source = std::filesystem::path(COSETLAB_DATA_DIR) / "default.suite";
  if (std::filesystem::exists(source)) return source.string();
  return std::string(COSETLAB_INSTALLED_DATA_DIR) + "/default.suite";
}

std::vector<Word> parse_word_set(const std::string& text) {
  std::vector<Word> words;
  const std::string body = strip_braces(text);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    const std::string piece = body.substr(start, comma - start);
    if (piece.find_first_not_of(" \t") == std::string::npos) {
      if (comma < body.size()) throw ParseError("empty word in set", start);
    } else {
      try {
        words.push_back(parse_word(piece));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in word '") + piece + "': " + e.what(), start + e.position());
      }
    }
    start = comma + 1;
  }
  return words;
}

std::vector<GElement> parse_generator_list(const std::string& text) {
  std::vector<GElement> gens;
  for (const std::string& piece : split_top_level(strip_braces(text), ',')) {
    if (piece.empty()) throw ParseError("empty generator in list", 0);
    if (piece == "t") {
      gens.push_back(translation(1));
    } else if (piece == "t^-1") {
      gens.push_back(translation(-1));
    } else if (piece.front() == '(') {
      gens.push_back(parse_gelement(piece));
    } else {
      gens.push_back(in_h(parse_word(piece)));
    }
  }
  return gens;
}

std::vector<int> parse_radii(const std::string& text) {
  std::vector<int> radii;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      if (lo > hi) throw ParseError("empty radius range", 0);
      for (int r = lo; r <= hi; ++r) radii.push_back(r);
    } else {
      for (const std::string& piece : split_top_level(text, ',')) radii.push_back(std::stoi(piece));
    }
  } catch (const std::logic_error&) {
    throw ParseError("bad radius list '" + text + "'", 0);
  }
  if (radii.empty()) throw ParseError("no radii given", 0);
  return radii;
}

CommandResult eymard_verify(const std::string& word_set) {
  const std::vector<Word> words = parse_word_set(word_set);
  if (words.empty()) throw DomainError("eymard-verify needs a nonempty word set");
  const DeltaInvarianceReport rep = delta_invariance_check(words);
  CommandResult out;
  out.report = to_json(rep);
  out.exit_code = rep.invariant() ? kPass : kViolation;
  return out;
}

CommandResult kesten(int k, const std::vector<int>& radii, const ProfileOptions& options) {
  if (k < 1) throw DomainError("kesten needs k >= 1");
  const SpectralProfile profile = kesten_profile(Coset::base(0), free_generators(k), radii, options);
  bool monotone = true;
  bool bounded = true;
  for (std::size_t i = 0; i < profile.estimates.size(); ++i) {
    if (profile.estimates[i] < 0.0 || profile.estimates[i] > 1.0) bounded = false;
    if (i > 0 && profile.estimates[i] < profile.estimates[i - 1]) monotone = false;
  }
  CommandResult out;
  out.report = to_json(profile);
  out.report["k"] = k;
  out.report["free_group_limit"] = std::sqrt(2.0 * k - 1.0) / k;
  out.report["monotone"] = monotone;
  out.report["within_unit_interval"] = bounded;
  out.csv = to_csv(profile);
  out.exit_code = monotone && bounded ? kPass : kViolation;
  return out;
}

CommandResult reiter(const std::string& generators, double epsilon, std::size_t max_window) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw DomainError("epsilon must lie in (0, 2)");
  const GenSet gens = GenSet::symmetric_closure(parse_generator_list(generators));
  const ReiterCertificate cert = reiter_search(gens, epsilon, {max_window});
  CommandResult out;
  out.report = to_json(cert);
  out.report["generators"] = describe(gens);
  out.exit_code = cert.max_deviation() <= epsilon + kReiterSlack ? kPass : kViolation;
  return out;
}

CommandResult reciprocity(const std::string& suite_path) {
  const SuiteReport rep = run_suite_file(suite_path);
  CommandResult out;
  out.report = rep.to_json();
  out.report["suite"] = suite_path;
  out.exit_code = rep.exit_code();
  return out;
}

CommandResult congruence(int n, int modulus, std::size_t cap, const std::optional<std::string>& witness) {
  const FiniteGroup G = congruence_group(n, modulus, cap);
  CommandResult out;
  out.report = to_json(G);
  out.report["n"] = n;
  out.report["m"] = modulus;
  out.report["axioms"] = G.verify_axioms();
  bool ok = out.report["axioms"].get<bool>();
  if (is_prime(modulus)) {
    const auto expected = sl_order(n, modulus);
    out.report["closed_form_order"] = expected;
    ok = ok && expected == G.order();
  }
  if (witness) {
    const IntMatrix a = parse_int_matrix(*witness);
    out.report["witness"] = {{"matrix", *witness}, {"modulus", separation_witness(a)}};
  }
  out.exit_code = ok ? kPass : kViolation;
  return out;
}

CommandResult orbit(const std::string& generators, GenIndex first_level, GenIndex last_level, int radius,
                    std::size_t cap, bool text_format) {
  const std::vector<GElement> gens = parse_generator_list(generators);
  const HOrbitPartition part = h_orbit_partition(first_level, last_level, gens, radius, cap);
  CommandResult out;
  out.report["level_preserving"] = part.level_preserving;
  out.report["balls"] = nlohmann::json::array();
  for (const auto& [level, ball] : part.balls) {
    nlohmann::json b = text_format ? nlohmann::json{{"size", ball.size()}, {"text", to_text(ball)}} : to_json(ball);
    b["level"] = level;
    out.report["balls"].push_back(std::move(b));
  }
  out.exit_code = part.level_preserving ? kPass : kViolation;
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cosetlab: verification runs for coset-space amenability and induced characters"};
  app.require_subcommand(1);

  std::string out_path;
  std::string csv_path;
  bool no_meta = false;
  std::size_t cap = kDefaultNodeCap;
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
  app.add_flag("--no-meta", no_meta, "Omit the timestamp/version block for byte-identical reports");
  app.add_option("--cap", cap, "Resource cap (orbit nodes, group order, Reiter window)");

  std::string words;
  auto* ev = app.add_subcommand("eymard-verify", "Exact invariance of the base coset under a finite word set");
  ev->add_option("words", words, "Word set, e.g. \"x5 x3 x5^-1, x1\"")->required();

  int k = 0;
  std::string radii_text = "1..10";
  ProfileOptions profile_options;
  auto* ks = app.add_subcommand("kesten", "Markov-operator norm lower bounds on H/F for k free generators");
  ks->add_option("--k", k, "Number of free generators x_1..x_k")->required();
  ks->add_option("--radii", radii_text, "Radii as lo..hi or a comma list");
  ks->add_option("--iterations", profile_options.iterations, "Power iteration cap per radius");
  ks->add_option("--tol", profile_options.tol, "Rayleigh quotient convergence tolerance");
  ks->add_option("--csv", csv_path, "Also write (radius, ball_size, estimate) rows here");

  std::string reiter_gens;
  double epsilon = 0.1;
  std::size_t window = std::size_t{1} << 24;
  auto* rs = app.add_subcommand("reiter", "Almost-invariant unit vector for a generator set on G/F");
  rs->add_option("generators", reiter_gens, "Generators, e.g. \"t, x0, x-3\" (inverses added)")->required();
  rs->add_option("--epsilon", epsilon, "Target deviation in (0, 2)");
  rs->add_option("--window", window, "Largest window size to try");

  std::string suite = default_suite_path();
  auto* rc = app.add_subcommand("reciprocity", "Frobenius reciprocity, induction in stages and invariant vectors");
  rc->add_option("suite", suite, "Suite file (defaults to the bundled suite)");

  int n = 2, m = 2;
  std::string witness;
  auto* cg = app.add_subcommand("congruence", "Enumerate SL(n, Z/m) and its conjugacy classes");
  cg->add_option("--n", n, "Matrix size")->required();
  cg->add_option("--m", m, "Modulus")->required();
  cg->add_option("--witness", witness, "Integer matrix in SL(n,Z); report the least m separating it from I");

  std::string orbit_gens;
  std::string levels = "0..0";
  int radius = 2;
  bool text = false;
  auto* ob = app.add_subcommand("orbit", "H-orbit balls of the base cosets Coset(n, e)");
  ob->add_option("generators", orbit_gens, "Shift-0 generators, e.g. \"x1, x1^-1, x2, x2^-1\"")->required();
  ob->add_option("--window", levels, "Levels as lo..hi");
  ob->add_option("--radius", radius, "Ball radius");
  ob->add_flag("--text", text, "Embed the line-oriented node/edge export instead of JSON arrays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  CommandResult result;
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "eymard-verify") {
      result = eymard_verify(words);
    } else if (name == "kesten") {
      profile_options.node_cap = cap;
      result = kesten(k, parse_radii(radii_text), profile_options);
    } else if (name == "reiter") {
      result = reiter(reiter_gens, epsilon, std::min(window, cap == kDefaultNodeCap ? window : cap));
    } else if (name == "reciprocity") {
      result = reciprocity(suite);
    } else if (name == "congruence") {
      result = congruence(n, m, cap == kDefaultNodeCap ? kDefaultOrderCap : cap,
                          witness.empty() ? std::nullopt : std::optional<std::string>(witness));
    } else if (name == "orbit") {
      const auto range = parse_radii(levels);
      result = orbit(orbit_gens, range.front(), range.back(), radius, cap, text);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  nlohmann::json doc;
  doc["command"] = name;
  doc["pass"] = result.exit_code == kPass;
  doc["report"] = std::move(result.report);
  if (!no_meta) doc["meta"] = {{"tool", "cosetlab"}, {"version", "0.1.0"}, {"timestamp", timestamp()}};
  const std::string rendered = doc.dump(2) + "\n";

  if (out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "cannot write " << out_path << '\n';
      return kUsage;
    }
    f << rendered;
  }
  if (!csv_path.empty() && !result.csv.empty()) {
    std::ofstream f(csv_path);
    if (!f) {
      err << "cannot write " << csv_path << '\n';
      return kUsage;
    }
    f << result.csv;
  }
  if (result.exit_code != kPass) err << name << ": claim violated\n";
  return result.exit_code;
}

}  // namespace cosetlab::cli
