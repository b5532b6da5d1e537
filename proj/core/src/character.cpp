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

#include "cosetlab/character.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace cosetlab {

Character::Character(GroupPtr group, std::vector<Complex> values) : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw DomainError("character on a null group");
  if (values_.size() != group_->class_count()) {
    throw DomainError("character has " + std::to_string(values_.size()) + " values but the group has " +
                      std::to_string(group_->class_count()) + " classes");
  }
}

Character trivial_character(GroupPtr group) {
  const std::size_t k = group->class_count();
  return Character(std::move(group), std::vector<Complex>(k, 1.0));
}

Character regular_character(GroupPtr group) {
  std::vector<Complex> v(group->class_count(), 0.0);
  v[0] = static_cast<double>(group->order());
  return Character(std::move(group), std::move(v));
}

Character permutation_character(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  // Label every element by the left coset it lies in.
  std::vector<std::size_t> coset(G.order());
  const auto reps = h.transversal();
  for (std::size_t t = 0; t < reps.size(); ++t) {
    for (std::size_t k = 0; k < h.group()->order(); ++k) coset[G.mul(reps[t], h.embed(k))] = t;
  }
  std::vector<Complex> v(G.class_count());
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    const std::size_t g = G.class_rep(c);
    std::size_t fixed = 0;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      if (coset[G.mul(g, reps[t])] == t) ++fixed;
    }
    v[c] = static_cast<double>(fixed);
  }
  return Character(h.parent(), std::move(v));
}

Complex inner_product(const Character& chi, const Character& psi) {
  if (chi.group() != psi.group()) throw DomainError("inner product of characters on different groups");
  const FiniteGroup& G = *chi.group();
  Complex sum = 0.0;
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    sum += static_cast<double>(G.class_size(c)) * chi.on_class(c) * std::conj(psi.on_class(c));
  }
  return sum / static_cast<double>(G.order());
}

long multiplicity(const Character& chi, const Character& psi) {
  const Complex z = inner_product(chi, psi);
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > kIntegralityTolerance || std::abs(z.imag()) > kIntegralityTolerance) {
    throw IntegralityError("inner product " + format_complex(z) + " is not an integer", z);
  }
  return static_cast<long>(r);
}

Character restrict_character(const Character& chi, const Subgroup& h) {
  if (chi.group() != h.parent()) throw DomainError("restriction: character is not on the parent group");
  const FiniteGroup& H = *h.group();
  std::vector<Complex> v(H.class_count());
  for (std::size_t c = 0; c < H.class_count(); ++c) v[c] = chi(h.embed(H.class_rep(c)));
  return Character(h.group(), std::move(v));
}

Character induce_character(const Character& chi, const Subgroup& h) {
  if (chi.group() != h.group()) throw DomainError("induction: character is not on the subgroup");
  const FiniteGroup& G = *h.parent();
  std::vector<Complex> v(G.class_count());
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    const std::size_t g = G.class_rep(c);
    Complex sum = 0.0;
    for (std::size_t x = 0; x < G.order(); ++x) {
      if (auto y = h.locate(G.conjugate(g, x))) sum += chi(*y);
    }
    v[c] = sum / static_cast<double>(h.group()->order());
  }
  return Character(h.parent(), std::move(v));
}

long invariant_dimension(const Character& chi) { return multiplicity(chi, trivial_character(chi.group())); }

double max_difference(const Character& chi, const Character& psi) {
  if (chi.group() != psi.group()) throw DomainError("comparing characters on different groups");
  double m = 0.0;
  for (std::size_t c = 0; c < chi.values().size(); ++c) m = std::max(m, std::abs(chi.on_class(c) - psi.on_class(c)));
  return m;
}

FrobeniusResult frobenius_check(const Subgroup& h, const Character& chi_h, const Character& rho_g) {
  FrobeniusResult r;
  r.mult_up = multiplicity(induce_character(chi_h, h), rho_g);
  r.mult_down = multiplicity(chi_h, restrict_character(rho_g, h));
  return r;
}

StagesResult stages_check(const Subgroup& f_in_h, const Subgroup& h_in_g, const Character& chi_f) {
  if (f_in_h.parent() != h_in_g.group()) throw DomainError("stages: F <= H and H <= G do not share H");
  const Subgroup f_in_g(h_in_g.parent(), f_in_h.group());
  Character two_step = induce_character(induce_character(chi_f, f_in_h), h_in_g);
  Character direct = induce_character(chi_f, f_in_g);
  const double d = max_difference(two_step, direct);
  const double q =
      max_difference(induce_character(trivial_character(f_in_h.group()), f_in_h), permutation_character(f_in_h));
  return StagesResult{d, q, std::move(two_step), std::move(direct)};
}

// --- character data files -----------------------------------------------------------

namespace {

double parse_double(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + s + "'", line);
  }
  if (used != s.size()) throw ParseError("bad number '" + s + "'", line);
  return v;
}

}  // namespace

std::vector<Character> read_characters(std::istream& in, const GroupPtr& group) {
  std::vector<Character> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<Complex> values;
    std::string tok;
    while (tokens >> tok) {
      const auto comma = tok.find(',');
      if (comma == std::string::npos) {
        values.emplace_back(parse_double(tok, lineno), 0.0);
      } else {
        values.emplace_back(parse_double(tok.substr(0, comma), lineno), parse_double(tok.substr(comma + 1), lineno));
      }
    }
    if (values.empty()) continue;
    if (values.size() != group->class_count()) {
      throw ParseError("expected " + std::to_string(group->class_count()) + " class values, got " +
                           std::to_string(values.size()),
                       lineno);
    }
    out.emplace_back(group, std::move(values));
  }
  return out;
}

std::vector<Character> load_characters(const std::string& path, const GroupPtr& group) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character file '" + path + "'", 0);
  return read_characters(in, group);
}

double orthonormality_defect(std::span<const Character> table) {
  double worst = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      const Complex z = inner_product(table[i], table[j]);
      worst = std::max(worst, std::abs(z - Complex(i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::string format_complex(Complex z) {
  char buf[64];
  if (std::abs(z.imag()) < 1e-12) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace cosetlab
