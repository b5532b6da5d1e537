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

// Class functions on finite groups: pairing, restriction, induction and the
// multiplicity checks built from them (Frobenius reciprocity, induction in
// stages, invariant vectors of induced representations).

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cosetlab/errors.hpp"
#include "cosetlab/finite_group.hpp"

namespace cosetlab {

using Complex = std::complex<double>;

// Tolerance for reading an inner product as an integer multiplicity.
inline constexpr double kIntegralityTolerance = 1e-9;

// A multiplicity came out non-integral: the input was not a genuine character.
class IntegralityError : public DomainError {
 public:
  IntegralityError(const std::string& what, Complex value) : DomainError(what), value_(value) {}
  Complex value() const noexcept { return value_; }

 private:
  Complex value_;
};

class Character {
 public:
  // One value per conjugacy class of `group`, in class order.
  Character(GroupPtr group, std::vector<Complex> values);

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex on_class(std::size_t c) const { return values_.at(c); }
  Complex operator()(std::size_t element) const { return values_[group_->class_of(element)]; }
  Complex degree() const { return values_.front(); }

 private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

Character trivial_character(GroupPtr group);
Character regular_character(GroupPtr group);

// Character of G acting on the left cosets G/H, counted directly.
Character permutation_character(const Subgroup& h);

// (1/|G|) sum_g chi(g) conj(psi(g)), evaluated classwise.
Complex inner_product(const Character& chi, const Character& psi);

// Nearest integer to a pairing; throws IntegralityError if it is further
// than kIntegralityTolerance from one (real and imaginary part).
long multiplicity(const Character& chi, const Character& psi);

Character restrict_character(const Character& chi, const Subgroup& h);
Character induce_character(const Character& chi, const Subgroup& h);

long invariant_dimension(const Character& chi);

// Classwise maximum of |chi - psi|. Groups must match.
double max_difference(const Character& chi, const Character& psi);

struct FrobeniusResult {
  long mult_up = 0;    // <ind_H^G chi, rho>_G
  long mult_down = 0;  // <chi, res_H rho>_H
  bool holds() const noexcept { return mult_up == mult_down; }
};

FrobeniusResult frobenius_check(const Subgroup& h, const Character& chi_h, const Character& rho_g);

struct StagesResult {
  double two_step_vs_direct = 0.0;      // |ind_H^G ind_F^H chi - ind_F^G chi|
  double quasi_regular_mismatch = 0.0;  // |ind_F^H 1 - permutation character of H/F|
  Character two_step;
  Character direct;

  bool holds(double tol = kIntegralityTolerance) const noexcept {
    return two_step_vs_direct <= tol && quasi_regular_mismatch <= tol;
  }
};

// F <= H <= G given as f_in_h and h_in_g; throws DomainError if they do not nest.
StagesResult stages_check(const Subgroup& f_in_h, const Subgroup& h_in_g, const Character& chi_f);

// Character data: one character per line, values in the group's class order
// as `re,im` or `re`, blank lines and `#` comments ignored.
std::vector<Character> read_characters(std::istream& in, const GroupPtr& group);
std::vector<Character> load_characters(const std::string& path, const GroupPtr& group);

// Largest |<chi_i, chi_j> - delta_ij| over the table; irreducible tables give ~0.
double orthonormality_defect(std::span<const Character> table);

std::string format_complex(Complex z);

}  // namespace cosetlab
