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

// Quantitative amenability tests on coset spaces.
//
// For a symmetric generator multiset S the averaging operator
// M = |S|^-1 sum_s lambda(s) is a self-adjoint contraction of l2(G/F), and
// the coset space is amenable iff ||M|| = 1. Compressing M to a finite orbit
// ball and reading a Rayleigh quotient gives a certified lower bound on ||M||.
// The amenable side is witnessed directly with explicit almost-invariant
// unit vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosetlab/coset_space.hpp"
#include "cosetlab/free_group.hpp"

namespace cosetlab {

// Finite multiset of G-elements closed under inversion with multiplicity.
class GenSet {
 public:
  // Throws DomainError if empty or not symmetric.
  explicit GenSet(std::vector<GElement> elements);

  // Appends g^-1 after every g (so {t} becomes {t, t^-1}).
  static GenSet symmetric_closure(std::span<const GElement> elements);

  std::span<const GElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  static bool is_symmetric(std::span<const GElement> elements);

 private:
  std::vector<GElement> elements_;
};

std::string describe(const GenSet& gens);

// Sparse matrix with entries numerator / denominator, numerators are small
// nonnegative integers (CSR layout).
class SparseOperator {
 public:
  SparseOperator(std::size_t dimension, std::uint32_t denominator,
                 std::vector<std::size_t> row_start, std::vector<std::uint32_t> columns,
                 std::vector<std::uint32_t> numerators);

  std::size_t dimension() const noexcept { return dimension_; }
  std::uint32_t denominator() const noexcept { return denominator_; }
  std::size_t nonzeros() const noexcept { return columns_.size(); }

  std::uint32_t numerator(std::size_t row, std::size_t col) const;
  double entry(std::size_t row, std::size_t col) const {
    return static_cast<double>(numerator(row, col)) / denominator_;
  }
  std::uint64_t row_sum_numerator(std::size_t row) const;

  // Exact comparison of integer numerators.
  bool is_symmetric() const;

  void apply(std::span<const double> x, std::span<double> y) const;

  std::span<const std::size_t> row_start() const noexcept { return row_start_; }
  std::span<const std::uint32_t> columns() const noexcept { return columns_; }
  std::span<const std::uint32_t> numerators() const noexcept { return numerators_; }

 private:
  std::size_t dimension_;
  std::uint32_t denominator_;
  std::vector<std::size_t> row_start_;
  std::vector<std::uint32_t> columns_;
  std::vector<std::uint32_t> numerators_;
};

// Averaging operator of ball.generators() compressed to the ball (zero
// boundary). The second form compresses to the sub-ball of radius r.
SparseOperator markov_operator(const OrbitBall& ball);
SparseOperator markov_operator(const OrbitBall& ball, int radius);

struct NormEstimate {
  double value = 0.0;          // best Rayleigh quotient seen
  std::vector<double> vector;  // unit iterate attaining it
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultIterations = 20000;

// Power iteration on (I + M) / 2 with Rayleigh quotients of M as readout.
// The lazy operator is positive semidefinite, so the quotients are
// nondecreasing along the iteration; every returned value is <= ||M||.
// `start` must be nonnegative and nonzero; the uniform vector is used when
// it is absent. Shorter starts are padded with zeros.
NormEstimate estimate_norm(const SparseOperator& op, int iterations, double tol,
                           std::span<const double> start = {});

double norm_lower_bound(const SparseOperator& op, int iterations, double tol);

struct SpectralProfile {
  std::vector<int> radii;
  std::vector<double> estimates;
  std::vector<std::size_t> ball_sizes;
  std::string generators;
};

struct ProfileOptions {
  int iterations = kDefaultIterations;
  double tol = kDefaultTolerance;
  std::size_t node_cap = kDefaultNodeCap;
};

// Norm lower bounds on nested balls around `base`. Each radius warm-starts
// from the previous radius' vector, so estimates never decrease.
SpectralProfile kesten_profile(const Coset& base, const GenSet& gens, std::span<const int> radii,
                               const ProfileOptions& options = {});

// Generators (0, x_1)^{+-1}, ..., (0, x_k)^{+-1}.
GenSet free_generators(int k);

// --- exact invariance ----------------------------------------------------------

// ||lambda((0, s)) delta_c - delta_c|| for the base coset c = Coset(level, e).
// Either exactly 0 or exactly sqrt(2).
double delta_deviation(const Word& s, GenIndex level);

struct DeltaInvarianceReport {
  GenIndex level = 0;
  std::vector<std::pair<Word, double>> deviations;
  std::size_t moved = 0;  // number of s that move the base coset

  bool invariant() const noexcept { return moved == 0; }
};

// Checks the base coset at level max_s minimal_level(s) against every s.
// Identity words are allowed and fix every coset; if S contains only
// identities the level is 0.
DeltaInvarianceReport delta_invariance_check(std::span<const Word> words);

// --- Reiter vectors ------------------------------------------------------------

struct ReiterCertificate {
  GenIndex window_start = 0;  // n0: vector supported on levels n0+1 .. n0+N
  std::size_t window_size = 0;  // N
  std::vector<std::pair<Coset, double>> vector;
  double norm = 0.0;
  std::vector<std::pair<GElement, double>> deviations;
  double epsilon = 0.0;

  double max_deviation() const;
};

// Absolute slack used when comparing a computed deviation against epsilon.
inline constexpr double kReiterSlack = 1e-12;

struct ReiterOptions {
  std::size_t max_window = std::size_t{1} << 24;
};

// ||lambda(g) xi - xi|| for a finitely supported vector, by exact coset action.
double translation_deviation(std::span<const std::pair<Coset, double>> vector, const GElement& g);

// Uniform unit vector on Coset(n, e), n0 < n <= n0 + N, where n0 bounds the
// minimal levels of the F-parts of S. N is doubled until every deviation is
// within epsilon, then bisected down to the smallest passing window.
ReiterCertificate reiter_search(const GenSet& gens, double epsilon, const ReiterOptions& options = {});

}  // namespace cosetlab
