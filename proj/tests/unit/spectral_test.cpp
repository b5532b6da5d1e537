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

#include "cosetlab/spectral.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "cosetlab/errors.hpp"
#include "oracles.hpp"

namespace cosetlab {
namespace {

Word W(const char* literal) { return parse_word(literal); }

constexpr double kTol = 1e-6;

TEST(GenSet, SymmetryIsRequired) {
  EXPECT_THROW(GenSet({translation(1)}), DomainError);
  EXPECT_THROW(GenSet(std::vector<GElement>{}), DomainError);
  EXPECT_NO_THROW(GenSet({translation(1), translation(-1)}));
  EXPECT_NO_THROW(GenSet({GElement{}, GElement{}}));
  const std::vector<GElement> one{parse_gelement("(1; x0)")};
  const GenSet closed = GenSet::symmetric_closure(one);
  EXPECT_EQ(closed.size(), 2u);
  EXPECT_EQ(closed.elements()[1], g_inv(one[0]));
}

TEST(MarkovOperator, SingleNodeIdentity) {
  const GenSet s({GElement{}, GElement{}});
  const OrbitBall ball(Coset::base(0), {s.elements().begin(), s.elements().end()}, 3);
  const SparseOperator m = markov_operator(ball);
  ASSERT_EQ(m.dimension(), 1u);
  EXPECT_EQ(m.entry(0, 0), 1.0);
  EXPECT_EQ(estimate_norm(m, 100, 1e-12).value, 1.0);
}

TEST(MarkovOperator, PathFromTranslations) {
  const OrbitBall ball(Coset::base(0), {translation(1), translation(-1)}, 3);
  const SparseOperator m = markov_operator(ball);
  ASSERT_EQ(m.dimension(), 7u);
  EXPECT_TRUE(m.is_symmetric());
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const GenIndex li = ball.node(i).level(), lj = ball.node(j).level();
      EXPECT_EQ(m.entry(i, j), std::abs(li - lj) == 1 ? 0.5 : 0.0);
    }
  }
}

TEST(MarkovOperator, StarHubRow) {
  const GenSet s = free_generators(2);
  const OrbitBall ball(Coset::base(0), {s.elements().begin(), s.elements().end()}, 1);
  const SparseOperator m = markov_operator(ball);
  ASSERT_EQ(m.dimension(), 5u);
  for (std::size_t j = 1; j < 5; ++j) EXPECT_EQ(m.entry(0, j), 0.25);
  EXPECT_EQ(m.row_sum_numerator(0), 4u);
  EXPECT_EQ(m.row_sum_numerator(1), 1u);
}

TEST(MarkovOperator, PrefixCompressionMatchesSmallerBall) {
  const GenSet s = free_generators(2);
  const std::vector<GElement> g(s.elements().begin(), s.elements().end());
  const OrbitBall big(Coset::base(0), g, 5);
  const OrbitBall small(Coset::base(0), g, 3);
  const SparseOperator a = markov_operator(big, 3);
  const SparseOperator b = markov_operator(small);
  ASSERT_EQ(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) EXPECT_EQ(a.numerator(i, j), b.numerator(i, j));
  }
}

TEST(MarkovOperator, SymmetricForSymmetricSets) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GElement> raw;
    for (int i = 0; i < 3; ++i) raw.push_back(testing::random_gelement(rng, 3, -3, 3, 1));
    const GenSet s = GenSet::symmetric_closure(raw);
    const OrbitBall ball(Coset::base(0), {s.elements().begin(), s.elements().end()}, 3);
    const SparseOperator m = markov_operator(ball);
    EXPECT_TRUE(m.is_symmetric());
    for (std::size_t i = 0; i < m.dimension(); ++i) EXPECT_LE(m.row_sum_numerator(i), s.size());
  }
}

TEST(EstimateNorm, ClosedForms) {
  const OrbitBall path(Coset::base(0), {translation(1), translation(-1)}, 1);
  EXPECT_NEAR(estimate_norm(markov_operator(path), kDefaultIterations, 1e-13).value, std::cos(M_PI / 4), kTol);
  const GenSet s = free_generators(2);
  const OrbitBall star(Coset::base(0), {s.elements().begin(), s.elements().end()}, 1);
  EXPECT_NEAR(estimate_norm(markov_operator(star), kDefaultIterations, 1e-13).value, 0.5, kTol);
}

TEST(EstimateNorm, MatchesDenseEigensolve) {
  const GenSet s = free_generators(2);
  const std::vector<GElement> g(s.elements().begin(), s.elements().end());
  for (int r = 1; r <= 5; ++r) {
    const OrbitBall ball(Coset::base(0), g, r);
    const double est = estimate_norm(markov_operator(ball), kDefaultIterations, 1e-13).value;
    const double exact = testing::dense_tree_ball_eigenvalue(2, r);
    EXPECT_LE(est, exact + 1e-12) << r;
    EXPECT_NEAR(est, exact, 1e-6) << r;
  }
}

TEST(EstimateNorm, NeverExceedsOne) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GElement> raw;
    for (int i = 0; i < 2; ++i) raw.push_back(testing::random_gelement(rng, 3, -2, 2, 1));
    const GenSet s = GenSet::symmetric_closure(raw);
    const OrbitBall ball(Coset::base(0), {s.elements().begin(), s.elements().end()}, 4);
    const double v = norm_lower_bound(markov_operator(ball), 2000, 1e-10);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-12);
  }
}

TEST(KestenProfile, RadiusZeroIsIdentityWeight) {
  const GenSet s({GElement{}, GElement{}, translation(1), translation(-1)});
  const std::vector<int> radii{0};
  const SpectralProfile p = kesten_profile(Coset::base(0), s, radii);
  EXPECT_DOUBLE_EQ(p.estimates[0], 0.5);
}

TEST(KestenProfile, MonotoneAndBounded) {
  const std::vector<int> radii{1, 2, 3, 4, 5, 6, 7, 8};
  const SpectralProfile p = kesten_profile(Coset::base(0), free_generators(2), radii);
  ASSERT_EQ(p.estimates.size(), radii.size());
  for (std::size_t i = 1; i < radii.size(); ++i) EXPECT_GE(p.estimates[i], p.estimates[i - 1]);
  EXPECT_LT(p.estimates.back(), std::sqrt(3.0) / 2);
  EXPECT_EQ(p.ball_sizes.back(), 1u + 2u * (6561u - 1u));
}

TEST(KestenProfile, ZDirectionApproachesOne) {
  std::vector<int> radii{25, 50, 100, 200};
  const SpectralProfile p = kesten_profile(Coset::base(0), free_generators(1), radii);
  EXPECT_GT(p.estimates.back(), 0.99);
  // Path of 2r+1 nodes: cos(pi / (2r + 2)).
  EXPECT_NEAR(p.estimates[0], std::cos(M_PI / 52), 1e-6);
}

TEST(KestenProfile, RejectsUnsortedRadii) {
  const std::vector<int> radii{3, 2};
  EXPECT_THROW(kesten_profile(Coset::base(0), free_generators(2), radii), DomainError);
}

TEST(DeltaInvariance, Examples) {
  const std::vector<Word> a{W("x0")};
  const auto ra = delta_invariance_check(a);
  EXPECT_EQ(ra.level, 0);
  EXPECT_TRUE(ra.invariant());
  EXPECT_EQ(ra.deviations[0].second, 0.0);

  const std::vector<Word> b{W("x5 x3 x5^-1"), W("x1")};
  const auto rb = delta_invariance_check(b);
  EXPECT_EQ(rb.level, 3);
  EXPECT_TRUE(rb.invariant());

  EXPECT_EQ(delta_deviation(W("x4"), 3), std::sqrt(2.0));
  EXPECT_EQ(delta_deviation(W("x4"), 4), 0.0);
  EXPECT_THROW(delta_invariance_check(std::span<const Word>{}), DomainError);
}

TEST(DeltaInvariance, RandomSetsAreExactlyInvariant) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Word> s;
    const int size = 1 + trial % 5;
    for (int i = 0; i < size; ++i) s.push_back(testing::random_word(rng, 6, -5, 5));
    const auto report = delta_invariance_check(s);
    EXPECT_TRUE(report.invariant());
    for (const auto& [w, d] : report.deviations) EXPECT_EQ(d, 0.0);
    for (const Word& w : s) {
      if (!w.is_identity()) EXPECT_LE(minimal_level(w), report.level);
    }
  }
}

TEST(Reiter, TranslationOnly) {
  const GenSet s({translation(1), translation(-1)});
  const ReiterCertificate cert = reiter_search(s, 0.2);
  EXPECT_EQ(cert.window_size, 50u);
  EXPECT_NEAR(cert.max_deviation(), 0.2, 1e-12);
  EXPECT_NEAR(cert.norm, 1.0, 1e-12);
  for (std::size_t n : {1u, 7u, 50u, 333u}) {
    std::vector<std::pair<Coset, double>> xi;
    for (std::size_t i = 1; i <= n; ++i) xi.emplace_back(Coset::base(static_cast<GenIndex>(i)), 1 / std::sqrt(double(n)));
    EXPECT_NEAR(translation_deviation(xi, translation(1)), std::sqrt(2.0 / double(n)), 1e-12);
  }
}

TEST(Reiter, ExactInvarianceNeedsOneCoset) {
  const GenSet s({in_h(W("x0")), in_h(W("x0^-1"))});
  const ReiterCertificate cert = reiter_search(s, 0.5);
  EXPECT_EQ(cert.window_size, 1u);
  EXPECT_EQ(cert.max_deviation(), 0.0);
}

TEST(Reiter, MixedGenerators) {
  const GenSet s = GenSet::symmetric_closure(std::vector<GElement>{translation(1), in_h(W("x0")), in_h(W("x-3"))});
  const ReiterCertificate cert = reiter_search(s, 0.1);
  EXPECT_GE(cert.window_size, 200u);
  EXPECT_LE(cert.window_size, 400u);
  EXPECT_LE(cert.max_deviation(), 0.1 + kReiterSlack);
  for (const auto& [g, d] : cert.deviations) EXPECT_EQ(translation_deviation(cert.vector, g), d);
}

TEST(Reiter, EpsilonRange) {
  const GenSet s({translation(1), translation(-1)});
  EXPECT_THROW(reiter_search(s, 0.0), DomainError);
  EXPECT_THROW(reiter_search(s, 2.0), DomainError);
  ReiterOptions tight;
  tight.max_window = 8;
  EXPECT_THROW(reiter_search(s, 0.01, tight), ResourceError);
}

}  // namespace
}  // namespace cosetlab
