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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cosetlab/errors.hpp"

namespace cosetlab {

// --- GenSet ---------------------------------------------------------------------

bool GenSet::is_symmetric(std::span<const GElement> elements) {
  std::map<GElement, long> balance;
  for (const GElement& g : elements) {
    ++balance[g];
    --balance[g_inv(g)];
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

GenSet::GenSet(std::vector<GElement> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("generator set is empty");
  if (!is_symmetric(elements_)) throw DomainError("generator multiset is not closed under inversion");
}

GenSet GenSet::symmetric_closure(std::span<const GElement> elements) {
  std::vector<GElement> out;
  out.reserve(2 * elements.size());
  for (const GElement& g : elements) {
    out.push_back(g);
    out.push_back(g_inv(g));
  }
  return GenSet(std::move(out));
}

std::string describe(const GenSet& gens) {
  std::string s = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += to_string(gens.elements()[i]);
  }
  return s + "}";
}

GenSet free_generators(int k) {
  if (k < 1) throw DomainError("need at least one free generator");
  std::vector<GElement> gens;
  for (int i = 1; i <= k; ++i) gens.push_back(in_h(Word::generator(i)));
  return GenSet::symmetric_closure(gens);
}

// --- SparseOperator ---------------------------------------------------------------

SparseOperator::SparseOperator(std::size_t dimension, std::uint32_t denominator,
                               std::vector<std::size_t> row_start, std::vector<std::uint32_t> columns,
                               std::vector<std::uint32_t> numerators)
    : dimension_(dimension),
      denominator_(denominator),
      row_start_(std::move(row_start)),
      columns_(std::move(columns)),
      numerators_(std::move(numerators)) {
  if (denominator_ == 0) throw DomainError("operator denominator is zero");
  if (row_start_.size() != dimension_ + 1 || columns_.size() != numerators_.size() ||
      row_start_.back() != columns_.size()) {
    throw DomainError("malformed CSR layout");
  }
}

std::uint32_t SparseOperator::numerator(std::size_t row, std::size_t col) const {
  const auto first = columns_.begin() + static_cast<std::ptrdiff_t>(row_start_.at(row));
  const auto last = columns_.begin() + static_cast<std::ptrdiff_t>(row_start_.at(row + 1));
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(col));
  if (it == last || *it != col) return 0;
  return numerators_[static_cast<std::size_t>(it - columns_.begin())];
}

std::uint64_t SparseOperator::row_sum_numerator(std::size_t row) const {
  std::uint64_t sum = 0;
  for (std::size_t k = row_start_.at(row); k < row_start_.at(row + 1); ++k) sum += numerators_[k];
  return sum;
}

bool SparseOperator::is_symmetric() const {
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
      if (numerator(columns_[k], i) != numerators_[k]) return false;
    }
  }
  return true;
}

void SparseOperator::apply(std::span<const double> x, std::span<double> y) const {
  const double scale = 1.0 / denominator_;
  for (std::size_t i = 0; i < dimension_; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) acc += numerators_[k] * x[columns_[k]];
    y[i] = acc * scale;
  }
}

SparseOperator markov_operator(const OrbitBall& ball) { return markov_operator(ball, ball.radius()); }

SparseOperator markov_operator(const OrbitBall& ball, int radius) {
  if (!GenSet::is_symmetric(ball.generators())) {
    throw DomainError("markov_operator needs a symmetric generator multiset");
  }
  if (radius < 0 || radius > ball.radius()) throw DomainError("compression radius outside the ball");
  const std::size_t n = ball.size_within(radius);

  // lambda(s) delta_src = delta_dst contributes to entry (dst, src).
  std::vector<std::size_t> row_start(n + 1, 0);
  for (const OrbitEdge& e : ball.edges()) {
    if (e.src < n && e.dst < n) ++row_start[e.dst + 1];
  }
  std::partial_sum(row_start.begin(), row_start.end(), row_start.begin());
  std::vector<std::uint32_t> cols(row_start.back());
  std::vector<std::size_t> fill(row_start.begin(), row_start.end() - 1);
  for (const OrbitEdge& e : ball.edges()) {
    if (e.src < n && e.dst < n) cols[fill[e.dst]++] = e.src;
  }

  // Sort each row and merge repeated columns into counts.
  std::vector<std::size_t> out_start(n + 1, 0);
  std::vector<std::uint32_t> out_cols;
  std::vector<std::uint32_t> out_nums;
  out_cols.reserve(cols.size());
  out_nums.reserve(cols.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto first = cols.begin() + static_cast<std::ptrdiff_t>(row_start[i]);
    auto last = cols.begin() + static_cast<std::ptrdiff_t>(row_start[i + 1]);
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (out_cols.size() > out_start[i] && out_cols.back() == *it) {
        ++out_nums.back();
      } else {
        out_cols.push_back(*it);
        out_nums.push_back(1);
      }
    }
    out_start[i + 1] = out_cols.size();
  }
  return SparseOperator(n, static_cast<std::uint32_t>(ball.generators().size()), std::move(out_start),
                        std::move(out_cols), std::move(out_nums));
}

// --- power iteration -------------------------------------------------------------

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

NormEstimate estimate_norm(const SparseOperator& op, int iterations, double tol, std::span<const double> start) {
  if (iterations < 1) throw DomainError("iterations must be >= 1");
  const std::size_t n = op.dimension();
  std::vector<double> x(n, 0.0);
  if (start.empty()) {
    std::fill(x.begin(), x.end(), 1.0);
  } else {
    const std::size_t m = std::min(n, start.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (start[i] < 0.0) throw DomainError("start vector must be nonnegative");
      x[i] = start[i];
    }
  }
  double norm = std::sqrt(dot(x, x));
  if (norm == 0.0) throw DomainError("start vector is zero");
  for (double& v : x) v /= norm;

  std::vector<double> mx(n);
  op.apply(x, mx);
  NormEstimate best;
  best.value = dot(x, mx);
  best.vector = x;

  double previous = best.value;
  for (int it = 1; it <= iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) x[i] = 0.5 * (x[i] + mx[i]);
    norm = std::sqrt(dot(x, x));
    for (double& v : x) v /= norm;
    op.apply(x, mx);
    const double rq = dot(x, mx);
    best.iterations = it;
    if (rq > best.value) {
      best.value = rq;
      best.vector = x;
    }
    if (std::abs(rq - previous) < tol) {
      best.converged = true;
      break;
    }
    previous = rq;
  }
  return best;
}

double norm_lower_bound(const SparseOperator& op, int iterations, double tol) {
  return estimate_norm(op, iterations, tol).value;
}

SpectralProfile kesten_profile(const Coset& base, const GenSet& gens, std::span<const int> radii,
                               const ProfileOptions& options) {
  SpectralProfile profile;
  profile.generators = describe(gens);
  if (radii.empty()) return profile;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0) throw DomainError("radii must be nonnegative");
    if (i > 0 && radii[i] <= radii[i - 1]) throw DomainError("radii must be strictly increasing");
  }

  const std::vector<GElement> elements(gens.elements().begin(), gens.elements().end());
  const OrbitBall ball(base, elements, radii.back(), options.node_cap);

  std::vector<double> warm;
  double floor = 0.0;
  for (int r : radii) {
    const SparseOperator op = markov_operator(ball, r);
    NormEstimate est = estimate_norm(op, options.iterations, options.tol, warm);
    // Zero-extending the previous vector keeps its Rayleigh quotient, so
    // est.value >= floor up to rounding.
    floor = std::max(floor, est.value);
    profile.radii.push_back(r);
    profile.estimates.push_back(floor);
    profile.ball_sizes.push_back(op.dimension());
    warm = std::move(est.vector);
  }
  return profile;
}

// --- exact invariance -------------------------------------------------------------

double delta_deviation(const Word& s, GenIndex level) {
  const Coset c = Coset::base(level);
  return act(in_h(s), c) == c ? 0.0 : std::sqrt(2.0);
}

DeltaInvarianceReport delta_invariance_check(std::span<const Word> words) {
  if (words.empty()) throw DomainError("delta_invariance_check needs a nonempty set");
  DeltaInvarianceReport report;
  bool have_level = false;
  for (const Word& s : words) {
    if (s.is_identity()) continue;
    const GenIndex n = minimal_level(s);
    report.level = have_level ? std::max(report.level, n) : n;
    have_level = true;
  }
  const Coset c = Coset::base(report.level);
  for (const Word& s : words) {
    const bool fixed = act(in_h(s), c) == c;
    if (!fixed) ++report.moved;
    report.deviations.emplace_back(s, fixed ? 0.0 : std::sqrt(2.0));
  }
  return report;
}

// --- Reiter vectors --------------------------------------------------------------

double ReiterCertificate::max_deviation() const {
  double m = 0.0;
  for (const auto& [g, d] : deviations) m = std::max(m, d);
  return m;
}

double translation_deviation(std::span<const std::pair<Coset, double>> vector, const GElement& g) {
  std::unordered_map<Coset, double> xi;
  xi.reserve(vector.size());
  for (const auto& [c, a] : vector) xi[c] += a;
  std::unordered_map<Coset, double> moved;
  moved.reserve(vector.size());
  for (const auto& [c, a] : xi) moved[act(g, c)] += a;

  double sum = 0.0;
  for (const auto& [c, a] : moved) {
    const auto it = xi.find(c);
    const double d = a - (it == xi.end() ? 0.0 : it->second);
    sum += d * d;
  }
  for (const auto& [c, a] : xi) {
    if (!moved.contains(c)) sum += a * a;
  }
  return std::sqrt(sum);
}

namespace {

std::vector<std::pair<Coset, double>> uniform_window(GenIndex start, std::size_t size) {
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(size));
  std::vector<std::pair<Coset, double>> v;
  v.reserve(size);
  for (std::size_t k = 1; k <= size; ++k) v.emplace_back(Coset::base(start + static_cast<GenIndex>(k)), amplitude);
  return v;
}

ReiterCertificate evaluate_window(const GenSet& gens, double epsilon, GenIndex start, std::size_t size) {
  ReiterCertificate cert;
  cert.window_start = start;
  cert.window_size = size;
  cert.epsilon = epsilon;
  cert.vector = uniform_window(start, size);
  double sq = 0.0;
  for (const auto& [c, a] : cert.vector) sq += a * a;
  cert.norm = std::sqrt(sq);
  for (const GElement& g : gens.elements()) cert.deviations.emplace_back(g, translation_deviation(cert.vector, g));
  return cert;
}

bool passes(const ReiterCertificate& cert) { return cert.max_deviation() <= cert.epsilon + kReiterSlack; }

}  // namespace

ReiterCertificate reiter_search(const GenSet& gens, double epsilon, const ReiterOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) throw DomainError("epsilon must lie in (0, 2)");

  GenIndex start = 0;
  bool have_level = false;
  for (const GElement& g : gens.elements()) {
    if (g.word.is_identity()) continue;
    const GenIndex n = minimal_level(g.word);
    start = have_level ? std::max(start, n) : n;
    have_level = true;
  }

  std::size_t size = 1;
  ReiterCertificate cert = evaluate_window(gens, epsilon, start, size);
  while (!passes(cert)) {
    if (size >= options.max_window) {
      throw ResourceError("Reiter window exceeds cap of " + std::to_string(options.max_window));
    }
    size = std::min(2 * size, options.max_window);
    cert = evaluate_window(gens, epsilon, start, size);
  }

  // Bisect inside the last doubling step for the smallest passing window.
  std::size_t lo = size / 2;  // fails (or zero)
  std::size_t hi = size;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ReiterCertificate trial = evaluate_window(gens, epsilon, start, mid);
    if (passes(trial)) {
      hi = mid;
      cert = std::move(trial);
    } else {
      lo = mid;
    }
  }
  return cert;
}

}  // namespace cosetlab
