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

// Test-only oracles. Nothing here calls into the reduction, retraction or
// orbit code it is used to check: words are handled as plain letter
// vectors with a naive reducer.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cosetlab/finite_group.hpp"
#include "cosetlab/free_group.hpp"

namespace cosetlab::testing {

struct RawLetter {
  long index;
  int exp;
  bool operator==(const RawLetter&) const = default;
};
using RawWord = std::vector<RawLetter>;

// Repeatedly deletes the first cancelling pair.
inline RawWord naive_reduce(RawWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].index == w[i + 1].index && w[i].exp == -w[i + 1].exp) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline RawWord naive_mul(const RawWord& a, const RawWord& b) {
  RawWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return naive_reduce(std::move(w));
}

inline RawWord naive_inv(const RawWord& a) {
  RawWord w(a.rbegin(), a.rend());
  for (auto& l : w) l.exp = -l.exp;
  return w;
}

inline RawWord to_raw(const Word& w) {
  RawWord r;
  for (const Letter& l : w.letters()) r.push_back({static_cast<long>(l.index), l.exponent});
  return r;
}

inline Word from_raw(const RawWord& r) {
  std::vector<Letter> letters;
  for (const auto& l : r) letters.push_back({l.index, static_cast<std::int8_t>(l.exp)});
  return Word::reduce(letters);
}

// --- normal closure membership ------------------------------------------------

enum class Membership { Member, NonMember, Unknown };

// u as an explicit product of conjugates c x_i^{+-1} c^-1 with i <= n,
// found by depth-bounded search. The product is re-multiplied and compared.
inline std::optional<std::vector<RawWord>> conjugate_certificate(const RawWord& u, long n, int depth) {
  if (u.empty()) return std::vector<RawWord>{};
  if (depth == 0) return std::nullopt;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j].index > n) continue;
    const RawWord c(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j));
    RawWord conj = c;
    conj.push_back(u[j]);
    conj = naive_mul(conj, naive_inv(c));
    const RawWord rest = naive_mul(naive_inv(conj), u);
    if (auto tail = conjugate_certificate(rest, n, depth - 1)) {
      tail->insert(tail->begin(), conj);
      return tail;
    }
  }
  return std::nullopt;
}

// Homomorphisms to S_d that kill x_i for i <= n and send the remaining
// generators to random permutations. A nontrivial image certifies u is not
// in the normal closure.
inline bool permutation_witness_excludes(const RawWord& u, long n, std::mt19937_64& rng, int trials = 200,
                                         int degree = 7) {
  for (int t = 0; t < trials; ++t) {
    std::map<long, std::vector<int>> images;
    std::vector<int> point(static_cast<std::size_t>(degree));
    std::iota(point.begin(), point.end(), 0);
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      if (it->index <= n) continue;
      auto& perm = images[it->index];
      if (perm.empty()) {
        perm.resize(static_cast<std::size_t>(degree));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
      }
      std::vector<int> inverse(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      const auto& map = it->exp > 0 ? perm : inverse;
      for (int& p : point) p = map[static_cast<std::size_t>(p)];
    }
    for (int i = 0; i < degree; ++i) {
      if (point[static_cast<std::size_t>(i)] != i) return true;
    }
  }
  return false;
}

inline Membership oracle_membership(const Word& w, long n, std::mt19937_64& rng) {
  const RawWord u = to_raw(w);
  if (auto cert = conjugate_certificate(u, n, static_cast<int>(u.size()))) {
    RawWord product;
    for (const RawWord& c : *cert) product = naive_mul(product, c);
    if (product == naive_reduce(u)) return Membership::Member;
  }
  if (permutation_witness_excludes(u, n, rng)) return Membership::NonMember;
  return Membership::Unknown;
}

// --- random generators ----------------------------------------------------------

inline Word random_word(std::mt19937_64& rng, int max_len, long lo, long hi) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<long> idx(lo, hi);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back({idx(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
  return Word::reduce(raw);
}

// Random element of Gamma_n: a product of conjugates w x_i^{+-1} w^-1, i <= n.
inline Word random_gamma_element(std::mt19937_64& rng, long n, int factors, int conj_len, long lo, long hi) {
  std::uniform_int_distribution<long> killed(std::min(lo, n), n);
  std::bernoulli_distribution sign(0.5);
  RawWord acc;
  for (int f = 0; f < factors; ++f) {
    const RawWord c = to_raw(random_word(rng, conj_len, lo, hi));
    RawWord g = c;
    g.push_back({killed(rng), sign(rng) ? 1 : -1});
    acc = naive_mul(acc, naive_mul(g, naive_inv(c)));
  }
  return from_raw(acc);
}

inline GElement random_gelement(std::mt19937_64& rng, int max_len, long lo, long hi, long max_shift) {
  std::uniform_int_distribution<long> shift(-max_shift, max_shift);
  return {shift(rng), random_word(rng, max_len, lo, hi)};
}

// --- spectral oracles -------------------------------------------------------------

// Top eigenvalue of the simple random walk on the free group on k letters,
// compressed to the ball of radius r. Built from scratch by enumerating
// reduced words and solved densely.
inline double dense_tree_ball_eigenvalue(int k, int r) {
  std::vector<RawWord> words{{}};
  std::map<std::vector<std::pair<long, int>>, std::size_t> index;
  auto key = [](const RawWord& w) {
    std::vector<std::pair<long, int>> v;
    for (const auto& l : w) v.emplace_back(l.index, l.exp);
    return v;
  };
  index[key(words[0])] = 0;
  std::size_t begin = 0;
  for (int d = 0; d < r; ++d) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (long a = 1; a <= k; ++a) {
        for (int e : {1, -1}) {
          if (!words[i].empty() && words[i].back().index == a && words[i].back().exp == -e) continue;
          RawWord w = words[i];
          w.push_back({a, e});
          index[key(w)] = words.size();
          words.push_back(std::move(w));
        }
      }
    }
    begin = end;
  }
  const auto n = static_cast<Eigen::Index>(words.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (long a = 1; a <= k; ++a) {
      for (int e : {1, -1}) {
        RawWord img{{a, e}};
        img = naive_mul(img, words[i]);
        const auto it = index.find(key(img));
        if (it != index.end()) m(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(i)) += 1.0 / (2 * k);
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// Fits v(r) = L cos(pi / (r + c)) through two consecutive radii and returns L.
inline double extrapolate_limit(double v_prev, int r_prev, double v_last, int r_last) {
  auto ratio = [&](double c) {
    return v_prev / v_last - std::cos(M_PI / (r_prev + c)) / std::cos(M_PI / (r_last + c));
  };
  double lo = 0.05, hi = 20.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((ratio(lo) < 0) == (ratio(mid) < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double c = 0.5 * (lo + hi);
  return v_last / std::cos(M_PI / (r_last + c));
}

// --- finite group oracles ------------------------------------------------------

// |SL(n, F_p)| = p^(n(n-1)/2) prod_{k=2..n} (p^k - 1).
inline std::uint64_t sl_order_formula(int n, int p) {
  std::uint64_t order = 1;
  for (int k = 0; k < n * (n - 1) / 2; ++k) order *= static_cast<std::uint64_t>(p);
  for (int k = 2; k <= n; ++k) {
    std::uint64_t pk = 1;
    for (int j = 0; j < k; ++j) pk *= static_cast<std::uint64_t>(p);
    order *= pk - 1;
  }
  return order;
}

// Smallest m >= 2 with A mod m != I, by reducing every entry for each m.
inline std::int64_t exhaustive_separation(const IntMatrix& a) {
  for (std::int64_t m = 2;; ++m) {
    for (int i = 0; i < a.n; ++i) {
      for (int j = 0; j < a.n; ++j) {
        const std::int64_t want = i == j ? 1 : 0;
        if (((a(i, j) - want) % m + m) % m != 0) return m;
      }
    }
  }
}

}  // namespace cosetlab::testing
