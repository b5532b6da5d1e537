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

#include "cosetlab/finite_group.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cosetlab/errors.hpp"
#include "oracles.hpp"

namespace cosetlab {
namespace {

FiniteGroup perm_group(int degree, std::initializer_list<const char*> gens) {
  const GroupShape shape{GroupKind::Permutation, degree, 0};
  std::vector<Element> g;
  for (const char* text : gens) g.push_back(parse_permutation(text, degree));
  return FiniteGroup::generate(shape, g);
}

TEST(Generate, SymmetricGroups) {
  const FiniteGroup s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.class_count(), 3u);
  const FiniteGroup s4 = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_EQ(s4.class_count(), 5u);
  EXPECT_TRUE(s4.verify_axioms());
  const FiniteGroup s5 = perm_group(5, {"(1 2)", "(1 2 3 4 5)"});
  EXPECT_EQ(s5.order(), 120u);
  EXPECT_EQ(s5.class_count(), 7u);
}

TEST(Generate, ClassesPartitionTheGroup) {
  const FiniteGroup s4 = perm_group(4, {"(1 2)", "(1 2 3 4)"});
  std::size_t total = 0;
  for (std::size_t c = 0; c < s4.class_count(); ++c) {
    total += s4.class_size(c);
    EXPECT_EQ(s4.class_of(s4.class_rep(c)), c);
    EXPECT_EQ(s4.order() % s4.class_size(c), 0u);
  }
  EXPECT_EQ(total, s4.order());
  EXPECT_EQ(s4.class_size(0), 1u);
  for (std::size_t g = 0; g < s4.order(); ++g) {
    for (std::size_t x = 0; x < s4.order(); ++x) EXPECT_EQ(s4.class_of(s4.conjugate(g, x)), s4.class_of(g));
    EXPECT_EQ(s4.element_order(s4.class_rep(s4.class_of(g))), s4.element_order(g));
  }
}

TEST(Generate, RejectsBadInput) {
  const GroupShape mat{GroupKind::Matrix, 2, 4};
  const std::vector<Element> singular{parse_matrix("[[2,0],[0,1]]", 2, 4)};
  EXPECT_THROW(FiniteGroup::generate(mat, singular), DomainError);
  EXPECT_THROW(parse_permutation("(1 1)", 3), ParseError);
  EXPECT_THROW(parse_permutation("(1 4)", 3), ParseError);
  EXPECT_THROW(congruence_group(3, 3, 100), ResourceError);
}

TEST(Congruence, OrdersMatchClosedForm) {
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {2, 7}}) {
    const FiniteGroup g = congruence_group(n, p);
    EXPECT_EQ(g.order(), testing::sl_order_formula(n, p)) << n << " " << p;
    EXPECT_TRUE(g.verify_axioms(500));
  }
  EXPECT_EQ(congruence_group(2, 2).order(), 6u);
  EXPECT_EQ(congruence_group(2, 3).order(), 24u);
  EXPECT_EQ(congruence_group(3, 2).order(), 168u);
}

TEST(Congruence, CompositeModulus) {
  // |SL(2, Z/4)| = 48.
  EXPECT_EQ(congruence_group(2, 4).order(), 48u);
}

TEST(Subgroup, TransversalAndIndex) {
  const GroupPtr s4 = share(perm_group(4, {"(1 2)", "(1 2 3 4)"}));
  const std::vector<std::size_t> gens{s4->index_of(parse_permutation("(1 2)", 4)),
                                      s4->index_of(parse_permutation("(1 2 3)", 4))};
  const Subgroup h = Subgroup::generated_by(s4, gens);
  EXPECT_EQ(h.group()->order(), 6u);
  EXPECT_EQ(h.index(), 4u);
  std::set<std::size_t> covered;
  for (std::size_t t : h.transversal()) {
    for (std::size_t k = 0; k < h.group()->order(); ++k) covered.insert(s4->mul(t, h.embed(k)));
  }
  EXPECT_EQ(covered.size(), s4->order());
  EXPECT_EQ(Subgroup::trivial(s4).index(), 24u);
  EXPECT_EQ(Subgroup::whole(s4).index(), 1u);
}

TEST(Subgroup, UpperTriangularBorel) {
  const GroupPtr g = share(congruence_group(2, 3));
  const Subgroup b = Subgroup::where(g, [](const Element& m) { return m[2] == 0; });
  EXPECT_EQ(b.group()->order(), 6u);
  EXPECT_EQ(b.index(), 4u);
}

TEST(Subgroup, RejectsForeignElements) {
  const GroupPtr s3 = share(perm_group(3, {"(1 2)", "(1 2 3)"}));
  const GroupPtr other = share(perm_group(3, {"(1 2)", "(1 2 3)"}));
  EXPECT_NO_THROW(Subgroup(s3, other));
  const GroupPtr s4 = share(perm_group(4, {"(1 2)"}));
  EXPECT_THROW(Subgroup(s3, s4), DomainError);
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation_witness(parse_int_matrix("[[1,1],[0,1]]")), 2);
  EXPECT_EQ(separation_witness(parse_int_matrix("[[1,6],[0,1]]")), 4);
  EXPECT_THROW(separation_witness(IntMatrix::identity(2)), DomainError);
  EXPECT_THROW(separation_witness(parse_int_matrix("[[2,0],[0,1]]")), DomainError);
}

TEST(Separation, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 10);
  const IntMatrix e12 = parse_int_matrix("[[1,1],[0,1]]"), e12i = parse_int_matrix("[[1,-1],[0,1]]");
  const IntMatrix e21 = parse_int_matrix("[[1,0],[1,1]]"), e21i = parse_int_matrix("[[1,0],[-1,1]]");
  const IntMatrix gens[] = {e12, e12i, e21, e21i};
  int tested = 0;
  while (tested < 200) {
    IntMatrix a = IntMatrix::identity(2);
    const int l = len(rng);
    for (int i = 0; i < l; ++i) a = a * gens[pick(rng)];
    if (a == IntMatrix::identity(2)) continue;
    EXPECT_EQ(determinant(a), 1);
    EXPECT_EQ(separation_witness(a), testing::exhaustive_separation(a));
    ++tested;
  }
}

TEST(Literals, RoundTrip) {
  const GroupShape p{GroupKind::Permutation, 5, 0};
  EXPECT_EQ(to_string(parse_permutation("(1 2)(3 4 5)", 5), p), "(1 2)(3 4 5)");
  EXPECT_EQ(to_string(parse_permutation("()", 5), p), "()");
  const GroupShape m{GroupKind::Matrix, 2, 5};
  EXPECT_EQ(parse_element("[[1,-1],[0,1]]", m), (Element{1, 4, 0, 1}));
  EXPECT_EQ(split_top_level("(1 2), [[1,0],[0,1]] , x", ','),
            (std::vector<std::string>{"(1 2)", "[[1,0],[0,1]]", "x"}));
  EXPECT_THROW(parse_matrix("[[1,0],[0]]", 2, 5), ParseError);
}

}  // namespace
}  // namespace cosetlab
