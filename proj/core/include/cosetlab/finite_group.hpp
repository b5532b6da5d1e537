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

// Finite permutation and matrix groups realized by breadth-first closure,
// with conjugacy classes, subgroups and left transversals. Also the
// congruence quotients SL(n, Z/m) and the reduction-mod-m separation test
// for integer matrices.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cosetlab {

// Permutation images (0-based) or a row-major n x n matrix over Z/m.
using Element = std::vector<std::int32_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

enum class GroupKind { Permutation, Matrix };

// Shape of the ambient set elements live in: degree for permutations,
// dimension and modulus for matrices.
struct GroupShape {
  GroupKind kind = GroupKind::Permutation;
  int size = 0;     // degree or matrix dimension
  int modulus = 0;  // matrices only

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;  // a applied after b
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

class FiniteGroup {
 public:
  // Throws DomainError on non-invertible generators, ResourceError past `cap`.
  static FiniteGroup generate(const GroupShape& shape, std::span<const Element> generators,
                              std::size_t cap = kDefaultOrderCap);

  const GroupShape& shape() const noexcept { return shape_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t identity() const noexcept { return 0; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  std::span<const Element> generators() const noexcept { return generators_; }

  std::optional<std::size_t> find(const Element& e) const;
  std::size_t index_of(const Element& e) const;  // throws if not a member

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  std::size_t element_order(std::size_t a) const;

  // Conjugacy classes, ordered by their minimal element index (the class
  // representative). Class 0 is {identity}.
  std::size_t class_count() const noexcept { return class_reps_.size(); }
  std::size_t class_of(std::size_t g) const { return class_of_[g]; }
  std::size_t class_rep(std::size_t c) const { return class_reps_[c]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }

  // Identity, inverse and a deterministic sample of associativity checks.
  bool verify_axioms(std::size_t samples = 2000) const;

 private:
  FiniteGroup() = default;
  void build_classes();

  GroupShape shape_;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // full Cayley table when small
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
  std::vector<std::size_t> class_sizes_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// H <= G where H is itself a materialized group on the same element values.
class Subgroup {
 public:
  // Validates that every element of `sub` lies in `parent`.
  Subgroup(GroupPtr parent, GroupPtr sub);

  static Subgroup generated_by(GroupPtr parent, std::span<const std::size_t> generators);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  static Subgroup where(GroupPtr parent, const std::function<bool(const Element&)>& predicate);

  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupPtr& group() const noexcept { return group_; }

  std::size_t embed(std::size_t h) const { return embedding_[h]; }
  bool contains(std::size_t g) const { return locate_[g] != kAbsent; }
  std::optional<std::size_t> locate(std::size_t g) const;

  // Left coset representatives, first-by-index.
  std::span<const std::size_t> transversal() const noexcept { return transversal_; }
  std::size_t index() const noexcept { return transversal_.size(); }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  GroupPtr parent_;
  GroupPtr group_;
  std::vector<std::size_t> embedding_;
  std::vector<std::size_t> locate_;
  std::vector<std::size_t> transversal_;
};

// SL(n, Z/m) generated by the elementary transvections I + E_ij.
FiniteGroup congruence_group(int n, int modulus, std::size_t cap = kDefaultOrderCap);

// Square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  static IntMatrix identity(int n);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
std::int64_t determinant(const IntMatrix& m);

// Smallest m >= 2 with A mod m != I. Requires det A = 1 and A != I.
std::int64_t separation_witness(const IntMatrix& a);

// Literals. Permutations in 1-based cycle notation, e.g. "(1 2)(3 4 5)",
// "()" for the identity; matrices as nested lists "[[1,1],[0,1]]".
Element parse_permutation(std::string_view text, int degree);
Element parse_matrix(std::string_view text, int n, int modulus);
IntMatrix parse_int_matrix(std::string_view text);
Element parse_element(std::string_view text, const GroupShape& shape);

// Splits on `sep` outside of (), [] nesting. Pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string to_string(const Element& e, const GroupShape& shape);

}  // namespace cosetlab
