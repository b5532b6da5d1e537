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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>

#include "cosetlab/errors.hpp"

namespace cosetlab {

namespace {

constexpr std::size_t kTableLimit = 2048;

__extension__ typedef __int128 Wide;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (std::int32_t v : e) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Element GroupShape::identity() const {
  if (kind == GroupKind::Permutation) {
    Element e(static_cast<std::size_t>(size));
    std::iota(e.begin(), e.end(), 0);
    return e;
  }
  Element e(static_cast<std::size_t>(size * size), 0);
  for (int i = 0; i < size; ++i) e[static_cast<std::size_t>(i * size + i)] = 1;
  return e;
}

Element GroupShape::multiply(const Element& a, const Element& b) const {
  if (kind == GroupKind::Permutation) {
    Element out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
  }
  const auto n = static_cast<std::size_t>(size);
  Element out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::int64_t>(a[i * n + k]) * b[k * n + j];
      out[i * n + j] = static_cast<std::int32_t>(acc % modulus);
    }
  }
  return out;
}

// --- FiniteGroup ----------------------------------------------------------------

namespace {

void validate_generator(const GroupShape& shape, const Element& g) {
  if (shape.kind == GroupKind::Permutation) {
    if (g.size() != static_cast<std::size_t>(shape.size)) throw DomainError("permutation has wrong degree");
    std::vector<bool> seen(g.size(), false);
    for (std::int32_t v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.size() || seen[static_cast<std::size_t>(v)]) {
        throw DomainError("generator is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    return;
  }
  if (shape.modulus < 2) throw DomainError("matrix modulus must be >= 2");
  if (g.size() != static_cast<std::size_t>(shape.size * shape.size)) throw DomainError("matrix has wrong size");
  IntMatrix m{shape.size, {}};
  for (std::int32_t v : g) {
    if (v < 0 || v >= shape.modulus) throw DomainError("matrix entry not reduced modulo m");
    m.a.push_back(v);
  }
  if (std::gcd(mod(determinant(m), shape.modulus), static_cast<std::int64_t>(shape.modulus)) != 1) {
    throw DomainError("matrix generator is not invertible modulo " + std::to_string(shape.modulus));
  }
}

}  // namespace

FiniteGroup FiniteGroup::generate(const GroupShape& shape, std::span<const Element> generators, std::size_t cap) {
  if (shape.size < 1) throw DomainError("group shape has no points");
  for (const Element& g : generators) validate_generator(shape, g);

  FiniteGroup G;
  G.shape_ = shape;
  G.generators_.assign(generators.begin(), generators.end());
  G.elements_.push_back(shape.identity());
  G.index_.emplace(G.elements_.front(), 0);

  // Right multiplication by generators, breadth-first.
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const Element& g : G.generators_) {
      Element next = shape.multiply(G.elements_[head], g);
      if (G.index_.contains(next)) continue;
      if (G.elements_.size() >= cap) {
        throw ResourceError("group order exceeds cap of " + std::to_string(cap));
      }
      G.index_.emplace(next, G.elements_.size());
      G.elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = G.elements_.size();
  if (n <= kTableLimit) {
    G.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        G.table_[a * n + b] = static_cast<std::uint32_t>(G.index_.at(shape.multiply(G.elements_[a], G.elements_[b])));
      }
    }
  }

  G.inverse_.assign(n, 0);
  std::vector<bool> done(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    // Walk the cyclic subgroup <a>: a^k and a^(ord-k) are mutual inverses.
    std::vector<std::size_t> powers{0};
    for (std::size_t p = a; p != 0; p = G.mul(p, a)) powers.push_back(p);
    const std::size_t ord = powers.size();
    for (std::size_t k = 0; k < ord; ++k) {
      const std::size_t x = powers[k];
      G.inverse_[x] = powers[(ord - k) % ord];
      done[x] = true;
    }
  }

  G.build_classes();
  return G;
}

std::optional<std::size_t> FiniteGroup::find(const Element& e) const {
  const auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Element& e) const {
  if (auto i = find(e)) return *i;
  throw DomainError("element " + to_string(e, shape_) + " is not in the group");
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[a * n + b];
  return index_.at(shape_.multiply(elements_[a], elements_[b]));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

void FiniteGroup::build_classes() {
  const std::size_t n = elements_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnset);
  std::vector<std::size_t> gens;
  for (const Element& g : generators_) gens.push_back(index_.at(g));

  for (std::size_t g = 0; g < n; ++g) {
    if (class_of_[g] != kUnset) continue;
    const std::size_t c = class_reps_.size();
    class_reps_.push_back(g);
    std::size_t size = 0;
    std::deque<std::size_t> queue{g};
    class_of_[g] = c;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t s : gens) {
        const std::size_t y = conjugate(x, s);
        if (class_of_[y] == kUnset) {
          class_of_[y] = c;
          queue.push_back(y);
        }
      }
    }
    class_sizes_.push_back(size);
  }
}

bool FiniteGroup::verify_axioms(std::size_t samples) const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(a, 0) != a || mul(0, a) != a) return false;
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  // Each class member must be conjugate to its representative by some element.
  for (std::size_t g = 0; g < n && n <= kTableLimit; ++g) {
    const std::size_t rep = class_rep(class_of(g));
    bool found = false;
    for (std::size_t x = 0; x < n && !found; ++x) found = conjugate(rep, x) == g;
    if (!found) return false;
  }
  return true;
}

// --- Subgroup -------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, GroupPtr sub) : parent_(std::move(parent)), group_(std::move(sub)) {
  if (!parent_ || !group_) throw DomainError("null group");
  if (!(parent_->shape() == group_->shape())) throw DomainError("subgroup lives in a different ambient shape");
  locate_.assign(parent_->order(), kAbsent);
  embedding_.reserve(group_->order());
  for (std::size_t h = 0; h < group_->order(); ++h) {
    const auto g = parent_->find(group_->element(h));
    if (!g) throw DomainError("subgroup element " + to_string(group_->element(h), group_->shape()) + " not in parent");
    embedding_.push_back(*g);
    locate_[*g] = h;
  }
  if (parent_->order() % group_->order() != 0) throw DomainError("subgroup order does not divide group order");

  std::vector<bool> covered(parent_->order(), false);
  for (std::size_t g = 0; g < parent_->order(); ++g) {
    if (covered[g]) continue;
    transversal_.push_back(g);
    for (std::size_t h : embedding_) covered[parent_->mul(g, h)] = true;
  }
}

std::optional<std::size_t> Subgroup::locate(std::size_t g) const {
  if (locate_[g] == kAbsent) return std::nullopt;
  return locate_[g];
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const std::size_t> generators) {
  std::vector<Element> gens;
  for (std::size_t g : generators) gens.push_back(parent->element(g));
  auto sub = share(FiniteGroup::generate(parent->shape(), gens, parent->order()));
  return Subgroup(std::move(parent), std::move(sub));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return generated_by(std::move(parent), {}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  auto copy = share(FiniteGroup::generate(parent->shape(), parent->generators(), parent->order()));
  return Subgroup(std::move(parent), std::move(copy));
}

Subgroup Subgroup::where(GroupPtr parent, const std::function<bool(const Element&)>& predicate) {
  // Greedy generating set: add any member not yet in the closure.
  std::vector<std::size_t> gens;
  std::vector<bool> in_closure(parent->order(), false);
  in_closure[0] = true;
  std::size_t members = 0;
  for (std::size_t g = 0; g < parent->order(); ++g) {
    if (!predicate(parent->element(g))) continue;
    ++members;
    if (in_closure[g]) continue;
    gens.push_back(g);
    std::vector<std::size_t> closure{0};
    std::fill(in_closure.begin(), in_closure.end(), false);
    in_closure[0] = true;
    for (std::size_t head = 0; head < closure.size(); ++head) {
      for (std::size_t s : gens) {
        const std::size_t y = parent->mul(closure[head], s);
        if (!in_closure[y]) {
          in_closure[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
  Subgroup out = generated_by(parent, gens);
  if (out.group()->order() != members) throw DomainError("predicate does not define a subgroup");
  return out;
}

// --- congruence quotients and integer matrices -------------------------------------

FiniteGroup congruence_group(int n, int modulus, std::size_t cap) {
  if (n < 2) throw DomainError("congruence_group needs n >= 2");
  if (modulus < 2) throw DomainError("congruence_group needs m >= 2");
  const GroupShape shape{GroupKind::Matrix, n, modulus};
  std::vector<Element> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Element e = shape.identity();
      e[static_cast<std::size_t>(i * n + j)] = 1;
      gens.push_back(std::move(e));
    }
  }
  return FiniteGroup::generate(shape, gens, cap);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw DomainError("matrix size mismatch");
  IntMatrix out{x.n, std::vector<std::int64_t>(x.a.size(), 0)};
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      Wide acc = 0;
      for (int k = 0; k < x.n; ++k) acc += static_cast<Wide>(x(i, k)) * y(k, j);
      if (acc > INT64_MAX || acc < INT64_MIN) throw DomainError("integer matrix product overflows");
      out(i, j) = static_cast<std::int64_t>(acc);
    }
  }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const int n = m.n;
  if (n == 0) return 1;
  std::vector<Wide> a(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> Wide& { return a[static_cast<std::size_t>(i * n + j)]; };
  Wide prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  const Wide det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw DomainError("determinant overflows");
  return static_cast<std::int64_t>(det);
}

std::int64_t separation_witness(const IntMatrix& a) {
  if (determinant(a) != 1) throw DomainError("separation_witness needs det A = 1");
  // A = I mod m  <=>  m divides every entry of A - I  <=>  m | g.
  std::int64_t g = 0;
  const IntMatrix id = IntMatrix::identity(a.n);
  for (std::size_t k = 0; k < a.a.size(); ++k) g = std::gcd(g, a.a[k] - id.a[k]);
  if (g == 0) throw DomainError("separation_witness: A is the identity");
  std::int64_t m = 2;
  while (g % m == 0) ++m;
  return m;
}

// --- literals --------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t where) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", where);
  }
  return v;
}

// Rows of a nested list literal "[[a,b],[c,d]]".
std::vector<std::vector<std::int64_t>> parse_rows(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("matrix must be written as [[...],...]", 0);
  std::vector<std::vector<std::int64_t>> rows;
  for (const std::string& row : split_top_level(t.substr(1, t.size() - 2), ',')) {
    const std::string_view r = trim(row);
    if (r.size() < 2 || r.front() != '[' || r.back() != ']') throw ParseError("matrix row must be bracketed", 0);
    std::vector<std::int64_t> values;
    for (const std::string& v : split_top_level(r.substr(1, r.size() - 2), ',')) values.push_back(parse_int(v, 0));
    rows.push_back(std::move(values));
  }
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix is not square", 0);
  }
  return rows;
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : sep;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      const std::string_view piece = trim(text.substr(start, i - start));
      if (!piece.empty() || i < text.size()) out.emplace_back(piece);
      start = i + 1;
    }
  }
  if (out.size() == 1 && out.front().empty()) out.clear();
  return out;
}

Element parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw DomainError("permutation degree must be >= 1");
  const GroupShape shape{GroupKind::Permutation, degree, 0};
  Element result = shape.identity();
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty permutation literal", 0);
  // Cycles compose right to left like ordinary functions.
  std::vector<Element> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' to open a cycle", pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle", pos);
    std::vector<std::int32_t> points;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t k = 0;
    while (k < body.size()) {
      while (k < body.size() && (std::isspace(static_cast<unsigned char>(body[k])) || body[k] == ',')) ++k;
      if (k == body.size()) break;
      std::size_t end = k;
      while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end])) && body[end] != ',') ++end;
      const std::int64_t p = parse_int(body.substr(k, end - k), pos + 1 + k);
      if (p < 1 || p > degree) throw ParseError("point " + std::to_string(p) + " outside 1.." + std::to_string(degree), pos + 1 + k);
      if (std::find(points.begin(), points.end(), p - 1) != points.end()) throw ParseError("repeated point in cycle", pos + 1 + k);
      points.push_back(static_cast<std::int32_t>(p - 1));
      k = end;
    }
    Element cycle = shape.identity();
    for (std::size_t i = 0; i < points.size(); ++i) {
      cycle[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
    }
    cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip();
  }
  for (auto it = cycles.begin(); it != cycles.end(); ++it) result = shape.multiply(result, *it);
  return result;
}

Element parse_matrix(std::string_view text, int n, int modulus) {
  const auto rows = parse_rows(text);
  if (static_cast<int>(rows.size()) != n) throw ParseError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix", 0);
  Element e;
  for (const auto& r : rows) {
    for (std::int64_t v : r) e.push_back(static_cast<std::int32_t>(mod(v, modulus)));
  }
  return e;
}

IntMatrix parse_int_matrix(std::string_view text) {
  const auto rows = parse_rows(text);
  IntMatrix m{static_cast<int>(rows.size()), {}};
  for (const auto& r : rows) m.a.insert(m.a.end(), r.begin(), r.end());
  return m;
}

Element parse_element(std::string_view text, const GroupShape& shape) {
  if (shape.kind == GroupKind::Permutation) return parse_permutation(text, shape.size);
  return parse_matrix(text, shape.size, shape.modulus);
}

std::string to_string(const Element& e, const GroupShape& shape) {
  std::string s;
  if (shape.kind == GroupKind::Permutation) {
    std::vector<bool> seen(e.size(), false);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (seen[i] || e[i] == static_cast<std::int32_t>(i)) continue;
      s += '(';
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(e[j])) {
        if (s.back() != '(') s += ' ';
        s += std::to_string(j + 1);
        seen[j] = true;
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }
  const auto n = static_cast<std::size_t>(shape.size);
  s = "[";
  for (std::size_t i = 0; i < n; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) s += ',';
      s += std::to_string(e[i * n + j]);
    }
    s += ']';
  }
  return s + "]";
}

}  // namespace cosetlab
