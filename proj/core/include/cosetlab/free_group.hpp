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

// Exact arithmetic in the free group F on generators x_i (i any integer),
// the index-shift automorphism tau_n(x_m) = x_{m+n}, the semidirect product
// Z x| F, and membership in the normal closures Gamma_n = <<x_i : i <= n>>.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cosetlab {

using GenIndex = std::int64_t;

struct Letter {
  GenIndex index = 0;
  std::int8_t exponent = 1;  // exactly +1 or -1

  constexpr Letter inverse() const noexcept { return {index, static_cast<std::int8_t>(-exponent)}; }
  constexpr bool cancels(const Letter& other) const noexcept {
    return index == other.index && exponent == -other.exponent;
  }
  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter gen(GenIndex i) { return {i, 1}; }
constexpr Letter gen_inv(GenIndex i) { return {i, -1}; }

// A freely reduced word. The only way to build one is through reduce(), so
// every Word value satisfies the reduction invariant.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);

  static Word reduce(std::span<const Letter> raw);
  static Word generator(GenIndex i, int exponent = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  // Largest / smallest letter index. Requires a non-identity word.
  GenIndex max_index() const;
  GenIndex min_index() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

Word w_mul(const Word& u, const Word& v);
Word w_inv(const Word& u);
Word shift_word(GenIndex n, const Word& u);

// Image of u under the retraction F -> F that kills every x_i with i <= n.
// Its kernel is Gamma_n.
Word retract(const Word& u, GenIndex n);

bool gamma_member(const Word& u, GenIndex n);

// Least n with u in Gamma_n. Throws DomainError on the identity word.
GenIndex minimal_level(const Word& u);

// Element (shift, word) of G = Z x| F with (m,x)(n,y) = (m+n, x tau_m(y)).
struct GElement {
  GenIndex shift = 0;
  Word word;

  friend bool operator==(const GElement&, const GElement&) = default;
  friend auto operator<=>(const GElement&, const GElement&) = default;
};

GElement g_mul(const GElement& a, const GElement& b);
GElement g_inv(const GElement& a);

inline GElement translation(GenIndex n = 1) { return {n, Word{}}; }
inline GElement in_h(Word w) { return {0, std::move(w)}; }

// Literal syntax: `x3 x-1^-1 x3`, `e` for the identity, any integer exponent
// is expanded into a run of letters. GElement literal: `(n; <word>)`.
Word parse_word(std::string_view text);
GElement parse_gelement(std::string_view text);

std::string to_string(const Letter& l);
std::string to_string(const Word& w);
std::string to_string(const GElement& g);

std::size_t hash_value(const Word& w) noexcept;

}  // namespace cosetlab

template <>
struct std::hash<cosetlab::Word> {
  std::size_t operator()(const cosetlab::Word& w) const noexcept { return cosetlab::hash_value(w); }
};
