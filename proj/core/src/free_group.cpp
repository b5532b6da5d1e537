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

#include "cosetlab/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "cosetlab/errors.hpp"

namespace cosetlab {

namespace {

// Stack-based free reduction; appends `l` to an already reduced buffer.
inline void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters)
    : Word(reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word Word::reduce(std::span<const Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw DomainError("letter exponent must be +1 or -1");
    }
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::generator(GenIndex i, int exponent) {
  Word w;
  const Letter l{i, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  const auto count = static_cast<std::size_t>(exponent < 0 ? -static_cast<long long>(exponent) : exponent);
  w.letters_.assign(count, l);
  return w;
}

GenIndex Word::max_index() const {
  if (letters_.empty()) throw DomainError("max_index of the identity word");
  return std::max_element(letters_.begin(), letters_.end(),
                          [](const Letter& a, const Letter& b) { return a.index < b.index; })
      ->index;
}

GenIndex Word::min_index() const {
  if (letters_.empty()) throw DomainError("min_index of the identity word");
  return std::min_element(letters_.begin(), letters_.end(),
                          [](const Letter& a, const Letter& b) { return a.index < b.index; })
      ->index;
}

Word w_mul(const Word& u, const Word& v) {
  const auto a = u.letters();
  const auto b = v.letters();
  // Cancellation only happens at the seam.
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k].cancels(b[k])) ++k;
  std::vector<Letter> raw;
  raw.reserve(a.size() + b.size() - 2 * k);
  raw.insert(raw.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
  raw.insert(raw.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
  return Word::reduce(raw);
}

Word w_inv(const Word& u) {
  std::vector<Letter> raw;
  raw.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) raw.push_back(it->inverse());
  return Word::reduce(raw);
}

Word shift_word(GenIndex n, const Word& u) {
  if (n == 0) return u;
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  for (Letter& l : raw) l.index += n;
  return Word::reduce(raw);
}

Word retract(const Word& u, GenIndex n) {
  std::vector<Letter> raw;
  raw.reserve(u.length());
  for (const Letter& l : u.letters()) {
    if (l.index > n) raw.push_back(l);
  }
  return Word::reduce(raw);
}

bool gamma_member(const Word& u, GenIndex n) { return retract(u, n).is_identity(); }

GenIndex minimal_level(const Word& u) {
  if (u.is_identity()) throw DomainError("minimal_level is undefined for the identity word");
  // Membership can only change at a letter index, and it is monotone in n.
  std::vector<GenIndex> candidates;
  candidates.reserve(u.length());
  for (const Letter& l : u.letters()) candidates.push_back(l.index);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  auto first = std::partition_point(candidates.begin(), candidates.end(),
                                    [&](GenIndex n) { return !gamma_member(u, n); });
  return *first;  // non-empty: the max index always qualifies
}

GElement g_mul(const GElement& a, const GElement& b) {
  return {a.shift + b.shift, w_mul(a.word, shift_word(a.shift, b.word))};
}

GElement g_inv(const GElement& a) { return {-a.shift, shift_word(-a.shift, w_inv(a.word))}; }

// --- literals ---------------------------------------------------------------

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return base_ + pos_; }
  void advance() { ++pos_; }

  long long integer() {
    const std::size_t start = pos_;
    if (start >= text_.size()) throw ParseError("expected an integer", base_ + start);
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    long long value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end) {
      throw ParseError("expected an integer", base_ + start);
    }
    pos_ = end;
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, where()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

constexpr long long kMaxExponentRun = 1 << 16;

Word parse_word_at(std::string_view text, std::size_t base) {
  Cursor c(text, base);
  std::vector<Letter> raw;
  bool saw_token = false;
  c.skip_ws();
  while (!c.done()) {
    const char ch = c.peek();
    if (ch == 'e') {
      c.advance();
      saw_token = true;
    } else if (ch == 'x') {
      c.advance();
      const long long index = c.integer();
      long long exponent = 1;
      if (c.peek() == '^') {
        c.advance();
        exponent = c.integer();
      }
      if (exponent > kMaxExponentRun || exponent < -kMaxExponentRun) c.fail("exponent too large");
      const Letter l{index, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
      for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
      saw_token = true;
    } else {
      c.fail(std::string("unexpected character '") + ch + "'");
    }
    if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek()))) {
      c.fail("expected whitespace between letters");
    }
    c.skip_ws();
  }
  if (!saw_token) throw ParseError("empty word literal (spell the identity as 'e')", base);
  return Word::reduce(raw);
}

}  // namespace

Word parse_word(std::string_view text) { return parse_word_at(text, 0); }

GElement parse_gelement(std::string_view text) {
  Cursor c(text, 0);
  c.skip_ws();
  if (c.peek() != '(') c.fail("expected '(' to open a group element");
  c.advance();
  c.skip_ws();
  const long long shift = c.integer();
  c.skip_ws();
  if (c.peek() != ';') c.fail("expected ';' after the shift");
  const std::size_t word_start = c.where() + 1;
  const std::size_t close = text.find(')', word_start);
  if (close == std::string_view::npos) throw ParseError("missing ')'", text.size());
  for (std::size_t i = close + 1; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("trailing characters", i);
  }
  return {shift, parse_word_at(text.substr(word_start, close - word_start), word_start)};
}

std::string to_string(const Letter& l) {
  std::string s = "x" + std::to_string(l.index);
  if (l.exponent < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += to_string(l);
  }
  return s;
}

std::string to_string(const GElement& g) { return "(" + std::to_string(g.shift) + "; " + to_string(g.word) + ")"; }

std::size_t hash_value(const Word& w) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Letter& l : w.letters()) {
    const auto v = static_cast<std::uint64_t>(l.index) * 2 + (l.exponent < 0 ? 1 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cosetlab
