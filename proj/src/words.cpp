// Copyright 2026 The udcodes Authors
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

#include "udcodes/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "udcodes/errors.hpp"

namespace udcodes {

namespace {

std::string number_text(std::uint64_t v) { return std::to_string(v); }

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed " + std::string(what) + ": '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

AlphabetSize::AlphabetSize(std::uint32_t n) : n_(n) {
  if (n < 2) {
    throw PreconditionError("alphabet size must be at least 2, got " +
                            number_text(n));
  }
}

bool fits_packed(AlphabetSize n, std::uint32_t length) {
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < length; ++i) {
    if (__builtin_mul_overflow(acc, std::uint64_t{n.value()}, &acc)) return false;
  }
  return true;
}

std::uint64_t small_pow(std::uint32_t n, std::uint32_t e) {
  std::uint64_t result = 1;
  std::uint64_t base = n;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------- Word

Word::Word(AlphabetSize n) : radix_(n.value()) {}

Word Word::from_digits(AlphabetSize n, std::span<const std::uint32_t> digits) {
  for (auto d : digits) {
    if (d >= n.value()) {
      throw PreconditionError("digit " + number_text(d) +
                              " out of range for alphabet size " +
                              number_text(n.value()));
    }
  }
  const auto len = static_cast<std::uint32_t>(digits.size());
  if (!fits_packed(n, len)) {
    return Word(n.value(), len, 0, {digits.begin(), digits.end()});
  }
  std::uint64_t value = 0;
  for (auto d : digits) value = value * n.value() + d;
  return Word(n.value(), len, value, {});
}

Word Word::from_packed(AlphabetSize n, std::uint32_t length,
                       std::uint64_t value) {
  return Word(n.value(), length, value, {});
}

Word Word::parse(AlphabetSize n, std::string_view text) {
  std::vector<std::uint32_t> digits;
  if (n.value() <= 10 && text.find('.') == std::string_view::npos) {
    digits.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw ParseError("malformed word '" + std::string(text) + "'");
      }
      digits.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  } else if (!text.empty()) {
    for (auto part : split(text, '.')) digits.push_back(parse_uint(part, "digit"));
  }
  for (auto d : digits) {
    if (d >= n.value()) {
      throw ParseError("digit " + number_text(d) + " in word '" +
                       std::string(text) + "' is not below alphabet size " +
                       number_text(n.value()));
    }
  }
  return from_digits(n, digits);
}

std::uint64_t Word::packed() const {
  if (!is_packed()) throw PreconditionError("word exceeds 64-bit packing");
  return packed_;
}

std::uint32_t Word::digit(std::uint32_t i) const {
  if (i >= length_) throw PreconditionError("digit index out of range");
  if (!is_packed()) return wide_[i];
  return static_cast<std::uint32_t>((packed_ / small_pow(radix_, length_ - 1 - i)) %
                                    radix_);
}

std::vector<std::uint32_t> Word::digits() const {
  if (!is_packed()) return wide_;
  std::vector<std::uint32_t> out(length_);
  std::uint64_t v = packed_;
  for (std::uint32_t i = length_; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(v % radix_);
    v /= radix_;
  }
  return out;
}

Word Word::prefix(std::uint32_t len) const {
  if (len > length_) throw PreconditionError("prefix longer than word");
  if (is_packed()) {
    return Word(radix_, len, packed_ / small_pow(radix_, length_ - len), {});
  }
  auto d = digits();
  d.resize(len);
  return from_digits(alphabet(), d);
}

Word Word::drop_front(std::uint32_t pos) const {
  if (pos > length_) throw PreconditionError("cannot drop past end of word");
  if (is_packed()) {
    const auto rest = length_ - pos;
    return Word(radix_, rest, packed_ % small_pow(radix_, rest), {});
  }
  auto d = digits();
  return from_digits(alphabet(), std::span(d).subspan(pos));
}

Word Word::reversed() const {
  auto d = digits();
  std::reverse(d.begin(), d.end());
  return from_digits(alphabet(), d);
}

Word Word::concat(const Word& tail) const {
  if (tail.radix_ != radix_) throw PreconditionError("alphabet mismatch in concat");
  const auto len = length_ + tail.length_;
  if (is_packed() && tail.is_packed() && fits_packed(alphabet(), len)) {
    return Word(radix_, len,
                packed_ * small_pow(radix_, tail.length_) + tail.packed_, {});
  }
  auto d = digits();
  auto t = tail.digits();
  d.insert(d.end(), t.begin(), t.end());
  return from_digits(alphabet(), d);
}

std::string Word::to_string() const {
  std::string out;
  const auto d = digits();
  if (radix_ <= 10) {
    out.reserve(d.size());
    for (auto x : d) out.push_back(static_cast<char>('0' + x));
    return out;
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != 0) out.push_back('.');
    out += number_text(d[i]);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.radix_ == b.radix_ && a.length_ == b.length_ &&
         a.packed_ == b.packed_ && a.wide_ == b.wide_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.radix_ <=> b.radix_; c != 0) return c;
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  if (a.is_packed()) return a.packed_ <=> b.packed_;
  return a.wide_ <=> b.wide_;
}

std::size_t Word::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(packed_ ^ (std::uint64_t{length_} << 48) ^
                                             (std::uint64_t{radix_} << 40));
  for (auto d : wide_) h = h * 1000003u ^ d;
  return h;
}

bool is_prefix(const Word& u, const Word& w) {
  if (u.alphabet() != w.alphabet()) {
    throw PreconditionError("is_prefix: words over different alphabets");
  }
  if (u.length() > w.length()) return false;
  if (w.is_packed()) {
    return w.packed() / small_pow(w.alphabet().value(), w.length() - u.length()) ==
           u.packed();
  }
  for (std::uint32_t i = 0; i < u.length(); ++i) {
    if (u.digit(i) != w.digit(i)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- LengthDistribution

LengthDistribution::LengthDistribution(std::vector<std::uint32_t> lengths)
    : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw PreconditionError("empty length distribution");
  for (auto a : lengths_) {
    if (a == 0) throw PreconditionError("codeword lengths must be positive");
  }
}

LengthDistribution LengthDistribution::parse(std::string_view text) {
  std::vector<std::uint32_t> out;
  for (auto part : split(text, ',')) out.push_back(parse_uint(part, "length"));
  try {
    return LengthDistribution(std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::uint64_t LengthDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto a : lengths_) sum += a;
  return sum;
}

std::uint32_t LengthDistribution::max() const {
  return *std::max_element(lengths_.begin(), lengths_.end());
}

bool LengthDistribution::is_constant() const {
  return std::all_of(lengths_.begin(), lengths_.end(),
                     [&](auto a) { return a == lengths_.front(); });
}

std::size_t LengthDistribution::multiplicity(std::uint32_t value) const {
  return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), value));
}

std::vector<std::uint32_t> LengthDistribution::distinct_values() const {
  auto v = lengths_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

LengthDistribution LengthDistribution::sorted() const {
  auto v = lengths_;
  std::sort(v.begin(), v.end());
  return LengthDistribution(std::move(v));
}

bool LengthDistribution::is_permutation_of(const LengthDistribution& other) const {
  return sorted() == other.sorted();
}

std::size_t LengthDistribution::size_remainder(AlphabetSize n) const {
  return lengths_.size() % (n.value() - 1);
}

std::string LengthDistribution::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += number_text(lengths_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- CodeSequence

CodeSequence::CodeSequence(AlphabetSize n, std::vector<Word> words)
    : n_(n), words_(std::move(words)) {
  if (words_.empty()) throw PreconditionError("a code sequence needs at least one word");
  for (const auto& w : words_) {
    if (w.alphabet() != n_) throw PreconditionError("codeword over a different alphabet");
    if (w.empty()) throw PreconditionError("the empty word cannot be a codeword");
  }
}

CodeSequence CodeSequence::parse(AlphabetSize n, std::string_view text) {
  std::vector<Word> words;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw ParseError("empty codeword in '" + std::string(text) + "'");
    words.push_back(Word::parse(n, part));
  }
  return CodeSequence(n, std::move(words));
}

LengthDistribution CodeSequence::lengths() const {
  std::vector<std::uint32_t> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(w.length());
  return LengthDistribution(std::move(out));
}

std::uint64_t CodeSequence::total_length() const {
  std::uint64_t sum = 0;
  for (const auto& w : words_) sum += w.length();
  return sum;
}

std::string CodeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += words_[i].to_string();
  }
  return out;
}

bool is_prefix_code(std::span<const Word> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && is_prefix(words[i], words[j])) return false;
    }
  }
  return true;
}

bool is_prefix_code(const CodeSequence& code) { return is_prefix_code(code.words()); }

CodeSequence reverse_code(const CodeSequence& code) {
  std::vector<Word> out;
  out.reserve(code.size());
  for (const auto& w : code.words()) out.push_back(w.reversed());
  return CodeSequence(code.alphabet(), std::move(out));
}

// ---------------------------------------------------------------- WordRange

WordRange::WordRange(AlphabetSize n, std::uint32_t len, std::uint64_t budget)
    : n_(n), len_(len) {
  if (!fits_packed(n, len) || small_pow(n.value(), len) > budget) {
    throw SizeLimitError("enumerating " + number_text(n.value()) + "^" +
                         number_text(len) + " words exceeds the budget of " +
                         number_text(budget));
  }
  last_ = small_pow(n.value(), len);
}

WordRange WordRange::slice(std::uint64_t first, std::uint64_t last) const {
  WordRange out = *this;
  out.first_ = std::clamp(first_ + first, first_, last_);
  out.last_ = std::clamp(first_ + last, out.first_, last_);
  return out;
}

}  // namespace udcodes
