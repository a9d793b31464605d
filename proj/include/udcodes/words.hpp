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

#ifndef UDCODES_WORDS_HPP_
#define UDCODES_WORDS_HPP_

// Words over the alphabet {0, ..., n-1}, sequences of codewords, and length
// distributions.
//
// A word is stored as (length, base-n value) whenever n^length fits in a
// uint64_t, so prefix tests, suffix extraction and enumeration reduce to
// integer division and remainder. Longer words fall back to an explicit
// digit vector; every operation accepts either representation.
//
// Text form: one character per digit ("0110") when n <= 10, otherwise
// dot-separated decimal digits ("0.11.3"). The empty word prints as "".

#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace udcodes {

class AlphabetSize {
 public:
  // Throws PreconditionError unless n >= 2.
  explicit AlphabetSize(std::uint32_t n);

  std::uint32_t value() const { return n_; }

  friend auto operator<=>(AlphabetSize, AlphabetSize) = default;

 private:
  std::uint32_t n_;
};

// True when n^length < 2^64, i.e. the packed representation applies.
bool fits_packed(AlphabetSize n, std::uint32_t length);

// n^e as a machine integer; requires fits_packed(n, e).
std::uint64_t small_pow(std::uint32_t n, std::uint32_t e);

class Word {
 public:
  // The empty word over n.
  explicit Word(AlphabetSize n);

  // Throws PreconditionError if a digit is >= n.
  static Word from_digits(AlphabetSize n, std::span<const std::uint32_t> digits);
  // Requires fits_packed(n, length) and value < n^length.
  static Word from_packed(AlphabetSize n, std::uint32_t length,
                          std::uint64_t value);
  // Throws ParseError on malformed text or out-of-range digits.
  static Word parse(AlphabetSize n, std::string_view text);

  AlphabetSize alphabet() const { return AlphabetSize(radix_); }
  std::uint32_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool is_packed() const { return wide_.empty(); }
  // Base-n value, most significant digit first. Requires is_packed().
  std::uint64_t packed() const;

  std::uint32_t digit(std::uint32_t i) const;
  std::vector<std::uint32_t> digits() const;

  // First `len` digits.
  Word prefix(std::uint32_t len) const;
  // Digits from position `pos` to the end (drops the first `pos` digits).
  Word drop_front(std::uint32_t pos) const;
  Word reversed() const;
  Word concat(const Word& tail) const;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b);
  // Shortlex: shorter words first, then lexicographic by digit.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  std::size_t hash() const;

 private:
  Word(std::uint32_t radix, std::uint32_t length, std::uint64_t packed,
       std::vector<std::uint32_t> wide)
      : radix_(radix), length_(length), packed_(packed), wide_(std::move(wide)) {}

  std::uint32_t radix_;
  std::uint32_t length_ = 0;
  std::uint64_t packed_ = 0;
  std::vector<std::uint32_t> wide_;  // non-empty only beyond 64-bit packing
};

// True iff u is an initial segment of w. Throws PreconditionError when the
// alphabets differ.
bool is_prefix(const Word& u, const Word& w);

class LengthDistribution {
 public:
  // Throws PreconditionError if empty or any length is zero.
  explicit LengthDistribution(std::vector<std::uint32_t> lengths);
  // "1,2,5"; throws ParseError.
  static LengthDistribution parse(std::string_view text);

  std::size_t size() const { return lengths_.size(); }
  std::uint32_t operator[](std::size_t i) const { return lengths_[i]; }
  std::span<const std::uint32_t> lengths() const { return lengths_; }

  std::uint64_t total() const;
  std::uint32_t max() const;
  bool is_constant() const;
  // Number of entries equal to `value` (r_value).
  std::size_t multiplicity(std::uint32_t value) const;
  // Distinct values in increasing order.
  std::vector<std::uint32_t> distinct_values() const;
  LengthDistribution sorted() const;
  bool is_permutation_of(const LengthDistribution& other) const;
  // m mod (n - 1).
  std::size_t size_remainder(AlphabetSize n) const;

  std::string to_string() const;

  friend bool operator==(const LengthDistribution&,
                         const LengthDistribution&) = default;
  friend auto operator<=>(const LengthDistribution&,
                          const LengthDistribution&) = default;

 private:
  std::vector<std::uint32_t> lengths_;
};

// Ordered tuple of nonempty codewords. Duplicates are allowed; order matters.
class CodeSequence {
 public:
  // Throws PreconditionError on an empty list, an empty word, or a word over
  // a different alphabet.
  CodeSequence(AlphabetSize n, std::vector<Word> words);
  // Comma-separated words, e.g. "1,00,100".
  static CodeSequence parse(AlphabetSize n, std::string_view text);

  AlphabetSize alphabet() const { return n_; }
  std::span<const Word> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  LengthDistribution lengths() const;
  std::uint64_t total_length() const;
  std::string to_string() const;

  friend bool operator==(const CodeSequence& a, const CodeSequence& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  AlphabetSize n_;
  std::vector<Word> words_;
};

// No entry is a prefix of a different entry (so duplicates disqualify).
bool is_prefix_code(const CodeSequence& code);
bool is_prefix_code(std::span<const Word> words);

// Reverses each word's digits, keeping the order of entries.
CodeSequence reverse_code(const CodeSequence& code);

inline constexpr std::uint64_t kDefaultWordBudget = std::uint64_t{1} << 24;

// All n^len words of one length in lexicographic order. The index range
// [first, last) can be restricted so that independent sweeps partition the
// space.
class WordRange {
 public:
  // Throws SizeLimitError when n^len exceeds `budget`.
  WordRange(AlphabetSize n, std::uint32_t len,
            std::uint64_t budget = kDefaultWordBudget);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Word;

    iterator() = default;
    Word operator*() const { return Word::from_packed(AlphabetSize(n_), len_, index_); }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { auto old = *this; ++index_; return old; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    friend class WordRange;
    iterator(std::uint32_t n, std::uint32_t len, std::uint64_t index)
        : n_(n), len_(len), index_(index) {}
    std::uint32_t n_ = 2;
    std::uint32_t len_ = 0;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return iterator(n_.value(), len_, first_); }
  iterator end() const { return iterator(n_.value(), len_, last_); }
  std::uint64_t size() const { return last_ - first_; }

  // The sub-range of word indices [first, last), clamped to this range.
  WordRange slice(std::uint64_t first, std::uint64_t last) const;

 private:
  AlphabetSize n_;
  std::uint32_t len_;
  std::uint64_t first_ = 0;
  std::uint64_t last_ = 0;
};

inline WordRange enumerate_words(AlphabetSize n, std::uint32_t len,
                                 std::uint64_t budget = kDefaultWordBudget) {
  return WordRange(n, len, budget);
}

}  // namespace udcodes

template <>
struct std::hash<udcodes::Word> {
  std::size_t operator()(const udcodes::Word& w) const noexcept { return w.hash(); }
};

#endif  // UDCODES_WORDS_HPP_
