// Alphabets, words, ranking and cyclic windows.

#ifndef UCYC_CORE_HPP_
#define UCYC_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ucyc {

using Letter = std::uint8_t;
using Rank = std::uint64_t;

inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Thrown when an enumeration would inspect more candidates than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Rank required, Rank budget);
  Rank required() const noexcept { return required_; }
  Rank budget() const noexcept { return budget_; }

 private:
  Rank required_;
  Rank budget_;
};

/// Totally ordered symbol set. Letter i is the i-th symbol; the order is the
/// index order. Optionally cyclic (distance wraps) and optionally partitioned
/// into an ordered list of categories.
class Alphabet {
 public:
  using Categories = std::vector<std::vector<Letter>>;

  explicit Alphabet(std::vector<std::string> symbols, bool cyclic = false,
                    std::optional<Categories> categories = std::nullopt);

  /// Symbols a, b, c, ... for n <= 26, s0, s1, ... beyond.
  static Alphabet of_size(std::size_t n, bool cyclic = false);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool cyclic() const noexcept { return cyclic_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(Letter i) const;
  const std::optional<Categories>& categories() const noexcept {
    return categories_;
  }
  std::size_t category_count() const noexcept {
    return categories_ ? categories_->size() : 0;
  }
  /// Index of the category containing `letter`. Requires categories.
  std::size_t category_of(Letter letter) const;

  std::optional<Letter> find(std::string_view token) const;
  /// True when every symbol is exactly one character.
  bool single_char_symbols() const noexcept;

  Alphabet with_categories(Categories categories) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool cyclic_;
  std::optional<Categories> categories_;
  std::vector<std::size_t> category_of_;
};

/// Fixed-length sequence of letter indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A string read cyclically. Rotations denote the same cycle.
class CyclicString {
 public:
  CyclicString() = default;
  explicit CyclicString(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  /// Letter at position i modulo the length.
  Letter at_cyclic(std::size_t i) const {
    return letters_[i % letters_.size()];
  }
  std::span<const Letter> letters() const noexcept { return letters_; }

  CyclicString rotated(std::size_t r) const;
  /// Offset of the lexicographically least rotation (smallest on ties).
  std::size_t least_rotation_offset() const;
  CyclicString canonical() const { return rotated(least_rotation_offset()); }

  /// Same cycle up to rotation.
  bool same_cycle(const CyclicString& other) const;

  friend bool operator==(const CyclicString&, const CyclicString&) = default;

 private:
  std::vector<Letter> letters_;
};

/// |i-j| on a linear alphabet, min(|i-j|, n-|i-j|) on a cyclic one.
std::size_t letter_distance(const Alphabet& alphabet, std::size_t i,
                            std::size_t j);

/// n^k, or nullopt on 64-bit overflow.
std::optional<Rank> checked_power(std::size_t n, std::size_t k);

/// Big-endian mixed-radix rank (first letter most significant).
Rank rank(std::span<const Letter> word, std::size_t n);
inline Rank rank(const Word& word, const Alphabet& alphabet) {
  return rank(word.letters(), alphabet.size());
}
Word unrank(Rank r, std::size_t k, std::size_t n);
inline Word unrank(Rank r, std::size_t k, const Alphabet& alphabet) {
  return unrank(r, k, alphabet.size());
}

/// Exactly cycle.size() windows; window i covers positions i..i+k-1 mod L.
std::vector<Word> cyclic_windows(const CyclicString& cycle, std::size_t k);

/// Checks every letter is below the alphabet size.
void check_word(const Alphabet& alphabet, std::span<const Letter> letters);

/// Renders tokens joined by nothing for single-character alphabets,
/// otherwise by commas.
std::string format_letters(const Alphabet& alphabet,
                           std::span<const Letter> letters);
/// Inverse of format_letters. Commas force token splitting; otherwise each
/// character is one token. Surrounding whitespace is ignored.
std::vector<Letter> parse_letters(const Alphabet& alphabet,
                                  std::string_view text);

}  // namespace ucyc

#endif  // UCYC_CORE_HPP_
