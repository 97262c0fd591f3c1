#include "ucyc/core.hpp"

#include <algorithm>
#include <set>

namespace ucyc {

BudgetExceeded::BudgetExceeded(Rank required, Rank budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " candidates, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

Alphabet::Alphabet(std::vector<std::string> symbols, bool cyclic,
                   std::optional<Categories> categories)
    : symbols_(std::move(symbols)), cyclic_(cyclic) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must have at least one symbol");
  }
  if (symbols_.size() > kMaxAlphabetSize) {
    throw std::invalid_argument("alphabet larger than " +
                                std::to_string(kMaxAlphabetSize));
  }
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) {
      throw std::invalid_argument("empty alphabet symbol");
    }
    if (s.find(',') != std::string::npos || s.find('|') != std::string::npos) {
      throw std::invalid_argument("symbol '" + s + "' contains ',' or '|'");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
    }
  }
  if (categories) {
    category_of_.assign(symbols_.size(), categories->size());
    for (std::size_t c = 0; c < categories->size(); ++c) {
      const auto& group = (*categories)[c];
      if (group.empty()) {
        throw std::invalid_argument("empty category");
      }
      for (Letter l : group) {
        if (l >= symbols_.size()) {
          throw std::invalid_argument("category letter out of range");
        }
        if (category_of_[l] != categories->size()) {
          throw std::invalid_argument("categories overlap at '" +
                                      symbols_[l] + "'");
        }
        category_of_[l] = c;
      }
    }
    for (std::size_t l = 0; l < symbols_.size(); ++l) {
      if (category_of_[l] == categories->size()) {
        throw std::invalid_argument("symbol '" + symbols_[l] +
                                    "' is in no category");
      }
    }
    categories_ = std::move(categories);
  }
}

Alphabet Alphabet::of_size(std::size_t n, bool cyclic) {
  std::vector<std::string> symbols;
  symbols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                              : "s" + std::to_string(i));
  }
  return Alphabet(std::move(symbols), cyclic);
}

const std::string& Alphabet::symbol(Letter i) const {
  if (i >= symbols_.size()) {
    throw std::out_of_range("letter index out of range");
  }
  return symbols_[i];
}

std::size_t Alphabet::category_of(Letter letter) const {
  if (!categories_) {
    throw std::logic_error("alphabet has no categories");
  }
  return category_of_.at(letter);
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == token) {
      return static_cast<Letter>(i);
    }
  }
  return std::nullopt;
}

bool Alphabet::single_char_symbols() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Alphabet Alphabet::with_categories(Categories categories) const {
  return Alphabet(symbols_, cyclic_, std::move(categories));
}

Word Word::prefix(std::size_t len) const {
  if (len > letters_.size()) {
    throw std::out_of_range("prefix longer than word");
  }
  return Word({letters_.begin(), letters_.begin() + len});
}

Word Word::suffix(std::size_t len) const {
  if (len > letters_.size()) {
    throw std::out_of_range("suffix longer than word");
  }
  return Word({letters_.end() - len, letters_.end()});
}

CyclicString CyclicString::rotated(std::size_t r) const {
  if (letters_.empty()) {
    return *this;
  }
  r %= letters_.size();
  std::vector<Letter> out(letters_.begin() + r, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + r);
  return CyclicString(std::move(out));
}

std::size_t CyclicString::least_rotation_offset() const {
  // Two-candidate scan; linear time.
  const std::size_t n = letters_.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    Letter a = letters_[(i + k) % n];
    Letter b = letters_[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

bool CyclicString::same_cycle(const CyclicString& other) const {
  return size() == other.size() && canonical() == other.canonical();
}

std::size_t letter_distance(const Alphabet& alphabet, std::size_t i,
                            std::size_t j) {
  const std::size_t n = alphabet.size();
  if (i >= n || j >= n) {
    throw std::out_of_range("letter index out of range");
  }
  std::size_t d = i > j ? i - j : j - i;
  return alphabet.cyclic() ? std::min(d, n - d) : d;
}

std::optional<Rank> checked_power(std::size_t n, std::size_t k) {
  Rank result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && result > UINT64_MAX / n) {
      return std::nullopt;
    }
    result *= n;
  }
  return result;
}

Rank rank(std::span<const Letter> word, std::size_t n) {
  Rank r = 0;
  for (Letter l : word) {
    if (l >= n) {
      throw std::out_of_range("letter index out of range");
    }
    r = r * n + l;
  }
  return r;
}

Word unrank(Rank r, std::size_t k, std::size_t n) {
  auto total = checked_power(n, k);
  if (total && r >= *total) {
    throw std::out_of_range("rank " + std::to_string(r) + " out of range");
  }
  std::vector<Letter> letters(k);
  for (std::size_t i = k; i-- > 0;) {
    letters[i] = static_cast<Letter>(r % n);
    r /= n;
  }
  return Word(std::move(letters));
}

std::vector<Word> cyclic_windows(const CyclicString& cycle, std::size_t k) {
  if (k == 0 || k > cycle.size()) {
    throw std::invalid_argument("window length " + std::to_string(k) +
                                " exceeds cycle length " +
                                std::to_string(cycle.size()));
  }
  std::vector<Word> windows;
  windows.reserve(cycle.size());
  std::vector<Letter> buf(k);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      buf[j] = cycle.at_cyclic(i + j);
    }
    windows.emplace_back(buf);
  }
  return windows;
}

void check_word(const Alphabet& alphabet, std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (l >= alphabet.size()) {
      throw std::out_of_range("letter index " + std::to_string(l) +
                              " outside alphabet of size " +
                              std::to_string(alphabet.size()));
    }
  }
}

std::string format_letters(const Alphabet& alphabet,
                           std::span<const Letter> letters) {
  const bool compact = alphabet.single_char_symbols();
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!compact && i > 0) {
      out += ',';
    }
    out += alphabet.symbol(letters[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Letter> parse_letters(const Alphabet& alphabet,
                                  std::string_view text) {
  text = trim(text);
  std::vector<Letter> out;
  auto push = [&](std::string_view token) {
    token = trim(token);
    auto l = alphabet.find(token);
    if (!l) {
      throw std::invalid_argument("unknown symbol '" + std::string(token) +
                                  "'");
    }
    out.push_back(*l);
  };
  if (text.empty()) {
    return out;
  }
  if (text.find(',') != std::string_view::npos ||
      !alphabet.single_char_symbols()) {
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      push(text.substr(start, comma - start));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      push(std::string_view(&c, 1));
    }
  }
  return out;
}

}  // namespace ucyc
