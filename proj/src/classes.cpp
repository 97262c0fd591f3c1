#include "ucyc/classes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ucyc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

using Counts = std::array<std::uint32_t, kMaxAlphabetSize>;

void tally(std::span<const Letter> word, std::size_t n, Counts& counts) {
  std::fill_n(counts.begin(), n, 0u);
  for (Letter l : word) {
    ++counts[l];
  }
}

bool counts_within(std::span<const Letter> word, std::size_t n,
                   std::size_t lo, std::size_t hi) {
  Counts counts;
  tally(word, n, counts);
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] < lo || counts[i] > hi) {
      return false;
    }
  }
  return true;
}

bool has_sorted_rotation(std::span<const Letter> word) {
  const std::size_t k = word.size();
  for (std::size_t start = 0; start < k; ++start) {
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < k && sorted; ++i) {
      sorted = word[(start + i) % k] <= word[(start + i + 1) % k];
    }
    if (sorted) {
      return true;
    }
  }
  return k == 0;
}

std::set<std::string> symbol_set(const Alphabet& a,
                                 const std::vector<Letter>& group) {
  std::set<std::string> out;
  for (Letter l : group) {
    out.insert(a.symbol(l));
  }
  return out;
}

bool is_honeycomb(const Alphabet& a) {
  const auto& cats = a.categories();
  if (a.size() != 6 || !cats || cats->size() != 2) {
    return false;
  }
  return symbol_set(a, (*cats)[0]) == std::set<std::string>{"x+", "y+", "z+"} &&
         symbol_set(a, (*cats)[1]) == std::set<std::string>{"x-", "y-", "z-"};
}

}  // namespace

std::string class_name(const ClassKind& kind) {
  return std::visit(
      overloaded{
          [](const kind::AllWords&) { return "all-words"; },
          [](const kind::Injective&) { return "injective"; },
          [](const kind::Onto&) { return "onto"; },
          [](const kind::NearBalancedBinary&) { return "near-balanced"; },
          [](const kind::Equitable&) { return "equitable"; },
          [](const kind::Monotone&) { return "monotone"; },
          [](const kind::Lipschitz&) { return "lipschitz"; },
          [](const kind::CyclicCategories&) { return "cyclic-categories"; },
          [](const kind::AugmentedOnto&) { return "augmented-onto"; },
          [](const kind::LatticePath&) { return "lattice"; },
      },
      kind);
}

ClassSpec lattice_spec(std::size_t dimension, std::size_t radius,
                       std::size_t length) {
  return ClassSpec{lattice::StepAlphabet(dimension).alphabet(), length,
                   kind::LatticePath{dimension, radius}};
}

Alphabet honeycomb_alphabet() {
  return Alphabet({"x+", "y+", "z+", "x-", "y-", "z-"}, false,
                  Alphabet::Categories{{0, 1, 2}, {3, 4, 5}});
}

std::vector<std::string> validate(const ClassSpec& spec) {
  std::vector<std::string> warnings;
  if (spec.length == 0) {
    throw std::invalid_argument("word length must be at least 1");
  }
  const std::size_t n = spec.alphabet.size();
  std::visit(
      overloaded{
          [&](const kind::NearBalancedBinary&) {
            if (n != 2) {
              throw std::invalid_argument(
                  "near-balanced words need a binary alphabet");
            }
          },
          [&](const kind::Lipschitz& l) {
            if (!spec.alphabet.cyclic()) {
              throw std::invalid_argument(
                  "lipschitz words need a cyclic alphabet");
            }
            if (l.c == 0) {
              throw std::invalid_argument("lipschitz constant must be >= 1");
            }
            if (2 * l.c + 1 > n) {
              warnings.push_back("2c+1 > n: every word is lipschitz, the "
                                 "class degrades to all words");
            }
          },
          [&](const kind::CyclicCategories&) {
            if (!spec.alphabet.categories()) {
              throw std::invalid_argument(
                  "cyclic-categories words need alphabet categories");
            }
          },
          [&](const kind::AugmentedOnto& ao) {
            if (ao.a < 1 || ao.a >= ao.b) {
              throw std::invalid_argument(
                  "augmented-onto needs 1 <= a < b");
            }
          },
          [&](const kind::LatticePath& lp) {
            if (lp.dimension < 2) {
              throw std::invalid_argument("lattice dimension must be >= 2");
            }
            if (n != 2 * lp.dimension) {
              throw std::invalid_argument(
                  "lattice alphabet must have exactly 2m symbols");
            }
          },
          [](const auto&) {},
      },
      spec.kind);
  return warnings;
}

Membership::Membership(const ClassSpec& spec) : spec_(spec) {
  validate(spec_);
  if (spec_.alphabet.categories()) {
    for (std::size_t l = 0; l < spec_.alphabet.size(); ++l) {
      category_.push_back(spec_.alphabet.category_of(static_cast<Letter>(l)));
    }
  }
  if (auto* lp = std::get_if<kind::LatticePath>(&spec_.kind)) {
    steps_.emplace(lp->dimension);
  }
}

bool Membership::operator()(std::span<const Letter> w) const {
  const std::size_t n = spec_.alphabet.size();
  const std::size_t k = w.size();
  return std::visit(
      overloaded{
          [](const kind::AllWords&) { return true; },
          [&](const kind::Injective&) { return counts_within(w, n, 0, 1); },
          [&](const kind::Onto&) { return counts_within(w, n, 1, k); },
          [&](const kind::NearBalancedBinary&) {
            return counts_within(w, 2, k / 2, (k + 1) / 2);
          },
          [&](const kind::Equitable&) {
            return counts_within(w, n, k / n, (k + n - 1) / n);
          },
          [&](const kind::Monotone&) { return has_sorted_rotation(w); },
          [&](const kind::Lipschitz& l) {
            for (std::size_t i = 0; i + 1 < k; ++i) {
              if (letter_distance(spec_.alphabet, w[i], w[i + 1]) > l.c) {
                return false;
              }
            }
            return true;
          },
          [&](const kind::CyclicCategories&) {
            const std::size_t c = spec_.alphabet.category_count();
            for (std::size_t i = 0; i + 1 < k; ++i) {
              if (category_[w[i + 1]] != (category_[w[i]] + 1) % c) {
                return false;
              }
            }
            return true;
          },
          [&](const kind::AugmentedOnto& ao) {
            return counts_within(w, n, ao.a, ao.b);
          },
          [&](const kind::LatticePath& lp) {
            return lattice::l1_norm(lattice::endpoint(w, *steps_)) <=
                   static_cast<long>(lp.radius);
          },
      },
      spec_.kind);
}

bool is_member(const ClassSpec& spec, const Word& word) {
  if (word.size() != spec.length) {
    throw std::invalid_argument("word length " + std::to_string(word.size()) +
                                " does not match class length " +
                                std::to_string(spec.length));
  }
  check_word(spec.alphabet, word.letters());
  return Membership(spec)(word.letters());
}

std::size_t cyclic_descents(std::span<const Letter> w) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    d += w[i] > w[(i + 1) % w.size()];
  }
  return d;
}

Rank default_budget() {
  constexpr Rank fallback = 100'000'000;
  if (const char* env = std::getenv("UCYC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return v;
    }
  }
  return fallback;
}

Rank candidate_count(const ClassSpec& spec) {
  return checked_power(spec.alphabet.size(), spec.length).value_or(UINT64_MAX);
}

namespace {

/// Calls f(rank, word) for every member, in rank order.
template <class F>
void for_each_member(const ClassSpec& spec, const EnumerationOptions& opts,
                     F&& f) {
  const Membership member(spec);
  const Rank total = candidate_count(spec);
  if (total > opts.budget) {
    throw BudgetExceeded(total, opts.budget);
  }
  const std::size_t n = spec.alphabet.size();
  std::vector<Letter> w(spec.length, 0);
  for (Rank r = 0; r < total; ++r) {
    if (member(w)) {
      f(r, std::span<const Letter>(w));
    }
    for (std::size_t i = w.size(); i-- > 0;) {
      if (++w[i] < n) {
        break;
      }
      w[i] = 0;
    }
  }
}

}  // namespace

std::vector<Rank> member_ranks(const ClassSpec& spec,
                               const EnumerationOptions& opts) {
  std::vector<Rank> out;
  for_each_member(spec, opts,
                  [&](Rank r, std::span<const Letter>) { out.push_back(r); });
  return out;
}

std::vector<Word> enumerate(const ClassSpec& spec,
                            const EnumerationOptions& opts) {
  std::vector<Word> out;
  for_each_member(spec, opts, [&](Rank, std::span<const Letter> w) {
    out.emplace_back(std::vector<Letter>(w.begin(), w.end()));
  });
  return out;
}

Rank count(const ClassSpec& spec, const EnumerationOptions& opts) {
  Rank c = 0;
  for_each_member(spec, opts, [&](Rank, std::span<const Letter>) { ++c; });
  return c;
}

const char* to_string(ExistenceClaim::Verdict v) {
  switch (v) {
    case ExistenceClaim::Verdict::ClaimedExists:
      return "claimed-exists";
    case ExistenceClaim::Verdict::ClaimedNotExists:
      return "claimed-not-exists";
    case ExistenceClaim::Verdict::Unstated:
      return "unstated";
  }
  return "?";
}

ExistenceClaim existence_claim(const ClassSpec& spec) {
  using V = ExistenceClaim::Verdict;
  const std::size_t n = spec.alphabet.size();
  const std::size_t k = spec.length;
  auto exists = [](std::string basis) {
    return ExistenceClaim{V::ClaimedExists, std::move(basis)};
  };
  auto absent = [](std::string basis) {
    return ExistenceClaim{V::ClaimedNotExists, std::move(basis)};
  };
  return std::visit(
      overloaded{
          [&](const kind::AllWords&) { return exists("de-bruijn"); },
          [&](const kind::Injective&) {
            return k < n ? exists("injective") : absent("injective");
          },
          [&](const kind::Onto&) {
            return k > n ? exists("onto") : absent("onto");
          },
          [&](const kind::NearBalancedBinary&) {
            return k % 2 == 1 ? exists("near-balanced")
                              : absent("near-balanced");
          },
          [&](const kind::Equitable&) {
            return k % n != 0 ? exists("equitable") : absent("equitable");
          },
          [&](const kind::Monotone&) { return exists("monotone"); },
          [&](const kind::Lipschitz&) { return exists("lipschitz"); },
          [&](const kind::CyclicCategories&) -> ExistenceClaim {
            const auto& cats = spec.alphabet.categories();
            if (!cats) {
              return {};
            }
            const std::size_t c = cats->size();
            if (c == 2 && is_honeycomb(spec.alphabet)) {
              return exists("honeycomb");
            }
            if (k >= c + 2 && (k - 2) % c == 0) {
              return exists("cyclic-categories");
            }
            if (c == 2 &&
                (k % 2 == 0 || (*cats)[0].size() == (*cats)[1].size())) {
              return exists("alternating");
            }
            return {};
          },
          [&](const kind::AugmentedOnto& ao) -> ExistenceClaim {
            if (ao.a == 1 && ao.b == 2 && n + 1 <= k && k + 1 <= 2 * n) {
              return exists("augmented-onto-1-2");
            }
            if (ao.a * n + 1 <= k && k + 1 <= ao.b * n) {
              return exists("augmented-onto");
            }
            return {};
          },
          [&](const kind::LatticePath& lp) -> ExistenceClaim {
            if (k <= lp.radius) {
              return exists("de-bruijn");
            }
            if (lp.dimension == 3 && lp.radius + 1 >= 4) {
              return exists("lattice-3d");
            }
            return {};
          },
      },
      spec.kind);
}

ClassSummary summarize(const ClassSpec& spec, const EnumerationOptions& opts) {
  return ClassSummary{spec, count(spec, opts), existence_claim(spec)};
}

}  // namespace ucyc
