// Restricted word classes: membership, enumeration, counting and the
// published existence claims each parameter range falls under.

#ifndef UCYC_CLASSES_HPP_
#define UCYC_CLASSES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ucyc/core.hpp"
#include "ucyc/lattice.hpp"

namespace ucyc {

namespace kind {
struct AllWords {};
/// No letter repeats.
struct Injective {};
/// Every letter occurs.
struct Onto {};
/// Binary, letter counts differ by at most one.
struct NearBalancedBinary {};
/// Every letter count is floor(k/n) or ceil(k/n).
struct Equitable {};
/// Some rotation is non-decreasing.
struct Monotone {};
/// Consecutive letters within cyclic distance c.
struct Lipschitz {
  std::size_t c = 1;
};
/// Letter categories follow the category order cyclically.
struct CyclicCategories {};
/// Every letter occurs between a and b times.
struct AugmentedOnto {
  std::size_t a = 1;
  std::size_t b = 2;
};
/// Paths from the origin whose endpoint has l1 norm at most radius.
struct LatticePath {
  std::size_t dimension = 2;
  std::size_t radius = 0;
};
}  // namespace kind

using ClassKind =
    std::variant<kind::AllWords, kind::Injective, kind::Onto,
                 kind::NearBalancedBinary, kind::Equitable, kind::Monotone,
                 kind::Lipschitz, kind::CyclicCategories, kind::AugmentedOnto,
                 kind::LatticePath>;

struct ClassSpec {
  Alphabet alphabet;
  std::size_t length = 0;
  ClassKind kind;
};

/// CLI name of the class ("monotone", "augmented-onto", ...).
std::string class_name(const ClassKind& kind);

/// Lattice spec over the auto-generated step alphabet.
ClassSpec lattice_spec(std::size_t dimension, std::size_t radius,
                       std::size_t length);

/// x+,y+,z+ | x-,y-,z- with signs alternating along a walk.
Alphabet honeycomb_alphabet();

/// Throws std::invalid_argument for inconsistent specs; returns warnings
/// for specs that are accepted but degenerate.
std::vector<std::string> validate(const ClassSpec& spec);

/// Membership predicate bound to one spec. Validates once at construction;
/// the call operator does not check lengths or letter ranges.
class Membership {
 public:
  explicit Membership(const ClassSpec& spec);
  bool operator()(std::span<const Letter> word) const;

 private:
  ClassSpec spec_;
  std::vector<std::size_t> category_;
  std::optional<lattice::StepAlphabet> steps_;
};

/// Throws std::invalid_argument on a length mismatch or out-of-range letter.
bool is_member(const ClassSpec& spec, const Word& word);

/// Positions i (including the wrap pair) with word[i] > word[i+1 mod k].
std::size_t cyclic_descents(std::span<const Letter> word);
inline std::size_t cyclic_descents(const Word& w) {
  return cyclic_descents(w.letters());
}

/// Candidate budget: UCYC_BUDGET if set and valid, else 10^8.
Rank default_budget();

struct EnumerationOptions {
  Rank budget = default_budget();
};

/// n^k, or UINT64_MAX on overflow.
Rank candidate_count(const ClassSpec& spec);

/// Ranks of member words in increasing order. Throws BudgetExceeded.
std::vector<Rank> member_ranks(const ClassSpec& spec,
                               const EnumerationOptions& opts = {});
std::vector<Word> enumerate(const ClassSpec& spec,
                            const EnumerationOptions& opts = {});
Rank count(const ClassSpec& spec, const EnumerationOptions& opts = {});

struct ExistenceClaim {
  enum class Verdict { ClaimedExists, ClaimedNotExists, Unstated };
  Verdict verdict = Verdict::Unstated;
  /// Short name of the result the claim rests on; empty when unstated.
  std::string basis;

  friend bool operator==(const ExistenceClaim&,
                         const ExistenceClaim&) = default;
};

const char* to_string(ExistenceClaim::Verdict v);

ExistenceClaim existence_claim(const ClassSpec& spec);

struct ClassSummary {
  ClassSpec spec;
  Rank count = 0;
  ExistenceClaim claim;
};

ClassSummary summarize(const ClassSpec& spec,
                       const EnumerationOptions& opts = {});

}  // namespace ucyc

#endif  // UCYC_CLASSES_HPP_
