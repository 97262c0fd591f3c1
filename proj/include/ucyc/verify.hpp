// Independent U-cycle checker. Depends only on core and classes, so it can
// serve as an oracle for the digraph and euler modules.

#ifndef UCYC_VERIFY_HPP_
#define UCYC_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ucyc/classes.hpp"
#include "ucyc/core.hpp"

namespace ucyc {

struct VerificationFailure {
  enum class Kind { InvalidWindow, DuplicateWindow, MissingWord };
  /// Window start; absent for MissingWord.
  std::optional<std::size_t> position;
  Word window;
  Kind kind = Kind::InvalidWindow;
};

const char* to_string(VerificationFailure::Kind k);

struct VerificationReport {
  bool ok = false;
  bool length_ok = false;
  bool all_windows_valid = false;
  bool all_distinct = false;
  bool coverage_complete = false;
  std::size_t cycle_length = 0;
  Rank expected_length = 0;
  /// All failures found, before truncation.
  std::size_t failure_count = 0;
  std::vector<VerificationFailure> failures;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  std::size_t failure_cap = 32;
};

/// Extracts every cyclic k-window (wrapping as often as needed for short
/// cycles) and checks membership, distinctness, and coverage of the class.
/// Throws only what enumeration throws.
VerificationReport verify(const CyclicString& cycle, const ClassSpec& spec,
                          const VerifyOptions& opts = {});

struct NonexistenceOptions {
  EnumerationOptions enumeration;
  std::size_t max_length = 12;
};

/// Brute force over all n^count cyclic strings of length count(spec): true
/// iff none is a U-cycle. Throws BudgetExceeded if count exceeds max_length
/// or n^count exceeds the budget.
bool exhaustive_nonexistence(const ClassSpec& spec,
                             const NonexistenceOptions& opts = {});

}  // namespace ucyc

#endif  // UCYC_VERIFY_HPP_
