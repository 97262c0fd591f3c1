#include "ucyc/verify.hpp"

#include <algorithm>

namespace ucyc {

const char* to_string(VerificationFailure::Kind k) {
  switch (k) {
    case VerificationFailure::Kind::InvalidWindow:
      return "invalid";
    case VerificationFailure::Kind::DuplicateWindow:
      return "duplicate";
    case VerificationFailure::Kind::MissingWord:
      return "missing";
  }
  return "?";
}

namespace {

/// Rank of the k-window starting at i, wrapping modulo the cycle length.
Rank window_rank(std::span<const Letter> cycle, std::size_t i, std::size_t k,
                 std::size_t n) {
  Rank r = 0;
  for (std::size_t j = 0; j < k; ++j) {
    r = r * n + cycle[(i + j) % cycle.size()];
  }
  return r;
}

}  // namespace

VerificationReport verify(const CyclicString& cycle, const ClassSpec& spec,
                          const VerifyOptions& opts) {
  const Membership member(spec);
  const std::vector<Rank> members = member_ranks(spec, opts.enumeration);
  const std::size_t n = spec.alphabet.size();
  const std::size_t k = spec.length;
  const std::size_t len = cycle.size();

  VerificationReport report;
  report.cycle_length = len;
  report.expected_length = members.size();
  report.length_ok = len > 0 && len == members.size();
  report.all_windows_valid = true;
  report.all_distinct = true;

  auto fail = [&](VerificationFailure f) {
    ++report.failure_count;
    if (report.failures.size() < opts.failure_cap) {
      report.failures.push_back(std::move(f));
    }
  };

  // member_ranks succeeded, so n^k fits the budget and a bitset is fine.
  const Rank space = candidate_count(spec);
  std::vector<bool> seen(space, false);
  std::vector<Letter> buf(k);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      buf[j] = cycle.at_cyclic(i + j);
    }
    if (std::any_of(buf.begin(), buf.end(),
                    [n](Letter l) { return l >= n; })) {
      report.all_windows_valid = false;
      fail({i, Word(buf), VerificationFailure::Kind::InvalidWindow});
      continue;
    }
    const Rank r = window_rank(cycle.letters(), i, k, n);
    if (!member(buf)) {
      report.all_windows_valid = false;
      fail({i, Word(buf), VerificationFailure::Kind::InvalidWindow});
    }
    if (seen[r]) {
      report.all_distinct = false;
      fail({i, Word(buf), VerificationFailure::Kind::DuplicateWindow});
    }
    seen[r] = true;
  }

  bool all_covered = true;
  for (Rank r : members) {
    if (!seen[r]) {
      all_covered = false;
      fail({std::nullopt, unrank(r, k, n),
            VerificationFailure::Kind::MissingWord});
    }
  }
  report.coverage_complete = all_covered && report.all_windows_valid &&
                             len > 0;
  report.ok = report.length_ok && report.all_windows_valid &&
              report.all_distinct && report.coverage_complete;
  return report;
}

bool exhaustive_nonexistence(const ClassSpec& spec,
                             const NonexistenceOptions& opts) {
  const std::vector<Rank> members = member_ranks(spec, opts.enumeration);
  const std::size_t len = members.size();
  if (len == 0) {
    return true;
  }
  const std::size_t n = spec.alphabet.size();
  const std::size_t k = spec.length;
  const Rank candidates = checked_power(n, len).value_or(UINT64_MAX);
  // The length cap acts as a second budget of n^max_length candidates.
  const Rank budget =
      std::min(opts.enumeration.budget,
               checked_power(n, opts.max_length).value_or(UINT64_MAX));
  if (len > opts.max_length || candidates > budget) {
    throw BudgetExceeded(candidates, budget);
  }

  std::vector<bool> is_member_rank(candidate_count(spec), false);
  for (Rank r : members) {
    is_member_rank[r] = true;
  }
  std::vector<Rank> windows(len);
  std::vector<Letter> cycle(len, 0);
  for (Rank c = 0; c < candidates; ++c) {
    bool good = true;
    for (std::size_t i = 0; i < len && good; ++i) {
      windows[i] = window_rank(cycle, i, k, n);
      good = is_member_rank[windows[i]];
    }
    if (good) {
      std::sort(windows.begin(), windows.end());
      // len distinct member windows out of len members covers the class.
      if (std::adjacent_find(windows.begin(), windows.end()) == windows.end()) {
        return false;
      }
    }
    for (std::size_t i = len; i-- > 0;) {
      if (++cycle[i] < n) {
        break;
      }
      cycle[i] = 0;
    }
  }
  return true;
}

}  // namespace ucyc
