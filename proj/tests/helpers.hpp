#ifndef UCYC_TESTS_HELPERS_HPP_
#define UCYC_TESTS_HELPERS_HPP_

#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "ucyc/core.hpp"

namespace testing {

inline ucyc::Word word(const ucyc::Alphabet& a, std::string_view text) {
  return ucyc::Word(ucyc::parse_letters(a, text));
}

inline ucyc::CyclicString cycle(const ucyc::Alphabet& a,
                                std::string_view text) {
  return ucyc::CyclicString(ucyc::parse_letters(a, text));
}

inline oracle::Seq ints(const ucyc::Word& w) {
  return oracle::Seq(w.begin(), w.end());
}

inline ucyc::Word from_ints(const oracle::Seq& s) {
  return ucyc::Word(std::vector<ucyc::Letter>(s.begin(), s.end()));
}

/// Alphabet "0","1",... for digit-string literals in tests.
inline ucyc::Alphabet digits(std::size_t n, bool cyclic = false) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(std::to_string(i));
  }
  return ucyc::Alphabet(std::move(s), cyclic);
}

}  // namespace testing

#endif  // UCYC_TESTS_HELPERS_HPP_
