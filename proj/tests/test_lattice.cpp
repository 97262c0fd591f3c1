#include <doctest.h>

#include "helpers.hpp"
#include "ucyc/lattice.hpp"

using namespace ucyc;
using namespace ucyc::lattice;

TEST_CASE("step alphabets") {
  StepAlphabet plane(2);
  CHECK(plane.alphabet().symbols() ==
        std::vector<std::string>{"N", "S", "E", "W"});
  StepAlphabet space(3);
  CHECK(space.alphabet().symbols() ==
        std::vector<std::string>{"N", "S", "E", "W", "U", "D"});
  StepAlphabet four(4);
  CHECK(four.alphabet().symbols().front() == "x1+");
  CHECK(four.alphabet().symbols().back() == "x4-");
  CHECK_THROWS_AS(StepAlphabet(1), std::invalid_argument);

  for (std::size_t m = 2; m <= 5; ++m) {
    StepAlphabet s(m);
    std::vector<int> plus(m, 0), minus(m, 0);
    for (Letter l = 0; l < s.alphabet().size(); ++l) {
      (s.sign(l) > 0 ? plus : minus)[s.axis(l)]++;
    }
    CHECK(plus == std::vector<int>(m, 1));
    CHECK(minus == std::vector<int>(m, 1));
  }
}

TEST_CASE("endpoint and l1 norm") {
  StepAlphabet plane(2);
  CHECK(endpoint(testing::word(plane.alphabet(), "EEN"), plane) ==
        Point{2, 1});
  CHECK(endpoint(testing::word(plane.alphabet(), "NS"), plane) == Point{0, 0});
  StepAlphabet space(3);
  CHECK(endpoint(testing::word(space.alphabet(), "UUDNE"), space) ==
        Point{1, 1, 1});

  CHECK(l1_norm({2, 1}) == 3);
  CHECK(l1_norm({0, 0, 0}) == 0);
  CHECK(l1_norm({-1, 2, -2}) == 5);
}

TEST_CASE("boundary_stratum") {
  CHECK(boundary_stratum({4, 0, 0}, 4) == Stratum::Corner);
  CHECK(boundary_stratum({0, -3, 0}, 3) == Stratum::Corner);
  CHECK(boundary_stratum({1, 1, 1}, 3) == Stratum::Face);
  CHECK(boundary_stratum({2, 0, -1}, 3) == Stratum::Edge);
  CHECK(boundary_stratum({0, 0, 0}, 1) == Stratum::Interior);
  CHECK(boundary_stratum({2, 2, 0}, 3) == Stratum::Outside);
  CHECK_THROWS_AS(boundary_stratum({1, 1}, 2), std::invalid_argument);
  CHECK(boundary_zero_count({1, 0, 0, 2}, 3) == 2);
}

TEST_CASE("endpoint parity and window norms") {
  for (std::size_t m : {2, 3}) {
    StepAlphabet s(m);
    const int n = static_cast<int>(2 * m);
    for (int len = 1; len <= 5; ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        const Word word = testing::from_ints(w);
        const long norm = l1_norm(endpoint(word, s));
        CHECK(norm % 2 == len % 2);
        // Dropping the first or last step moves the norm by exactly one.
        if (len > 1) {
          CHECK(std::labs(l1_norm(endpoint(word.prefix(len - 1), s)) - norm) ==
                1);
          CHECK(std::labs(l1_norm(endpoint(word.suffix(len - 1), s)) - norm) ==
                1);
        }
      }
    }
  }
}
