#include "ucyc/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ucyc::lattice {

namespace {

Alphabet make_step_symbols(std::size_t m) {
  if (m < 2) {
    throw std::invalid_argument("lattice dimension must be at least 2");
  }
  if (2 * m > kMaxAlphabetSize) {
    throw std::invalid_argument("lattice dimension too large");
  }
  if (m == 2) {
    return Alphabet({"N", "S", "E", "W"});
  }
  if (m == 3) {
    return Alphabet({"N", "S", "E", "W", "U", "D"});
  }
  std::vector<std::string> symbols;
  for (std::size_t a = 1; a <= m; ++a) {
    symbols.push_back("x" + std::to_string(a) + "+");
    symbols.push_back("x" + std::to_string(a) + "-");
  }
  return Alphabet(std::move(symbols));
}

}  // namespace

StepAlphabet::StepAlphabet(std::size_t dimension)
    : dimension_(dimension), alphabet_(make_step_symbols(dimension)) {
  // N,S move along y (axis 1); E,W along x (axis 0).
  for (std::size_t pair = 0; pair < dimension; ++pair) {
    std::size_t ax = pair;
    if (dimension <= 3 && pair < 2) {
      ax = 1 - pair;
    }
    axis_.push_back(ax);
    axis_.push_back(ax);
    sign_.push_back(+1);
    sign_.push_back(-1);
  }
}

Point endpoint(std::span<const Letter> word, const StepAlphabet& steps) {
  Point p(steps.dimension(), 0);
  for (Letter l : word) {
    p[steps.axis(l)] += steps.sign(l);
  }
  return p;
}

long l1_norm(const Point& p) {
  long s = 0;
  for (long c : p) {
    s += std::labs(c);
  }
  return s;
}

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Interior:
      return "interior";
    case Stratum::Face:
      return "face";
    case Stratum::Edge:
      return "edge";
    case Stratum::Corner:
      return "corner";
    case Stratum::Outside:
      return "outside";
  }
  return "?";
}

int boundary_zero_count(const Point& p, long radius) {
  const long norm = l1_norm(p);
  if (norm > radius) {
    return -2;
  }
  if (norm < radius) {
    return -1;
  }
  int zeros = 0;
  for (long c : p) {
    zeros += c == 0;
  }
  return zeros;
}

Stratum boundary_stratum(const Point& p, long radius) {
  if (p.size() != 3) {
    throw std::invalid_argument("boundary_stratum needs a 3D point, got " +
                                std::to_string(p.size()) + "D");
  }
  switch (boundary_zero_count(p, radius)) {
    case -2:
      return Stratum::Outside;
    case -1:
      return Stratum::Interior;
    case 0:
      return Stratum::Face;
    case 1:
      return Stratum::Edge;
    default:
      // radius 0 puts the origin on the boundary with three zeros.
      return Stratum::Corner;
  }
}

}  // namespace ucyc::lattice
