// Lattice-path words: step alphabets, endpoints, l1 norms and boundary strata
// of the cross-polytope {p : |p|_1 <= k}.

#ifndef UCYC_LATTICE_HPP_
#define UCYC_LATTICE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ucyc/core.hpp"

namespace ucyc::lattice {

using Point = std::vector<long>;

/// 2m symbols; each axis has one + and one - step. m=2 is N,S,E,W with
/// x = E-W and y = N-S; m=3 adds U,D for z; larger m uses x1+,x1-,x2+,...
class StepAlphabet {
 public:
  explicit StepAlphabet(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t axis(Letter l) const { return axis_.at(l); }
  int sign(Letter l) const { return sign_.at(l); }

 private:
  std::size_t dimension_;
  Alphabet alphabet_;
  std::vector<std::size_t> axis_;
  std::vector<int> sign_;
};

Point endpoint(std::span<const Letter> word, const StepAlphabet& steps);
inline Point endpoint(const Word& word, const StepAlphabet& steps) {
  return endpoint(word.letters(), steps);
}

long l1_norm(const Point& p);

enum class Stratum { Interior, Face, Edge, Corner, Outside };

const char* to_string(Stratum s);

/// Position of p relative to the 3D cross-polytope of the given radius.
/// On the boundary, two zero coordinates is a corner, one an edge, none a
/// face. Throws std::invalid_argument unless p has 3 coordinates.
Stratum boundary_stratum(const Point& p, long radius);

/// Dimension-free variant: number of zero coordinates of a boundary point,
/// or -1 if p is strictly inside, -2 if outside.
int boundary_zero_count(const Point& p, long radius);

}  // namespace ucyc::lattice

#endif  // UCYC_LATTICE_HPP_
