#pragma once

#include <random>
#include <vector>

#include "circalg/circalg.hpp"

namespace testing_support {

using circalg::ExactMatrix;
using circalg::Rational;
using circalg::Rng;

// Small entries from {-3..3} with an occasional 1/2.
inline ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int zero_bias = 2) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const int pick = static_cast<int>(rng() % (7 + zero_bias + 1));
      if (pick < 7) {
        m(r, c) = pick - 3;
      } else if (pick == 7) {
        m(r, c) = Rational(1, 2);
      }
    }
  }
  return m;
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  return circalg::random_ordering(rng, n);
}

inline Rational random_nonzero(Rng& rng) {
  static const std::vector<Rational> pool{1, -1, 2, -2, 3, Rational(1, 2), Rational(-2, 3), 5};
  return pool[rng() % pool.size()];
}

}  // namespace testing_support
