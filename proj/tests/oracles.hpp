// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the engine's algorithms.
#ifndef DEQUIV_TESTS_ORACLES_HPP_
#define DEQUIV_TESTS_ORACLES_HPP_

#include <dequiv/bwb.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// <lambda + rho, beta^v> for the six positive coroots of G2, lambda = x w1 + y w2
// with w1 the short fundamental weight.
inline std::array<std::int64_t, 6> shifted_coroot_pairings(std::int64_t x, std::int64_t y) {
  const std::int64_t u = x + 1, v = y + 1;
  return {u, v, u + v, u + 2 * v, u + 3 * v, 2 * u + 3 * v};
}

// Bott's theorem via the Weyl dimension formula: the degree is the number of
// positive coroots pairing negatively with lambda + rho; the dimension is the
// absolute product over the one for rho (= 1*1*2*3*4*5).
inline dequiv::bwb::Profile bott(std::int64_t x, std::int64_t y) {
  std::int64_t prod = 1;
  int negatives = 0;
  for (auto p : shifted_coroot_pairings(x, y)) {
    if (p == 0) return {};
    if (p < 0) ++negatives;
    prod *= p;
  }
  if (prod < 0) prod = -prod;
  return dequiv::bwb::Profile{{negatives, prod / 120}};
}

using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat random_unitriangular(std::mt19937_64& rng, int n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  Mat g(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    g[i][i] = 1;
    for (int j = i + 1; j < n; ++j) g[i][j] = d(rng);
  }
  return g;
}

// Mutation at the level of classes: new basis vectors as combinations of the
// old ones, Gram entries expanded bilinearly.
inline Mat mutate(const Mat& g, int i, bool left) {
  const int n = static_cast<int>(g.size());
  const std::int64_t x = g[i][i + 1];
  Mat basis(n, std::vector<std::int64_t>(n, 0));
  for (int k = 0; k < n; ++k) basis[k][k] = 1;
  basis[i] = std::vector<std::int64_t>(n, 0);
  basis[i + 1] = std::vector<std::int64_t>(n, 0);
  if (left) {
    basis[i][i + 1] = 1;  // L_A B = B - x A
    basis[i][i] = -x;
    basis[i + 1][i] = 1;
  } else {
    basis[i][i + 1] = 1;  // R_B A = A - x B
    basis[i + 1][i] = 1;
    basis[i + 1][i + 1] = -x;
  }
  Mat out(n, std::vector<std::int64_t>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) out[a][b] += basis[a][p] * g[p][q] * basis[b][q];
  return out;
}

}  // namespace oracle

#endif  // DEQUIV_TESTS_ORACLES_HPP_
