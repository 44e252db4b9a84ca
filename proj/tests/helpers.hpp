#pragma once

// Shared test fixtures: small-vector builders, an independent cofactor
// determinant, and seeded unimodular matrix generators.

#include "toric/linalg.hpp"

#include <random>
#include <vector>

namespace toric_test {

inline toric::IntVec iv(std::initializer_list<long long> xs) {
  toric::IntVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline toric::RatVec rv(std::initializer_list<long long> xs) {
  toric::RatVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

// Cofactor-expansion determinant, kept independent of the Bareiss path.
inline toric::Int cofactor_det(const std::vector<toric::IntVec>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  toric::Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<toric::IntVec> minor;
    for (std::size_t i = 1; i < n; ++i) {
      toric::IntVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    toric::Int term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Random unimodular matrix built from seeded shears and swaps; det is +-1.
inline std::vector<toric::IntVec> random_unimodular(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> shear(-3, 3);
  std::vector<toric::IntVec> m(n, toric::IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (int step = 0; step < 24; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      std::swap(m[i], m[(i + 1) % n]);
      continue;
    }
    toric::Int c = shear(rng);
    for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
  }
  return m;
}

}  // namespace toric_test
