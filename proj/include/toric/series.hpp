#pragma once

// Finite lattice windows and sparse multiplicity tables. Generating series
// exist here only as windowed coefficient tables; identities are checked
// pointwise.

#include "toric/linalg.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultPointCap = 10'000'000;

struct LatticeWindow {
  std::vector<long long> lower, upper;  // inclusive per-coordinate bounds
};

inline LatticeWindow make_window(int dim, long long lo, long long hi) {
  if (dim <= 0) throw std::invalid_argument("make_window: dimension must be positive");
  if (lo > hi) throw std::invalid_argument("make_window: empty window (lower > upper)");
  return {std::vector<long long>(dim, lo), std::vector<long long>(dim, hi)};
}

inline void check_window(const LatticeWindow& w) {
  if (w.lower.size() != w.upper.size() || w.lower.empty())
    throw std::invalid_argument("lattice window: malformed bounds");
  for (std::size_t i = 0; i < w.lower.size(); ++i)
    if (w.lower[i] > w.upper[i])
      throw std::invalid_argument("lattice window: empty window (lower > upper)");
}

inline Int window_point_count(const LatticeWindow& w) {
  check_window(w);
  Int total = 1;
  for (std::size_t i = 0; i < w.lower.size(); ++i) total *= Int(w.upper[i] - w.lower[i] + 1);
  return total;
}

// Lexicographic iteration over the lattice points of the window. The cap is
// checked up front and exceeding it raises cap_error.
inline void for_each_lattice_point(const LatticeWindow& w, long long cap,
                                   const std::function<void(const IntVec&)>& fn) {
  if (window_point_count(w) > cap)
    throw cap_error("lattice window of " + window_point_count(w).str() +
                    " points exceeds the cap of " + std::to_string(cap));
  const std::size_t dim = w.lower.size();
  std::vector<long long> cur(w.lower);
  IntVec point(dim);
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i) point[i] = cur[i];
    fn(point);
    std::size_t i = dim;
    while (i-- > 0) {
      if (cur[i] < w.upper[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < dim; ++j) cur[j] = w.lower[j];
        break;
      }
      if (i == 0) return;
    }
  }
}

// Sparse multiplicity table over a window; zero coefficients are not stored.
struct IndexSeries {
  LatticeWindow window;
  std::map<IntVec, long long> coefficients;

  long long at(const IntVec& mu) const {
    auto it = coefficients.find(mu);
    return it == coefficients.end() ? 0 : it->second;
  }

  void set(const IntVec& mu, long long value) {
    if (value == 0)
      coefficients.erase(mu);
    else
      coefficients[mu] = value;
  }
};

}  // namespace toric
