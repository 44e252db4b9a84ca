#pragma once

// Exact rational feasibility for small linear systems via Fourier-Motzkin
// elimination, with reconstruction of an explicit feasible point. Supports
// strict inequalities, which the Reeb admissibility test needs.

#include "toric/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

struct LinearConstraint {
  RatVec coeffs;  // <coeffs, x> >= rhs (or > rhs when strict)
  Rat rhs;
  bool strict = false;
};

struct FeasibilityResult {
  bool feasible = false;
  RatVec point;  // valid iff feasible
};

namespace detail {

// 0 >= rhs (or >) with no variables left.
inline bool constant_holds(const LinearConstraint& c) {
  if (c.strict) return c.rhs < 0;
  return c.rhs <= 0;
}

}  // namespace detail

inline FeasibilityResult fm_feasible(std::vector<LinearConstraint> cs, std::size_t nvars) {
  for (const LinearConstraint& c : cs)
    if (c.coeffs.size() != nvars)
      throw std::invalid_argument("fm_feasible: constraint dimension mismatch");

  // levels[k] holds the system before eliminating variable k (vars 0..k live).
  std::vector<std::vector<LinearConstraint>> levels(nvars);
  for (std::size_t k = nvars; k-- > 0;) {
    levels[k] = cs;
    std::vector<LinearConstraint> next;
    std::vector<LinearConstraint> lowers, uppers;
    for (const LinearConstraint& c : cs) {
      const Rat& a = c.coeffs[k];
      if (a == 0) {
        next.push_back(c);
      } else if (a > 0) {
        lowers.push_back(c);  // x_k >= (rhs - rest)/a
      } else {
        uppers.push_back(c);
      }
    }
    for (const LinearConstraint& lo : lowers) {
      for (const LinearConstraint& up : uppers) {
        // scale so the x_k coefficients cancel
        Rat la = lo.coeffs[k], ua = up.coeffs[k];
        LinearConstraint combined;
        combined.coeffs.assign(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j)
          combined.coeffs[j] = lo.coeffs[j] * (-ua) + up.coeffs[j] * la;
        combined.rhs = lo.rhs * (-ua) + up.rhs * la;
        combined.strict = lo.strict || up.strict;
        next.push_back(std::move(combined));
      }
    }
    for (LinearConstraint& c : next) c.coeffs.resize(k);
    cs = std::move(next);
    // purely constant constraints can be decided immediately
    std::vector<LinearConstraint> kept;
    for (LinearConstraint& c : cs) {
      if (is_zero(c.coeffs)) {
        if (!detail::constant_holds(c)) return {false, {}};
      } else {
        kept.push_back(std::move(c));
      }
    }
    cs = std::move(kept);
  }
  for (const LinearConstraint& c : cs)
    if (!detail::constant_holds(c)) return {false, {}};

  // Back-substitute a concrete point, tightest level first.
  RatVec x(nvars, Rat(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const LinearConstraint& c : levels[k]) {
      const Rat& a = c.coeffs[k];
      if (a == 0) continue;
      Rat rest = c.rhs;
      for (std::size_t j = 0; j < k; ++j) rest -= c.coeffs[j] * x[j];
      Rat bound = rest / a;
      if (a > 0) {
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        } else if (bound == lo) {
          lo_strict = lo_strict || c.strict;
        }
      } else {
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = c.strict;
          has_hi = true;
        } else if (bound == hi) {
          hi_strict = hi_strict || c.strict;
        }
      }
    }
    if (has_lo && has_hi) {
      if (lo == hi) {
        if (lo_strict || hi_strict)
          throw std::logic_error("fm_feasible: empty interval after feasibility");
        x[k] = lo;
      } else {
        x[k] = (lo + hi) / 2;
      }
    } else if (has_lo) {
      x[k] = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      x[k] = hi_strict ? hi - 1 : hi;
    } else {
      x[k] = 0;
    }
  }
  return {true, std::move(x)};
}

}  // namespace toric
