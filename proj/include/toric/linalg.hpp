#pragma once

// Exact integer/rational linear algebra kernel: determinants, Smith normal
// form, unimodular completions, dual bases and rational solves.
//
// Row-vector convention throughout: a "basis" is a list of row vectors and
// det(b0,...,bn) is the determinant of the matrix whose i-th row is b_i.
// Nothing in here is allowed to touch floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_of(const Rat& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& a : v) out.emplace_back(a);
  return out;
}

// Throws unless every entry is an integer.
inline Int to_int_exact(const Rat& q) {
  if (denominator(q) != 1)
    throw std::invalid_argument("to_int_exact: value " + q.str() + " is not integral");
  return numerator(q);
}

inline IntVec to_int_exact(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(to_int_exact(q));
  return out;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) { return dot(to_rat(a), b); }
inline Rat dot(const RatVec& a, const IntVec& b) { return dot(a, to_rat(b)); }

inline IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline RatVec negated(const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& a : v)
    if (a != 0) return false;
  return true;
}

inline bool is_zero(const RatVec& v) {
  for (const Rat& a : v)
    if (a != 0) return false;
  return true;
}

// gcd of entries, >= 0; zero vector has content 0.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& a : v) g = boost::multiprecision::gcd(g, a);
  return g;
}

inline bool is_primitive(const IntVec& v) {
  if (is_zero(v)) throw std::invalid_argument("is_primitive: undefined for the zero vector");
  return content(v) == 1;
}

// Primitive integer vector spanning the same ray (positive scaling only).
inline IntVec primitive_scaled(const RatVec& dir) {
  if (is_zero(dir)) throw std::invalid_argument("primitive_scaled: zero direction");
  Int l = 1;
  for (const Rat& q : dir) l = boost::multiprecision::lcm(l, denominator(q));
  IntVec scaled;
  scaled.reserve(dir.size());
  for (const Rat& q : dir) scaled.push_back(numerator(q) * (l / denominator(q)));
  Int g = content(scaled);
  for (Int& a : scaled) a /= g;
  return scaled;
}

struct ExtGcd {
  Int g, u, v;  // g = u*a + v*b, g >= 0
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Rectangular integer matrix, stored as a list of equal-length rows.
class IntMat {
 public:
  IntMat() = default;

  explicit IntMat(std::vector<IntVec> rows) : rows_(std::move(rows)) {
    for (const IntVec& r : rows_)
      if (r.size() != rows_.front().size())
        throw std::invalid_argument("IntMat: ragged rows");
  }

  static IntMat identity(std::size_t n) {
    std::vector<IntVec> rows(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntMat(std::move(rows));
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return rows_.empty() ? 0 : rows_.front().size(); }
  bool square() const { return row_count() == col_count() && row_count() > 0; }

  const IntVec& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<IntVec>& rows() const { return rows_; }
  Int& at(std::size_t i, std::size_t j) { return rows_.at(i).at(j); }
  const Int& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

 private:
  std::vector<IntVec> rows_;
};

// Fraction-free Bareiss determinant.
inline Int determinant(const IntMat& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  std::vector<IntVec> a = m.rows();
  const std::size_t n = a.size();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;  // exact
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline Rat determinant_rational(std::vector<RatVec> a) {
  const std::size_t n = a.size();
  for (const RatVec& r : a)
    if (r.size() != n) throw std::invalid_argument("determinant_rational: not square");
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<RatVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat lead = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank_rational(std::vector<RatVec> rows) {
  return static_cast<int>(rref(rows).size());
}

inline int rank_int_rows(const std::vector<IntVec>& rows) {
  std::vector<RatVec> m;
  m.reserve(rows.size());
  for (const IntVec& r : rows) m.push_back(to_rat(r));
  return rank_rational(std::move(m));
}

// Basis of { x : <row_i, x> = 0 for all i }.
inline std::vector<RatVec> kernel_basis(const std::vector<RatVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("kernel_basis: no rows");
  const std::size_t cols = rows.front().size();
  std::vector<RatVec> m = rows;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<RatVec> inverse_rational(const std::vector<RatVec>& rows) {
  const std::size_t n = rows.size();
  std::vector<RatVec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("inverse_rational: not square");
    aug[i] = rows[i];
    aug[i].resize(2 * n, Rat(0));
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n)
    throw std::invalid_argument("inverse_rational: singular matrix");
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct ColumnSolve {
  SolveStatus status = SolveStatus::Inconsistent;
  RatVec coefficients;  // valid iff status == Unique
};

// Solves sum_j c_j * columns[j] = target exactly.
inline ColumnSolve solve_in_columns(const std::vector<RatVec>& columns, const RatVec& target) {
  const std::size_t k = columns.size();
  const std::size_t m = target.size();
  for (const RatVec& c : columns)
    if (c.size() != m) throw std::invalid_argument("solve_in_columns: dimension mismatch");
  std::vector<RatVec> aug(m, RatVec(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
    aug[i][k] = target[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  for (std::size_t p : pivots)
    if (p == k) return {SolveStatus::Inconsistent, {}};
  if (pivots.size() < k) return {SolveStatus::Underdetermined, {}};
  RatVec coeff(k, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) coeff[pivots[i]] = aug[i][k];
  return {SolveStatus::Unique, std::move(coeff)};
}

// Exact solution of m * x = rhs for square nonsingular m.
inline RatVec solve_rational(const IntMat& m, const RatVec& rhs) {
  if (!m.square()) throw std::invalid_argument("solve_rational: matrix is not square");
  if (rhs.size() != m.row_count()) throw std::invalid_argument("solve_rational: rhs dimension mismatch");
  const std::size_t n = m.row_count();
  std::vector<RatVec> columns(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = Rat(m.at(i, j));
  ColumnSolve s = solve_in_columns(columns, rhs);
  if (s.status != SolveStatus::Unique)
    throw std::invalid_argument("solve_rational: singular matrix");
  return s.coefficients;
}

// Elementary divisors d_1 | d_2 | ... of an integer matrix, min(rows,cols)
// many, trailing zeros when the rank falls short.
inline std::vector<Int> smith_divisors(const IntMat& m) {
  std::vector<IntVec> a = m.rows();
  const std::size_t R = a.size();
  const std::size_t C = R ? a.front().size() : 0;
  const std::size_t K = std::min(R, C);
  std::vector<Int> div(K, 0);
  for (std::size_t t = 0; t < K; ++t) {
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R && pi == R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == R) break;  // trailing block is zero
    std::swap(a[t], a[pi]);
    if (pj != t)
      for (IntVec& row : a) std::swap(row[t], row[pj]);
    for (;;) {
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        if (a[i][t] % a[t][t] == 0) {  // plain elimination keeps the pivot row
          Int q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
          continue;
        }
        ExtGcd e = ext_gcd(a[t][t], a[i][t]);
        Int p = a[t][t] / e.g, q = a[i][t] / e.g;
        for (std::size_t j = t; j < C; ++j) {
          Int x = a[t][j], y = a[i][j];
          a[t][j] = e.u * x + e.v * y;
          a[i][j] = p * y - q * x;
        }
      }
      bool row_clear = true;
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        if (a[t][j] % a[t][t] == 0) {
          Int q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
          continue;
        }
        row_clear = false;
        ExtGcd e = ext_gcd(a[t][t], a[t][j]);
        Int p = a[t][t] / e.g, q = a[t][j] / e.g;
        for (std::size_t i = t; i < R; ++i) {
          Int x = a[i][t], y = a[i][j];
          a[i][t] = e.u * x + e.v * y;
          a[i][j] = p * y - q * x;
        }
      }
      bool col_clear = true;
      for (std::size_t i = t + 1; i < R; ++i)
        if (a[i][t] != 0) col_clear = false;
      if (!row_clear || !col_clear) continue;
      // pivot must divide the whole trailing block
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      for (std::size_t j = t; j < C; ++j) a[t][j] += a[bad][j];
    }
    div[t] = abs_int(a[t][t]);
  }
  return div;
}

// Completes k independent lattice rows in dim m to a determinant +1 basis.
// The returned m-k rows are PREPENDED: det(returned..., vs...) == +1.
// Canonical rule: column-style Hermite reduction, completion rows taken from
// the inverse transform, sign of the last returned row fixed afterwards.
inline std::vector<IntVec> complete_to_unimodular(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("complete_to_unimodular: empty input");
  const std::size_t k = vs.size();
  const std::size_t m = vs.front().size();
  for (const IntVec& v : vs)
    if (v.size() != m) throw std::invalid_argument("complete_to_unimodular: ragged input");
  if (k > m) throw std::invalid_argument("complete_to_unimodular: more vectors than dimension");

  auto fail_with_divisor = [&]() -> std::string {
    std::vector<Int> div = smith_divisors(IntMat(vs));
    for (const Int& d : div)
      if (d != 1)
        return "complete_to_unimodular: rows do not extend to a lattice basis (divisor " +
               d.str() + ")";
    return "complete_to_unimodular: rows do not extend to a lattice basis";
  };

  std::vector<IntVec> a = vs;           // k x m, column ops applied
  std::vector<IntVec> v(m, IntVec(m, 0));  // inverse transform; invariant vs = a * v
  for (std::size_t i = 0; i < m; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (IntVec& row : a) std::swap(row[i], row[j]);
    std::swap(v[i], v[j]);
  };
  // col_j += c * col_t  <=>  row_t of v -= c * row_j
  auto add_col = [&](std::size_t t, std::size_t j, const Int& c) {
    for (IntVec& row : a) row[j] += c * row[t];
    for (std::size_t s = 0; s < m; ++s) v[t][s] -= c * v[j][s];
  };
  auto negate_col = [&](std::size_t t) {
    for (IntVec& row : a) row[t] = -row[t];
    for (std::size_t s = 0; s < m; ++s) v[t][s] = -v[t][s];
  };

  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t j = t; j < m; ++j)
        if (a[t][j] != 0 && (best == m || abs_int(a[t][j]) < abs_int(a[t][best]))) best = j;
      if (best == m) throw std::invalid_argument(fail_with_divisor());
      if (best != t) swap_cols(t, best);
      bool clean = true;
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        add_col(t, j, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;  // remainder left, another gcd round
      }
      if (clean) break;
    }
    if (a[t][t] < 0) negate_col(t);
    if (a[t][t] != 1) throw std::invalid_argument(fail_with_divisor());
  }

  std::vector<IntVec> completion(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  if (completion.empty()) {
    if (determinant(IntMat(vs)) != 1)
      throw std::invalid_argument("complete_to_unimodular: full basis has determinant != +1");
    return completion;
  }
  std::vector<IntVec> assembled = completion;
  assembled.insert(assembled.end(), vs.begin(), vs.end());
  Int det = determinant(IntMat(assembled));
  if (det == -1) {
    completion.back() = negated(completion.back());
  } else if (det != 1) {
    throw std::logic_error("complete_to_unimodular: internal determinant " + det.str());
  }
  return completion;
}

// Dual basis d_i with <d_i, b_j> = delta_ij; requires |det(b)| == 1, so the
// duals are in fact integral.
inline std::vector<RatVec> dual_basis(const std::vector<IntVec>& basis) {
  if (basis.empty()) throw std::invalid_argument("dual_basis: empty basis");
  const std::size_t n = basis.size();
  for (const IntVec& b : basis)
    if (b.size() != n) throw std::invalid_argument("dual_basis: basis is not square");
  Int det = determinant(IntMat(basis));
  if (det != 1 && det != -1)
    throw std::invalid_argument("dual_basis: basis is not unimodular (det " + det.str() + ")");
  std::vector<RatVec> rows;
  rows.reserve(n);
  for (const IntVec& b : basis) rows.push_back(to_rat(b));
  std::vector<RatVec> inv = inverse_rational(rows);
  std::vector<RatVec> duals(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) duals[i][j] = inv[j][i];
  return duals;
}

}  // namespace toric
