#pragma once

// Equivariant index multiplicities from the moment cone, two ways:
//
//  * localized: one term per cone edge, expansion signs fixed by the pairings
//    of a polarizing vector against the edge directions of the cross-section;
//    the weight mu contributes when <mu, v_i> > 0 on plus-indices and <= 0 on
//    minus-indices (the completion direction stays free).
//  * lattice: (-1)^n on interior cone points plus 1 on points of the negated
//    cone.
//
// Terms carry an optional per-edge twist: a finite multiset of weight shifts.

#include "toric/cone.hpp"
#include "toric/lv.hpp"
#include "toric/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct IndexTerm {
  EdgeFrame edge;
  std::vector<int> signs;                     // +1 / -1 per normal index
  RatVec epsilon_pairings;                    // eta_L^i(eps), never zero
  std::map<IntVec, long long> twist_weights;  // weight -> multiplicity

  int sign_factor() const {
    int plus = 0;
    for (int s : signs)
      if (s > 0) ++plus;
    return plus % 2 == 0 ? 1 : -1;
  }
};

// One localization term per edge. eps must pair nonzero with every edge
// direction of the cross-section; the pairings come from expanding eps in the
// basis {R, v_1..v_n} of the edge frame.
inline std::vector<IndexTerm> localization_terms(const MomentCone& c, const RatVec& eps) {
  if (static_cast<int>(eps.size()) != c.dim)
    throw std::invalid_argument("localization_terms: eps dimension mismatch");
  std::vector<EdgeFrame> frames = edges(c);
  const RatVec& R = *c.reeb;
  std::vector<IndexTerm> out;
  for (std::size_t e = 0; e < frames.size(); ++e) {
    const EdgeFrame& f = frames[e];
    std::vector<RatVec> basis_columns;
    basis_columns.push_back(R);
    for (const IntVec& v : f.normals) basis_columns.push_back(to_rat(v));
    // coefficients of eps = a R + sum_i eta^i v_i
    std::vector<RatVec> columns(c.dim);
    for (int i = 0; i < c.dim; ++i) {
      RatVec col(c.dim);
      for (int k = 0; k < c.dim; ++k) col[k] = basis_columns[i][k];
      columns[i] = std::move(col);
    }
    ColumnSolve s = solve_in_columns(columns, eps);
    if (s.status != SolveStatus::Unique)
      throw std::logic_error("localization_terms: edge basis is singular");
    IndexTerm t;
    t.edge = f;
    for (int i = 1; i < c.dim; ++i) {
      const Rat& eta = s.coefficients[i];
      if (eta == 0)
        throw std::invalid_argument("localization_terms: eps is not polarizing (edge " +
                                    std::to_string(e) + ", index " + std::to_string(i) + ")");
      t.epsilon_pairings.push_back(eta);
      t.signs.push_back(eta > 0 ? 1 : -1);
    }
    t.twist_weights[IntVec(c.dim, 0)] = 1;
    out.push_back(std::move(t));
  }
  return out;
}

// Coefficient of t^mu in one expanded term.
inline long long term_coefficient(const IndexTerm& t, const IntVec& mu) {
  long long total = 0;
  for (const auto& [lambda, mult] : t.twist_weights) {
    IntVec shifted(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] - lambda[i];
    bool inside = true;
    for (std::size_t i = 0; i < t.edge.normals.size() && inside; ++i) {
      Int pr = dot(shifted, t.edge.normals[i]);
      if (t.signs[i] > 0)
        inside = pr > 0;
      else
        inside = pr <= 0;
    }
    if (inside) total += mult;
  }
  return t.sign_factor() * total;
}

inline IndexSeries expand_term(const IndexTerm& t, const LatticeWindow& w,
                               long long cap = kDefaultPointCap) {
  IndexSeries series;
  series.window = w;
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    long long v = term_coefficient(t, mu);
    if (v != 0) series.coefficients[mu] = v;
  });
  return series;
}

inline long long multiplicity_localized(const std::vector<IndexTerm>& terms, const IntVec& mu) {
  long long total = 0;
  for (const IndexTerm& t : terms) total += term_coefficient(t, mu);
  return total;
}

// (-1)^n [mu interior to C] + [mu in -C].
inline long long multiplicity_lattice(const MomentCone& c, const IntVec& mu) {
  if (!strictly_convex(c))
    throw std::invalid_argument("multiplicity_lattice: cone is not strictly convex");
  bool interior = true, neg = true;
  for (const IntVec& v : c.normals) {
    Int pr = dot(mu, v);
    if (pr <= 0) interior = false;
    if (pr > 0) neg = false;
  }
  const int n = c.dim - 1;
  long long total = 0;
  if (interior) total += (n % 2 == 0) ? 1 : -1;
  if (neg) total += 1;
  return total;
}

enum class IndexMethod { Localized, Lattice };

inline IndexSeries index_window(const MomentCone& c, const std::vector<IndexTerm>& terms,
                                const LatticeWindow& w, IndexMethod method,
                                long long cap = kDefaultPointCap) {
  IndexSeries series;
  series.window = w;
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    long long v = method == IndexMethod::Localized ? multiplicity_localized(terms, mu)
                                                   : multiplicity_lattice(c, mu);
    if (v != 0) series.coefficients[mu] = v;
  });
  return series;
}

struct IndexComparison {
  IndexSeries localized;
  IndexSeries lattice;
  bool equal = false;
  std::optional<IntVec> first_mismatch;
};

inline IndexComparison index_window_both(const MomentCone& c, const std::vector<IndexTerm>& terms,
                                         const LatticeWindow& w,
                                         long long cap = kDefaultPointCap) {
  IndexComparison cmp;
  cmp.localized = index_window(c, terms, w, IndexMethod::Localized, cap);
  cmp.lattice = index_window(c, terms, w, IndexMethod::Lattice, cap);
  cmp.equal = true;
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    if (!cmp.equal) return;
    if (cmp.localized.at(mu) != cmp.lattice.at(mu)) {
      cmp.equal = false;
      cmp.first_mismatch = mu;
    }
  });
  return cmp;
}

// Polarizing vector for the localization, scanned deterministically from a
// seed over the cross-section's edge directions.
inline RatVec find_polarizing_eps(const MomentCone& c, unsigned seed) {
  return find_polarizing(section_model(cross_section(c)), seed);
}

// Replaces every term's twist by the single weight lambda.
inline void apply_uniform_twist(std::vector<IndexTerm>& terms, const IntVec& lambda) {
  for (IndexTerm& t : terms) {
    t.twist_weights.clear();
    t.twist_weights[lambda] = 1;
  }
}

namespace detail {

inline std::string format_covector(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace detail

// Human-readable factors of one localization term, e.g.
// "(1 - t^-(1,0,0))^- (1 - t^-(0,1,0))^- δ(1 - t^(0,0,1))".
// Nontrivial twists are printed as a leading character multiset.
inline std::string render_term(const IndexTerm& t) {
  std::ostringstream os;
  const IntVec zero(t.edge.mu.size(), 0);
  const bool trivial_twist =
      t.twist_weights.size() == 1 && t.twist_weights.count(zero) == 1 &&
      t.twist_weights.at(zero) == 1;
  if (!trivial_twist) {
    os << "χ = {";
    bool first = true;
    for (const auto& [lambda, mult] : t.twist_weights) {
      if (!first) os << ", ";
      os << detail::format_covector(lambda) << ": " << mult;
      first = false;
    }
    os << "} ";
  }
  for (std::size_t i = 0; i < t.edge.weights.size(); ++i) {
    os << "(1 - t^-" << detail::format_covector(t.edge.weights[i]) << ")^"
       << (t.signs[i] > 0 ? "+" : "-") << " ";
  }
  os << "δ(1 - t^" << detail::format_covector(t.edge.mu) << ")";
  return os.str();
}

}  // namespace toric
