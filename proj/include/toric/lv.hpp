#pragma once

// Signed polar-decomposition sums: the polytope identities, their dual
// versions, and the cone lifts with error term obtained from the
// cross-section of a moment cone.

#include "toric/cone.hpp"
#include "toric/polarization.hpp"
#include "toric/polytope.hpp"
#include "toric/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

inline int signed_membership(const std::vector<PolarizedCone>& cones, const RatVec& x) {
  int total = 0;
  for (const PolarizedCone& k : cones)
    if (contains(k, x)) total += k.sign;
  return total;
}

// sum_p (-1)^{|E_p^+|} 1_{C_p^#}(x); equals 1_P(x).
inline int lv_sum(const PolytopeModel& p, const RatVec& xi, const RatVec& x) {
  if (!is_polarizing(p, xi)) throw std::invalid_argument("lv_sum: xi is not polarizing");
  return signed_membership(polarized_cones(p, xi), x);
}

// sum_p (-1)^{|E_p^+|} 1_{dual C_p^#}(x); equals (-1)^n 1_{P interior}(x).
inline int lv_dual_sum(const PolytopeModel& p, const RatVec& xi, const RatVec& x) {
  if (!is_polarizing(p, xi)) throw std::invalid_argument("lv_dual_sum: xi is not polarizing");
  return signed_membership(dual_polarized_cones(p, xi), x);
}

// Vertex cones of the cross-section lifted along the edge rays mu_L. With
// dual = false these decompose 1_C + (-1)^n 1_{-C interior}; with dual = true
// they decompose (-1)^n 1_{C interior} + 1_{-C}.
inline std::vector<PolarizedCone> lifted_section_cones(const SectionPolytope& sec,
                                                       const RatVec& xi, bool dual) {
  PolytopeModel p = section_model(sec);
  if (!is_polarizing(p, xi))
    throw std::invalid_argument("lifted_section_cones: xi is not polarizing");
  std::vector<PolarizedCone> out;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    PolarizedCone base =
        dual ? dual_polarized_tangent_cone(p, v, xi) : polarized_tangent_cone(p, v, xi);
    out.push_back(lift_cone(std::move(base), sec.frames[v].mu));
  }
  return out;
}

inline int cone_S(const MomentCone& c, const RatVec& xi, const RatVec& x) {
  return signed_membership(lifted_section_cones(cross_section(c), xi, false), x);
}

inline int cone_S_dual(const MomentCone& c, const RatVec& xi, const RatVec& x) {
  return signed_membership(lifted_section_cones(cross_section(c), xi, true), x);
}

// Signed lattice counts of a cone list over a window, stored sparsely.
inline IndexSeries generating_window(const std::vector<PolarizedCone>& cones,
                                     const LatticeWindow& w, long long cap = kDefaultPointCap) {
  IndexSeries series;
  series.window = w;
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    int value = signed_membership(cones, to_rat(mu));
    if (value != 0) series.coefficients[mu] = value;
  });
  return series;
}

}  // namespace toric
