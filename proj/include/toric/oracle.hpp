#pragma once

// Brute-force ground truth. Membership here is decided purely by facet
// inequalities (half-plane tests derived from the vertex data, or the cone's
// normals directly) and never by the generator-basis solves that power the
// decompositions, so agreement between the two is a genuine cross-check.

#include "toric/cone.hpp"
#include "toric/index.hpp"
#include "toric/lv.hpp"
#include "toric/polarization.hpp"
#include "toric/polytope.hpp"
#include "toric/series.hpp"

#include <chrono>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric::oracle {

inline bool in_cone(const MomentCone& c, const RatVec& x) {
  for (const IntVec& v : c.normals)
    if (dot(x, v) < 0) return false;
  return true;
}

inline bool in_cone_interior(const MomentCone& c, const RatVec& x) {
  for (const IntVec& v : c.normals)
    if (dot(x, v) <= 0) return false;
  return true;
}

inline bool in_neg_cone(const MomentCone& c, const RatVec& x) { return in_cone(c, negated(x)); }

inline bool in_neg_cone_interior(const MomentCone& c, const RatVec& x) {
  return in_cone_interior(c, negated(x));
}

struct HalfPlane {
  RatVec normal;
  Rat offset;  // points satisfy <x, normal> >= offset
};

// Facet inequalities of a 2D model, one per edge, inward normals.
inline std::vector<HalfPlane> polygon_halfplanes(const PolytopeModel& p) {
  if (p.ambient_dim != 2)
    throw std::invalid_argument("polygon_halfplanes: only 2D models are supported");
  std::vector<HalfPlane> out;
  for (auto [i, j] : model_edges(p)) {
    RatVec d{p.vertices[j][0] - p.vertices[i][0], p.vertices[j][1] - p.vertices[i][1]};
    RatVec inward{-d[1], d[0]};
    Rat offset = dot(inward, p.vertices[i]);
    // orient toward the polytope: some vertex must satisfy the inequality strictly
    bool ok = false;
    for (const RatVec& v : p.vertices)
      if (dot(inward, v) > offset) ok = true;
    if (!ok) {
      inward = negated(inward);
      offset = -offset;
    }
    out.push_back({std::move(inward), std::move(offset)});
  }
  return out;
}

inline bool in_polygon(const std::vector<HalfPlane>& hs, const RatVec& x) {
  for (const HalfPlane& h : hs)
    if (dot(x, h.normal) < h.offset) return false;
  return true;
}

inline bool in_polygon_interior(const std::vector<HalfPlane>& hs, const RatVec& x) {
  for (const HalfPlane& h : hs)
    if (dot(x, h.normal) <= h.offset) return false;
  return true;
}

struct Mismatch {
  IntVec point;
  long long lhs = 0;  // decomposition value
  long long rhs = 0;  // oracle value
};

struct VerificationReport {
  std::string identity;
  LatticeWindow window;
  long long points_checked = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0;

  bool pass() const { return mismatches.empty(); }
};

// Shared scaffold: exhaustively compare two pointwise evaluations.
inline VerificationReport compare_pointwise(const std::string& identity, const LatticeWindow& w,
                                            const std::function<long long(const IntVec&)>& lhs,
                                            const std::function<long long(const IntVec&)>& rhs,
                                            long long cap = kDefaultPointCap) {
  VerificationReport rep;
  rep.identity = identity;
  rep.window = w;
  auto start = std::chrono::steady_clock::now();
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    ++rep.points_checked;
    long long a = lhs(mu), b = rhs(mu);
    if (a != b) rep.mismatches.push_back({mu, a, b});
  });
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Signed cone list against an arbitrary reference; negative-control tests
// feed deliberately corrupted cone lists through this entry point.
inline VerificationReport compare_signed_cones(const std::string& identity,
                                               const std::vector<PolarizedCone>& cones,
                                               const std::function<long long(const IntVec&)>& reference,
                                               const LatticeWindow& w,
                                               long long cap = kDefaultPointCap) {
  return compare_pointwise(
      identity, w, [&](const IntVec& mu) { return (long long)signed_membership(cones, to_rat(mu)); },
      reference, cap);
}

// Polytope identity (dual = false) or its interior version (dual = true)
// against direct half-plane tests.
inline VerificationReport verify_lv(const PolytopeModel& p, const RatVec& xi,
                                    const LatticeWindow& w, bool dual,
                                    long long cap = kDefaultPointCap) {
  if (!is_polarizing(p, xi)) throw std::invalid_argument("verify_lv: xi is not polarizing");
  std::vector<HalfPlane> hs = polygon_halfplanes(p);
  const int n = p.edge_count_per_vertex;
  const int interior_sign = (n % 2 == 0) ? 1 : -1;
  std::vector<PolarizedCone> cones = dual ? dual_polarized_cones(p, xi) : polarized_cones(p, xi);
  auto reference = [&, interior_sign](const IntVec& mu) -> long long {
    RatVec x = to_rat(mu);
    if (dual) return in_polygon_interior(hs, x) ? interior_sign : 0;
    return in_polygon(hs, x) ? 1 : 0;
  };
  return compare_signed_cones(dual ? "lv_dual_polytope" : "lv_polytope", cones, reference, w, cap);
}

// Equality of the localized and lattice multiplicity functions, for each
// seed-generated polarizing vector, plus cross-seed agreement.
inline VerificationReport verify_index_equality(const MomentCone& c, const LatticeWindow& w,
                                                const std::vector<unsigned>& eps_seeds,
                                                long long cap = kDefaultPointCap,
                                                bool corrupt_first_sign = false) {
  if (eps_seeds.empty())
    throw std::invalid_argument("verify_index_equality: need at least one seed");
  std::vector<std::vector<IndexTerm>> per_seed;
  for (unsigned seed : eps_seeds) {
    std::vector<IndexTerm> terms = localization_terms(c, find_polarizing_eps(c, seed));
    if (corrupt_first_sign && !terms.empty()) terms.front().signs.front() *= -1;
    per_seed.push_back(std::move(terms));
  }
  VerificationReport rep;
  rep.identity = "index_localized_vs_lattice";
  rep.window = w;
  auto start = std::chrono::steady_clock::now();
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    long long lattice = multiplicity_lattice(c, mu);
    for (const auto& terms : per_seed) {
      ++rep.points_checked;
      long long localized = multiplicity_localized(terms, mu);
      if (localized != lattice) rep.mismatches.push_back({mu, localized, lattice});
    }
  });
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Localized multiplicities must not see the choice of completion vector: the
// alternate rule shifts v_0 by the first edge normal (still determinant +1)
// and rebuilds the dual bases.
inline VerificationReport verify_completion_independence(const MomentCone& c,
                                                         const LatticeWindow& w,
                                                         unsigned eps_seed = 0,
                                                         long long cap = kDefaultPointCap) {
  RatVec eps = find_polarizing_eps(c, eps_seed);
  std::vector<IndexTerm> standard = localization_terms(c, eps);
  std::vector<IndexTerm> shifted = standard;
  for (IndexTerm& t : shifted) {
    IntVec alt(t.edge.completion.size());
    for (std::size_t i = 0; i < alt.size(); ++i)
      alt[i] = t.edge.completion[i] + t.edge.normals.front()[i];
    t.edge = rebuild_frame(t.edge, std::move(alt), *c.reeb);
  }
  return compare_pointwise(
      "completion_independence", w,
      [&](const IntVec& mu) { return multiplicity_localized(standard, mu); },
      [&](const IntVec& mu) { return multiplicity_localized(shifted, mu); }, cap);
}

// Wall-crossing invariance of the dual sum. For polarizing vectors in the two
// chambers adjacent to the wall: both full sums must match the interior
// oracle, and at each endpoint of every edge perpendicular to the wall the
// two vertex cones must tile the on-wall edge cone.
inline VerificationReport verify_wall_crossing(const PolytopeModel& p, std::size_t wall_index,
                                               const LatticeWindow& w,
                                               long long cap = kDefaultPointCap) {
  std::vector<RatVec> walls = wall_directions(p);
  if (wall_index >= walls.size())
    throw std::invalid_argument("verify_wall_crossing: malformed wall index");
  if (p.ambient_dim != 2)
    throw std::invalid_argument("verify_wall_crossing: only 2D models are supported");
  const RatVec& dir = walls[wall_index];
  RatVec xi_on{-dir[1], dir[0]};  // on the wall of `dir`, off every other wall

  // largest step along `dir` that keeps every other pairing's sign
  Rat bound;
  bool have_bound = false;
  for (const auto& edges : p.vertex_edges)
    for (const RatVec& we : edges) {
      Rat denom = dot(we, dir);
      if (denom == 0) continue;  // parallel wall family shifts sign, as intended
      Rat num = dot(we, xi_on);
      if (num == 0) continue;
      Rat candidate = abs(num) / abs(denom);
      if (!have_bound || candidate < bound) {
        bound = candidate;
        have_bound = true;
      }
    }
  Rat delta = have_bound ? bound / 2 : Rat(1);
  RatVec xi_below{xi_on[0] - delta * dir[0], xi_on[1] - delta * dir[1]};
  RatVec xi_above{xi_on[0] + delta * dir[0], xi_on[1] + delta * dir[1]};
  if (!is_polarizing(p, xi_below) || !is_polarizing(p, xi_above))
    throw std::logic_error("verify_wall_crossing: chamber representatives are on a wall");

  std::vector<HalfPlane> hs = polygon_halfplanes(p);
  const int interior_sign = (p.edge_count_per_vertex % 2 == 0) ? 1 : -1;
  std::vector<PolarizedCone> below = dual_polarized_cones(p, xi_below);
  std::vector<PolarizedCone> above = dual_polarized_cones(p, xi_above);

  // endpoints of edges perpendicular to the wall, with their on-wall cones
  struct Crossing {
    PolarizedCone before, after, on;
  };
  std::vector<Crossing> crossings;
  for (auto [i, j] : model_edges(p)) {
    RatVec d{p.vertices[j][0] - p.vertices[i][0], p.vertices[j][1] - p.vertices[i][1]};
    if (!detail::parallel_rat(d, dir)) continue;
    for (std::size_t endpoint : {i, j}) {
      Crossing cr{dual_polarized_tangent_cone(p, endpoint, xi_below),
                  dual_polarized_tangent_cone(p, endpoint, xi_above),
                  edge_dual_cone(p, i, j, xi_on)};
      crossings.push_back(std::move(cr));
    }
  }
  if (crossings.empty())
    throw std::logic_error("verify_wall_crossing: wall has no perpendicular edge");

  VerificationReport rep;
  rep.identity = "wall_crossing";
  rep.window = w;
  auto start = std::chrono::steady_clock::now();
  for_each_lattice_point(w, cap, [&](const IntVec& mu) {
    ++rep.points_checked;
    RatVec x = to_rat(mu);
    long long oracle_value = in_polygon_interior(hs, x) ? interior_sign : 0;
    long long sum_below = signed_membership(below, x);
    long long sum_above = signed_membership(above, x);
    if (sum_below != oracle_value) rep.mismatches.push_back({mu, sum_below, oracle_value});
    if (sum_above != oracle_value) rep.mismatches.push_back({mu, sum_above, oracle_value});
    for (const Crossing& cr : crossings) {
      long long pair = (contains(cr.before, x) ? 1 : 0) + (contains(cr.after, x) ? 1 : 0);
      long long edge = contains(cr.on, x) ? 1 : 0;
      if (pair != edge) rep.mismatches.push_back({mu, pair, edge});
    }
  });
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace toric::oracle
