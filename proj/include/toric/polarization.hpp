#pragma once

// Polarizing vectors and the signed half-open cones they induce at the
// vertices of a simple polytope: the polarized tangent cone, its dual, the
// on-wall edge cone, and lifts along a free direction.
//
// Half-openness is encoded per generator (strict vs. non-strict coefficient),
// never by perturbation; membership is an exact rational solve in the
// generator basis.

#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

enum class GenMode {
  StrictPositive,  // coefficient > 0
  Nonpositive,     // coefficient <= 0
  Free,            // coefficient unconstrained
};

struct PolarizedCone {
  RatVec apex;
  std::vector<RatVec> directions;
  std::vector<GenMode> modes;
  int sign = 1;  // (-1)^{|E_p^+|}
};

inline bool is_polarizing(const PolytopeModel& p, const RatVec& xi) {
  if (static_cast<int>(xi.size()) != p.ambient_dim)
    throw std::invalid_argument("is_polarizing: dimension mismatch");
  for (const auto& edges : p.vertex_edges)
    for (const RatVec& w : edges)
      if (dot(w, xi) == 0) return false;
  return true;
}

// Deterministic polarizing vector: scan integer vectors over growing boxes
// (shell by shell, lexicographic inside a shell) and return the (seed+1)-th
// vector that polarizes. Distinct seeds give distinct vectors.
inline RatVec find_polarizing(const PolytopeModel& p, unsigned seed) {
  const int dim = p.ambient_dim;
  unsigned remaining = seed;
  for (long long radius = 1; radius <= 64; ++radius) {
    std::vector<long long> v(dim, -radius);
    for (;;) {
      bool on_shell = false;
      for (long long c : v)
        if (c == radius || c == -radius) on_shell = true;
      if (on_shell) {
        RatVec xi(dim);
        for (int i = 0; i < dim; ++i) xi[i] = v[i];
        if (is_polarizing(p, xi)) {
          if (remaining == 0) return xi;
          --remaining;
        }
      }
      int i = dim - 1;
      while (i >= 0 && v[i] == radius) {
        v[i] = -radius;
        --i;
      }
      if (i < 0) break;
      ++v[i];
    }
  }
  throw std::logic_error("find_polarizing: scan exhausted");
}

namespace detail {

struct EdgeSplit {
  std::vector<RatVec> positive;  // <w, xi> > 0
  std::vector<RatVec> negative;  // <w, xi> < 0
};

inline EdgeSplit split_edges(const PolytopeModel& p, std::size_t vertex, const RatVec& xi) {
  if (vertex >= p.vertices.size()) throw std::invalid_argument("vertex index out of range");
  EdgeSplit s;
  for (const RatVec& w : p.vertex_edges[vertex]) {
    Rat pr = dot(w, xi);
    if (pr > 0)
      s.positive.push_back(w);
    else if (pr < 0)
      s.negative.push_back(w);
    else
      throw std::invalid_argument("polarized cone: xi is not polarizing at this vertex");
  }
  return s;
}

}  // namespace detail

// C_p^# = p + sum_{w in E+} R_{<0} w + sum_{w in E-} R_{>=0} w, carried sign
// (-1)^{|E+|}. Stored on the negated directions so that every mode is either
// "strictly positive" or "nonpositive".
inline PolarizedCone polarized_tangent_cone(const PolytopeModel& p, std::size_t vertex,
                                            const RatVec& xi) {
  detail::EdgeSplit s = detail::split_edges(p, vertex, xi);
  PolarizedCone k;
  k.apex = p.vertices[vertex];
  for (const RatVec& w : s.positive) {
    k.directions.push_back(negated(w));
    k.modes.push_back(GenMode::StrictPositive);
  }
  for (const RatVec& w : s.negative) {
    k.directions.push_back(negated(w));
    k.modes.push_back(GenMode::Nonpositive);
  }
  k.sign = (s.positive.size() % 2 == 0) ? 1 : -1;
  return k;
}

// Dual version: strict rays on E+, closed opposite rays on E-.
inline PolarizedCone dual_polarized_tangent_cone(const PolytopeModel& p, std::size_t vertex,
                                                 const RatVec& xi) {
  detail::EdgeSplit s = detail::split_edges(p, vertex, xi);
  PolarizedCone k;
  k.apex = p.vertices[vertex];
  for (const RatVec& w : s.positive) {
    k.directions.push_back(w);
    k.modes.push_back(GenMode::StrictPositive);
  }
  for (const RatVec& w : s.negative) {
    k.directions.push_back(w);
    k.modes.push_back(GenMode::Nonpositive);
  }
  k.sign = (s.positive.size() % 2 == 0) ? 1 : -1;
  return k;
}

// Dual polarized tangent cone at an edge, for xi lying on exactly the wall
// perpendicular to that edge. Independent of the endpoint used.
inline PolarizedCone edge_dual_cone(const PolytopeModel& p, std::size_t endpoint_a,
                                    std::size_t endpoint_b, const RatVec& xi) {
  if (endpoint_a >= p.vertices.size() || endpoint_b >= p.vertices.size())
    throw std::invalid_argument("edge_dual_cone: vertex index out of range");
  // locate the edge vector of a pointing to b
  RatVec diff(p.ambient_dim);
  for (int k = 0; k < p.ambient_dim; ++k)
    diff[k] = p.vertices[endpoint_b][k] - p.vertices[endpoint_a][k];
  if (is_zero(diff)) throw std::invalid_argument("edge_dual_cone: endpoints coincide");
  const RatVec* along = nullptr;
  for (const RatVec& w : p.vertex_edges[endpoint_a]) {
    if (!detail::parallel_rat(diff, w)) continue;
    Rat t;
    for (int k = 0; k < p.ambient_dim; ++k)
      if (w[k] != 0) {
        t = diff[k] / w[k];
        break;
      }
    if (t > 0) {
      along = &w;
      break;
    }
  }
  if (!along) throw std::invalid_argument("edge_dual_cone: vertices are not joined by an edge");
  if (dot(*along, xi) != 0)
    throw std::invalid_argument("edge_dual_cone: xi is not on the wall of this edge");
  // xi must polarize every edge vector not parallel to the wall edge
  for (const auto& edges : p.vertex_edges)
    for (const RatVec& w : edges)
      if (!detail::parallel_rat(w, *along) && dot(w, xi) == 0)
        throw std::invalid_argument("edge_dual_cone: xi lies on more than one wall");

  PolarizedCone k;
  k.apex = p.vertices[endpoint_a];
  k.directions.push_back(*along);
  k.modes.push_back(GenMode::Free);
  std::size_t positives = 0;
  for (const RatVec& w : p.vertex_edges[endpoint_a]) {
    if (&w == along) continue;
    Rat pr = dot(w, xi);
    if (pr > 0) {
      k.directions.push_back(w);
      k.modes.push_back(GenMode::StrictPositive);
      ++positives;
    } else if (pr < 0) {
      k.directions.push_back(w);
      k.modes.push_back(GenMode::Nonpositive);
    } else {
      throw std::invalid_argument("edge_dual_cone: xi kills a second edge at the endpoint");
    }
  }
  k.sign = (positives % 2 == 0) ? 1 : -1;
  return k;
}

// Adds mu as a free line generator; the sign is unchanged.
inline PolarizedCone lift_cone(PolarizedCone base, const IntVec& mu) {
  RatVec dir = to_rat(mu);
  if (static_cast<int>(dir.size()) != static_cast<int>(base.apex.size()))
    throw std::invalid_argument("lift_cone: dimension mismatch");
  std::vector<RatVec> span = base.directions;
  span.push_back(dir);
  if (rank_rational(span) != static_cast<int>(span.size()))
    throw std::invalid_argument("lift_cone: lift direction depends on the generators");
  base.directions.push_back(std::move(dir));
  base.modes.push_back(GenMode::Free);
  return base;
}

// Exact membership: solve x - apex in the generator basis and check each
// coefficient against its mode. Points outside the affine span are outside.
inline bool contains(const PolarizedCone& k, const RatVec& x) {
  if (x.size() != k.apex.size()) throw std::invalid_argument("contains: dimension mismatch");
  RatVec target(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) target[i] = x[i] - k.apex[i];
  ColumnSolve s = solve_in_columns(k.directions, target);
  if (s.status == SolveStatus::Underdetermined)
    throw std::invalid_argument("contains: cone generators are linearly dependent");
  if (s.status == SolveStatus::Inconsistent) return false;
  for (std::size_t i = 0; i < k.directions.size(); ++i) {
    const Rat& c = s.coefficients[i];
    switch (k.modes[i]) {
      case GenMode::StrictPositive:
        if (!(c > 0)) return false;
        break;
      case GenMode::Nonpositive:
        if (!(c <= 0)) return false;
        break;
      case GenMode::Free:
        break;
    }
  }
  return true;
}

inline std::vector<PolarizedCone> polarized_cones(const PolytopeModel& p, const RatVec& xi) {
  std::vector<PolarizedCone> out;
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    out.push_back(polarized_tangent_cone(p, v, xi));
  return out;
}

inline std::vector<PolarizedCone> dual_polarized_cones(const PolytopeModel& p, const RatVec& xi) {
  std::vector<PolarizedCone> out;
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    out.push_back(dual_polarized_tangent_cone(p, v, xi));
  return out;
}

// Distinct wall directions (primitive, canonical sign: first nonzero entry
// positive), sorted; walls of the polarization arrangement are indexed by
// these.
inline std::vector<RatVec> wall_directions(const PolytopeModel& p) {
  std::vector<IntVec> dirs;
  for (const auto& edges : p.vertex_edges)
    for (const RatVec& w : edges) {
      IntVec d = primitive_scaled(w);
      for (const Int& c : d) {
        if (c > 0) break;
        if (c < 0) {
          d = negated(d);
          break;
        }
      }
      dirs.push_back(std::move(d));
    }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  std::vector<RatVec> out;
  out.reserve(dirs.size());
  for (const IntVec& d : dirs) out.push_back(to_rat(d));
  return out;
}

}  // namespace toric
