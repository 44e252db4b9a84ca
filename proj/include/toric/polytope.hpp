#pragma once

// Simple polytope models: vertices plus the edge vectors emanating from each
// vertex. This is the combinatorial input of the polar decompositions; the
// model works in ambient coordinates, so cross-sections of cones fit without
// a change of basis.

#include "toric/cone.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace toric {

struct PolytopeModel {
  int ambient_dim = 0;
  int edge_count_per_vertex = 0;  // the intrinsic dimension n of a simple polytope
  std::vector<RatVec> vertices;
  std::vector<std::vector<RatVec>> vertex_edges;
};

namespace detail {

inline bool parallel_rat(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace detail

// Checks simplicity and that every edge vector leads to a neighbour vertex
// carrying the negated direction.
inline void validate_model(const PolytopeModel& p) {
  if (p.vertices.size() != p.vertex_edges.size())
    throw std::invalid_argument("polytope model: vertex/edge list size mismatch");
  if (p.vertices.empty()) throw std::invalid_argument("polytope model: no vertices");
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (static_cast<int>(p.vertices[i].size()) != p.ambient_dim)
      throw std::invalid_argument("polytope model: vertex dimension mismatch");
    if (static_cast<int>(p.vertex_edges[i].size()) != p.edge_count_per_vertex)
      throw std::invalid_argument("polytope model: polytope is not simple");
    for (const RatVec& w : p.vertex_edges[i]) {
      bool matched = false;
      for (std::size_t j = 0; j < p.vertices.size() && !matched; ++j) {
        if (j == i) continue;
        // neighbour along w: q = p + t w with t > 0, and -w among q's edges
        RatVec diff(p.ambient_dim);
        for (int k = 0; k < p.ambient_dim; ++k) diff[k] = p.vertices[j][k] - p.vertices[i][k];
        if (is_zero(diff) || !detail::parallel_rat(diff, w)) continue;
        Rat t;
        for (int k = 0; k < p.ambient_dim; ++k)
          if (w[k] != 0) {
            t = diff[k] / w[k];
            break;
          }
        if (t <= 0) continue;
        for (const RatVec& wq : p.vertex_edges[j])
          if (wq == negated(w) || detail::parallel_rat(wq, w)) {
            // direction must point back
            Rat back = 0;
            for (int k = 0; k < p.ambient_dim; ++k)
              if (w[k] != 0) {
                back = wq[k] / w[k];
                break;
              }
            if (back < 0) {
              matched = true;
              break;
            }
          }
      }
      if (!matched)
        throw std::invalid_argument("polytope model: edge vector without matching neighbour");
    }
  }
}

// Convex lattice polygon from a point cloud (monotone chain). Vertices come
// out counterclockwise starting at the lexicographic minimum; edge vectors
// are primitive integer directions toward both neighbours.
inline PolytopeModel polygon_from_points(std::vector<std::array<long long, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw std::invalid_argument("polygon_from_points: need >= 3 distinct points");
  auto cross = [](const std::array<long long, 2>& o, const std::array<long long, 2>& a,
                  const std::array<long long, 2>& b) -> long long {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<long long, 2>> hull;
  for (const auto& pt : pts) {  // lower chain
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  if (hull.size() < 3) throw std::invalid_argument("polygon_from_points: points are collinear");

  PolytopeModel p;
  p.ambient_dim = 2;
  p.edge_count_per_vertex = 2;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v{Rat(hull[i][0]), Rat(hull[i][1])};
    p.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto dir_to = [&](std::size_t j) {
      RatVec d{Rat(hull[j][0] - hull[i][0]), Rat(hull[j][1] - hull[i][1])};
      return to_rat(primitive_scaled(d));
    };
    p.vertex_edges.push_back({dir_to((i + 1) % n), dir_to((i + n - 1) % n)});
  }
  validate_model(p);
  return p;
}

inline PolytopeModel unit_square() {
  return polygon_from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline PolytopeModel unit_triangle() {
  return polygon_from_points({{0, 0}, {1, 0}, {0, 1}});
}

// The segment [0,1] as a 1-dimensional model.
inline PolytopeModel unit_segment() {
  PolytopeModel p;
  p.ambient_dim = 1;
  p.edge_count_per_vertex = 1;
  p.vertices = {RatVec{Rat(0)}, RatVec{Rat(1)}};
  p.vertex_edges = {{RatVec{Rat(1)}}, {RatVec{Rat(-1)}}};
  return p;
}

// Deterministic random convex lattice polygon inside [-3,5]^2.
inline PolytopeModel random_lattice_polygon(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> coord(-3, 5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::array<long long, 2>> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({coord(rng), coord(rng)});
    try {
      return polygon_from_points(std::move(pts));
    } catch (const std::invalid_argument&) {
      continue;  // degenerate sample, draw again
    }
  }
  throw std::logic_error("random_lattice_polygon: no polygon after 64 attempts");
}

// Cross-section as a polytope model in ambient cone coordinates.
inline PolytopeModel section_model(const SectionPolytope& sec) {
  PolytopeModel p;
  if (sec.vertices.empty()) throw std::invalid_argument("section_model: empty section");
  p.ambient_dim = static_cast<int>(sec.vertices.front().size());
  p.edge_count_per_vertex = static_cast<int>(sec.vertex_edges.front().size());
  p.vertices = sec.vertices;
  p.vertex_edges = sec.vertex_edges;
  validate_model(p);
  return p;
}

// Vertex index pairs (i < j) joined by an edge of the model.
inline std::vector<std::pair<std::size_t, std::size_t>> model_edges(const PolytopeModel& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (const RatVec& w : p.vertex_edges[i]) {
      for (std::size_t j = 0; j < p.vertices.size(); ++j) {
        if (j == i) continue;
        RatVec diff(p.ambient_dim);
        for (int k = 0; k < p.ambient_dim; ++k) diff[k] = p.vertices[j][k] - p.vertices[i][k];
        if (is_zero(diff) || !detail::parallel_rat(diff, w)) continue;
        Rat t;
        for (int k = 0; k < p.ambient_dim; ++k)
          if (w[k] != 0) {
            t = diff[k] / w[k];
            break;
          }
        if (t > 0 && i < j) out.emplace_back(i, j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toric
