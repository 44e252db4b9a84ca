#pragma once

// Moment cones over the integer lattice: good-cone axioms, face and edge
// enumeration, Reeb admissibility with exact certificates, characteristic
// cross-sections and the built-in example families.
//
// A cone is presented by its inward primitive facet normals v_1..v_d in
// ambient dimension dim = n+1; the optional Reeb vector R singles out the
// characteristic hyperplane { eta : eta(R) = 1 }.

#include "toric/fourier_motzkin.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct MomentCone {
  int dim = 0;
  std::vector<IntVec> normals;
  std::optional<RatVec> reeb;
};

struct EdgeRay {
  IntVec ray;               // primitive, oriented into the cone
  std::vector<int> facets;  // all facet indices vanishing on the ray, ascending
};

struct FaceInfo {
  std::vector<int> facets;  // exact set of facets containing the face
  int dim = 0;
};

struct GoodnessReport {
  bool strictly_convex = false;
  bool normals_primitive = false;
  bool normals_minimal = false;
  bool faces_simple = false;      // every codim-k face lies on exactly k facets
  bool faces_unimodular = false;  // face normal sets extend to a lattice basis
  bool good = false;
  std::vector<std::string> issues;
};

struct ReebResult {
  bool admissible = false;
  RatVec certificate;  // positive coefficients with sum_j a_j v_j = R
};

// Per-edge localization frame: n facet normals meeting the edge, a
// determinant +1 completion v0, and the dual basis {mu, w^1..w^n}. mu is the
// primitive edge generator and pairs positively with the Reeb vector.
struct EdgeFrame {
  std::vector<int> facet_indices;  // aligned with `normals`
  std::vector<IntVec> normals;     // v_1..v_n
  IntVec completion;               // v_0, det(v_0,v_1,...,v_n) = +1
  IntVec mu;                       // mu_L, dual to v_0
  std::vector<IntVec> weights;     // w^1..w^n, dual to v_1..v_n
  Rat reeb_pairing;                // mu_L(R) > 0
};

// Cross-section of the cone by the characteristic hyperplane. Vertex i is
// mu_i / mu_i(R); its edge directions are the eta^i from the dual basis of
// {R, v_1..v_n}, scaled to primitive integer representatives.
struct SectionPolytope {
  std::vector<RatVec> vertices;
  std::vector<std::vector<RatVec>> vertex_edges;
  std::vector<EdgeFrame> frames;  // frames[i] belongs to vertices[i]
};

inline bool strictly_convex(const MomentCone& c) {
  return rank_int_rows(c.normals) == c.dim;
}

namespace detail {

inline bool parallel(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

inline std::string format_vec(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline std::string format_indices(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

}  // namespace detail

ReebResult is_reeb_admissible(const MomentCone& c, const RatVec& r);

// Validating factory; use for every cone built from external data.
inline MomentCone make_cone(int dim, std::vector<IntVec> normals, std::optional<RatVec> reeb) {
  if (dim < 2) throw std::invalid_argument("make_cone: ambient dimension must be >= 2");
  if (static_cast<int>(normals.size()) < dim)
    throw std::invalid_argument("make_cone: need at least dim facet normals");
  for (std::size_t j = 0; j < normals.size(); ++j) {
    if (static_cast<int>(normals[j].size()) != dim)
      throw std::invalid_argument("make_cone: normal " + std::to_string(j) + " has wrong dimension");
    if (is_zero(normals[j]) || !is_primitive(normals[j]))
      throw std::invalid_argument("make_cone: normal " + std::to_string(j) + " is not primitive");
  }
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j)
      if (detail::parallel(normals[i], normals[j]))
        throw std::invalid_argument("make_cone: normals " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are parallel");
  MomentCone c{dim, std::move(normals), std::nullopt};
  if (reeb) {
    if (static_cast<int>(reeb->size()) != dim)
      throw std::invalid_argument("make_cone: reeb vector has wrong dimension");
    if (!strictly_convex(c))
      throw std::invalid_argument("make_cone: reeb vector given but cone is not strictly convex");
    if (!is_reeb_admissible(c, *reeb).admissible)
      throw std::invalid_argument("make_cone: reeb vector is not admissible");
    c.reeb = std::move(reeb);
  }
  return c;
}

// One-dimensional faces, found as kernels of (dim-1)-subsets of normals that
// meet the cone. Sorted by their facet sets.
inline std::vector<EdgeRay> edge_rays(const MomentCone& c) {
  if (!strictly_convex(c)) throw std::invalid_argument("edge_rays: cone is not strictly convex");
  const int d = static_cast<int>(c.normals.size());
  const int pick = c.dim - 1;
  std::vector<EdgeRay> out;
  std::set<IntVec> seen;

  std::vector<int> comb(pick);
  for (int i = 0; i < pick; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = pick - 1;
    while (i >= 0 && comb[i] == d - pick + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < pick; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };

  bool more = pick <= d;
  while (more) {
    std::vector<RatVec> rows;
    rows.reserve(pick);
    for (int i : comb) rows.push_back(to_rat(c.normals[i]));
    std::vector<RatVec> kern = kernel_basis(rows);
    if (kern.size() == 1) {
      IntVec dir = primitive_scaled(kern.front());
      bool all_nonneg = true, all_nonpos = true;
      for (const IntVec& v : c.normals) {
        int s = sign_of(Rat(dot(dir, v)));
        if (s < 0) all_nonneg = false;
        if (s > 0) all_nonpos = false;
      }
      if (!all_nonneg && all_nonpos) dir = negated(dir);
      if (all_nonneg || all_nonpos) {
        if (seen.insert(dir).second) {
          EdgeRay e;
          e.ray = dir;
          for (int j = 0; j < d; ++j)
            if (dot(dir, c.normals[j]) == 0) e.facets.push_back(j);
          out.push_back(std::move(e));
        }
      }
    }
    more = advance();
  }
  std::sort(out.begin(), out.end(),
            [](const EdgeRay& a, const EdgeRay& b) { return a.facets < b.facets; });
  return out;
}

// All proper faces of codimension 1..n, keyed by their exact facet sets.
// Faces of a strictly convex cone are joins of edge rays, so the scan over
// facet subsets (O(2^d), fine at desk scale) recovers each face from the set
// of edges it contains.
inline std::vector<FaceInfo> faces(const MomentCone& c) {
  if (!strictly_convex(c)) throw std::invalid_argument("faces: cone is not strictly convex");
  const int d = static_cast<int>(c.normals.size());
  if (d > 24) throw std::invalid_argument("faces: too many facets for subset scan");
  std::vector<EdgeRay> edges = edge_rays(c);

  std::set<std::vector<int>> seen;
  std::vector<FaceInfo> out;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> subset;
    for (int j = 0; j < d; ++j)
      if (mask & (1u << j)) subset.push_back(j);
    // edges lying on every facet of the subset
    std::vector<const EdgeRay*> members;
    for (const EdgeRay& e : edges) {
      if (std::includes(e.facets.begin(), e.facets.end(), subset.begin(), subset.end()))
        members.push_back(&e);
    }
    if (members.empty()) continue;  // only the apex survives
    std::vector<int> key = members.front()->facets;
    for (const EdgeRay* e : members) {
      std::vector<int> merged;
      std::set_intersection(key.begin(), key.end(), e->facets.begin(), e->facets.end(),
                            std::back_inserter(merged));
      key = std::move(merged);
    }
    if (!seen.insert(key).second) continue;
    std::vector<RatVec> rays;
    for (const EdgeRay* e : members) rays.push_back(to_rat(e->ray));
    int face_dim = rank_rational(rays);
    if (face_dim >= c.dim) continue;  // the cone itself
    // cross-check: span of the face equals the annihilator of its normals
    std::vector<IntVec> key_normals;
    for (int j : key) key_normals.push_back(c.normals[j]);
    int normal_rank = key.empty() ? 0 : rank_int_rows(key_normals);
    if (face_dim != c.dim - normal_rank)
      throw std::logic_error("faces: dimension count mismatch on face " +
                             detail::format_indices(key));
    out.push_back(FaceInfo{std::move(key), face_dim});
  }
  std::sort(out.begin(), out.end(), [](const FaceInfo& a, const FaceInfo& b) {
    return std::tie(a.dim, a.facets) < std::tie(b.dim, b.facets);
  });
  return out;
}

inline ReebResult is_reeb_admissible(const MomentCone& c, const RatVec& r) {
  if (!strictly_convex(c))
    throw std::invalid_argument("is_reeb_admissible: cone is not strictly convex");
  if (static_cast<int>(r.size()) != c.dim)
    throw std::invalid_argument("is_reeb_admissible: dimension mismatch");
  const std::size_t d = c.normals.size();
  // variables a_1..a_d: sum_j a_j v_j = r (componentwise equalities), a_j > 0
  std::vector<LinearConstraint> cs;
  for (int i = 0; i < c.dim; ++i) {
    LinearConstraint eq_ge, eq_le;
    eq_ge.coeffs.resize(d);
    eq_le.coeffs.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      eq_ge.coeffs[j] = Rat(c.normals[j][i]);
      eq_le.coeffs[j] = Rat(-c.normals[j][i]);
    }
    eq_ge.rhs = r[i];
    eq_le.rhs = -r[i];
    cs.push_back(std::move(eq_ge));
    cs.push_back(std::move(eq_le));
  }
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint pos;
    pos.coeffs.assign(d, Rat(0));
    pos.coeffs[j] = 1;
    pos.rhs = 0;
    pos.strict = true;
    cs.push_back(std::move(pos));
  }
  FeasibilityResult f = fm_feasible(std::move(cs), d);
  if (!f.feasible) return {false, {}};
  return {true, std::move(f.point)};
}

// Per-axiom goodness report; failures are entries, not exceptions.
inline GoodnessReport is_good(const MomentCone& c) {
  GoodnessReport rep;
  rep.strictly_convex = strictly_convex(c);
  if (!rep.strictly_convex)
    rep.issues.push_back("normals do not span the ambient space (cone contains a line)");

  rep.normals_primitive = true;
  for (std::size_t j = 0; j < c.normals.size(); ++j) {
    if (is_zero(c.normals[j]) || !is_primitive(c.normals[j])) {
      rep.normals_primitive = false;
      rep.issues.push_back("normal " + std::to_string(j) + " is not primitive");
    }
  }

  // minimality: dropping any facet must change the cone
  rep.normals_minimal = true;
  const std::size_t d = c.normals.size();
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == j) continue;
      LinearConstraint keep;
      keep.coeffs = to_rat(c.normals[i]);
      keep.rhs = 0;
      cs.push_back(std::move(keep));
    }
    LinearConstraint cut;
    cut.coeffs = to_rat(c.normals[j]);
    for (Rat& q : cut.coeffs) q = -q;
    cut.rhs = 1;  // <y, v_j> <= -1, scale-invariant stand-in for < 0
    cs.push_back(std::move(cut));
    if (!fm_feasible(std::move(cs), c.dim).feasible) {
      rep.normals_minimal = false;
      rep.issues.push_back("normal " + std::to_string(j) +
                           " is redundant (its half-space is implied by the others)");
    }
  }

  rep.faces_simple = false;
  rep.faces_unimodular = false;
  if (rep.strictly_convex) {
    rep.faces_simple = true;
    rep.faces_unimodular = true;
    for (const FaceInfo& f : faces(c)) {
      const int codim = c.dim - f.dim;
      if (static_cast<int>(f.facets.size()) != codim) {
        rep.faces_simple = false;
        rep.issues.push_back("codim-" + std::to_string(codim) + " face lies on " +
                             std::to_string(f.facets.size()) + " facets " +
                             detail::format_indices(f.facets) + ", expected " +
                             std::to_string(codim));
      }
      std::vector<IntVec> face_normals;
      for (int j : f.facets) face_normals.push_back(c.normals[j]);
      std::vector<Int> div = smith_divisors(IntMat(face_normals));
      for (const Int& e : div) {
        if (e != 1) {
          rep.faces_unimodular = false;
          rep.issues.push_back("face " + detail::format_indices(f.facets) +
                               ": normals do not extend to a lattice basis (divisor " + e.str() +
                               ")");
          break;
        }
      }
    }
    // In ambient dimension 2 the only lattice condition with content sits at
    // the apex, where both facets meet; require its normal pair to be a basis.
    if (c.dim == 2) {
      std::vector<Int> div = smith_divisors(IntMat(c.normals));
      for (const Int& e : div) {
        if (e != 1) {
          rep.faces_unimodular = false;
          rep.issues.push_back(
              "apex: normals do not extend to a lattice basis (divisor " + e.str() + ")");
          break;
        }
      }
    }
  } else {
    rep.issues.push_back("face axioms not evaluated: cone is not strictly convex");
  }

  rep.good = rep.strictly_convex && rep.normals_primitive && rep.normals_minimal &&
             rep.faces_simple && rep.faces_unimodular;
  return rep;
}

// Localization frames, one per edge. Requires a good cone with an admissible
// Reeb vector and ambient dimension >= 3 (so n >= 2).
inline std::vector<EdgeFrame> edges(const MomentCone& c) {
  if (!c.reeb) throw std::invalid_argument("edges: cone has no reeb vector");
  if (c.dim < 3) throw std::invalid_argument("edges: ambient dimension must be >= 3");
  GoodnessReport rep = is_good(c);
  if (!rep.good) {
    std::string msg = "edges: cone is not good";
    if (!rep.issues.empty()) msg += " (" + rep.issues.front() + ")";
    throw std::invalid_argument(msg);
  }
  ReebResult reeb = is_reeb_admissible(c, *c.reeb);
  if (!reeb.admissible) throw std::invalid_argument("edges: reeb vector is not admissible");

  const RatVec& R = *c.reeb;
  const int n = c.dim - 1;
  std::vector<EdgeFrame> out;
  for (const EdgeRay& e : edge_rays(c)) {
    if (static_cast<int>(e.facets.size()) != n)
      throw std::logic_error("edges: good cone produced a non-simple edge");
    EdgeFrame f;
    f.facet_indices = e.facets;
    for (int j : e.facets) f.normals.push_back(c.normals[j]);

    // det(R, v_1..v_n) = mu(R) once det(v_0,...,v_n) = +1; swapping the first
    // two normals flips its sign, which pins the orientation.
    std::vector<RatVec> rmat;
    rmat.push_back(R);
    for (const IntVec& v : f.normals) rmat.push_back(to_rat(v));
    Rat dr = determinant_rational(rmat);
    if (dr == 0) throw std::logic_error("edges: reeb vector lies in a facet span");
    if (dr < 0) {
      std::swap(f.normals[0], f.normals[1]);
      std::swap(f.facet_indices[0], f.facet_indices[1]);
    }

    f.completion = complete_to_unimodular(f.normals).front();
    std::vector<IntVec> basis;
    basis.push_back(f.completion);
    for (const IntVec& v : f.normals) basis.push_back(v);
    std::vector<RatVec> duals = dual_basis(basis);
    f.mu = to_int_exact(duals.front());
    for (std::size_t i = 1; i < duals.size(); ++i) f.weights.push_back(to_int_exact(duals[i]));
    f.reeb_pairing = dot(f.mu, R);

    if (f.mu != e.ray)
      throw std::logic_error("edges: dual vector disagrees with the edge ray generator");
    if (f.reeb_pairing <= 0) throw std::logic_error("edges: mu(R) <= 0 after orientation fix");
    out.push_back(std::move(f));
  }
  return out;
}

// Rebuilds a frame around a caller-chosen completion vector. The completion
// must still give det(v_0, v_1..v_n) = +1; the dual basis is recomputed.
inline EdgeFrame rebuild_frame(const EdgeFrame& frame, IntVec completion, const RatVec& reeb) {
  std::vector<IntVec> basis;
  basis.push_back(completion);
  for (const IntVec& v : frame.normals) basis.push_back(v);
  Int det = determinant(IntMat(basis));
  if (det != 1)
    throw std::invalid_argument("rebuild_frame: completion gives determinant " + det.str() +
                                ", need +1");
  EdgeFrame out;
  out.facet_indices = frame.facet_indices;
  out.normals = frame.normals;
  out.completion = std::move(completion);
  std::vector<RatVec> duals = dual_basis(basis);
  out.mu = to_int_exact(duals.front());
  out.weights.clear();
  for (std::size_t i = 1; i < duals.size(); ++i) out.weights.push_back(to_int_exact(duals[i]));
  out.reeb_pairing = dot(out.mu, reeb);
  if (out.mu != frame.mu)
    throw std::invalid_argument("rebuild_frame: completion changes the edge generator");
  return out;
}

inline SectionPolytope cross_section(const MomentCone& c) {
  SectionPolytope sec;
  sec.frames = edges(c);
  const RatVec& R = *c.reeb;
  for (const EdgeFrame& f : sec.frames) {
    RatVec vertex = to_rat(f.mu);
    for (Rat& q : vertex) q /= f.reeb_pairing;
    sec.vertices.push_back(std::move(vertex));

    std::vector<RatVec> rows;
    rows.push_back(R);
    for (const IntVec& v : f.normals) rows.push_back(to_rat(v));
    std::vector<RatVec> inv = inverse_rational(rows);
    std::vector<RatVec> dirs;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      RatVec eta(rows.size());
      for (std::size_t k = 0; k < rows.size(); ++k) eta[k] = inv[k][i];
      dirs.push_back(to_rat(primitive_scaled(eta)));
    }
    sec.vertex_edges.push_back(std::move(dirs));
  }
  return sec;
}

struct DelzantFacet {
  IntVec normal;  // primitive inward normal u_j of the base polytope
  Int offset;     // facet is <x, u_j> >= -c_j
};

// Cone over an integral simple polytope: facet (u_j, c_j) lifts to the
// normal (u_j, c_j) in one dimension up; the Reeb vector defaults to e_{n+1}.
inline MomentCone cone_over_polytope(const std::vector<DelzantFacet>& facets) {
  if (facets.empty()) throw std::invalid_argument("cone_over_polytope: no facets");
  const int base_dim = static_cast<int>(facets.front().normal.size());
  if (base_dim < 2)
    throw std::invalid_argument("cone_over_polytope: base dimension must be >= 2");
  std::vector<IntVec> normals;
  for (const DelzantFacet& f : facets) {
    if (static_cast<int>(f.normal.size()) != base_dim)
      throw std::invalid_argument("cone_over_polytope: ragged facet normals");
    IntVec lifted = f.normal;
    lifted.push_back(f.offset);
    if (!is_primitive(lifted))
      throw std::invalid_argument("cone_over_polytope: lifted normal " +
                                  detail::format_vec(lifted) + " is not primitive");
    normals.push_back(std::move(lifted));
  }
  RatVec reeb(base_dim + 1, Rat(0));
  reeb.back() = 1;
  return make_cone(base_dim + 1, std::move(normals), reeb);
}

inline MomentCone example_orthant(int dim) {
  if (dim < 2) throw std::invalid_argument("example_orthant: dim >= 2 required");
  std::vector<IntVec> normals;
  for (int i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    normals.push_back(std::move(e));
  }
  RatVec reeb(dim, Rat(1));
  return make_cone(dim, std::move(normals), reeb);
}

// The N^{2n+1}_{k,m} family: normals v_i = e_i + e_{n+1} (i = 1..n-1),
// v_n = -sum_{i=1}^{n-1} e_i + m e_n + e_{n+1}, v_- = k e_n + e_{n+1},
// v_+ = -e_n + e_{n+1}. No Reeb vector is attached; callers supply one.
inline MomentCone example_N(int n, const Int& k, const Int& m) {
  if (n < 2) throw std::invalid_argument("example_N: n >= 2 required");
  if (k < 1) throw std::invalid_argument("example_N: k >= 1 required");
  if (m < 0 || m >= k * n)
    throw std::invalid_argument("example_N: 0 <= m < k*n required");
  const int dim = n + 1;
  std::vector<IntVec> normals;
  for (int i = 0; i < n - 1; ++i) {
    IntVec v(dim, 0);
    v[i] = 1;
    v[dim - 1] = 1;
    normals.push_back(std::move(v));
  }
  IntVec vn(dim, 0);
  for (int i = 0; i < n - 1; ++i) vn[i] = -1;
  vn[n - 1] = m;
  vn[dim - 1] = 1;
  normals.push_back(std::move(vn));
  IntVec vminus(dim, 0);
  vminus[n - 1] = k;
  vminus[dim - 1] = 1;
  normals.push_back(std::move(vminus));
  IntVec vplus(dim, 0);
  vplus[n - 1] = -1;
  vplus[dim - 1] = 1;
  normals.push_back(std::move(vplus));
  MomentCone c = make_cone(dim, std::move(normals), std::nullopt);
  GoodnessReport rep = is_good(c);
  if (!rep.good)
    throw std::logic_error("example_N: generated cone failed the goodness check");
  return c;
}

}  // namespace toric
