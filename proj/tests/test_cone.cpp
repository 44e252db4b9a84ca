#include "toric/cone.hpp"

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace toric;
using toric_test::iv;
using toric_test::rv;

namespace {

MomentCone orthant3() { return example_orthant(3); }

MomentCone cone_over_square() {
  return cone_over_polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}});
}

MomentCone cone_over_simplex() {
  return cone_over_polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}});
}

}  // namespace

TEST_CASE("strict convexity is a rank condition on the normals") {
  CHECK(strictly_convex(orthant3()));
  MomentCone halfspace{3, {iv({1, 0, 0}), iv({0, 1, 0})}, std::nullopt};
  CHECK_FALSE(strictly_convex(halfspace));
  CHECK(strictly_convex(cone_over_square()));
}

TEST_CASE("face enumeration") {
  SUBCASE("orthant: three facets and three edges") {
    std::vector<FaceInfo> fs = faces(orthant3());
    int facets = 0, edges_found = 0;
    for (const FaceInfo& f : fs) {
      if (f.dim == 2) ++facets;
      if (f.dim == 1) ++edges_found;
    }
    CHECK(facets == 3);
    CHECK(edges_found == 3);
    CHECK(fs.size() == 6);
  }
  SUBCASE("cone over the square: four facets, four edges, opposite pairs excluded") {
    std::vector<FaceInfo> fs = faces(cone_over_square());
    std::vector<std::vector<int>> edge_sets;
    int facets = 0;
    for (const FaceInfo& f : fs) {
      if (f.dim == 2) ++facets;
      if (f.dim == 1) edge_sets.push_back(f.facets);
    }
    CHECK(facets == 4);
    CHECK(edge_sets.size() == 4);
    CHECK(std::find(edge_sets.begin(), edge_sets.end(), std::vector<int>{0, 2}) == edge_sets.end());
    CHECK(std::find(edge_sets.begin(), edge_sets.end(), std::vector<int>{1, 3}) == edge_sets.end());
  }
  SUBCASE("non-pointed input is rejected") {
    MomentCone halfspace{3, {iv({1, 0, 0}), iv({0, 1, 0})}, std::nullopt};
    CHECK_THROWS_AS(faces(halfspace), std::invalid_argument);
  }
}

TEST_CASE("good-cone checker") {
  SUBCASE("orthant is good") { CHECK(is_good(orthant3()).good); }
  SUBCASE("dim-2 cone with normals (1,0),(-1,2) fails at the apex with divisor 2") {
    MomentCone c = make_cone(2, {iv({1, 0}), iv({-1, 2})}, std::nullopt);
    GoodnessReport rep = is_good(c);
    CHECK_FALSE(rep.good);
    CHECK_FALSE(rep.faces_unimodular);
    bool cited = false;
    for (const std::string& issue : rep.issues)
      if (issue.find("divisor 2") != std::string::npos) cited = true;
    CHECK(cited);
  }
  SUBCASE("N^5 cones are good for the corpus parameters") {
    CHECK(is_good(example_N(2, 1, 0)).good);
    CHECK(is_good(example_N(2, 2, 1)).good);
    CHECK(is_good(example_N(2, 3, 2)).good);
    CHECK(is_good(example_N(3, 1, 0)).good);
  }
  SUBCASE("a dim-3 edge on a non-extendable normal pair is reported") {
    // the edge {v1,v2} along (0,0,1) has normal pair (1,0,0),(1,2,0) with
    // second divisor 2
    MomentCone c = make_cone(3, {iv({1, 0, 0}), iv({1, 2, 0}), iv({0, 0, 1})}, std::nullopt);
    GoodnessReport rep = is_good(c);
    CHECK_FALSE(rep.good);
    CHECK_FALSE(rep.faces_unimodular);
    bool cited = false;
    for (const std::string& issue : rep.issues)
      if (issue.find("divisor 2") != std::string::npos) cited = true;
    CHECK(cited);
  }
  SUBCASE("redundant half-space breaks minimality") {
    // (1,1) is implied by (1,0) and (0,1)
    MomentCone c{2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, std::nullopt};
    GoodnessReport rep = is_good(c);
    CHECK_FALSE(rep.normals_minimal);
    CHECK_FALSE(rep.good);
  }
}

TEST_CASE("reeb admissibility with exact certificates") {
  SUBCASE("orthant with the diagonal") {
    ReebResult r = is_reeb_admissible(orthant3(), rv({1, 1, 1}));
    CHECK(r.admissible);
    REQUIRE(r.certificate.size() == 3);
    for (const Rat& a : r.certificate) CHECK(a > 0);
  }
  SUBCASE("cone over the square with (0,0,1)") {
    MomentCone c = cone_over_square();
    ReebResult r = is_reeb_admissible(c, rv({0, 0, 1}));
    CHECK(r.admissible);
    RatVec combo(3, Rat(0));
    for (std::size_t j = 0; j < c.normals.size(); ++j) {
      CHECK(r.certificate[j] > 0);
      for (int i = 0; i < 3; ++i) combo[i] += r.certificate[j] * Rat(c.normals[j][i]);
    }
    CHECK(combo == rv({0, 0, 1}));
  }
  SUBCASE("a vector outside the positive span is rejected") {
    CHECK_FALSE(is_reeb_admissible(orthant3(), rv({1, 1, -1})).admissible);
  }
}

TEST_CASE("edge frames") {
  SUBCASE("orthant frames are permuted coordinate frames") {
    std::vector<EdgeFrame> fs = edges(orthant3());
    REQUIRE(fs.size() == 3);
    std::vector<IntVec> rays;
    for (const EdgeFrame& f : fs) rays.push_back(f.mu);
    CHECK(std::find(rays.begin(), rays.end(), iv({1, 0, 0})) != rays.end());
    CHECK(std::find(rays.begin(), rays.end(), iv({0, 1, 0})) != rays.end());
    CHECK(std::find(rays.begin(), rays.end(), iv({0, 0, 1})) != rays.end());
  }
  SUBCASE("cone over the square: rays and the {v1,v2} frame") {
    std::vector<EdgeFrame> fs = edges(cone_over_square());
    REQUIRE(fs.size() == 4);
    std::vector<IntVec> rays;
    for (const EdgeFrame& f : fs) rays.push_back(f.mu);
    for (const IntVec& expected :
         {iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})})
      CHECK(std::find(rays.begin(), rays.end(), expected) != rays.end());
    const EdgeFrame& f01 = fs.front();  // facets {0,1}
    REQUIRE(f01.facet_indices == std::vector<int>{0, 1});
    CHECK(f01.mu == iv({0, 0, 1}));
    CHECK(f01.completion == iv({0, 0, 1}));
    CHECK(f01.weights[0] == iv({1, 0, 0}));
    CHECK(f01.weights[1] == iv({0, 1, 0}));
  }
  SUBCASE("frame invariants hold across the corpus") {
    for (MomentCone c : {orthant3(), cone_over_square(), cone_over_simplex()}) {
      for (const EdgeFrame& f : edges(c)) {
        std::vector<IntVec> basis;
        basis.push_back(f.completion);
        for (const IntVec& v : f.normals) basis.push_back(v);
        CHECK(determinant(IntMat(basis)) == 1);
        // full dual pairing matrix is the identity
        std::vector<IntVec> duals;
        duals.push_back(f.mu);
        for (const IntVec& w : f.weights) duals.push_back(w);
        for (std::size_t i = 0; i < basis.size(); ++i)
          for (std::size_t j = 0; j < basis.size(); ++j)
            CHECK(dot(duals[i], basis[j]) == (i == j ? 1 : 0));
        // mu lies in the cone and pairs positively with R
        for (const IntVec& v : c.normals) CHECK(dot(f.mu, v) >= 0);
        CHECK(f.reeb_pairing > 0);
      }
    }
  }
  SUBCASE("missing reeb vector is reported") {
    MomentCone c = cone_over_square();
    c.reeb.reset();
    CHECK_THROWS_AS(edges(c), std::invalid_argument);
  }
}

TEST_CASE("cross-sections") {
  SUBCASE("orthant sections to the standard triangle") {
    SectionPolytope sec = cross_section(orthant3());
    REQUIRE(sec.vertices.size() == 3);
    for (const RatVec& v : sec.vertices) CHECK(dot(v, rv({1, 1, 1})) == 1);
  }
  SUBCASE("cone over the square sections to the unit square at height one") {
    MomentCone c = cone_over_square();
    SectionPolytope sec = cross_section(c);
    REQUIRE(sec.vertices.size() == 4);
    std::vector<RatVec> expected{rv({0, 0, 1}), rv({1, 0, 1}), rv({0, 1, 1}), rv({1, 1, 1})};
    for (const RatVec& v : expected)
      CHECK(std::find(sec.vertices.begin(), sec.vertices.end(), v) != sec.vertices.end());
    // vertex (0,0,1) has edge directions (1,0,0) and (0,1,0)
    std::size_t at = sec.vertices.size();
    for (std::size_t i = 0; i < sec.vertices.size(); ++i)
      if (sec.vertices[i] == rv({0, 0, 1})) at = i;
    REQUIRE(at < sec.vertices.size());
    std::vector<RatVec> dirs = sec.vertex_edges[at];
    std::sort(dirs.begin(), dirs.end());
    CHECK(dirs == std::vector<RatVec>{rv({0, 1, 0}), rv({1, 0, 0})});
  }
  SUBCASE("edge directions pair to zero with R, vertices to one") {
    MomentCone n21 = example_N(2, 2, 1);
    n21.reeb = rv({0, 0, 1});
    for (MomentCone c : {orthant3(), cone_over_square(), cone_over_simplex(), n21}) {
      SectionPolytope sec = cross_section(c);
      CHECK(sec.vertices.size() == edge_rays(c).size());
      for (std::size_t i = 0; i < sec.vertices.size(); ++i) {
        CHECK(dot(sec.vertices[i], *c.reeb) == 1);
        for (const RatVec& eta : sec.vertex_edges[i]) CHECK(dot(eta, *c.reeb) == 0);
      }
    }
  }
}

TEST_CASE("cone over a polytope lifts facet data") {
  MomentCone sq = cone_over_square();
  CHECK(sq.normals ==
        std::vector<IntVec>{iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, 0, 1}), iv({0, -1, 1})});
  CHECK(*sq.reeb == rv({0, 0, 1}));
  MomentCone sx = cone_over_simplex();
  CHECK(sx.normals == std::vector<IntVec>{iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 1})});
  CHECK_THROWS_AS(cone_over_polytope({{iv({2}), Int(0)}}), std::invalid_argument);
}

TEST_CASE("the N family") {
  CHECK(example_N(2, 1, 0).normals ==
        std::vector<IntVec>{iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 1, 1}), iv({0, -1, 1})});
  CHECK(example_N(2, 2, 1).normals ==
        std::vector<IntVec>{iv({1, 0, 1}), iv({-1, 1, 1}), iv({0, 2, 1}), iv({0, -1, 1})});
  CHECK_THROWS_AS(example_N(2, 1, 2), std::invalid_argument);
  CHECK_FALSE(example_N(2, 1, 0).reeb.has_value());
}

TEST_CASE("feasibility kernel handles strict and boundary systems") {
  // x > 0 and x <= 0: infeasible
  std::vector<LinearConstraint> strict_clash{{{Rat(1)}, Rat(0), true}, {{Rat(-1)}, Rat(0), false}};
  CHECK_FALSE(fm_feasible(strict_clash, 1).feasible);
  // x >= 0 and x <= 0: feasible only at 0
  std::vector<LinearConstraint> pinched{{{Rat(1)}, Rat(0), false}, {{Rat(-1)}, Rat(0), false}};
  FeasibilityResult pin = fm_feasible(pinched, 1);
  CHECK(pin.feasible);
  CHECK(pin.point == RatVec{Rat(0)});
  // 2x + y > 3, x <= 1, y <= 1: infeasible over the reals
  std::vector<LinearConstraint> sys{{{Rat(2), Rat(1)}, Rat(3), true},
                                    {{Rat(-1), Rat(0)}, Rat(-1), false},
                                    {{Rat(0), Rat(-1)}, Rat(-1), false}};
  CHECK_FALSE(fm_feasible(sys, 2).feasible);
  // relaxing the strict bound makes the corner feasible
  sys[0].strict = false;
  FeasibilityResult corner = fm_feasible(sys, 2);
  CHECK(corner.feasible);
  CHECK(dot(RatVec{Rat(2), Rat(1)}, corner.point) >= 3);
}

TEST_CASE("is_good reports non-primitive normals on raw cone data") {
  // bypasses make_cone on purpose; the checker must not rely on construction
  MomentCone raw{2, {iv({2, 0}), iv({0, 1})}, std::nullopt};
  GoodnessReport rep = is_good(raw);
  CHECK_FALSE(rep.normals_primitive);
  CHECK_FALSE(rep.good);
}

TEST_CASE("cone construction guards") {
  CHECK_THROWS_AS(make_cone(3, {iv({2, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_cone(3, {iv({1, 0, 0}), iv({-1, 0, 0}), iv({0, 0, 1})}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_cone(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, rv({1, 1, -1})),
                  std::invalid_argument);
}
