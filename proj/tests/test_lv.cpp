#include "toric/lv.hpp"

#include <doctest.h>

#include "helpers.hpp"
#include "toric/oracle.hpp"

using namespace toric;
using toric_test::iv;
using toric_test::rv;

namespace {

MomentCone cone_over_square() {
  return cone_over_polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}});
}

}  // namespace

TEST_CASE("polytope decomposition sums on the unit square") {
  PolytopeModel sq = unit_square();
  RatVec xi = rv({1, 2});
  CHECK(lv_sum(sq, xi, RatVec{Rat(1, 2), Rat(1, 2)}) == 1);
  CHECK(lv_sum(sq, xi, rv({2, 0})) == 0);
  CHECK(lv_sum(sq, xi, rv({-1, -1})) == 0);  // +1 -1 -1 +1
  CHECK_THROWS_AS(lv_sum(sq, rv({1, 0}), rv({0, 0})), std::invalid_argument);
}

TEST_CASE("dual decomposition sums on the unit square") {
  PolytopeModel sq = unit_square();
  RatVec xi = rv({1, 2});
  CHECK(lv_dual_sum(sq, xi, RatVec{Rat(1, 2), Rat(1, 2)}) == 1);  // (-1)^2 interior
  CHECK(lv_dual_sum(sq, xi, RatVec{Rat(0), Rat(1, 2)}) == 0);     // boundary
  CHECK(lv_dual_sum(sq, xi, rv({5, 5})) == 0);                    // outside
}

TEST_CASE("both sums reproduce the membership oracles over a box") {
  std::vector<PolytopeModel> corpus{unit_square(), unit_triangle(),
                                    polygon_from_points({{0, 0}, {3, 1}, {2, 3}, {-1, 2}})};
  for (const PolytopeModel& p : corpus) {
    std::vector<oracle::HalfPlane> hs = oracle::polygon_halfplanes(p);
    for (unsigned seed = 0; seed < 3; ++seed) {
      RatVec xi = find_polarizing(p, seed);
      for (long long x = -4; x <= 5; ++x)
        for (long long y = -4; y <= 5; ++y) {
          RatVec q = rv({x, y});
          CHECK(lv_sum(p, xi, q) == (oracle::in_polygon(hs, q) ? 1 : 0));
          CHECK(lv_dual_sum(p, xi, q) == (oracle::in_polygon_interior(hs, q) ? 1 : 0));
        }
    }
  }
}

TEST_CASE("sums are chamber independent") {
  PolytopeModel tri = unit_triangle();
  for (long long x = -3; x <= 4; ++x)
    for (long long y = -3; y <= 4; ++y) {
      RatVec q = rv({x, y});
      int reference = lv_sum(tri, find_polarizing(tri, 0), q);
      int reference_dual = lv_dual_sum(tri, find_polarizing(tri, 0), q);
      for (unsigned seed = 1; seed < 4; ++seed) {
        CHECK(lv_sum(tri, find_polarizing(tri, seed), q) == reference);
        CHECK(lv_dual_sum(tri, find_polarizing(tri, seed), q) == reference_dual);
      }
    }
}

TEST_CASE("cone lift sums with error term on the orthant") {
  MomentCone orth = example_orthant(3);
  RatVec xi = find_polarizing_eps(orth, 0);
  CHECK(cone_S(orth, xi, rv({1, 2, 3})) == 1);
  CHECK(cone_S(orth, xi, rv({-1, -1, -1})) == 1);  // (-1)^2 on -C interior
  CHECK(cone_S(orth, xi, rv({1, -1, 0})) == 0);
  CHECK(cone_S_dual(orth, xi, rv({1, 1, 1})) == 1);
  CHECK(cone_S_dual(orth, xi, rv({0, 0, 0})) == 1);  // apex lies in -C
  CHECK(cone_S_dual(orth, xi, rv({1, 0, 0})) == 0);
}

TEST_CASE("cone lift sums match their stated right-hand sides pointwise") {
  for (MomentCone c : {example_orthant(3), cone_over_square()}) {
    RatVec xi = find_polarizing_eps(c, 1);
    for (long long x = -3; x <= 3; ++x)
      for (long long y = -3; y <= 3; ++y)
        for (long long z = -3; z <= 3; ++z) {
          RatVec q = rv({x, y, z});
          int s_expected = (oracle::in_cone(c, q) ? 1 : 0) +
                           (oracle::in_neg_cone_interior(c, q) ? 1 : 0);
          int sd_expected = (oracle::in_cone_interior(c, q) ? 1 : 0) +
                            (oracle::in_neg_cone(c, q) ? 1 : 0);
          CHECK(cone_S(c, xi, q) == s_expected);
          CHECK(cone_S_dual(c, xi, q) == sd_expected);
        }
  }
}

TEST_CASE("restriction of the lift sum to reeb slices") {
  MomentCone c = cone_over_square();
  std::vector<PolarizedCone> cones = lifted_section_cones(cross_section(c), rv({1, 2, 0}), false);
  // slice height lambda >= 0: dilated polytope; lambda < 0: dilated interior
  for (const Rat& lambda : {Rat(2), Rat(1, 2), Rat(0), Rat(-1, 2), Rat(-2)}) {
    for (long long xs = -6; xs <= 6; ++xs)
      for (long long ys = -6; ys <= 6; ++ys) {
        RatVec q{Rat(xs, 2), Rat(ys, 2), lambda};
        int expected = lambda >= 0 ? (oracle::in_cone(c, q) ? 1 : 0)
                                   : (oracle::in_neg_cone_interior(c, q) ? 1 : 0);
        CHECK(signed_membership(cones, q) == expected);
      }
  }
}

TEST_CASE("generating windows") {
  SUBCASE("square cones count exactly its lattice points") {
    PolytopeModel sq = unit_square();
    IndexSeries s = generating_window(polarized_cones(sq, rv({1, 2})), make_window(2, -2, 3));
    CHECK(s.coefficients.size() == 4);
    for (long long x : {0, 1})
      for (long long y : {0, 1}) CHECK(s.at(iv({x, y})) == 1);
    CHECK(s.at(iv({2, 2})) == 0);
    CHECK(s.at(iv({-1, 0})) == 0);
  }
  SUBCASE("dual lifted orthant cones match the lattice formula support") {
    MomentCone orth = example_orthant(3);
    std::vector<PolarizedCone> cones =
        lifted_section_cones(cross_section(orth), find_polarizing_eps(orth, 0), true);
    IndexSeries s = generating_window(cones, make_window(3, -3, 3));
    for (long long x = -3; x <= 3; ++x)
      for (long long y = -3; y <= 3; ++y)
        for (long long z = -3; z <= 3; ++z) {
          long long expected = (x > 0 && y > 0 && z > 0) ? 1 : 0;
          if (x <= 0 && y <= 0 && z <= 0) expected += 1;
          CHECK(s.at(iv({x, y, z})) == expected);
        }
  }
  SUBCASE("the empty cone list gives the zero series") {
    IndexSeries s = generating_window({}, make_window(2, -2, 2));
    CHECK(s.coefficients.empty());
  }
  SUBCASE("the point cap is enforced") {
    CHECK_THROWS_AS(generating_window({}, make_window(3, -100, 100), 1000), cap_error);
  }
  SUBCASE("empty windows are rejected") {
    CHECK_THROWS_AS(make_window(2, 3, -3), std::invalid_argument);
  }
}
