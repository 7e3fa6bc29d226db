#include <gtest/gtest.h>

#include "jetres/catalog.hpp"
#include "jetres/fan.hpp"
#include "jetres/newton.hpp"

namespace {

using namespace jetres;
using fan::Cone;
using fan::Fan;
using lattice::e1;
using lattice::e2;
using lattice::e3;
using lattice::Vec3;

Fan octant_around(const Vec3& c) {
  return Fan::from_cones({{e1, e2, c}, {e2, e3, c}, {e3, e1, c}});
}

Fan dual_of(const char* text) {
  return newton::dual_newton_fan(newton::newton_polyhedron(poly::parse(text))).fan;
}

TEST(RegularCone, Examples) {
  EXPECT_TRUE(fan::is_regular_cone({{3, 1, 3}, {3, 1, 4}, e1}));
  EXPECT_TRUE(fan::is_regular_cone({e1, e2, e3}));
  EXPECT_FALSE(fan::is_regular_cone({e1, e2, {1, 1, 2}}));
  EXPECT_TRUE(fan::is_regular_cone({{1, 1, 1}, {1, 1, 2}}));
  EXPECT_FALSE(fan::is_regular_cone({{1, 1, 1}, {1, -1, 1}}));
  EXPECT_FALSE(fan::is_regular_cone({{2, 2, 2}}));
}

TEST(ConeContains, Closed) {
  Cone c{e1, e2, e3};
  EXPECT_TRUE(fan::cone_contains(c, {1, 2, 3}));
  EXPECT_TRUE(fan::cone_contains(c, {1, 0, 0}));
  EXPECT_FALSE(fan::cone_contains({e1, e2, {1, 1, 1}}, {0, 0, 1}));
}

TEST(IsFan, OverlapDetected) {
  Fan f = Fan::from_cones({{e1, e2, e3}, {e1, e2, {1, 1, 1}}});
  auto check = fan::is_fan(f);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.violations.empty());
}

TEST(IsFan, SingleCone) { EXPECT_TRUE(fan::is_fan(Fan::from_cones({{e1, e2, e3}})).ok); }

TEST(CoversOctant, Triangulation) {
  EXPECT_TRUE(fan::covers_octant(octant_around({1, 1, 1})));
  EXPECT_TRUE(fan::covers_octant(Fan::from_cones({{e1, e2, e3}})));
  Fan missing = Fan::from_cones({{e1, e2, {1, 1, 1}}, {e2, e3, {1, 1, 1}}});
  EXPECT_FALSE(fan::covers_octant(missing));
}

TEST(Refines, OctantIsCoarsest) {
  Fan octant = Fan::from_cones({{e1, e2, e3}});
  EXPECT_TRUE(fan::refines(octant_around({1, 1, 1}), octant));
  EXPECT_FALSE(fan::refines(octant, octant_around({1, 1, 1})));
}

TEST(Subdivision, E60Catalog) {
  auto inst = catalog::make_instance("E60", {});
  auto sub = catalog::theorem_subdivision(inst);
  ASSERT_TRUE(sub.ok);
  auto report = fan::verify_regular_subdivision(sub.fan, dual_of("z^3+y^3z+x^2y^2"));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.offending.empty());
}

TEST(Subdivision, A223) {
  auto inst = catalog::make_instance("A_eq", {2, 2, 3, 0});
  auto sub = catalog::theorem_subdivision(inst);
  ASSERT_TRUE(sub.ok);
  auto dual = newton::dual_newton_fan(newton::newton_polyhedron(catalog::equation(inst))).fan;
  EXPECT_TRUE(fan::verify_regular_subdivision(sub.fan, dual).ok());
}

TEST(Subdivision, Det2ConeReported) {
  Fan f = octant_around({1, 1, 2});
  auto report = fan::verify_regular_subdivision(f, Fan::from_cones({{e1, e2, e3}}));
  EXPECT_TRUE(report.is_fan);
  EXPECT_TRUE(report.covers_octant);
  EXPECT_FALSE(report.all_regular);
  EXPECT_EQ(report.offending, (std::vector<int>{0}));
}

TEST(Subdivision, RemovingConeBreaksCoverOnly) {
  auto sub = catalog::theorem_subdivision(catalog::make_instance("E60", {}));
  ASSERT_TRUE(sub.ok);
  Fan f = sub.fan;
  f.cones.pop_back();
  auto report = fan::verify_regular_subdivision(f, dual_of("z^3+y^3z+x^2y^2"));
  EXPECT_FALSE(report.covers_octant);
  EXPECT_TRUE(report.all_regular);
}

TEST(Triangulation, Unimodular) {
  std::vector<Vec3> rays{e1, e2, e3, {1, 1, 1}, {1, 1, 2}, {1, 0, 1}, {0, 1, 1}};
  auto r = fan::unimodular_triangulation({e1, e2, e3}, rays);
  ASSERT_TRUE(r.ok);
  std::vector<Cone> cones;
  for (const auto& t : r.triangles) cones.push_back({t[0], t[1], t[2]});
  Fan f = Fan::from_cones(cones);
  EXPECT_TRUE(fan::is_fan(f).ok);
  EXPECT_TRUE(fan::covers_octant(f));
  for (const auto& c : cones) EXPECT_TRUE(fan::is_regular_cone(c));
}

TEST(Triangulation, ImpossibleWithoutRays) {
  auto r = fan::unimodular_triangulation({e1, e2, {1, 1, 2}}, {e1, e2, {1, 1, 2}});
  EXPECT_FALSE(r.ok);
}

TEST(CyclicOrder, CounterClockwise) {
  auto c = fan::cyclic_order({{0, 1, 1}, e1, e2, {1, 0, 1}});
  ASSERT_EQ(c.size(), 4u);
  const Vec3 inside{2, 2, 2};
  const bool positive = lattice::det(c[0], c[1], inside) > 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    EXPECT_EQ(lattice::det(c[i], c[(i + 1) % c.size()], inside) > 0, positive);
}

}  // namespace
