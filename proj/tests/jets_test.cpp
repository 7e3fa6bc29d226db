#include <gtest/gtest.h>

#include <algorithm>

#include "jetres/catalog.hpp"
#include "jetres/jets.hpp"

namespace {

using namespace jetres;
using jets::Center;
using jets::Status;
using jets::Weight;
using poly::Var;
using poly::VarSet;

Var J(char axis, unsigned i) { return Var::jet(poly::axis_from_char(axis), i); }

const poly::Polynomial& e60() {
  static const auto f = poly::parse("z^3+y^3z+x^2y^2");
  return f;
}

std::set<Weight> weights(const std::vector<jets::ComponentState>& states) {
  std::set<Weight> out;
  for (const auto& s : states)
    if (s.status == Status::monomial) out.insert(jets::weight_vector(s.Z));
  return out;
}

TEST(Center, Parse) {
  EXPECT_EQ(Center::parse("zy").name(), "yz");
  EXPECT_THROW(Center::parse("yy"), std::invalid_argument);
  EXPECT_THROW(Center::parse(""), std::invalid_argument);
  EXPECT_THROW(Center::parse("w"), std::invalid_argument);
}

TEST(WeightVector, Examples) {
  EXPECT_EQ(jets::weight_vector(VarSet{J('x', 0), J('y', 0), J('z', 0), J('z', 1)}), (Weight{1, 1, 2}));
  EXPECT_EQ(jets::weight_vector(VarSet{J('y', 0), J('z', 0)}), (Weight{0, 1, 1}));
  EXPECT_EQ(jets::weight_vector(VarSet{}), (Weight{0, 0, 0}));
  // an isolated higher variable does not raise the weight
  EXPECT_EQ(jets::weight_vector(VarSet{J('y', 0), J('y', 2)}), (Weight{0, 1, 0}));

  jets::ComponentState frozen;
  frozen.status = Status::frozen;
  EXPECT_THROW(jets::weight_vector(frozen), std::invalid_argument);
}

TEST(InitialState, E60Centers) {
  auto s = jets::initial_state(e60(), Center::parse("yz"));
  EXPECT_EQ(s.level, 1u);
  EXPECT_EQ(s.Z, (VarSet{J('y', 0), J('z', 0)}));
  EXPECT_EQ(jets::weight_vector(s), (Weight{0, 1, 1}));

  s = jets::initial_state(e60(), Center::parse("xz"));
  EXPECT_EQ(s.Z, (VarSet{J('x', 0), J('z', 0)}));
  EXPECT_EQ(jets::weight_vector(s), (Weight{1, 0, 1}));
}

TEST(InitialState, Errors) {
  EXPECT_THROW(jets::initial_state(e60(), Center::parse("xy")), jets::CenterNotContained);
  EXPECT_THROW(jets::initial_state(poly::Polynomial(), Center::parse("z")), std::invalid_argument);
}

TEST(InitialState, SmoothSurface) {
  auto s = jets::initial_state(poly::parse("z"), Center::parse("z"));
  EXPECT_EQ(s.level, 0u);
  EXPECT_EQ(s.Z, (VarSet{J('z', 0)}));
}

TEST(Step, MonomialBranching) {
  auto F = poly::substitute_jets(e60(), 8);
  auto source = jets::jets_of(F);

  jets::ComponentState c11;
  c11.level = 1;
  c11.Z = {J('y', 0), J('z', 0)};
  EXPECT_EQ(weights(jets::step(source, c11)), (std::set<Weight>{{1, 1, 1}, {0, 2, 1}}));

  jets::ComponentState c31;
  c31.level = 3;
  c31.Z = {J('x', 0), J('y', 0), J('z', 0), J('z', 1)};
  EXPECT_EQ(weights(jets::step(source, c31)), (std::set<Weight>{{1, 2, 2}, {2, 1, 2}}));
}

TEST(Step, ZeroKeepsState) {
  auto F = poly::substitute_jets(e60(), 8);
  jets::ComponentState c41;
  c41.level = 4;
  c41.Z = {J('x', 0), J('y', 0), J('y', 1), J('z', 0), J('z', 1)};
  auto kids = jets::step(jets::jets_of(F), c41);
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].Z, c41.Z);
  EXPECT_EQ(kids[0].level, 5u);
}

TEST(Step, LazyAndPrecomputedSourcesAgree) {
  auto F = poly::substitute_jets(e60(), 8);
  jets::ComponentState c;
  c.level = 5;
  c.Z = {J('x', 0), J('y', 0), J('y', 1), J('z', 0), J('z', 1)};
  auto a = jets::step(jets::jets_of(F), c);
  auto b = jets::step(jets::jets_of(e60()), c);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].Z, b[i].Z);
    EXPECT_EQ(a[i].E, b[i].E);
  }
}

TEST(Step, RejectsNonMonomial) {
  auto F = poly::substitute_jets(e60(), 3);
  jets::ComponentState s;
  s.status = Status::dashed;
  EXPECT_THROW(jets::step(jets::jets_of(F), s), std::invalid_argument);
}

TEST(Stratify, TwoTermEquation) {
  auto F = poly::substitute_jets(e60(), 8);
  jets::ComponentState c61;
  c61.level = 6;
  c61.Z = {J('x', 0), J('y', 0), J('y', 1), J('z', 0), J('z', 1)};
  c61.status = Status::non_monomial;
  c61.E = {poly::parse("z_2^3+x_1^2y_2^2")};
  auto kids = jets::stratify_nonmonomial(jets::jets_of(F), c61);
  std::vector<VarSet> monomial;
  int dashed = 0;
  for (const auto& k : kids) {
    if (k.status == Status::monomial) monomial.push_back(k.Z);
    if (k.status == Status::dashed) {
      ++dashed;
      EXPECT_EQ(jets::weight_vector(k.Z), (Weight{1, 2, 2}));
    }
  }
  EXPECT_EQ(dashed, 1);
  VarSet a = c61.Z, b = c61.Z;
  a.insert({J('x', 1), J('z', 2)});
  b.insert({J('y', 2), J('z', 2)});
  EXPECT_NE(std::find(monomial.begin(), monomial.end(), a), monomial.end());
  EXPECT_NE(std::find(monomial.begin(), monomial.end(), b), monomial.end());
}

TEST(Stratify, UnsupportedShapeFreezes) {
  auto F = poly::substitute_jets(e60(), 4);
  jets::ComponentState s;
  s.level = 2;
  s.status = Status::non_monomial;
  s.E = {poly::parse("x_1+y_1+z_1")};
  auto kids = jets::stratify_nonmonomial(jets::jets_of(F), s);
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].status, Status::frozen);
}

TEST(SixthJet, ContentIsY1Squared) {
  auto F = poly::substitute_jets(e60(), 6);
  VarSet Z{J('x', 0), J('x', 1), J('y', 0), J('z', 0), J('z', 1), J('z', 2)};
  auto c = poly::monomial_content(poly::reduce_mod_vanishing(F[6], Z));
  EXPECT_EQ(poly::Polynomial::term(1, c.monomial), poly::parse("y_1^2"));
  // the cofactor involves z_3, not z_2
  EXPECT_EQ(c.cofactor, poly::parse("z_3y_1+x_2^2"));
}

TEST(IsEssential, Examples) {
  auto F = poly::substitute_jets(e60(), 8);
  auto source = jets::jets_of(F);
  jets::ComponentState parent;
  parent.level = 1;
  parent.Z = {J('y', 0), J('z', 0)};
  jets::ComponentState c21;
  c21.level = 2;
  c21.Z = {J('x', 0), J('y', 0), J('z', 0)};
  EXPECT_TRUE(jets::is_essential(source, c21, {&parent}, jets::EssentialRule::contact));
  EXPECT_TRUE(
      jets::is_essential(source, c21, {&parent}, jets::EssentialRule::contact_and_weight_change));

  jets::ComponentState c41;
  c41.level = 4;
  c41.Z = {J('x', 0), J('y', 0), J('y', 1), J('z', 0), J('z', 1)};
  jets::ComponentState c51 = c41;
  c51.level = 5;
  EXPECT_FALSE(
      jets::is_essential(source, c51, {&c41}, jets::EssentialRule::contact_and_weight_change));

  jets::ComponentState dashed = c51;
  dashed.status = Status::dashed;
  EXPECT_FALSE(jets::is_essential(source, dashed, {&c41}, jets::EssentialRule::contact));
}

TEST(Explore, E60SecondAxis) {
  auto g = jets::explore(e60(), Center::parse("xz"), 2);
  EXPECT_EQ(g.essential_vectors(), (std::set<Weight>{{1, 0, 1}, {1, 0, 2}}));
}

TEST(Explore, E60ContainsTheoremVectors) {
  auto g = jets::explore(e60(), Center::parse("yz"), 18);
  auto found = g.essential_vectors();
  auto inst = catalog::make_instance("E60", {});
  for (const auto& v : catalog::theorem_vectors(inst)) {
    Weight w{static_cast<std::uint32_t>(v[0]), static_cast<std::uint32_t>(v[1]),
             static_cast<std::uint32_t>(v[2])};
    EXPECT_TRUE(found.count(w)) << jets::to_string(w);
  }
}

TEST(Explore, SmoothChain) {
  auto g = jets::explore(poly::parse("z"), Center::parse("z"), 5);
  EXPECT_EQ(g.essential_vectors(), (std::set<Weight>{{0, 0, 1}}));
  for (const auto& n : g.nodes) EXPECT_LE(n.parents.size(), 1u);
  for (std::size_t m = 0; m < g.levels.size(); ++m) EXPECT_EQ(g.levels[m].size(), 1u);
}

TEST(Explore, NodesVanishBelowTheirLevel) {
  auto f = e60();
  auto F = poly::substitute_jets(f, 12);
  auto g = jets::explore(f, Center::parse("yz"), 11);
  for (const auto& n : g.nodes) {
    if (n.status != Status::monomial) continue;
    for (unsigned i = 0; i <= n.level; ++i)
      EXPECT_TRUE(poly::reduce_mod_vanishing(F[i], n.Z).is_zero()) << "node " << n.id << " F_" << i;
  }
}

TEST(Explore, ParentsOneLevelLower) {
  auto g = jets::explore(e60(), Center::parse("yz"), 18);
  for (const auto& n : g.nodes)
    for (int p : n.parents) EXPECT_EQ(g.nodes[p].level + 1, n.level);
}

TEST(BruteForce, E60LevelFour) {
  auto comps = jets::brute_force_components(e60(), Center::parse("yz"), 4);
  std::vector<VarSet> expected{
      {J('x', 0), J('y', 0), J('y', 1), J('z', 0), J('z', 1)},
      {J('x', 0), J('x', 1), J('y', 0), J('z', 0), J('z', 1)},
      {J('y', 0), J('y', 1), J('y', 2), J('z', 0), J('z', 1)},
  };
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(comps, expected);
}

TEST(BruteForce, LevelOne) {
  auto comps = jets::brute_force_components(e60(), Center::parse("yz"), 1);
  EXPECT_EQ(comps, (std::vector<VarSet>{{J('y', 0), J('z', 0)}}));
  EXPECT_THROW(jets::brute_force_components(e60(), Center::parse("yz"), 7), std::invalid_argument);
}

TEST(Oracle, A112AgreesUpToSix) {
  auto f = catalog::equation(catalog::make_instance("A_eq", {1, 1, 2, 0}));
  for (unsigned m = 1; m <= 6; ++m) {
    auto r = jets::compare_with_oracle(f, Center::parse("yz"), m);
    EXPECT_TRUE(r.equal) << "m = " << m;
  }
}

TEST(Dot, E60HasTwoTermNode) {
  auto g = jets::explore(e60(), Center::parse("yz"), 8);
  auto dot = jets::emit_dot(g);
  EXPECT_EQ(dot.rfind("digraph jets {", 0), 0u);
  EXPECT_NE(dot.find("(1,2,2)\\nz_2^3+x_1^2y_2^2"), std::string::npos);
}

TEST(Dot, EmptyAndChain) {
  EXPECT_EQ(jets::emit_dot(jets::JetGraph{}), "digraph jets {\n}\n");
  auto g = jets::explore(poly::parse("z"), Center::parse("z"), 3);
  auto dot = jets::emit_dot(g);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n3"), std::string::npos);
}

}  // namespace
