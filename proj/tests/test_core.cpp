// Hand-worked examples for each module.

#include <gtest/gtest.h>

#include "forcelab/automorphisms.hpp"
#include "forcelab/names.hpp"
#include "forcelab/product.hpp"
#include "forcelab/quotient.hpp"

using namespace forcelab;

namespace {

bool has_code(const Errors& es, Code c) {
  for (const auto& e : es)
    if (e.code == c) return true;
  return false;
}

FlimTree tree_of(std::vector<Node> ns) { return FlimTree(std::move(ns)); }

}  // namespace

TEST(Skeleton, BuiltinsValidate) {
  EXPECT_TRUE(validate_skeleton(skel_a()).empty());
  EXPECT_TRUE(validate_skeleton(skel_h()).empty());
}

TEST(Skeleton, FlimAndSuccPrime) {
  const Skeleton a = skel_a();
  std::vector<std::uint32_t> fl;
  for (Level l = 0; l < a.size(); ++l) fl.push_back(f_lim(a, l));
  EXPECT_EQ(fl, (std::vector<std::uint32_t>{1, 2, 2, 3, 3}));
  EXPECT_EQ(succ_prime(a), (std::vector<Level>{2, 4}));
  EXPECT_EQ(succ_prime(skel_h()), (std::vector<Level>{2}));
  EXPECT_EQ(limit_below(a, 4), std::optional<Level>(3));
  EXPECT_EQ(limit_below(a, 2), std::nullopt);
}

TEST(Skeleton, DecreasingFRejected) {
  Skeleton s = skel_a();
  s.levels[4].f = 2;
  s.levels[3].f = 5;
  EXPECT_TRUE(has_code(validate_skeleton(s), Code::NonMonotoneF));
}

TEST(Tree, ChainIsValidAndOrdered) {
  const Skeleton s = skel_a();
  FlimTree t = FlimTree::chain({1, 0, 2, 2});
  EXPECT_TRUE(validate_tree(s, t).empty());
  EXPECT_EQ(height(t), 4);
  EXPECT_EQ(max_points(t), (std::vector<Vertex>{{4, 2}}));
  EXPECT_EQ(pred_at(t, {4, 2}, 1), std::optional<Vertex>(Vertex{1, 1}));
  EXPECT_EQ(branch(t, {2, 0}).size(), 3u);
}

TEST(Tree, SplitAtLimitLevelRejected) {
  const Skeleton s = skel_a();
  FlimTree t = tree_of({{{0, 0}}, {{1, 0}, 0}, {{2, 0}, 0}, {{3, 0}, 0}, {{3, 1}, 0}});
  EXPECT_TRUE(has_code(validate_tree(s, t), Code::LimitSplit));
  // Splitting one level lower is fine.
  FlimTree u = tree_of({{{0, 0}}, {{1, 0}, 0}, {{2, 0}, 0}, {{2, 1}, 0}, {{3, 0}, 0}, {{3, 1}, 1}});
  EXPECT_TRUE(validate_tree(s, u).empty());
}

TEST(Tree, MissingPredecessorAndRange) {
  const Skeleton s = skel_a();
  EXPECT_TRUE(has_code(validate_tree(s, tree_of({{{0, 0}}, {{2, 0}, 0}})), Code::MissingPredecessor));
  EXPECT_TRUE(has_code(validate_tree(s, tree_of({{{0, 0}}, {{1, 2}, 0}})), Code::IndexOutOfRange));
}

TEST(Tree, UnionAndOrder) {
  const Skeleton s = skel_a();
  FlimTree a = FlimTree::chain({0, 0});
  FlimTree b = FlimTree::chain({0, 1});
  auto u = tree_union(s, a, b);
  ASSERT_TRUE(u.ok());
  EXPECT_EQ(u->size(), 4u);
  EXPECT_TRUE(tree_leq(*u, a));
  EXPECT_TRUE(tree_leq(*u, b));
  EXPECT_FALSE(tree_leq(a, *u));
  // Same vertex under different predecessors cannot be joined.
  EXPECT_FALSE(tree_union(s, FlimTree::chain({0, 0}), FlimTree::chain({1, 0})).ok());
  // Two branches meeting only at the limit level would split there.
  EXPECT_FALSE(tree_union(s, FlimTree::chain({0, 0, 0}), FlimTree::chain({0, 0, 1})).ok());
}

TEST(Cond0, LabelsOrderAndUnion) {
  const Skeleton s = skel_a();
  FlimTree t = FlimTree::chain({0, 0});
  Cond0 p = Cond0::make(t, {{Vertex{1, 0}, Label{{0, 1}}}});
  Cond0 q = Cond0::make(t, {{Vertex{1, 0}, Label{{0, 1}, {1, 0}}}});
  Cond0 r = Cond0::make(t, {{Vertex{1, 0}, Label{{0, 0}}}});
  EXPECT_TRUE(validate_cond0(s, q).empty());
  EXPECT_TRUE(leq0(q, p));
  EXPECT_FALSE(leq0(p, q));
  EXPECT_TRUE(leq0(p, Cond0{}));
  EXPECT_FALSE(compat0(s, p, r));
  auto u = union0(s, p, Cond0::make(t, {{Vertex{2, 0}, Label{{1, 1}}}}));
  ASSERT_TRUE(u.ok());
  EXPECT_EQ(u->label({2, 0}), (Label{{1, 1}}));
  EXPECT_EQ(u->label({1, 0}), (Label{{0, 1}}));
}

TEST(Cond0, LabelAtLimitRejected) {
  const Skeleton s = skel_a();
  Cond0 p = Cond0::make(FlimTree::chain({0, 0, 0}), {{Vertex{3, 0}, Label{{0, 1}}}});
  EXPECT_TRUE(has_code(validate_cond0(s, p), Code::NonemptyLimitLabel));
}

TEST(Cond1, RectanglesOrderAndClosure) {
  const Skeleton s = skel_a();
  Cond1 p, q, r;
  p.put(make_block(2, {0}, {0, 1}, {1, 0}));
  q.put(make_block(2, {0, 1}, {0, 1}, {1, 0, 0, 0}));
  r.put(make_block(2, {1}, {0}, {1}));
  EXPECT_TRUE(validate_cond1(s, q).empty());
  EXPECT_TRUE(leq1(q, p));
  EXPECT_FALSE(leq1(p, q));
  EXPECT_TRUE(compat1(p, r));
  // The closure of rows {0,1} and columns {0,1} leaves (1,1) unset.
  auto u = union1(p, r);
  ASSERT_FALSE(u.ok());
  EXPECT_EQ(u.error().code, Code::FreeCells);
  Cond1 bad;
  bad.put(make_block(3, {0}, {0}, {1}));
  EXPECT_FALSE(validate_cond1(s, bad).empty());
}

TEST(Automorphisms, TranspositionMovesBranches) {
  const Skeleton s = skel_a();
  Aut0 t = transposition0(s, 2, 0, 1);
  EXPECT_TRUE(valid_aut0(s, t));
  EXPECT_EQ(apply0(t, FlimTree::chain({1, 0, 2})), FlimTree::chain({1, 1, 2}));
  EXPECT_EQ(canonical0(compose0(t, t)), canonical0(identity0()));
  Aut0 c = compose0(transposition0(s, 4, 0, 1), transposition0(s, 4, 1, 2));
  EXPECT_EQ(canonical0(compose0(c, invert0(c))), canonical0(identity0()));
}

TEST(Automorphisms, SmallnessAndFix) {
  const Skeleton s = skel_h();
  EXPECT_TRUE(is_small0(transposition0(s, 4, 0, 3), 4));
  EXPECT_FALSE(is_small0(transposition0(s, 4, 3, 4), 4));
  SubgroupGen fix{GenKind::Fix0, 2, 5};
  EXPECT_TRUE(in_subgroup(transposition0(s, 2, 0, 1), fix, 4));
  EXPECT_FALSE(in_subgroup(transposition0(s, 2, 5, 1), fix, 4));
}

TEST(Quotient, Rho1KeepsColumnsBelowCut) {
  Cond1 p;
  p.put(make_block(2, {0}, {0, 1}, {1, 0}));
  p.put(make_block(4, {0}, {0, 2}, {0, 1}));
  Cond1 got = rho1(p, 3, 1);
  Cond1 want;
  want.put(make_block(2, {0}, {0}, {1}));
  EXPECT_EQ(got, want);
  EXPECT_TRUE(in_rho1_target(got, 3, 1));
  EXPECT_FALSE(in_rho1_target(p, 3, 1));
  EXPECT_EQ(rho1(got, 3, 1), got);
}

TEST(Names, BranchNameEvaluatesToSetBits) {
  const Skeleton s = skel_a();
  PName x = g0_branch(s, 2, 0, 2);
  FilterP h;
  ProductCond g;
  g.c0 = Cond0::make(FlimTree::chain({0, 0}), {{Vertex{1, 0}, Label{{0, 1}, {1, 0}}}, {Vertex{2, 0}, Label{{1, 1}}}});
  h.gens.push_back(g);
  Value v = val(x, h);
  ASSERT_EQ(v.elems.size(), 2u);
  EXPECT_EQ(v.elems[0].atom, std::optional<Atom>(tagged(1, 0)));
  EXPECT_EQ(v.elems[1].atom, std::optional<Atom>(tagged(2, 1)));
  // A branch through index 1 at level 2 evaluates to nothing.
  h.gens[0].c0 = Cond0::make(FlimTree::chain({0, 1}), {{Vertex{2, 1}, Label{{0, 1}}}});
  EXPECT_TRUE(val(x, h).elems.empty());
}

TEST(Names, CheckNameIsFixedByEverything) {
  const Skeleton s = skel_a();
  PName x = check_name({tagged(1, 0), tagged(2, 3)});
  AutPair pi{transposition0(s, 1, 0, 1), identity1()};
  auto y = act(pi, x);
  ASSERT_TRUE(y.ok());
  EXPECT_EQ(*y, x);
}
