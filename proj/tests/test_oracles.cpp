// Universe sizes on SKEL-A, recounted here by brute force that shares no
// code with the enumerators, plus the frozen values those counts produce.

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "forcelab/harness/universe.hpp"

using namespace forcelab;

namespace {

// F_lim and labelability of SKEL-A, written out by hand.
const std::vector<std::uint32_t> kFlim{1, 2, 2, 3, 3};
const std::vector<bool> kLabelable{false, true, true, false, true};
constexpr std::size_t kLimitLevel = 3;

// Every vertex either absent or attached to some index one level down.
// Returns the multiset of labelable-vertex counts over all valid trees with
// at most max_vertices vertices (including the empty tree).
std::vector<std::size_t> brute_trees(std::size_t max_vertices) {
  std::vector<std::pair<std::size_t, std::uint32_t>> slots;  // (level, index), level >= 1
  for (std::size_t l = 1; l < kFlim.size(); ++l)
    for (std::uint32_t i = 0; i < kFlim[l]; ++i) slots.push_back({l, i});
  std::vector<std::size_t> out{0};  // the empty tree
  std::vector<int> parent(slots.size(), -1);  // -1 absent, else parent index
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == slots.size()) {
      std::size_t n = 1, lab = 0;
      std::set<std::pair<std::size_t, std::uint32_t>> present{{0, 0}};
      for (std::size_t j = 0; j < slots.size(); ++j)
        if (parent[j] >= 0) present.insert(slots[j]);
      std::set<int> limit_parents;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        if (parent[j] < 0) continue;
        auto [l, i] = slots[j];
        if (!present.count({l - 1, static_cast<std::uint32_t>(parent[j])})) return;
        if (l == kLimitLevel && !limit_parents.insert(parent[j]).second) return;
        ++n;
        lab += kLabelable[l];
      }
      if (n <= max_vertices) out.push_back(lab);
      return;
    }
    auto [l, i] = slots[k];
    for (int p = -1; p < static_cast<int>(kFlim[l - 1]); ++p) {
      parent[k] = p;
      go(k + 1);
    }
    parent[k] = -1;
  };
  go(0);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Nonempty subsets of [0, n) by size.
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Blocks with rows in [0, B), columns in [0, F), plus the absent block.
std::uint64_t block_options(std::uint64_t bound, std::uint64_t f) {
  std::uint64_t total = 1;
  for (std::uint64_t x = 1; x <= bound; ++x)
    for (std::uint64_t y = 1; y <= f; ++y) total += choose(bound, x) * choose(f, y) * ipow(2, x * y);
  return total;
}

}  // namespace

TEST(Oracle, TreeCountsMatchBruteForce) {
  const Skeleton s = skel_a();
  for (std::size_t v = 1; v <= 5; ++v) EXPECT_EQ(all_trees(s, v).size(), brute_trees(v).size()) << "v=" << v;
  EXPECT_EQ(all_trees(s, 5).size(), 91u);
}

TEST(Oracle, Cond0CountIsSumOfLabelings) {
  // With B=1 a labelable vertex carries {}, {0:0} or {0:1}; with B=2 nine labels.
  const Skeleton s = skel_a();
  for (std::uint32_t b : {1u, 2u}) {
    std::uint64_t per_vertex = ipow(3, b);
    std::uint64_t expect = 0;
    for (std::size_t lab : brute_trees(4)) expect += ipow(per_vertex, lab);
    EXPECT_EQ(all_cond0(s, b, 4).size(), expect) << "B=" << b;
  }
  EXPECT_EQ(all_cond0(s, 1, 5).size(), 2267u);
}

TEST(Oracle, Cond1CountIsProductOverSuccPrime) {
  const Skeleton s = skel_a();
  EXPECT_EQ(succ_prime(s), (std::vector<Level>{2, 4}));
  for (std::uint32_t b : {1u, 2u})
    EXPECT_EQ(all_cond1(s, b).size(), block_options(b, 2) * block_options(b, 3)) << "B=" << b;
  EXPECT_EQ(all_cond1(s, 1).size(), 243u);
}

TEST(Oracle, Aut0CountsPerLevel) {
  // Per level: identity plus every transposition of [0, F_lim).
  const Skeleton s = skel_a();
  std::uint64_t expect = 1;
  for (std::size_t l = 1; l < kFlim.size(); ++l) expect *= 1 + choose(kFlim[l], 2);
  EXPECT_EQ(all_aut0(s, 2).size(), expect);
  EXPECT_EQ(expect, 64u);
  // Support at most 3 per level adds the 3-cycles on the F=3 levels.
  std::uint64_t expect3 = 1;
  for (std::size_t l = 1; l < kFlim.size(); ++l) {
    std::uint64_t n = kFlim[l];
    expect3 *= 1 + choose(n, 2) + (n >= 3 ? 2 * choose(n, 3) : 0);
  }
  EXPECT_EQ(all_aut0(s, 3).size(), expect3);
  EXPECT_EQ(expect3, 144u);
}

TEST(Oracle, QTreeCountIsRefiningChainsWithoutLimitSplits) {
  // Supports of size k from {0,1,2}; chains P1 >= P2 (= P3 at the limit level)
  // of partitions: 1 for k<=1, 3 for k=2, 12 for k=3.
  const Skeleton s = skel_a();
  std::uint64_t expect = 1 + 3 * 1 + 3 * 3 + 1 * 12;
  EXPECT_EQ(all_qtrees(s, 4, {0, 1, 2}, 3).size(), expect);
  EXPECT_EQ(expect, 25u);
}

TEST(Oracle, PartitionsAreBellNumbers) {
  EXPECT_EQ(all_partitions({}).size(), 1u);
  EXPECT_EQ(all_partitions({7}).size(), 1u);
  EXPECT_EQ(all_partitions({0, 1, 2}).size(), 5u);
  EXPECT_EQ(all_partitions({0, 1, 2, 3}).size(), 15u);
  EXPECT_EQ(all_partitions({0, 1, 2, 3, 4}).size(), 52u);
}

TEST(Oracle, UniversesAreDuplicateFreeAndValid) {
  const Skeleton s = skel_a();
  auto ts = all_trees(s, 5);
  EXPECT_TRUE(ts.front().empty());
  EXPECT_EQ(std::set<FlimTree>(ts.begin(), ts.end()).size(), ts.size());
  for (const auto& t : ts) EXPECT_TRUE(validate_tree(s, t).empty());
  for (const auto& p : all_cond0(s, 1, 4)) EXPECT_TRUE(validate_cond0(s, p).empty());
  for (const auto& p : all_cond1(s, 1)) EXPECT_TRUE(validate_cond1(s, p).empty());
  for (const auto& a : all_aut0(s, 3)) EXPECT_TRUE(valid_aut0(s, a));
}
