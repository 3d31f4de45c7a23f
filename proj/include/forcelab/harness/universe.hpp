#pragma once

#include <cstdint>
#include <vector>

#include "forcelab/automorphisms.hpp"
#include "forcelab/quotient.hpp"

namespace forcelab {

// Finite universes for the exhaustive regimes, each in a fixed order.

// Every valid tree with at most max_vertices vertices, the empty tree first.
std::vector<FlimTree> all_trees(const Skeleton& s, std::size_t max_vertices);
// Every labeling of a tree with positions below bound.
std::vector<Cond0> all_labelings(const Skeleton& s, const FlimTree& t, std::uint32_t bound);
// all_labelings over all_trees.
std::vector<Cond0> all_cond0(const Skeleton& s, std::uint32_t bound, std::size_t max_vertices = 5);
// Every P1 condition with rows below bound and columns below F.
std::vector<Cond1> all_cond1(const Skeleton& s, std::uint32_t bound);
// Every Aut0 moving at most max_support indices per level.
std::vector<Aut0> all_aut0(const Skeleton& s, std::size_t max_support);
// Aut0 moving at most max_total indices in total.
std::vector<Aut0> all_aut0_total(const Skeleton& s, std::size_t max_total);
// Every quotient tree at `top` whose support is a subset of `pool` of size
// at most max_support.
std::vector<QTree> all_qtrees(const Skeleton& s, Level top, const std::vector<std::uint32_t>& pool, std::size_t max_support);
// Every partition of a sorted set, cells sorted.
std::vector<Partition> all_partitions(const std::vector<std::uint32_t>& set);

}  // namespace forcelab
