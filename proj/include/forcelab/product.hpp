#pragma once

#include <functional>
#include <vector>

#include "forcelab/cond0.hpp"
#include "forcelab/cond1.hpp"

namespace forcelab {

struct ProductCond {
  Cond0 c0;
  Cond1 c1;
  friend auto operator<=>(const ProductCond&, const ProductCond&) = default;
  friend bool operator==(const ProductCond&, const ProductCond&) = default;
};

Errors validate_product(const Skeleton& s, const ProductCond& p);
bool leq(const ProductCond& q, const ProductCond& p);
bool compat(const Skeleton& s, const ProductCond& p, const ProductCond& q);
// Least level l with p restricted to l+1 equal to p (0 for the top element).
Level eta(const ProductCond& p);

// A filter given by finitely many pairwise compatible generators; members are
// the conditions above some generator.
template <class C>
struct FilterGen {
  std::vector<C> gens;
};

using Filter0 = FilterGen<Cond0>;
using Filter1 = FilterGen<Cond1>;
using FilterP = FilterGen<ProductCond>;

bool filter_member(const Filter0& h, const Cond0& p);
bool filter_member(const Filter1& h, const Cond1& p);
bool filter_member(const FilterP& h, const ProductCond& p);

bool filter_valid(const Skeleton& s, const Filter0& h);
bool filter_valid(const Skeleton& s, const Filter1& h);
bool filter_valid(const Skeleton& s, const FilterP& h);

Filter0 filter_restrict0_tree(const Filter0& h, const FlimTree& base);
Filter1 filter_restrict1_cols(const Filter1& h, const std::vector<std::pair<Level, std::uint32_t>>& cols);

// Searches generators and their weakenings (dropping bits and leaves, at most
// `budget` candidates) for a member of D.
bool filter_meets(const Filter0& h, const std::function<bool(const Cond0&)>& in_d, std::size_t budget = 4096);

}  // namespace forcelab
