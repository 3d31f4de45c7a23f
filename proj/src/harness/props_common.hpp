#pragma once

// Shared plumbing for the property implementations (not installed).

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "forcelab/harness/generators.hpp"
#include "forcelab/harness/registry.hpp"
#include "forcelab/harness/universe.hpp"

namespace forcelab::props {

using io::encode;
using io::json;

using ExFn = std::function<CaseResult(std::uint64_t)>;
using SaFn = std::function<CaseResult(std::uint64_t, std::uint64_t)>;

class FnChecker : public Checker {
 public:
  FnChecker(std::uint64_t n, ExFn ex, SaFn sa) : n_(n), ex_(std::move(ex)), sa_(std::move(sa)) {}
  std::uint64_t exhaustive_size() const override { return n_; }
  CaseResult exhaustive(std::uint64_t index) const override {
    return ex_ ? ex_(index) : CaseResult::skip("no exhaustive mode");
  }
  CaseResult sampled(std::uint64_t serial, std::uint64_t seed) const override { return sa_(serial, seed); }

 private:
  std::uint64_t n_;
  ExFn ex_;
  SaFn sa_;
};

inline std::unique_ptr<Checker> checker(std::uint64_t n, ExFn ex, SaFn sa) {
  return std::make_unique<FnChecker>(n, std::move(ex), std::move(sa));
}

// Tree definition re-checked from scratch: root (0,0), one predecessor per
// vertex present in the tree, indices in range, no two vertices at a limit
// level over the same predecessor.
std::vector<std::string> tree_recheck(const Skeleton& s, const FlimTree& t);

// down[j] has bit i set iff u[i] <= u[j].
struct OrderIndex {
  std::size_t n = 0;
  std::vector<std::vector<std::uint64_t>> down;
  bool le(std::size_t i, std::size_t j) const { return (down[j][i / 64] >> (i % 64)) & 1u; }
  std::vector<std::size_t> below(std::size_t j) const;
  std::vector<std::size_t> common_below(std::size_t a, std::size_t b) const;
  bool subset(std::size_t a, std::size_t b) const;  // down[a] within down[b]
  // Common lower bounds of a and b: none at all / all below c.
  bool meet_empty(std::size_t a, std::size_t b) const {
    for (std::size_t w = 0; w < down[a].size(); ++w)
      if (down[a][w] & down[b][w]) return false;
    return true;
  }
  bool meet_within(std::size_t a, std::size_t b, std::size_t c) const {
    for (std::size_t w = 0; w < down[a].size(); ++w)
      if (down[a][w] & down[b][w] & ~down[c][w]) return false;
    return true;
  }
};

template <class T, class Leq>
OrderIndex build_order(const std::vector<T>& u, Leq leq) {
  OrderIndex ix;
  ix.n = u.size();
  const std::size_t words = (u.size() + 63) / 64;
  ix.down.assign(u.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t i = 0; i < u.size(); ++i)
      if (leq(u[i], u[j])) ix.down[j][i / 64] |= std::uint64_t(1) << (i % 64);
  return ix;
}

std::string show(const Cond0& p);
std::string show(const Cond1& p);

// The Succ' column set {(l, y) : y < F(l)} restricted to y < limit.
std::vector<std::pair<Level, std::uint32_t>> all_columns(const Skeleton& s, std::uint32_t limit);

// A random member of the intersection of spec, built generator by generator
// (no rejection), with P1 rows below bound.
AutPair member_of(const Skeleton& s, const GroupSpec& spec, Rng& rng, std::uint32_t bound);

void add_conditions(std::vector<PropertyInfo>& out);
void add_automorphisms(std::vector<PropertyInfo>& out);
void add_names(std::vector<PropertyInfo>& out);
void add_quotient(std::vector<PropertyInfo>& out);

}  // namespace forcelab::props
