#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "forcelab/error.hpp"
#include "forcelab/skeleton.hpp"
#include "forcelab/tree.hpp"

namespace forcelab {

struct Bit {
  std::uint32_t pos = 0;
  std::uint8_t val = 0;
  friend auto operator<=>(const Bit&, const Bit&) = default;
  friend bool operator==(const Bit&, const Bit&) = default;
};

// Finite partial function positions -> {0,1}, sorted by position.
using Label = std::vector<Bit>;

bool label_contains(const Label& big, const Label& small);
bool label_compatible(const Label& a, const Label& b);
Outcome<Label> label_union(const Label& a, const Label& b);
std::optional<std::uint8_t> label_at(const Label& l, std::uint32_t pos);
void label_set(Label& l, std::uint32_t pos, std::uint8_t val);

// A P0 condition: a tree and one label per node (same order as tree.nodes()).
struct Cond0 {
  FlimTree tree;
  std::vector<Label> labels;

  static Cond0 make(FlimTree t, const std::map<Vertex, Label>& ls = {});
  const Label& label(Vertex v) const;
  Label* label_mut(Vertex v);
  bool empty() const { return tree.empty(); }

  friend auto operator<=>(const Cond0&, const Cond0&) = default;
  friend bool operator==(const Cond0&, const Cond0&) = default;
};

Errors validate_cond0(const Skeleton& s, const Cond0& p);

// Union of the labels on the branch below and including v, as tagged positions.
std::vector<std::pair<Vertex, Bit>> branch_union(const Cond0& p, Vertex v);

bool leq0(const Cond0& q, const Cond0& p);
Outcome<Cond0> union0(const Skeleton& s, const Cond0& p, const Cond0& q);
bool compat0(const Skeleton& s, const Cond0& p, const Cond0& q);

Cond0 restrict0_band(const Cond0& p, Level lo, Level hi);
Outcome<Cond0> restrict0_tree(const Cond0& p, const FlimTree& base);
// p restricted along a tree whose maximal points are top-level vertices of t(p)
// that need not share t(p)'s lower indices.
Outcome<Cond0> restrict0_structural(const Cond0& p, const FlimTree& s);

using Pred0 = std::function<bool(const Cond0&)>;

// Graft: look for r in D below q restricted to t(p), adding at most
// max_bits bits at positions < bound, and return q with r's labels on t(p).
Outcome<Cond0> dense_lift_check0(const Skeleton& s, const Cond0& p, const Pred0& in_d, const Cond0& q,
                                 std::uint32_t bound, int max_bits = 4);

}  // namespace forcelab
