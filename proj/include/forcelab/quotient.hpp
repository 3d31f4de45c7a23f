#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forcelab/automorphisms.hpp"
#include "forcelab/cond0.hpp"
#include "forcelab/cond1.hpp"
#include "forcelab/names.hpp"

namespace forcelab {

using Cell = std::vector<std::uint32_t>;  // sorted subset of the support
using Partition = std::vector<Cell>;      // cells sorted lexicographically

// Tree below the support points at level `top`, coded by one partition of the
// support per level 0..top.
struct QTree {
  Level top = 0;
  std::vector<std::uint32_t> support;  // sorted
  std::vector<Partition> parts;        // parts.size() == top + 1

  bool empty() const { return support.empty(); }
  std::optional<std::size_t> cell_of(Level l, std::uint32_t i) const;
  friend auto operator<=>(const QTree&, const QTree&) = default;
  friend bool operator==(const QTree&, const QTree&) = default;
};

QTree empty_qtree(Level top);
Errors validate_qtree(const Skeleton& s, const QTree& t);
bool qtree_leq(const QTree& sub, const QTree& sup);
// emb[l][c] is the cell of s containing cell c of t at level l; requires s <= t.
using CellMap = std::vector<std::vector<std::size_t>>;
Outcome<CellMap> qtree_embed(const QTree& t, const QTree& s);
// Builds the partitions induced by tops of a P0 tree (all at level top).
QTree qtree_of(const FlimTree& t, Level top, const std::vector<std::uint32_t>& support);

struct NVal {
  enum Kind : std::uint8_t { Absent, Star, Index };
  Kind kind = Absent;
  std::uint32_t index = 0;
  friend auto operator<=>(const NVal&, const NVal&) = default;
  friend bool operator==(const NVal&, const NVal&) = default;
};

// Indexed quotient condition; labels and n are parallel to qtree.parts.
struct ICond {
  QTree tree;
  std::vector<std::vector<Label>> labels;
  std::vector<std::vector<NVal>> n;
  friend auto operator<=>(const ICond&, const ICond&) = default;
  friend bool operator==(const ICond&, const ICond&) = default;
};

struct SymContext {
  Cond0 r_bar;
  Level top = 0;  // the successor level carrying the support
  std::vector<Vertex> protected_tops;
  std::vector<std::pair<Level, std::uint32_t>> small0_cuts;
  std::vector<std::pair<Level, std::uint32_t>> fix1_cols;
  std::vector<std::pair<Level, std::uint32_t>> small1_cuts;
  std::uint32_t beta_tilde = 0;
  std::uint32_t beta = 0;
};

Errors validate_ctx(const Skeleton& s, const SymContext& ctx);
// Top-level projections of the protected vertices, sorted and unique.
std::vector<std::uint32_t> protected_indices(const SymContext& ctx);
// Largest Small0 cut at a level below top, if any.
std::optional<std::uint32_t> cut_at(const SymContext& ctx, Level l);

Errors validate_icond(const Skeleton& s, const ICond& q, const SymContext& ctx);
bool icond_leq(const ICond& a, const ICond& b);
ICond icond_one(const SymContext& ctx);

// Membership in the dense subforcing below r_bar.
Errors tilde_check(const Skeleton& s, const Cond0& p, const SymContext& ctx);
Outcome<ICond> rho0(const Skeleton& s, const Cond0& p, const SymContext& ctx);
Outcome<Cond0> lift0(const Skeleton& s, const Cond0& p, const ICond& q, const SymContext& ctx);

// Keeps levels <= max_level and columns below beta.
Cond1 rho1(const Cond1& p, Level max_level, std::uint32_t beta);
bool in_rho1_target(const Cond1& p, Level max_level, std::uint32_t beta);
// s <= p with rho1(s) <= q; cells outside both are filled with 0.
Outcome<Cond1> lift1(const Cond1& p, const Cond1& q, Level max_level, std::uint32_t beta);

// Canonical isomorphism between the restrictions to two trees whose
// projected trees coincide.
struct TqqIso {
  FlimTree from;
  FlimTree to;
};
Outcome<TqqIso> iso_tqq(const Skeleton& s, const Cond0& q0, const Cond0& q1, const SymContext& ctx);
Outcome<Cond0> apply_tqq(const TqqIso& iso, const Cond0& p);
Outcome<PName> transport_name_tqq(const PName& x, const TqqIso& iso);

// Restricted product P0|t(s) x P1|cols x P1(top).
struct RestrictedProduct {
  FlimTree s_tree;
  std::vector<std::pair<Level, std::uint32_t>> cols;  // sorted
  Level top = 0;
};
Errors in_restricted(const ProductCond& v, const RestrictedProduct& d);
Outcome<ProductCond> tpi_cond(const AutPair& pi, const ProductCond& v, const RestrictedProduct& d);
RestrictedProduct tpi_data(const AutPair& pi, const RestrictedProduct& d);
Outcome<PName> transport_tpi(const PName& x, const AutPair& pi, const RestrictedProduct& d);
// Widens every P1 part to all columns of its levels below top that are not in
// cols (column indices < min(F, bound)), with every filling.
PName tilde_extend(const Skeleton& s, const PName& x, const RestrictedProduct& d,
                   std::uint32_t bound = UINT32_MAX);

struct MTuple {
  Cond0 cond;
  std::vector<std::pair<Level, std::uint32_t>> columns;  // sorted
  friend auto operator<=>(const MTuple&, const MTuple&) = default;
  friend bool operator==(const MTuple&, const MTuple&) = default;
};

// The bounded M_beta universe in a fixed lexicographic order; tuples are
// addressed by rank without materializing the whole stream.
class MBetaSpace {
 public:
  MBetaSpace(const Skeleton& s, Level kappa, std::uint32_t beta, std::uint32_t bound);
  std::uint64_t size() const { return prefix_.empty() ? 0 : prefix_.back(); }
  MTuple at(std::uint64_t rank) const;
  std::optional<std::uint64_t> rank(const MTuple& m) const;
  std::vector<MTuple> page(std::uint64_t offset, std::uint64_t limit) const;
  const std::vector<std::pair<Level, std::uint32_t>>& column_universe() const { return cols_; }

 private:
  std::uint32_t bound_;
  std::vector<FlimTree> trees_;
  std::vector<std::vector<Vertex>> labelable_;
  std::vector<std::pair<Level, std::uint32_t>> cols_;
  std::vector<std::uint64_t> prefix_;  // prefix_[k] = tuples in trees_[0..k]
  std::uint64_t per_label_ = 0;        // 3^bound label choices per vertex
};

std::vector<MTuple> enum_m_beta(const Skeleton& s, Level kappa, std::uint32_t beta, std::uint32_t bound,
                                std::uint64_t offset = 0, std::uint64_t limit = UINT64_MAX);
std::optional<std::uint64_t> mtuple_rank(const MBetaSpace& space, const MTuple& m);

}  // namespace forcelab
