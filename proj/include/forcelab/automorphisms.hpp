#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "forcelab/cond0.hpp"
#include "forcelab/cond1.hpp"
#include "forcelab/product.hpp"

namespace forcelab {

// Per-level permutations of {0..f_lim-1}; an empty entry is the identity.
struct Aut0 {
  std::vector<std::vector<std::uint32_t>> perms;

  std::uint32_t at(Level l, std::uint32_t i) const {
    return l < perms.size() && !perms[l].empty() ? perms[l][i] : i;
  }
  std::vector<std::uint32_t> support(Level l) const;
  bool is_identity() const;
  int height() const;  // highest level with nontrivial support, -1 if none

  friend bool operator==(const Aut0& a, const Aut0& b);
};

Aut0 identity0();
Aut0 transposition0(const Skeleton& s, Level l, std::uint32_t a, std::uint32_t b);
// Trims trailing identity levels and identity arrays.
Aut0 canonical0(const Aut0& a);
bool valid_aut0(const Skeleton& s, const Aut0& a);

FlimTree apply0(const Aut0& pi, const FlimTree& t);
Cond0 apply0(const Aut0& pi, const Cond0& p);
Aut0 compose0(const Aut0& sigma, const Aut0& pi);  // sigma after pi
Aut0 invert0(const Aut0& pi);

// One level of a partial P1 automorphism. Index lines are the columns of a
// block (fixed index, all positions).
struct Aut1Level {
  Level level = 0;
  std::vector<std::uint32_t> supp;   // sorted
  std::vector<std::uint32_t> f;      // f[k] is the image of supp[k]
  std::vector<std::uint32_t> dom_x;  // sorted
  std::vector<std::uint32_t> dom_y;  // sorted, contains supp
  std::vector<std::uint8_t> flips;   // |dom_x| x |dom_y| row-major; 0 on supp lines
  // colmaps[x] permutes masks over supp (bit k = value on line supp[k]).
  std::vector<std::vector<std::uint32_t>> colmaps;

  friend auto operator<=>(const Aut1Level&, const Aut1Level&) = default;
  friend bool operator==(const Aut1Level&, const Aut1Level&) = default;
};

struct Aut1 {
  std::vector<Aut1Level> levels;  // sorted by level
  const Aut1Level* find(Level l) const;
  friend auto operator<=>(const Aut1&, const Aut1&) = default;
  friend bool operator==(const Aut1&, const Aut1&) = default;
};

Errors validate_aut1(const Skeleton& s, const Aut1& pi);
bool dpi(const Aut1& pi, const Cond1& p);
Outcome<Cond1> apply1(const Aut1& pi, const Cond1& p);
Aut1 compose1(const Aut1& sigma, const Aut1& pi);  // sigma after pi, on D_sigma and D_pi
Aut1 invert1(const Aut1& pi);
Aut1 normalize_supp(const Aut1& pi);
Aut1 identity1();
// Pads supp at one level with an extra index of dom_y acting by its flips.
Aut1 pad_supp(const Aut1& pi, Level l, std::uint32_t extra);
bool fixes_column(const Aut1& pi, Level l, std::uint32_t i);

struct AutPair {
  Aut0 a0;
  Aut1 a1;
};
ProductCond apply(const AutPair& pi, const ProductCond& p);  // requires p.c1 in D
AutPair compose(const AutPair& sigma, const AutPair& pi);
AutPair invert(const AutPair& pi);

enum class GenKind : std::uint8_t { Fix0, Small0, Fix1, Small1 };

struct SubgroupGen {
  GenKind kind = GenKind::Fix0;
  Level level = 0;
  std::uint32_t value = 0;  // index for Fix, cut for Small
  friend auto operator<=>(const SubgroupGen&, const SubgroupGen&) = default;
  friend bool operator==(const SubgroupGen&, const SubgroupGen&) = default;
};

using GroupSpec = std::vector<SubgroupGen>;

bool is_small0(const Aut0& pi, std::uint32_t w);
bool small_below(const Aut0& pi, Level l, std::uint32_t cut, std::uint32_t w);
bool in_subgroup(const Aut0& pi, const SubgroupGen& g, std::uint32_t w);
bool in_subgroup(const Aut1& pi, const SubgroupGen& g, std::uint32_t w);
bool in_subgroup(const AutPair& pi, const SubgroupGen& g, std::uint32_t w);
bool in_group(const AutPair& pi, const GroupSpec& spec, std::uint32_t w);
Errors validate_gen(const Skeleton& s, const SubgroupGen& g);

// A GroupSpec whose members sigma all satisfy pi sigma pi^-1 in <g>.
GroupSpec conjugate_witness(const AutPair& pi, const SubgroupGen& g);

// Small automorphism moving p into compatibility with q while fixing
// everything up to floor and every protected vertex.
Outcome<Aut0> homog0(const Skeleton& s, const Cond0& p, const Cond0& q, Level floor, const FlimTree& protected_t);
Aut1 homog1(const Cond1& p, const Cond1& q, Level floor);

struct IndexSwap {
  Level level;
  std::uint32_t from;
  std::uint32_t to;
};
Outcome<Aut0> index_swap_aut0(const Skeleton& s, const std::vector<IndexSwap>& targets, const Cond0& cascade);

struct ColumnSwap {
  Level level;
  std::uint32_t j;
  std::uint32_t j2;
};
struct Rect {
  Level level;
  std::vector<std::uint32_t> xs;
  std::vector<std::uint32_t> ys;
};
Outcome<Aut1> column_swap_aut1(const std::vector<ColumnSwap>& swaps, const std::vector<Rect>& doms);

}  // namespace forcelab
