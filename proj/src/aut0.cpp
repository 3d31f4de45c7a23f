#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "forcelab/automorphisms.hpp"
#include "forcelab/mutation.hpp"

namespace forcelab {

std::vector<std::uint32_t> Aut0::support(Level l) const {
  std::vector<std::uint32_t> out;
  if (l >= perms.size()) return out;
  for (std::uint32_t i = 0; i < perms[l].size(); ++i)
    if (perms[l][i] != i) out.push_back(i);
  return out;
}

bool Aut0::is_identity() const { return height() < 0; }

int Aut0::height() const {
  for (std::size_t l = perms.size(); l-- > 0;)
    if (!support(static_cast<Level>(l)).empty()) return static_cast<int>(l);
  return -1;
}

bool operator==(const Aut0& a, const Aut0& b) { return canonical0(a).perms == canonical0(b).perms; }

Aut0 identity0() { return {}; }

Aut0 transposition0(const Skeleton& s, Level l, std::uint32_t a, std::uint32_t b) {
  Aut0 out;
  out.perms.resize(l + 1);
  out.perms[l].resize(f_lim(s, l));
  std::iota(out.perms[l].begin(), out.perms[l].end(), 0u);
  std::swap(out.perms[l][a], out.perms[l][b]);
  return canonical0(out);
}

Aut0 canonical0(const Aut0& a) {
  Aut0 out = a;
  for (std::size_t l = 0; l < out.perms.size(); ++l)
    if (a.support(static_cast<Level>(l)).empty()) out.perms[l].clear();
  while (!out.perms.empty() && out.perms.back().empty()) out.perms.pop_back();
  return out;
}

bool valid_aut0(const Skeleton& s, const Aut0& a) {
  if (a.perms.size() > s.size()) return false;
  for (Level l = 0; l < a.perms.size(); ++l) {
    const auto& p = a.perms[l];
    if (p.empty()) continue;
    if (p.size() != f_lim(s, l)) return false;
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
      if (v >= p.size() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

FlimTree apply0(const Aut0& pi, const FlimTree& t) {
  std::vector<Node> out;
  out.reserve(t.size());
  for (const auto& n : t.nodes()) {
    Node m{{n.v.level, pi.at(n.v.level, n.v.index)}, n.parent};
    if (n.parent != kNoParent && n.v.level > 0) m.parent = pi.at(static_cast<Level>(n.v.level - 1), n.parent);
    out.push_back(m);
  }
  return FlimTree(std::move(out));
}

Cond0 apply0(const Aut0& pi, const Cond0& p) {
  std::vector<std::pair<Node, std::size_t>> moved;
  moved.reserve(p.tree.size());
  for (std::size_t k = 0; k < p.tree.size(); ++k) {
    const Node& n = p.tree.nodes()[k];
    Node m{{n.v.level, pi.at(n.v.level, n.v.index)}, n.parent};
    if (n.parent != kNoParent && n.v.level > 0) m.parent = pi.at(static_cast<Level>(n.v.level - 1), n.parent);
    moved.push_back({m, k});
  }
  std::sort(moved.begin(), moved.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Node> nodes;
  Cond0 out;
  nodes.reserve(moved.size());
  out.labels.reserve(moved.size());
  for (const auto& [n, k] : moved) {
    nodes.push_back(n);
    out.labels.push_back(p.labels[k]);
  }
  out.tree = FlimTree(std::move(nodes));
  return out;
}

Aut0 compose0(const Aut0& sigma, const Aut0& pi) {
  Aut0 out;
  std::size_t n = std::max(sigma.perms.size(), pi.perms.size());
  out.perms.resize(n);
  for (Level l = 0; l < n; ++l) {
    std::size_t size = 0;
    if (l < sigma.perms.size()) size = std::max(size, sigma.perms[l].size());
    if (l < pi.perms.size()) size = std::max(size, pi.perms[l].size());
    if (size == 0) continue;
    out.perms[l].resize(size);
    for (std::uint32_t i = 0; i < size; ++i) out.perms[l][i] = sigma.at(l, pi.at(l, i));
  }
  return canonical0(out);
}

Aut0 invert0(const Aut0& pi) {
  Aut0 out = pi;
  for (std::size_t l = 0; l < pi.perms.size(); ++l)
    for (std::uint32_t i = 0; i < pi.perms[l].size(); ++i) out.perms[l][pi.perms[l][i]] = i;
  return out;
}

bool small_below(const Aut0& pi, Level l, std::uint32_t cut, std::uint32_t w) {
  if (l >= pi.perms.size()) return true;
  const auto& p = pi.perms[l];
  for (std::uint32_t i = 0; i < p.size() && i < cut; ++i)
    if (p[i] / w != i / w) return false;
  return true;
}

bool is_small0(const Aut0& pi, std::uint32_t w) {
  for (Level l = 0; l < pi.perms.size(); ++l)
    if (!small_below(pi, l, std::numeric_limits<std::uint32_t>::max(), w)) return false;
  return true;
}

namespace {

struct Homog0Search {
  const Skeleton& s;
  const Cond0& p;
  const Cond0& q;
  Level floor;
  const FlimTree& prot;
  std::uint32_t w;
  std::vector<const Node*> todo;  // p-nodes above floor, sorted
  std::vector<std::uint32_t> image;
  std::vector<std::vector<char>> used;  // per level, indexed by image
  std::optional<Aut0> result;

  std::uint32_t image_of(Vertex v) const {
    if (v.level <= floor) return v.index;
    for (std::size_t k = 0; k < todo.size(); ++k)
      if (todo[k]->v == v) return image[k];
    return v.index;
  }

  bool fits(const Node& n, std::uint32_t j, std::uint32_t parent_img) const {
    Vertex target{n.v.level, j};
    if (const Node* qn = q.tree.find(target)) {
      if (qn->parent != parent_img) return false;
      if (!label_compatible(p.label(n.v), q.label(target))) return false;
    }
    if (s.is_limit(n.v.level)) {
      for (const auto& c : q.tree.at_level(n.v.level))
        if (c.parent == parent_img && c.v.index != j) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> candidates(const Node& n) const {
    const Level l = n.v.level;
    const std::uint32_t i = n.v.index;
    if (prot.contains(n.v)) return {i};
    const std::uint32_t lim = f_lim(s, l);
    const std::uint32_t lo = (i / w) * w;
    const std::uint32_t hi = std::min(lim, lo + w);
    auto fresh = [&](std::uint32_t j) {
      return !p.tree.contains({l, j}) && !q.tree.contains({l, j});
    };
    std::vector<std::uint32_t> out;
    out.reserve(mutated(Mutation::Homog0IgnoreBlocks) ? lim : hi - lo);
    out.push_back(i);
    if (mutated(Mutation::Homog0IgnoreBlocks)) {
      for (std::uint32_t j = 0; j < lim; ++j)
        if ((j < lo || j >= hi) && fresh(j)) out.push_back(j);
    }
    for (std::uint32_t j = lo; j < hi; ++j)
      if (j != i && fresh(j)) out.push_back(j);
    for (std::uint32_t j = lo; j < hi; ++j)
      if (j != i && !fresh(j)) out.push_back(j);
    return out;
  }

  Aut0 build() const {
    Aut0 out;
    out.perms.resize(s.size());
    for (Level l = static_cast<Level>(floor + 1); l < s.size(); ++l) {
      const std::uint32_t lim = f_lim(s, l);
      std::vector<std::int64_t> map(lim, -1);
      std::vector<bool> taken(lim, false);
      bool any = false;
      for (std::size_t k = 0; k < todo.size(); ++k)
        if (todo[k]->v.level == l) {
          map[todo[k]->v.index] = image[k];
          taken[image[k]] = true;
          any = true;
        }
      if (!any) continue;
      // Complete blockwise when that stays small, otherwise across the level.
      bool blockwise = true;
      for (std::uint32_t lo = 0; lo < lim; lo += w) {
        std::uint32_t hi = std::min(lim, lo + w), src = 0, dst = 0;
        for (std::uint32_t j = lo; j < hi; ++j) {
          src += map[j] < 0;
          dst += !taken[j];
        }
        if (src != dst) blockwise = false;
      }
      const std::uint32_t step = blockwise ? w : lim;
      for (std::uint32_t lo = 0; lo < lim; lo += step) {
        std::uint32_t hi = std::min(lim, lo + step);
        std::vector<std::uint32_t> free_t;
        for (std::uint32_t j = lo; j < hi; ++j)
          if (!taken[j]) free_t.push_back(j);
        std::size_t t = 0;
        for (std::uint32_t j = lo; j < hi; ++j)
          if (map[j] < 0) map[j] = free_t[t++];
      }
      out.perms[l].assign(map.begin(), map.end());
    }
    return canonical0(out);
  }

  bool dfs(std::size_t k) {
    if (k == todo.size()) {
      Aut0 pi = build();
      if (!compat0(s, apply0(pi, p), q)) return false;
      result = std::move(pi);
      return true;
    }
    const Node& n = *todo[k];
    const std::uint32_t parent_img = image_of({static_cast<Level>(n.v.level - 1), n.parent});
    for (std::uint32_t j : candidates(n)) {
      if (used[n.v.level][j] || !fits(n, j, parent_img)) continue;
      image[k] = j;
      used[n.v.level][j] = 1;
      if (dfs(k + 1)) return true;
      used[n.v.level][j] = 0;
    }
    return false;
  }
};

}  // namespace

Outcome<Aut0> homog0(const Skeleton& s, const Cond0& p, const Cond0& q, Level floor, const FlimTree& prot) {
  if (!tree_leq(p.tree, prot)) return make_error(Code::Precondition, "protected tree is not part of t(p)");
  std::vector<Node> keep(prot.nodes().begin(), prot.nodes().end());
  for (const auto& n : p.tree.nodes())
    if (n.v.level <= floor && !prot.contains(n.v)) keep.push_back(n);
  auto core = restrict0_tree(p, FlimTree(std::move(keep)));
  if (!core || !compat0(s, core.value(), q))
    return make_error(Code::Precondition, "p and q disagree on the protected part");
  if (compat0(s, p, q)) return identity0();

  Homog0Search search{s, p, q, floor, prot, s.block_width, {}, {}, {}, std::nullopt};
  for (const auto& n : p.tree.nodes())
    if (n.v.level > floor) search.todo.push_back(&n);
  search.image.resize(search.todo.size());
  search.used.resize(s.size());
  for (Level l = 0; l < s.size(); ++l) search.used[l].assign(f_lim(s, l), 0);
  if (search.dfs(0)) return *search.result;
  return make_error(Code::BlockExhausted, "no block-preserving relabeling makes p compatible with q");
}

Outcome<Aut0> index_swap_aut0(const Skeleton& s, const std::vector<IndexSwap>& targets, const Cond0& cascade) {
  Aut0 out;
  out.perms.resize(s.size());
  auto ensure = [&](Level l) {
    if (out.perms[l].empty()) {
      out.perms[l].resize(f_lim(s, l));
      std::iota(out.perms[l].begin(), out.perms[l].end(), 0u);
    }
  };
  std::set<std::pair<Level, std::uint32_t>> touched;
  for (const auto& t : targets) {
    if (t.level >= s.size() || t.from >= f_lim(s, t.level) || t.to >= f_lim(s, t.level))
      return make_error(Code::IndexOutOfRange, "swap target");
    if (t.from == t.to || !touched.insert({t.level, t.from}).second || !touched.insert({t.level, t.to}).second)
      return make_error(Code::Overlap, "swap targets are not pairwise disjoint");
    ensure(t.level);
    std::swap(out.perms[t.level][t.from], out.perms[t.level][t.to]);
  }
  const std::uint32_t w = s.block_width;
  // Cascade: above a swapped level, move the cascade's vertices that sit over
  // a swapped source to fresh indices of the same block.
  std::set<Vertex> moved;
  for (const auto& t : targets) moved.insert({t.level, t.from});
  for (Level l = 1; l < s.size(); ++l) {
    std::vector<std::uint32_t> deltas;
    for (const auto& n : cascade.tree.at_level(l)) {
      if (touched.count({l, n.v.index})) continue;
      bool over = false;
      for (const auto& m : moved)
        if (m.level < l && pred_at(cascade.tree, n.v, m.level) == m) over = true;
      if (over) deltas.push_back(n.v.index);
    }
    if (deltas.empty()) continue;
    ensure(l);
    std::set<std::uint32_t> reserved;
    for (auto d : deltas) {
      std::uint32_t lo = (d / w) * w, hi = std::min(f_lim(s, l), lo + w);
      std::optional<std::uint32_t> pick;
      for (std::uint32_t j = lo; j < hi && !pick; ++j)
        if (!cascade.tree.contains({l, j}) && !reserved.count(j) && out.perms[l][j] == j) pick = j;
      if (!pick) return make_error(Code::BlockExhausted, "no fresh index for the cascade at level " + std::to_string(l));
      reserved.insert(*pick);
      std::swap(out.perms[l][d], out.perms[l][*pick]);
    }
  }
  return canonical0(out);
}

}  // namespace forcelab
