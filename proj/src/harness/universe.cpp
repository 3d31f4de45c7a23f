#include "forcelab/harness/universe.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forcelab {

std::vector<FlimTree> all_trees(const Skeleton& s, std::size_t max_vertices) {
  std::vector<FlimTree> out;
  out.emplace_back();
  if (max_vertices == 0) return out;
  // Candidate nodes in vertex order; a tree is a subset closed under parents.
  std::vector<Node> cands;
  for (Level l = 1; l < s.size(); ++l)
    for (std::uint32_t i = 0; i < f_lim(s, l); ++i)
      for (std::uint32_t p = 0; p < f_lim(s, static_cast<Level>(l - 1)); ++p) cands.push_back({{l, i}, p});
  std::vector<Node> cur{{{0, 0}, kNoParent}};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    FlimTree t(cur);
    if (validate_tree(s, t).empty()) out.push_back(t);
    if (cur.size() == max_vertices) return;
    for (std::size_t k = from; k < cands.size(); ++k) {
      const Node& n = cands[k];
      if (cur.back().v == n.v) continue;  // one parent per vertex
      if (!t.contains({static_cast<Level>(n.v.level - 1), n.parent})) continue;
      cur.push_back(n);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Cond0> all_labelings(const Skeleton& s, const FlimTree& t, std::uint32_t bound) {
  std::vector<Label> labels;
  // All partial functions [0, bound) -> {0,1}.
  std::uint64_t n = 1;
  for (std::uint32_t z = 0; z < bound; ++z) n *= 3;
  for (std::uint64_t code = 0; code < n; ++code) {
    Label l;
    std::uint64_t c = code;
    for (std::uint32_t z = 0; z < bound; ++z, c /= 3)
      if (c % 3) l.push_back({z, static_cast<std::uint8_t>(c % 3 - 1)});
    labels.push_back(std::move(l));
  }
  std::vector<std::size_t> lab;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (s.labelable(t.nodes()[k].v.level)) lab.push_back(k);
  std::vector<Cond0> out;
  std::vector<std::size_t> digit(lab.size(), 0);
  for (;;) {
    Cond0 c;
    c.tree = t;
    c.labels.resize(t.size());
    for (std::size_t k = 0; k < lab.size(); ++k) c.labels[lab[k]] = labels[digit[k]];
    out.push_back(std::move(c));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == labels.size()) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

std::vector<Cond0> all_cond0(const Skeleton& s, std::uint32_t bound, std::size_t max_vertices) {
  std::vector<Cond0> out;
  for (const auto& t : all_trees(s, max_vertices)) {
    auto ls = all_labelings(s, t, bound);
    for (auto& c : ls)
      if (validate_cond0(s, c).empty()) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<Block> all_blocks(Level l, std::uint32_t rows, std::uint32_t cols) {
  std::vector<Block> out;
  for (std::uint32_t xm = 1; xm < (1u << rows); ++xm)
    for (std::uint32_t ym = 1; ym < (1u << cols); ++ym) {
      std::vector<std::uint32_t> xs, ys;
      for (std::uint32_t x = 0; x < rows; ++x)
        if (xm >> x & 1) xs.push_back(x);
      for (std::uint32_t y = 0; y < cols; ++y)
        if (ym >> y & 1) ys.push_back(y);
      const std::size_t cells = xs.size() * ys.size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << cells); ++bits) {
        std::vector<std::uint8_t> b(cells);
        for (std::size_t k = 0; k < cells; ++k) b[k] = static_cast<std::uint8_t>(bits >> k & 1);
        out.push_back(make_block(l, xs, ys, std::move(b)));
      }
    }
  return out;
}

}  // namespace

std::vector<Cond1> all_cond1(const Skeleton& s, std::uint32_t bound) {
  std::vector<Cond1> out{Cond1{}};
  for (Level l : succ_prime(s)) {
    auto blocks = all_blocks(l, bound, s.f(l));
    std::vector<Cond1> next;
    for (const auto& c : out) {
      next.push_back(c);
      for (const auto& b : blocks) {
        Cond1 d = c;
        d.put(b);
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

// Permutations of [0, n) moving at most k points, identity first.
std::vector<std::vector<std::uint32_t>> perms_moving(std::uint32_t n, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    std::size_t moved = 0;
    for (std::uint32_t i = 0; i < n; ++i) moved += p[i] != i;
    if (moved <= k) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<Aut0> all_aut0(const Skeleton& s, std::size_t max_support) {
  std::vector<Aut0> out{Aut0{}};
  for (Level l = 1; l < s.size(); ++l) {
    auto ps = perms_moving(f_lim(s, l), max_support);
    std::vector<Aut0> next;
    for (const auto& a : out)
      for (const auto& p : ps) {
        Aut0 b = a;
        b.perms.resize(s.size());
        b.perms[l] = p;
        next.push_back(canonical0(b));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Aut0> all_aut0_total(const Skeleton& s, std::size_t max_total) {
  std::vector<std::pair<Aut0, std::size_t>> acc{{Aut0{}, 0}};
  for (Level l = 1; l < s.size(); ++l) {
    auto ps = perms_moving(f_lim(s, l), max_total);
    std::vector<std::pair<Aut0, std::size_t>> next;
    for (const auto& [a, used] : acc)
      for (const auto& p : ps) {
        std::size_t moved = 0;
        for (std::uint32_t i = 0; i < p.size(); ++i) moved += p[i] != i;
        if (used + moved > max_total) continue;
        Aut0 b = a;
        b.perms.resize(s.size());
        b.perms[l] = p;
        next.push_back({canonical0(b), used + moved});
      }
    acc = std::move(next);
  }
  std::vector<Aut0> out;
  for (auto& [a, used] : acc) out.push_back(std::move(a));
  return out;
}

std::vector<Partition> all_partitions(const std::vector<std::uint32_t>& set) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == set.size()) {
      Partition p = cur;
      std::sort(p.begin(), p.end());
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t c = 0; c < cur.size(); ++c) {
      cur[c].push_back(set[k]);
      rec(k + 1);
      cur[c].pop_back();
    }
    cur.push_back({set[k]});
    rec(k + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

namespace {

bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& c : fine) {
    bool inside = false;
    for (const auto& d : coarse)
      if (std::includes(d.begin(), d.end(), c.begin(), c.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

}  // namespace

std::vector<QTree> all_qtrees(const Skeleton& s, Level top, const std::vector<std::uint32_t>& pool,
                              std::size_t max_support) {
  std::vector<QTree> out;
  for (std::uint32_t m = 0; m < (1u << pool.size()); ++m) {
    std::vector<std::uint32_t> supp;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (m >> k & 1) supp.push_back(pool[k]);
    if (supp.size() > max_support) continue;
    std::sort(supp.begin(), supp.end());
    QTree t = empty_qtree(top);
    t.support = supp;
    if (supp.empty()) {
      out.push_back(t);
      continue;
    }
    auto parts = all_partitions(supp);
    std::function<void(Level)> rec = [&](Level l) {
      if (l > top) {
        if (t.parts[top].size() == supp.size()) out.push_back(t);
        return;
      }
      for (const auto& p : parts) {
        if (l == 0 && p.size() != 1) continue;
        if (l > 0 && !refines(p, t.parts[l - 1])) continue;
        if (l > 0 && s.is_limit(l) && p != t.parts[l - 1]) continue;
        t.parts[l] = p;
        rec(static_cast<Level>(l + 1));
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace forcelab
