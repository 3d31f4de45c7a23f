#include "forcelab/harness/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace forcelab {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t serial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (serial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

std::vector<std::uint32_t> nonempty_subset(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    if (rng.coin()) out.push_back(i);
  if (out.empty() && n > 0) out.push_back(rng.below(n));
  return out;
}

Label random_label(Rng& rng, std::uint32_t bound) {
  Label l;
  for (std::uint32_t z = 0; z < bound; ++z)
    if (rng.coin()) l.push_back({z, static_cast<std::uint8_t>(rng.coin())});
  return l;
}

std::vector<std::uint8_t> random_bits(Rng& rng, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng.coin());
  return out;
}

// Tries to add one random chain (root to a random level) to t.
bool grow(const Skeleton& s, Rng& rng, FlimTree& t) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Level target = static_cast<Level>(1 + rng.below(s.top()));
    std::vector<std::uint32_t> idx;
    std::uint32_t parent = 0;
    for (Level l = 1; l <= target; ++l) {
      auto kids = t.empty() ? std::vector<Vertex>{} : children(t, {static_cast<Level>(l - 1), parent});
      std::uint32_t j = !kids.empty() && rng.chance(2, 3) ? kids[rng.below(kids.size())].index : rng.below(f_lim(s, l));
      idx.push_back(j);
      parent = j;
    }
    FlimTree c = FlimTree::chain(idx);
    auto u = t.empty() ? Outcome<FlimTree>(c) : tree_union(s, t, c);
    if (u && validate_tree(s, u.value()).empty()) {
      t = std::move(u).value();
      return true;
    }
  }
  return false;
}

}  // namespace

Cond0 relabel0(const Skeleton& s, Rng& rng, const FlimTree& t, std::uint32_t bound) {
  std::map<Vertex, Label> ls;
  for (const auto& n : t.nodes())
    if (s.labelable(n.v.level) && rng.coin()) ls[n.v] = random_label(rng, bound);
  return Cond0::make(t, ls);
}

Cond0 gen_cond0(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound) {
  if (size == 0) return {};
  FlimTree t = FlimTree::chain({});
  const unsigned chains = 1 + rng.below(size);
  for (unsigned k = 0; k < chains; ++k) grow(s, rng, t);
  return relabel0(s, rng, t, bound);
}

Cond0 gen_cond0(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound) {
  Rng rng(seed);
  return gen_cond0(s, rng, size, bound);
}

Cond0 gen_extension0(const Skeleton& s, Rng& rng, const Cond0& p, unsigned size, std::uint32_t bound) {
  Cond0 q = p;
  const unsigned steps = rng.below(size + 1);
  for (unsigned k = 0; k < steps; ++k) {
    if (q.empty() || rng.coin()) {
      FlimTree t = q.empty() ? FlimTree::chain({}) : q.tree;
      if (!grow(s, rng, t)) continue;
      Cond0 fresh = relabel0(s, rng, t, bound);
      for (std::size_t i = 0; i < t.size(); ++i)
        if (q.tree.contains(t.nodes()[i].v)) fresh.labels[i] = q.label(t.nodes()[i].v);
      if (validate_cond0(s, fresh).empty()) q = std::move(fresh);
    } else {
      std::vector<std::size_t> lab;
      for (std::size_t i = 0; i < q.tree.size(); ++i)
        if (s.labelable(q.tree.nodes()[i].v.level)) lab.push_back(i);
      if (lab.empty() || bound == 0) continue;
      Label& l = q.labels[lab[rng.below(lab.size())]];
      std::uint32_t z = rng.below(bound);
      if (!label_at(l, z)) label_set(l, z, static_cast<std::uint8_t>(rng.coin()));
    }
  }
  return q;
}

Cond0 gen_weakening0(Rng& rng, const Cond0& q) {
  Cond0 p = q;
  for (auto& l : p.labels) {
    Label kept;
    for (const Bit& b : l)
      if (!rng.chance(1, 3)) kept.push_back(b);
    l = std::move(kept);
  }
  for (int round = 0; round < 4 && !p.empty(); ++round) {
    std::vector<Vertex> drop;
    for (Vertex m : max_points(p.tree))
      if (rng.chance(1, 3)) drop.push_back(m);
    if (drop.empty()) break;
    std::vector<Node> ns;
    std::map<Vertex, Label> ls;
    for (std::size_t i = 0; i < p.tree.size(); ++i) {
      Vertex v = p.tree.nodes()[i].v;
      if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
      ns.push_back(p.tree.nodes()[i]);
      ls[v] = p.labels[i];
    }
    p = Cond0::make(FlimTree(std::move(ns)), ls);
  }
  return p;
}

Cond1 gen_cond1(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound) {
  Cond1 out;
  if (size == 0 || bound == 0) return out;
  for (Level l : succ_prime(s)) {
    if (rng.below(size + 1) == 0) continue;
    auto xs = nonempty_subset(rng, bound);
    auto ys = nonempty_subset(rng, s.f(l));
    auto bits = random_bits(rng, xs.size() * ys.size());
    out.put(make_block(l, std::move(xs), std::move(ys), std::move(bits)));
  }
  return out;
}

Cond1 gen_cond1(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound) {
  Rng rng(seed);
  return gen_cond1(s, rng, size, bound);
}

namespace {

// Widens b to the given rectangle (a superset); new cells come from rng.
Block widen_block(Rng& rng, const Block& b, std::vector<std::uint32_t> xs, std::vector<std::uint32_t> ys) {
  Block out = make_block(b.level, std::move(xs), std::move(ys), {});
  for (std::size_t xi = 0; xi < out.xs.size(); ++xi)
    for (std::size_t yi = 0; yi < out.ys.size(); ++yi) {
      auto v = b.at(out.xs[xi], out.ys[yi]);
      out.cell(xi, yi) = v ? *v : static_cast<std::uint8_t>(rng.coin());
    }
  return out;
}

std::vector<std::uint32_t> with(std::vector<std::uint32_t> v, std::uint32_t x) {
  if (!std::binary_search(v.begin(), v.end(), x)) v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  return v;
}

}  // namespace

Cond1 gen_extension1(const Skeleton& s, Rng& rng, const Cond1& p, unsigned size, std::uint32_t bound) {
  Cond1 q = p;
  if (bound == 0) return q;
  for (Level l : succ_prime(s)) {
    const Block* b = q.find(l);
    if (!b) {
      if (rng.below(size + 2) < size) {
        auto xs = nonempty_subset(rng, bound);
        auto ys = nonempty_subset(rng, s.f(l));
        auto bits = random_bits(rng, xs.size() * ys.size());
        q.put(make_block(l, std::move(xs), std::move(ys), std::move(bits)));
      }
      continue;
    }
    auto xs = b->xs, ys = b->ys;
    for (unsigned k = 0; k < size; ++k) {
      if (rng.coin()) xs = with(xs, rng.below(bound));
      if (rng.coin()) ys = with(ys, rng.below(s.f(l)));
    }
    q.put(widen_block(rng, *b, xs, ys));
  }
  return q;
}

Cond1 gen_weakening1(Rng& rng, const Cond1& q) {
  Cond1 p;
  for (const auto& b : q.blocks) {
    if (rng.chance(1, 4)) continue;
    std::vector<std::uint32_t> xs, ys;
    for (auto x : b.xs)
      if (!rng.chance(1, 3)) xs.push_back(x);
    for (auto y : b.ys)
      if (!rng.chance(1, 3)) ys.push_back(y);
    if (xs.empty() || ys.empty()) continue;
    Block nb = make_block(b.level, xs, ys, {});
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) nb.cell(xi, yi) = *b.at(xs[xi], ys[yi]);
    p.put(std::move(nb));
  }
  return p;
}

Cond1 fill_into_domain(Rng& rng, const Cond1& p, const Aut1& pi) {
  Cond1 out;
  for (const auto& b : p.blocks) {
    const Aut1Level* L = pi.find(b.level);
    if (!L) {
      out.put(b);
      continue;
    }
    std::vector<std::uint32_t> xs, ys;
    std::set_union(b.xs.begin(), b.xs.end(), L->dom_x.begin(), L->dom_x.end(), std::back_inserter(xs));
    std::set_union(b.ys.begin(), b.ys.end(), L->dom_y.begin(), L->dom_y.end(), std::back_inserter(ys));
    out.put(widen_block(rng, b, xs, ys));
  }
  return out;
}

Aut0 gen_aut0(const Skeleton& s, Rng& rng, unsigned size) {
  Aut0 out;
  out.perms.resize(s.size());
  const std::uint32_t w = s.block_width;
  for (unsigned k = 0; k < size; ++k) {
    const Level l = static_cast<Level>(1 + rng.below(s.top()));
    const std::uint32_t lim = f_lim(s, l);
    auto& p = out.perms[l];
    if (p.empty()) {
      p.resize(lim);
      std::iota(p.begin(), p.end(), 0u);
    }
    std::uint32_t a = rng.below(lim), b = rng.below(lim);
    if (rng.coin()) {
      std::uint32_t lo = (a / w) * w, hi = std::min(lim, lo + w);
      b = lo + rng.below(hi - lo);
    }
    std::swap(p[a], p[b]);
  }
  return canonical0(out);
}

Aut0 gen_aut0(const Skeleton& s, std::uint64_t seed, unsigned size) {
  Rng rng(seed);
  return gen_aut0(s, rng, size);
}

Aut1 gen_aut1(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound) {
  Aut1 out;
  if (size == 0) return out;
  for (Level l : succ_prime(s)) {
    if (!rng.coin()) continue;
    const std::uint32_t F = s.f(l);
    Aut1Level L{l, {}, {}, {}, {}, {}, {}};
    std::set<std::uint32_t> supp;
    const std::uint32_t ns = rng.below(std::min(2u, size) + 1);
    while (supp.size() < std::min<std::uint32_t>(ns, F)) supp.insert(rng.below(F));
    std::set<std::uint32_t> ys = supp;
    if (rng.coin()) ys.insert(rng.below(F));
    for (std::uint32_t x = 0; x < bound; ++x)
      if (rng.coin()) L.dom_x.push_back(x);
    L.supp.assign(supp.begin(), supp.end());
    L.dom_y.assign(ys.begin(), ys.end());
    L.f = L.supp;
    std::shuffle(L.f.begin(), L.f.end(), rng.engine());
    L.flips.assign(L.dom_x.size() * L.dom_y.size(), 0);
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi)
      for (std::size_t yi = 0; yi < L.dom_y.size(); ++yi)
        if (!supp.count(L.dom_y[yi])) L.flips[xi * L.dom_y.size() + yi] = static_cast<std::uint8_t>(rng.coin());
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi) {
      std::vector<std::uint32_t> c(std::size_t(1) << L.supp.size());
      std::iota(c.begin(), c.end(), 0u);
      if (rng.coin()) std::shuffle(c.begin(), c.end(), rng.engine());
      L.colmaps.push_back(std::move(c));
    }
    out.levels.push_back(std::move(L));
  }
  return out;
}

Aut1 gen_aut1(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound) {
  Rng rng(seed);
  return gen_aut1(s, rng, size, bound);
}

FilterP gen_filter(const Skeleton& s, Rng& rng, unsigned size, std::uint32_t bound) {
  FilterP h;
  if (size == 0) {
    h.gens.push_back({});
    return h;
  }
  ProductCond r{gen_cond0(s, rng, size, bound), gen_cond1(s, rng, size, bound)};
  const unsigned n = 1 + rng.below(size + 1);
  for (unsigned k = 0; k < n; ++k) h.gens.push_back({gen_weakening0(rng, r.c0), gen_weakening1(rng, r.c1)});
  return h;
}

FilterP gen_filter(const Skeleton& s, std::uint64_t seed, unsigned size, std::uint32_t bound) {
  Rng rng(seed);
  return gen_filter(s, rng, size, bound);
}

std::vector<Cond0> shrink_cond0(const Skeleton& s, const Cond0& p) {
  std::vector<Cond0> out;
  if (p.empty()) return out;
  out.push_back({});
  for (Vertex m : max_points(p.tree)) {
    std::vector<Node> ns;
    std::map<Vertex, Label> ls;
    for (std::size_t i = 0; i < p.tree.size(); ++i)
      if (p.tree.nodes()[i].v != m) {
        ns.push_back(p.tree.nodes()[i]);
        ls[p.tree.nodes()[i].v] = p.labels[i];
      }
    out.push_back(Cond0::make(FlimTree(std::move(ns)), ls));
  }
  for (std::size_t i = 0; i < p.tree.size(); ++i)
    for (std::size_t b = 0; b < p.labels[i].size(); ++b) {
      Cond0 c = p;
      c.labels[i].erase(c.labels[i].begin() + static_cast<std::ptrdiff_t>(b));
      out.push_back(std::move(c));
    }
  std::erase_if(out, [&](const Cond0& c) { return !validate_cond0(s, c).empty(); });
  return out;
}

std::vector<Cond1> shrink_cond1(const Cond1& p) {
  std::vector<Cond1> out;
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    Cond1 c = p;
    c.blocks.erase(c.blocks.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(c));
  }
  for (const auto& b : p.blocks) {
    auto drop = [&](bool row, std::size_t at) {
      std::vector<std::uint32_t> xs = b.xs, ys = b.ys;
      if (row)
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(at));
      else
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(at));
      Block nb = make_block(b.level, xs, ys, {});
      for (std::size_t xi = 0; xi < xs.size(); ++xi)
        for (std::size_t yi = 0; yi < ys.size(); ++yi) nb.cell(xi, yi) = *b.at(xs[xi], ys[yi]);
      Cond1 c = p;
      c.put(std::move(nb));
      out.push_back(std::move(c));
    };
    if (b.xs.size() > 1)
      for (std::size_t i = 0; i < b.xs.size(); ++i) drop(true, i);
    if (b.ys.size() > 1)
      for (std::size_t i = 0; i < b.ys.size(); ++i) drop(false, i);
  }
  return out;
}

std::vector<Aut0> shrink_aut0(const Aut0& a) {
  std::vector<Aut0> out;
  for (std::size_t l = 0; l < a.perms.size(); ++l) {
    if (a.perms[l].empty()) continue;
    Aut0 c = a;
    c.perms[l].clear();
    out.push_back(canonical0(c));
  }
  return out;
}

std::vector<Aut1> shrink_aut1(const Aut1& a) {
  std::vector<Aut1> out;
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    Aut1 c = a;
    c.levels.erase(c.levels.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace forcelab
