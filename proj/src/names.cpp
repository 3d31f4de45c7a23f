#include "forcelab/names.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace forcelab {

std::strong_ordering compare(const NameRef& a, const NameRef& b) {
  if (a.is_atom() != b.is_atom()) return a.is_atom() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_atom()) return a.atom() <=> b.atom();
  return compare(a.name(), b.name());
}

std::strong_ordering compare(const PName& a, const PName& b) {
  const std::size_t n = std::min(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = compare(a.entries[k].child, b.entries[k].child); c != 0) return c;
    if (auto c = a.entries[k].cond <=> b.entries[k].cond; c != 0) return c;
  }
  return a.entries.size() <=> b.entries.size();
}

namespace {

bool entry_less(const NameEntry& a, const NameEntry& b) {
  auto c = compare(a.child, b.child);
  if (c != 0) return c < 0;
  return a.cond < b.cond;
}

bool entry_eq(const NameEntry& a, const NameEntry& b) {
  return compare(a.child, b.child) == 0 && a.cond == b.cond;
}

}  // namespace

PName make_name(std::vector<NameEntry> entries) {
  std::sort(entries.begin(), entries.end(), entry_less);
  entries.erase(std::unique(entries.begin(), entries.end(), entry_eq), entries.end());
  return PName{std::move(entries)};
}

NameRef atom_ref(Atom a) { return NameRef{a}; }
NameRef name_ref(PName x) { return NameRef{std::make_shared<const PName>(std::move(x))}; }

int rank(const PName& x) {
  int r = 0;
  for (const auto& e : x.entries)
    r = std::max(r, e.child.is_atom() ? 1 : rank(e.child.name()) + 1);
  return r;
}

std::size_t total_entries(const PName& x) {
  std::size_t n = x.entries.size();
  for (const auto& e : x.entries)
    if (!e.child.is_atom()) n += total_entries(e.child.name());
  return n;
}

PName check_name(const std::vector<Atom>& atoms) {
  std::vector<NameEntry> es;
  for (Atom a : atoms) es.push_back({atom_ref(a), {}});
  return make_name(std::move(es));
}

PName unordered_pair(const NameRef& a, const NameRef& b) { return make_name({{a, {}}, {b, {}}}); }

PName ordered_pair(const NameRef& a, const NameRef& b) {
  return make_name({{name_ref(unordered_pair(a, a)), {}}, {name_ref(unordered_pair(a, b)), {}}});
}

PName g0_branch(const Skeleton& s, Level l, std::uint32_t i, std::uint32_t bound) {
  std::vector<NameEntry> es;
  std::vector<std::uint32_t> chain(l);
  std::function<void(Level)> rec = [&](Level k) {
    if (k == l) {
      if (l > 0 && chain[l - 1] != i) return;
      FlimTree t = FlimTree::chain(chain);
      for (Level lam = 1; lam <= l; ++lam) {
        if (!s.labelable(lam)) continue;
        for (std::uint32_t z = 0; z < bound; ++z) {
          ProductCond c;
          c.c0 = Cond0::make(t, {{Vertex{lam, chain[lam - 1]}, Label{Bit{z, 1}}}});
          es.push_back({atom_ref(tagged(lam, z)), std::move(c)});
        }
      }
      return;
    }
    const Level lvl = static_cast<Level>(k + 1);
    if (lvl == l) {
      chain[k] = i;
      rec(lvl);
      return;
    }
    for (std::uint32_t j = 0; j < f_lim(s, lvl); ++j) {
      chain[k] = j;
      rec(lvl);
    }
  };
  rec(0);
  return make_name(std::move(es));
}

PName g1_column(Level l, std::uint32_t i, std::uint32_t bound) {
  std::vector<NameEntry> es;
  for (std::uint32_t z = 0; z < bound; ++z) {
    ProductCond c;
    c.c1.put(make_block(l, {z}, {i}, {1}));
    es.push_back({atom_ref(tagged(l, z)), std::move(c)});
  }
  return make_name(std::move(es));
}

namespace {

// Column i with the positions in the mask flipped.
PName flipped_column(Level l, std::uint32_t i, std::uint32_t flips, std::uint32_t bound) {
  std::vector<NameEntry> es;
  for (std::uint32_t z = 0; z < bound; ++z) {
    ProductCond c;
    c.c1.put(make_block(l, {z}, {i}, {static_cast<std::uint8_t>(1u ^ ((flips >> z) & 1u))}));
    es.push_back({atom_ref(tagged(l, z)), std::move(c)});
  }
  return make_name(std::move(es));
}

}  // namespace

Errors validate_canonical(const Skeleton& s, const CanonicalName& c) {
  Errors errs;
  if (c.kind == CanonKind::Check) return errs;
  if (c.kind == CanonKind::Pair) {
    if (!c.left || !c.right) errs.push_back(make_error(Code::ParseError, "pair needs two names"));
    return errs;
  }
  if (c.level >= s.size()) {
    errs.push_back(make_error(Code::IndexOutOfRange, "canonical name level"));
    return errs;
  }
  const bool p1 = c.kind == CanonKind::G1Column || c.kind == CanonKind::Cloud1;
  if (p1 && !in_succ_prime(s, c.level)) errs.push_back(make_error(Code::IndexOutOfRange, "column level off Succ'"));
  const std::uint32_t lim = p1 ? s.f(c.level) : f_lim(s, c.level);
  if (c.index >= lim) errs.push_back(make_error(Code::IndexOutOfRange, "canonical name index"));
  if ((c.kind == CanonKind::Cloud0 || c.kind == CanonKind::Cloud1) && c.cut > lim)
    errs.push_back(make_error(Code::IndexOutOfRange, "cloud cut"));
  if (c.kind == CanonKind::Cloud0 && c.index % s.block_width != 0)
    errs.push_back(make_error(Code::ConfigError, "Cloud0 index must start a block"));
  return errs;
}

PName expand(const Skeleton& s, const CanonicalName& c, std::uint32_t bound) {
  switch (c.kind) {
    case CanonKind::G0Branch: return g0_branch(s, c.level, c.index, bound);
    case CanonKind::G1Column: return g1_column(c.level, c.index, bound);
    case CanonKind::Cloud0: {
      std::vector<NameEntry> es;
      const std::uint32_t w = s.block_width;
      for (std::uint32_t n = 0; n < w && c.index + n < f_lim(s, c.level); ++n)
        es.push_back({name_ref(g0_branch(s, c.level, c.index + n, bound)), {}});
      return make_name(std::move(es));
    }
    case CanonKind::Cloud1: {
      std::vector<NameEntry> es;
      std::vector<std::uint32_t> lines{c.index};
      if (c.index >= c.cut)
        for (std::uint32_t j = c.cut; j < s.f(c.level); ++j)
          if (j != c.index) lines.push_back(j);
      for (auto j : lines)
        for (std::uint32_t f = 0; f < (1u << bound); ++f)
          es.push_back({name_ref(flipped_column(c.level, j, f, bound)), {}});
      return make_name(std::move(es));
    }
    case CanonKind::Pair: return ordered_pair(NameRef{c.left}, NameRef{c.right});
    case CanonKind::Check: return check_name(c.atoms);
  }
  return {};
}

std::strong_ordering compare(const Value& a, const Value& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  const std::size_t n = std::min(a.elems.size(), b.elems.size());
  for (std::size_t k = 0; k < n; ++k)
    if (auto c = compare(a.elems[k], b.elems[k]); c != 0) return c;
  return a.elems.size() <=> b.elems.size();
}

Value val(const PName& x, const FilterP& h) {
  Value out;
  for (const auto& e : x.entries) {
    if (!filter_member(h, e.cond)) continue;
    out.elems.push_back(e.child.is_atom() ? Value{e.child.atom(), {}} : val(e.child.name(), h));
  }
  std::sort(out.elems.begin(), out.elems.end());
  out.elems.erase(std::unique(out.elems.begin(), out.elems.end()), out.elems.end());
  return out;
}

Outcome<PName> act(const AutPair& pi, const PName& x) {
  std::vector<NameEntry> es;
  es.reserve(x.entries.size());
  for (const auto& e : x.entries) {
    NameRef child = e.child;
    if (!child.is_atom()) {
      auto sub = act(pi, child.name());
      if (!sub) return sub.error();
      child = name_ref(std::move(sub).value());
    }
    auto c1 = apply1(pi.a1, e.cond.c1);
    if (!c1) return c1.error();
    es.push_back({std::move(child), ProductCond{apply0(pi.a0, e.cond.c0), std::move(c1).value()}});
  }
  return make_name(std::move(es));
}

Outcome<PName> act(const Aut0& pi, const PName& x) { return act(AutPair{pi, {}}, x); }

namespace {

std::vector<Cond1> fillings(const Cond1& p, const Aut1& pi) {
  std::vector<Cond1> out{p};
  for (const auto& b : p.blocks) {
    const Aut1Level* L = pi.find(b.level);
    if (!L) continue;
    std::vector<std::uint32_t> xs, ys;
    std::set_union(b.xs.begin(), b.xs.end(), L->dom_x.begin(), L->dom_x.end(), std::back_inserter(xs));
    std::set_union(b.ys.begin(), b.ys.end(), L->dom_y.begin(), L->dom_y.end(), std::back_inserter(ys));
    if (xs == b.xs && ys == b.ys) continue;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    Block base = make_block(b.level, xs, ys, {});
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        if (auto v = b.at(xs[xi], ys[yi]))
          base.cell(xi, yi) = *v;
        else
          free.push_back({xi, yi});
      }
    std::vector<Cond1> next;
    for (const auto& partial : out)
      for (std::uint64_t m = 0; m < (std::uint64_t(1) << free.size()); ++m) {
        Block nb = base;
        for (std::size_t k = 0; k < free.size(); ++k)
          nb.cell(free[k].first, free[k].second) = static_cast<std::uint8_t>((m >> k) & 1u);
        Cond1 c = partial;
        c.put(std::move(nb));
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

PName bar(const PName& x, const Aut1& pi) {
  std::vector<NameEntry> es;
  for (const auto& e : x.entries) {
    NameRef child = e.child.is_atom() ? e.child : name_ref(bar(e.child.name(), pi));
    for (auto& c1 : fillings(e.cond.c1, pi)) es.push_back({child, ProductCond{e.cond.c0, std::move(c1)}});
  }
  return make_name(std::move(es));
}

bool all_in_domain(const PName& x, const Aut1& pi) {
  for (const auto& e : x.entries) {
    if (!dpi(pi, e.cond.c1)) return false;
    if (!e.child.is_atom() && !all_in_domain(e.child.name(), pi)) return false;
  }
  return true;
}

FilterP image_filter(const AutPair& pi, const FilterP& h) {
  FilterP out;
  for (const auto& g : h.gens) out.gens.push_back(apply(pi, g));
  return out;
}

bool equivariance_check(const PName& x, const AutPair& pi, const FilterP& h) {
  for (const auto& g : h.gens)
    if (!dpi(pi.a1, g.c1)) return false;
  auto moved = act(pi, bar(x, pi.a1));
  if (!moved) return false;
  return val(moved.value(), image_filter(pi, h)) == val(x, h);
}

AutPair random_aut(const Skeleton& s, std::uint64_t seed, std::uint32_t bound) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(rng() % n); };
  AutPair out;
  out.a0.perms.resize(s.size());
  const std::uint32_t w = s.block_width;
  const int n0 = static_cast<int>(pick(3));
  for (int k = 0; k < n0; ++k) {
    Level l = static_cast<Level>(1 + pick(s.size() - 1));
    const std::uint32_t lim = f_lim(s, l);
    auto& p = out.a0.perms[l];
    if (p.empty()) {
      p.resize(lim);
      for (std::uint32_t i = 0; i < lim; ++i) p[i] = i;
    }
    std::uint32_t a = pick(lim), b = pick(lim);
    if (pick(2) == 0) {
      std::uint32_t lo = (a / w) * w, hi = std::min(lim, lo + w);
      b = lo + pick(hi - lo);
    }
    std::swap(p[a], p[b]);
  }
  out.a0 = canonical0(out.a0);
  auto sp = succ_prime(s);
  if (!sp.empty() && pick(4) != 0) {
    Level l = sp[pick(sp.size())];
    const std::uint32_t F = s.f(l);
    Aut1Level L{l, {}, {}, {}, {}, {}, {}};
    std::set<std::uint32_t> supp, ys, xs;
    const std::uint32_t ns = pick(3);
    for (std::uint32_t k = 0; k < ns; ++k) supp.insert(pick(F));
    ys = supp;
    for (std::uint32_t k = 0, ne = pick(2); k < ne; ++k) ys.insert(pick(F));
    for (std::uint32_t k = 0, nx = pick(3); k < nx; ++k) xs.insert(pick(bound + 1));
    L.supp.assign(supp.begin(), supp.end());
    L.dom_y.assign(ys.begin(), ys.end());
    L.dom_x.assign(xs.begin(), xs.end());
    L.f = L.supp;
    std::shuffle(L.f.begin(), L.f.end(), rng);
    L.flips.assign(L.dom_x.size() * L.dom_y.size(), 0);
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi)
      for (std::size_t yi = 0; yi < L.dom_y.size(); ++yi)
        if (!supp.count(L.dom_y[yi])) L.flips[xi * L.dom_y.size() + yi] = static_cast<std::uint8_t>(pick(2));
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi) {
      std::vector<std::uint32_t> c(1u << L.supp.size());
      for (std::uint32_t m = 0; m < c.size(); ++m) c[m] = m;
      if (pick(2)) std::shuffle(c.begin(), c.end(), rng);
      L.colmaps.push_back(std::move(c));
    }
    out.a1.levels.push_back(std::move(L));
  }
  return out;
}

std::vector<AutPair> sample_group(const Skeleton& s, const GroupSpec& spec, std::uint64_t seed, std::size_t n,
                                  std::uint32_t bound, std::size_t max_tries) {
  std::vector<AutPair> out;
  for (std::size_t t = 0; t < max_tries && out.size() < n; ++t) {
    AutPair a = random_aut(s, seed * 0x9E3779B97F4A7C15ull + t, bound);
    if (in_group(a, spec, s.block_width)) out.push_back(std::move(a));
  }
  return out;
}

SymVerdict sym_check(const Skeleton& s, const PName& x, const GroupSpec& spec, std::uint64_t seed, std::size_t n,
                     std::uint32_t bound) {
  SymVerdict v;
  for (auto& pi : sample_group(s, spec, seed, n, bound)) {
    ++v.sampled;
    PName bx = bar(x, pi.a1);
    auto moved = act(pi, bx);
    if (!moved || !(moved.value() == bx)) {
      v.counterexample = true;
      v.witness = pi;
      return v;
    }
  }
  return v;
}

PName cloud_sequence(const Skeleton& s, Level l, std::uint32_t cut, std::uint32_t bound) {
  std::vector<NameEntry> es;
  for (std::uint32_t i = 0; i < cut && i < f_lim(s, l); i += s.block_width) {
    CanonicalName c{CanonKind::Cloud0, l, i, cut, {}, nullptr, nullptr};
    es.push_back({name_ref(ordered_pair(atom_ref(i), name_ref(expand(s, c, bound)))), {}});
  }
  return make_name(std::move(es));
}

namespace {

std::map<Atom, std::uint8_t> branch_values(const Cond0& p, Vertex v) {
  std::map<Atom, std::uint8_t> out;
  for (auto& [u, b] : branch_union(p, v)) out[tagged(u.level, b.pos)] = b.val;
  return out;
}

}  // namespace

Pred0 cloud_difference_dense(Level l, std::uint32_t i, std::uint32_t j) {
  return [l, i, j](const Cond0& p) {
    Vertex a{l, i}, b{l, j};
    if (!p.tree.contains(a) || !p.tree.contains(b)) return false;
    auto va = branch_values(p, a);
    auto vb = branch_values(p, b);
    for (auto [pos, bit] : va) {
      auto it = vb.find(pos);
      if (it != vb.end() && it->second != bit) return true;
    }
    return false;
  };
}

Outcome<Cond0> cloud_difference_witness(const Skeleton& s, const Cond0& p, Level l, std::uint32_t i, std::uint32_t j) {
  Vertex a{l, i}, b{l, j};
  if (i == j || !p.tree.contains(a) || !p.tree.contains(b))
    return make_error(Code::Precondition, "both distinct vertices must lie in t(p)");
  if (cloud_difference_dense(l, i, j)(p)) return p;
  for (Level m = 1; m <= l; ++m) {
    auto ua = pred_at(p.tree, a, m);
    auto ub = pred_at(p.tree, b, m);
    if (ua == ub || !s.labelable(m)) continue;
    Cond0 out = p;
    Label* la = out.label_mut(*ua);
    Label* lb = out.label_mut(*ub);
    std::uint32_t z = 0;
    while (label_at(*la, z) || label_at(*lb, z)) ++z;
    label_set(*la, z, 0);
    label_set(*lb, z, 1);
    return out;
  }
  return make_error(Code::NoWitness, "branches never diverge at a labelable level");
}

}  // namespace forcelab
