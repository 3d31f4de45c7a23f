// QT-POSET, RHO0-PROJ, RHO1-PROJ, TQQ-ISO, TPI-COMMUTE, MBETA-ENUM.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "props_common.hpp"

namespace forcelab::props {

namespace {

std::string show(const ICond& q) { return encode(q).dump(); }

// Highest successor level with at least two levels below it; 0 if none.
Level quotient_top(const Skeleton& s) {
  for (Level l = s.top(); l >= 2; --l)
    if (s.kind(l) == LevelKind::Successor) return l;
  return 0;
}

// Index lists for FlimTree::chain reaching `top`, indices below min(f_lim, cap).
std::vector<std::vector<std::uint32_t>> chains_to(const Skeleton& s, Level top, std::uint32_t cap) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (Level l = 1; l <= top; ++l) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& c : out)
      for (std::uint32_t i = 0; i < std::min(f_lim(s, l), cap); ++i) {
        auto d = c;
        d.push_back(i);
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<FlimTree> unite(const Skeleton& s, const FlimTree& a, const FlimTree& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  auto u = tree_union(s, a, b);
  if (!u || !validate_tree(s, u.value()).empty()) return std::nullopt;
  return u.value();
}

bool tops_only(const FlimTree& t, Level top) {
  for (Vertex m : max_points(t))
    if (m.level != top) return false;
  return true;
}

// Random bits added on labelable vertices (positions below bound).
Cond0 add_bits(const Skeleton& s, Rng& rng, const Cond0& p, std::uint32_t bound, unsigned n) {
  Cond0 out = p;
  for (unsigned k = 0; k < n && !out.tree.empty(); ++k) {
    const Node& nd = out.tree.nodes()[rng.below(out.tree.size())];
    if (!s.labelable(nd.v.level)) continue;
    std::uint32_t z = rng.below(bound);
    Label* l = out.label_mut(nd.v);
    if (!label_at(*l, z)) label_set(*l, z, static_cast<std::uint8_t>(rng.below(2)));
  }
  return out;
}

Cond0 drop_bits(Rng& rng, const Cond0& p) {
  Cond0 out = p;
  for (auto& l : out.labels) {
    Label kept;
    for (const auto& b : l)
      if (rng.coin()) kept.push_back(b);
    l = kept;
  }
  return out;
}

// Protected-structure contexts at the quotient top, in increasing order of
// what they constrain. Contexts that do not validate on `s` are left out.
std::vector<SymContext> sym_contexts(const Skeleton& s) {
  std::vector<SymContext> out;
  const Level top = quotient_top(s);
  if (top < 2) return out;
  auto push = [&](SymContext c) {
    c.top = top;
    if (validate_ctx(s, c).empty()) out.push_back(std::move(c));
  };
  const FlimTree zeros = FlimTree::chain(std::vector<std::uint32_t>(top, 0));
  std::vector<std::uint32_t> second(top, 1);
  second[0] = 0;
  {
    SymContext c;
    c.beta_tilde = 0;
    c.beta = 1;
    push(c);
  }
  {
    SymContext c;
    c.r_bar = Cond0::make(zeros);
    c.protected_tops = {{top, 0}};
    c.beta_tilde = 1;
    c.beta = 2;
    push(c);
  }
  if (auto two = unite(s, zeros, FlimTree::chain(second))) {
    SymContext c;
    c.r_bar = Cond0::make(*two);
    c.protected_tops = {{top, 0}, {2, 1}};
    c.small0_cuts = {{1, 1}, {2, 1}};
    c.fix1_cols = {{2, 0}};
    c.small1_cuts = {{2, 1}};
    c.beta_tilde = 2;
    c.beta = 3;
    push(c);
  }
  {
    SymContext c;
    c.r_bar = Cond0::make(zeros);
    c.protected_tops = {{top, 0}};
    c.beta_tilde = 1;
    c.beta = 3;
    push(c);
  }
  return out;
}

// ---------------------------------------------------------------- QT-POSET

// Partitions of the support restricted to `onto`, empty cells dropped.
Partition restrict_partition(const Partition& p, const std::vector<std::uint32_t>& onto) {
  Partition out;
  for (const auto& c : p) {
    Cell k;
    std::set_intersection(c.begin(), c.end(), onto.begin(), onto.end(), std::back_inserter(k));
    if (!k.empty()) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool own_qleq(const QTree& sub, const QTree& sup) {
  if (sub.top != sup.top) return false;
  if (!std::includes(sub.support.begin(), sub.support.end(), sup.support.begin(), sup.support.end())) return false;
  for (Level l = 0; l <= sup.top; ++l)
    if (restrict_partition(sub.parts[l], sup.support) != sup.parts[l]) return false;
  return true;
}

// Refines upward, one cell at the base, discrete at the top, constant across limits.
bool own_qvalid(const Skeleton& s, const QTree& t) {
  if (t.parts.size() != std::size_t(t.top) + 1) return false;
  if (t.support.empty()) {
    for (const auto& p : t.parts)
      if (!p.empty()) return false;
    return true;
  }
  for (Level l = 0; l <= t.top; ++l)
    if (restrict_partition(t.parts[l], t.support) != t.parts[l]) return false;
  if (t.parts[0].size() != 1 || t.parts[t.top].size() != t.support.size()) return false;
  for (Level l = 1; l <= t.top; ++l) {
    for (const auto& c : t.parts[l]) {
      bool inside = false;
      for (const auto& d : t.parts[l - 1])
        inside = inside || std::includes(d.begin(), d.end(), c.begin(), c.end());
      if (!inside) return false;
    }
    if (s.is_limit(l) && t.parts[l] != t.parts[l - 1]) return false;
  }
  return true;
}

struct QtPoset {
  Skeleton s;
  std::vector<QTree> u;
  OrderIndex ix;

  QtPoset(const Skeleton& sk) : s(sk) {
    const Level top = quotient_top(s);
    std::vector<std::uint32_t> pool(std::min<std::uint32_t>(f_lim(s, std::max<Level>(top, 1)), 3));
    std::iota(pool.begin(), pool.end(), 0u);
    if (top >= 2) u = all_qtrees(s, top, pool, 3);
    ix = build_order(u, [](const QTree& a, const QTree& b) { return qtree_leq(a, b); });
  }

  CaseResult run(std::size_t i) const {
    Verdict v;
    const QTree& a = u[i];
    v.check(validate_qtree(s, a).empty(), "universe member fails validate_qtree");
    v.check(own_qvalid(s, a), "universe member breaks the partition invariants");
    v.check(ix.le(i, i), "qtree_leq not reflexive");
    for (std::size_t j = 0; j < u.size(); ++j) {
      const QTree& b = u[j];
      v.check(ix.le(i, j) == own_qleq(a, b), [&] { return "qtree_leq disagrees with restriction of partitions against " + encode(b).dump(); });
      if (j != i) v.check(!(ix.le(i, j) && ix.le(j, i)), "qtree_leq not antisymmetric");
      if (ix.le(i, j))
        for (std::size_t k = 0; k < u.size(); ++k)
          if (ix.le(j, k) && !ix.le(i, k)) v.check(false, "qtree_leq not transitive");
      auto emb = qtree_embed(b, a);
      if (!ix.le(i, j)) {
        v.check(!emb && emb.error().code == Code::NotComparable, "qtree_embed accepted an incomparable pair");
        continue;
      }
      if (!emb) {
        v.check(false, "qtree_embed refused a comparable pair");
        continue;
      }
      const CellMap& m = emb.value();
      for (Level l = 0; l <= b.top; ++l) {
        std::set<std::size_t> seen;
        for (std::size_t c = 0; c < b.parts[l].size(); ++c) {
          const Cell& z = b.parts[l][c];
          const Cell& zb = a.parts[l][m[l][c]];
          v.check(std::includes(zb.begin(), zb.end(), z.begin(), z.end()), "embedded cell does not contain its source");
          v.check(seen.insert(m[l][c]).second, "embedding not injective on a level");
          if (l > 0) {
            std::size_t pc = *b.cell_of(static_cast<Level>(l - 1), z.front());
            const Cell& up = a.parts[l - 1][m[l - 1][pc]];
            v.check(std::includes(up.begin(), up.end(), zb.begin(), zb.end()), "embedding does not preserve the tree order");
          }
        }
      }
    }
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j].empty()) v.check(ix.le(i, j), "empty quotient tree is not the maximum");
    return v.result({{"qtree", encode(a)}});
  }
};

std::unique_ptr<Checker> make_qt(const Env& env, Mode) {
  auto w = std::make_shared<QtPoset>(env.skel);
  return checker(
      w->u.size(), [w](std::uint64_t i) { return w->run(i); },
      [w](std::uint64_t, std::uint64_t seed) {
        if (w->u.empty()) return CaseResult::skip("skeleton has no quotient top");
        Rng rng(seed);
        return w->run(rng.below(w->u.size()));
      });
}

// ---------------------------------------------------------------- RHO0-PROJ

// Own reading of the projection: support, partitions by shared
// predecessors, labels pulled from the predecessor, N by protection and cuts.
std::vector<std::string> rho0_oracle(const Skeleton& s, const Cond0& p, const SymContext& ctx, const ICond& r) {
  std::vector<std::string> bad;
  (void)s;
  std::vector<std::uint32_t> support;
  for (const auto& n : p.tree.at_level(ctx.top))
    if (n.v.index < ctx.beta) support.push_back(n.v.index);
  if (r.tree.support != support) bad.push_back("support is not the tops below beta");
  if (r.tree.parts.size() != std::size_t(ctx.top) + 1 || r.labels.size() != r.tree.parts.size()) {
    bad.push_back("wrong shape");
    return bad;
  }
  auto prot = protected_indices(ctx);
  for (Level l = 0; l <= ctx.top; ++l) {
    std::map<Vertex, Cell> groups;
    for (auto i : support) groups[*pred_at(p.tree, {ctx.top, i}, l)].push_back(i);
    Partition want;
    for (auto& [u, c] : groups) want.push_back(c);
    std::sort(want.begin(), want.end());
    if (r.tree.parts[l] != want) {
      bad.push_back("partition at level " + std::to_string(l) + " does not follow shared predecessors");
      continue;
    }
    for (std::size_t c = 0; c < want.size(); ++c) {
      Vertex u = *pred_at(p.tree, {ctx.top, want[c].front()}, l);
      if (r.labels[l][c] != p.label(u)) bad.push_back("label not pulled from the predecessor");
      NVal nv;
      bool is_prot = false;
      for (auto i : prot) is_prot = is_prot || std::binary_search(want[c].begin(), want[c].end(), i);
      if (is_prot)
        nv = {NVal::Index, u.index};
      else if (auto cut = cut_at(ctx, l))
        nv = u.index < *cut ? NVal{NVal::Index, u.index} : NVal{NVal::Star, 0};
      if (r.n[l][c] != nv) bad.push_back("N value at level " + std::to_string(l) + " wrong");
    }
  }
  return bad;
}

// Candidate N values for a cell of a condition below r: forced by protection
// or a cut, free otherwise.
std::vector<NVal> n_candidates(const SymContext& ctx, Level l, const Cell& c) {
  for (auto i : protected_indices(ctx))
    if (std::binary_search(c.begin(), c.end(), i))
      return {{NVal::Index, pred_at(ctx.r_bar.tree, {ctx.top, i}, l)->index}};
  if (auto cut = cut_at(ctx, l)) {
    std::vector<NVal> out{{NVal::Star, 0}};
    for (std::uint32_t k = 0; k < *cut; ++k) out.push_back({NVal::Index, k});
    return out;
  }
  return {{}};
}

struct BelowStats {
  std::uint64_t unrealizable = 0;
};

// Quotient conditions below r: every quotient tree below r.tree, every valid
// N, and labels equal to the forced ones or extended by a single bit on one
// cell. Trees with more cells on a level than the level has indices cannot
// occur as projections and are counted, not returned.
std::vector<ICond> conds_below(const Skeleton& s, const SymContext& ctx, const ICond& r,
                               const std::vector<QTree>& qtrees, std::uint32_t bound, BelowStats& st) {
  std::vector<ICond> out;
  for (const auto& t : qtrees) {
    if (!qtree_leq(t, r.tree)) continue;
    bool fits = true;
    for (Level l = 0; l <= t.top; ++l) fits = fits && t.parts[l].size() <= f_lim(s, l);
    if (!fits) {
      ++st.unrealizable;
      continue;
    }
    auto emb = qtree_embed(r.tree, t).value();
    ICond base;
    base.tree = t;
    base.labels.resize(t.parts.size());
    base.n.resize(t.parts.size());
    std::vector<std::pair<Level, std::size_t>> cells;
    std::vector<std::vector<NVal>> cands;
    for (Level l = 0; l <= t.top; ++l) {
      base.labels[l].resize(t.parts[l].size());
      base.n[l].resize(t.parts[l].size());
      std::vector<std::optional<NVal>> forced(t.parts[l].size());
      for (std::size_t c = 0; c < r.tree.parts[l].size(); ++c) {
        base.labels[l][emb[l][c]] = r.labels[l][c];
        if (r.n[l][c].kind != NVal::Absent) forced[emb[l][c]] = r.n[l][c];
      }
      for (std::size_t c = 0; c < t.parts[l].size(); ++c) {
        cells.push_back({l, c});
        cands.push_back(forced[c] ? std::vector<NVal>{*forced[c]} : n_candidates(ctx, l, t.parts[l][c]));
      }
    }
    std::vector<ICond> with_n;
    std::function<void(std::size_t, ICond&)> rec = [&](std::size_t k, ICond& q) {
      if (k == cells.size()) {
        if (validate_icond(s, q, ctx).empty()) with_n.push_back(q);
        return;
      }
      for (const auto& nv : cands[k]) {
        q.n[cells[k].first][cells[k].second] = nv;
        rec(k + 1, q);
      }
    };
    rec(0, base);
    for (const auto& q : with_n) {
      out.push_back(q);
      for (auto [l, c] : cells) {
        if (!s.labelable(l)) continue;
        for (std::uint32_t z = 0; z < bound; ++z) {
          if (label_at(q.labels[l][c], z)) continue;
          for (std::uint8_t b = 0; b < 2; ++b) {
            ICond e = q;
            label_set(e.labels[l][c], z, b);
            out.push_back(std::move(e));
          }
        }
      }
    }
  }
  return out;
}

struct Rho0Ctx {
  SymContext ctx;
  ICond one;
  std::vector<FlimTree> trees;                // tilde trees below t(r_bar)
  std::vector<std::vector<std::size_t>> below;  // below[k]: trees extending trees[k]
  std::vector<QTree> qtrees;
  std::vector<Cond0> ps;                      // exhaustive universe, grouped by tree
  std::vector<std::size_t> first;             // first[k]..first[k+1]: labelings of trees[k]
  std::vector<ICond> rho;                     // rho0 of ps
};

struct Rho0World {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Rho0Ctx> ctxs;
  std::vector<std::pair<std::size_t, std::size_t>> cases;

  Rho0World(const Skeleton& sk, std::uint32_t b, bool exhaustive) : s(sk), bound(b) {
    const Level top = quotient_top(s);
    auto chains = chains_to(s, top, 3);
    for (auto& ctx : sym_contexts(s)) {
      Rho0Ctx c;
      c.ctx = ctx;
      c.one = icond_one(ctx);
      const FlimTree& base = ctx.r_bar.tree;
      const std::size_t cap = std::max<std::size_t>(base.size(), top + 1) + 1;
      std::set<FlimTree> ts;
      std::vector<FlimTree> opts{FlimTree{}};
      for (const auto& ch : chains) opts.push_back(FlimTree::chain(ch));
      for (std::size_t a = 0; a < opts.size(); ++a) {
        auto ua = unite(s, base, opts[a]);
        if (!ua) continue;
        for (std::size_t b = a; b < opts.size(); ++b) {
          auto t = unite(s, *ua, opts[b]);
          if (!t || t->empty() || t->size() > cap || !tops_only(*t, top) || !tree_leq(*t, base)) continue;
          if (!tilde_check(s, Cond0::make(*t), ctx).empty()) continue;
          ts.insert(*t);
        }
      }
      c.trees.assign(ts.begin(), ts.end());
      c.below.resize(c.trees.size());
      for (std::size_t k = 0; k < c.trees.size(); ++k)
        for (std::size_t j = 0; j < c.trees.size(); ++j)
          if (tree_leq(c.trees[j], c.trees[k])) c.below[k].push_back(j);
      std::vector<std::uint32_t> pool(ctx.beta);
      std::iota(pool.begin(), pool.end(), 0u);
      c.qtrees = all_qtrees(s, top, pool, pool.size());
      if (exhaustive) {
        for (const auto& t : c.trees) {
          c.first.push_back(c.ps.size());
          for (auto& p : all_labelings(s, t, bound)) c.ps.push_back(std::move(p));
        }
        c.first.push_back(c.ps.size());
        for (const auto& p : c.ps) {
          auto r = rho0(s, p, ctx);
          c.rho.push_back(r ? r.value() : ICond{});
        }
      }
      ctxs.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < ctxs.size(); ++k)
      for (std::size_t i = 0; i < ctxs[k].ps.size(); ++i) cases.push_back({k, i});
  }

  // Lift law for one (p, q): s <= p, s in the dense set, rho0(s) <= q.
  void lift_law(Verdict& v, const Rho0Ctx& c, const Cond0& p, const ICond& r, const ICond& q,
                std::map<std::string, std::uint64_t>& counters) const {
    ++counters["q_checked"];
    v.check(icond_leq(q, r), [&] { return "enumerated q is not below rho0(p): " + show(q); });
    auto sl = lift0(s, p, q, c.ctx);
    if (!sl) {
      if (sl.error().code == Code::PoolExhausted) {
        ++counters["pool_exhausted"];
        return;
      }
      v.check(false, [&] { return "lift0 failed: " + describe(sl.error()) + " for q = " + show(q); });
      return;
    }
    const Cond0& lifted = sl.value();
    v.check(validate_cond0(s, lifted).empty(), [&] { return "lift is invalid: " + props::show(lifted); });
    v.check(leq0(lifted, p), [&] { return "lift is not below p: " + props::show(lifted); });
    v.check(tilde_check(s, lifted, c.ctx).empty(), [&] { return "lift leaves the dense set: " + props::show(lifted); });
    auto rs = rho0(s, lifted, c.ctx);
    v.check(rs && icond_leq(rs.value(), q), [&] {
      return "rho0(lift) is not below q; q = " + show(q) + ", lift = " + props::show(lifted);
    });
    if (q == r) v.check(lifted == p, "lift of rho0(p) itself is not p");
  }

  void common(Verdict& v, const Rho0Ctx& c, const Cond0& p, const ICond& r) const {
    v.check(validate_ctx(s, c.ctx).empty(), "context invalid");
    v.check(validate_icond(s, r, c.ctx).empty(), [&] { return "rho0(p) is not a valid quotient condition: " + show(r); });
    for (auto& e : rho0_oracle(s, p, c.ctx, r)) v.check(false, "rho0: " + e);
    auto top = rho0(s, c.ctx.r_bar, c.ctx);
    v.check(top && top.value() == c.one, "rho0(r_bar) is not the quotient top");
    v.check(validate_icond(s, c.one, c.ctx).empty(), "icond_one invalid");
    v.check(icond_leq(r, c.one), "rho0(p) is not below the quotient top");
  }

  CaseResult exhaustive(std::size_t n) const {
    auto [k, i] = cases[n];
    const Rho0Ctx& c = ctxs[k];
    const Cond0& p = c.ps[i];
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    auto r0 = rho0(s, p, c.ctx);
    if (!r0) {
      v.check(false, "rho0 rejected a dense-set member: " + describe(r0.error()));
      return v.result({{"context", k}, {"p", encode(p)}});
    }
    const ICond& r = r0.value();
    common(v, c, p, r);
    std::size_t tk = std::upper_bound(c.first.begin(), c.first.end(), i) - c.first.begin() - 1;
    for (std::size_t tj : c.below[tk])
      for (std::size_t j = c.first[tj]; j < c.first[tj + 1]; ++j) {
        if (!leq0(c.ps[j], p)) continue;
        ++counters["order_pairs"];
        v.check(icond_leq(c.rho[j], r), [&] { return "rho0 not order preserving below " + props::show(c.ps[j]); });
      }
    // Images of compatible pairs on the same tree share a lower bound.
    for (std::size_t j = c.first[tk]; j < c.first[tk + 1]; ++j) {
      auto u = union0(s, p, c.ps[j]);
      if (!u) continue;
      auto ru = rho0(s, u.value(), c.ctx);
      v.check(ru && icond_leq(ru.value(), r) && icond_leq(ru.value(), c.rho[j]), "filter image loses compatibility");
    }
    BelowStats st;
    for (const auto& q : conds_below(s, c.ctx, r, c.qtrees, bound, st)) lift_law(v, c, p, r, q, counters);
    counters["q_unrealizable"] += st.unrealizable;
    auto res = v.result({{"context", k}, {"p", encode(p)}});
    res.counters = std::move(counters);
    return res;
  }

  CaseResult sampled(std::uint64_t seed) const {
    if (ctxs.empty()) return CaseResult::skip("no valid context on this skeleton");
    Rng rng(seed);
    std::size_t k = rng.below(ctxs.size());
    const Rho0Ctx& c = ctxs[k];
    if (c.trees.empty()) return CaseResult::skip("context has no dense-set trees");
    std::size_t tk = rng.below(c.trees.size());
    Cond0 p = relabel0(s, rng, c.trees[tk], bound);
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    auto r0 = rho0(s, p, c.ctx);
    if (!r0) {
      v.check(false, "rho0 rejected a dense-set member: " + describe(r0.error()));
      return v.result({{"context", k}, {"p", encode(p)}});
    }
    const ICond& r = r0.value();
    common(v, c, p, r);
    // Extensions: more bits, then a longer tree carrying p's labels.
    std::vector<Cond0> ext{add_bits(s, rng, p, bound, 3)};
    const FlimTree& t2 = c.trees[c.below[tk][rng.below(c.below[tk].size())]];
    std::map<Vertex, Label> ls;
    for (std::size_t n = 0; n < p.tree.size(); ++n) ls[p.tree.nodes()[n].v] = p.labels[n];
    ext.push_back(add_bits(s, rng, Cond0::make(t2, ls), bound, 2));
    std::vector<ICond> images;
    for (const auto& e : ext) {
      v.check(leq0(e, p), "constructed extension is not below p");
      auto re = rho0(s, e, c.ctx);
      v.check(re && icond_leq(re.value(), r), [&] { return "rho0 not order preserving at " + props::show(e); });
      if (re) images.push_back(re.value());
    }
    if (auto u = union0(s, ext[0], ext[1]); u && images.size() == 2) {
      auto ru = rho0(s, u.value(), c.ctx);
      v.check(ru && icond_leq(ru.value(), images[0]) && icond_leq(ru.value(), images[1]),
              "filter image loses compatibility");
    }
    BelowStats st;
    auto qs = conds_below(s, c.ctx, r, c.qtrees, bound, st);
    counters["q_unrealizable"] += st.unrealizable;
    for (int n = 0; n < 16 && !qs.empty(); ++n) lift_law(v, c, p, r, qs[rng.below(qs.size())], counters);
    auto res = v.result({{"context", k}, {"p", encode(p)}});
    res.counters = std::move(counters);
    return res;
  }
};

std::unique_ptr<Checker> make_rho0(const Env& env, Mode mode) {
  auto w = std::make_shared<Rho0World>(env.skel, env.bound, mode == Mode::Exhaustive);
  return checker(
      w->cases.size(), [w](std::uint64_t i) { return w->exhaustive(i); },
      [w](std::uint64_t, std::uint64_t seed) { return w->sampled(seed); });
}

// ---------------------------------------------------------------- RHO1-PROJ

using CellKey = std::tuple<Level, std::uint32_t, std::uint32_t>;

std::map<CellKey, std::uint8_t> cells_of(const Cond1& p) {
  std::map<CellKey, std::uint8_t> out;
  for (const auto& b : p.blocks)
    for (std::size_t xi = 0; xi < b.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < b.ys.size(); ++yi) out[{b.level, b.xs[xi], b.ys[yi]}] = b.cell(xi, yi);
  return out;
}

struct Rho1World {
  Skeleton s;
  std::uint32_t bound;
  std::vector<std::pair<Level, std::uint32_t>> ctxs;  // (max_level, beta)
  std::vector<Cond1> u;

  Rho1World(const Skeleton& sk, std::uint32_t b, bool exhaustive) : s(sk), bound(b) {
    const Level top = quotient_top(s);
    if (top >= 2)
      for (Level ml : {static_cast<Level>(top - 1), top})
        for (std::uint32_t beta = 1; beta <= std::min<std::uint32_t>(3, f_lim(s, top)); ++beta)
          ctxs.push_back({ml, beta});
    if (exhaustive) u = all_cond1(s, bound);
  }

  void laws(Verdict& v, Level ml, std::uint32_t beta, const Cond1& p, const Cond1& r) const {
    v.check(validate_cond1(s, r).empty(), [&] { return "rho1(p) invalid: " + props::show(r); });
    v.check(in_rho1_target(r, ml, beta), [&] { return "rho1(p) keeps a column at or above beta: " + props::show(r); });
    std::map<CellKey, std::uint8_t> want;
    for (auto& [key, bit] : cells_of(p))
      if (std::get<0>(key) <= ml && std::get<2>(key) < beta) want[key] = bit;
    v.check(cells_of(r) == want, [&] { return "rho1(p) is not the truncation of p: " + props::show(r); });
    v.check(rho1(r, ml, beta) == r, "rho1 is not idempotent");
    v.check(rho1(Cond1{}, ml, beta).empty(), "rho1 does not send the top to the top");
  }

  void lift_law(Verdict& v, Level ml, std::uint32_t beta, const Cond1& p, const Cond1& r, const Cond1& q) const {
    auto sl = lift1(p, q, ml, beta);
    if (!sl) {
      v.check(false, [&] { return "lift1 failed: " + describe(sl.error()) + " for q = " + props::show(q); });
      return;
    }
    const Cond1& lifted = sl.value();
    (void)r;
    v.check(validate_cond1(s, lifted).empty(), "lift1 result invalid");
    v.check(leq1(lifted, p), [&] { return "lift1 result is not below p: " + props::show(lifted); });
    v.check(leq1(rho1(lifted, ml, beta), q), [&] { return "rho1(lift) is not below q = " + props::show(q); });
  }

  CaseResult exhaustive(std::uint64_t n) const {
    const auto [ml, beta] = ctxs[n / u.size()];
    const Cond1& p = u[n % u.size()];
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    Cond1 r = rho1(p, ml, beta);
    laws(v, ml, beta, p, r);
    for (const auto& o : u) {
      if (leq1(o, p)) {
        ++counters["order_pairs"];
        v.check(leq1(rho1(o, ml, beta), r), [&] { return "rho1 not order preserving below " + props::show(o); });
      }
      if (auto un = union1(p, o)) {
        Cond1 ru = rho1(un.value(), ml, beta);
        v.check(leq1(ru, r) && leq1(ru, rho1(o, ml, beta)), "filter image loses compatibility");
      }
      if (in_rho1_target(o, ml, beta) && leq1(o, r)) {
        ++counters["q_checked"];
        lift_law(v, ml, beta, p, r, o);
      }
    }
    auto res = v.result({{"max_level", ml}, {"beta", beta}, {"p", encode(p)}});
    res.counters = std::move(counters);
    return res;
  }

  CaseResult sampled(std::uint64_t seed) const {
    if (ctxs.empty()) return CaseResult::skip("skeleton has no quotient top");
    Rng rng(seed);
    const auto [ml, beta] = ctxs[rng.below(ctxs.size())];
    Cond1 p = gen_cond1(s, rng, 1 + rng.below(3), bound);
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    Cond1 r = rho1(p, ml, beta);
    laws(v, ml, beta, p, r);
    Cond1 e = gen_extension1(s, rng, p, 2, bound);
    v.check(leq1(rho1(e, ml, beta), r), "rho1 not order preserving");
    Cond1 e2 = gen_extension1(s, rng, p, 2, bound);
    if (auto un = union1(e, e2)) {
      Cond1 ru = rho1(un.value(), ml, beta);
      v.check(leq1(ru, rho1(e, ml, beta)) && leq1(ru, rho1(e2, ml, beta)), "filter image loses compatibility");
    }
    for (int k = 0; k < 8; ++k) {
      Cond1 q = rho1(gen_extension1(s, rng, r, 2, bound), ml, beta);
      if (!leq1(q, r)) {
        v.check(false, "truncated extension of rho1(p) is not below it");
        continue;
      }
      ++counters["q_checked"];
      lift_law(v, ml, beta, p, r, q);
    }
    auto res = v.result({{"max_level", ml}, {"beta", beta}, {"p", encode(p)}});
    res.counters = std::move(counters);
    return res;
  }
};

std::unique_ptr<Checker> make_rho1(const Env& env, Mode mode) {
  auto w = std::make_shared<Rho1World>(env.skel, env.bound, mode == Mode::Exhaustive);
  return checker(
      w->ctxs.size() * w->u.size(), [w](std::uint64_t i) { return w->exhaustive(i); },
      [w](std::uint64_t, std::uint64_t seed) { return w->sampled(seed); });
}

// ---------------------------------------------------------------- TQQ-ISO

// Level at which the branches to two top vertices part.
std::vector<int> meet_levels(const FlimTree& t, const std::vector<Vertex>& tops) {
  std::vector<int> out;
  for (std::size_t a = 0; a < tops.size(); ++a)
    for (std::size_t b = a + 1; b < tops.size(); ++b) {
      int m = -1;
      for (Level l = 0; l <= tops[a].level; ++l)
        if (pred_at(t, tops[a], l) == pred_at(t, tops[b], l)) m = l;
      out.push_back(m);
    }
  return out;
}

// Random tree of 1..3 chains to distinct tops below beta.
std::optional<FlimTree> random_top_tree_once(const Skeleton& s, Rng& rng, Level top, std::uint32_t beta) {
  std::vector<std::uint32_t> tops(beta);
  std::iota(tops.begin(), tops.end(), 0u);
  std::shuffle(tops.begin(), tops.end(), rng.engine());
  std::size_t n = 1 + rng.below(std::min<std::size_t>(3, tops.size()));
  FlimTree t;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::uint32_t> ch;
    for (Level l = 1; l < top; ++l) ch.push_back(rng.below(std::min<std::uint32_t>(f_lim(s, l), 3)));
    ch.push_back(tops[k]);
    auto u = unite(s, t, FlimTree::chain(ch));
    if (!u) return std::nullopt;
    t = *u;
  }
  return t;
}

std::optional<FlimTree> random_top_tree(const Skeleton& s, Rng& rng, Level top, std::uint32_t beta) {
  for (int tries = 0; tries < 32; ++tries)
    if (auto t = random_top_tree_once(s, rng, top, beta)) return t;
  return std::nullopt;
}

PName name_on(Rng& rng, const std::function<ProductCond()>& cond, std::uint32_t bound) {
  std::vector<PName> inner;
  for (int k = 0, n = 1 + static_cast<int>(rng.below(2)); k < n; ++k) {
    std::vector<NameEntry> es;
    for (int e = 0, m = 1 + static_cast<int>(rng.below(2)); e < m; ++e)
      es.push_back({atom_ref(tagged(static_cast<Level>(1 + rng.below(2)), rng.below(bound))), cond()});
    inner.push_back(make_name(std::move(es)));
  }
  std::vector<NameEntry> es;
  for (const auto& x : inner) es.push_back({name_ref(x), cond()});
  if (rng.coin()) es.push_back({atom_ref(tagged(1, 0)), cond()});
  return make_name(std::move(es));
}

CaseResult tqq_case(const Skeleton& s, std::uint32_t bound, std::uint64_t seed) {
  Rng rng(seed);
  const Level top = quotient_top(s);
  if (top < 2) return CaseResult::skip("skeleton has no quotient top");
  SymContext ctx;
  ctx.top = top;
  ctx.beta = std::min<std::uint32_t>(2 + rng.below(2), f_lim(s, top));
  ctx.beta_tilde = 0;
  if (!validate_ctx(s, ctx).empty()) return CaseResult::skip("context invalid on this skeleton");
  auto t0 = random_top_tree(s, rng, top, ctx.beta);
  if (!t0) return CaseResult::skip("random chains did not unite");
  Aut0 pi = identity0();
  for (int k = 0, n = 1 + static_cast<int>(rng.below(3)); k < n; ++k) {
    Level l = static_cast<Level>(1 + rng.below(top - 1));
    std::uint32_t m = std::min<std::uint32_t>(f_lim(s, l), 3);
    std::uint32_t a = rng.below(m), b = rng.below(m);
    if (a != b) pi = compose0(transposition0(s, l, a, b), pi);
  }
  Cond0 q0 = relabel0(s, rng, *t0, bound);
  Cond0 q1 = apply0(pi, q0);
  const FlimTree& t1 = q1.tree;
  io::json inputs{{"q0", encode(q0)}, {"pi", encode(pi)}, {"beta", ctx.beta}};
  Verdict v;
  auto iso = iso_tqq(s, q0, q1, ctx);
  if (!iso) {
    v.check(false, "iso_tqq refused trees with the same projection: " + describe(iso.error()));
    return v.result(inputs);
  }
  auto back = iso_tqq(s, q1, q0, ctx);
  v.check(bool(back), "iso_tqq refused the reverse pair");
  auto self = iso_tqq(s, q0, q0, ctx);
  v.check(bool(self), "iso_tqq refused q0 against itself");
  std::vector<Cond0> pool{q0};
  for (int k = 0; k < 3; ++k) pool.push_back(relabel0(s, rng, *t0, bound));
  pool.push_back(drop_bits(rng, pool[1]));
  pool.push_back(add_bits(s, rng, pool[1], bound, 2));
  for (const auto& a : pool) {
    auto ta = apply_tqq(iso.value(), a);
    if (!ta) {
      v.check(false, "apply_tqq refused a condition on t(q0)");
      continue;
    }
    v.check(ta.value() == apply0(pi, a), [&] { return "apply_tqq is not the index exchange for " + props::show(a); });
    v.check(ta->tree == t1, "image is not on t(q1)");
    if (back) {
      auto aa = apply_tqq(back.value(), ta.value());
      v.check(aa && aa.value() == a, "reverse isomorphism does not undo the transport");
    }
    if (self) {
      auto ia = apply_tqq(self.value(), a);
      v.check(ia && ia.value() == a, "iso_tqq(q0, q0) is not the identity");
    }
  }
  for (const auto& a : pool)
    for (const auto& b : pool) {
      auto ta = apply_tqq(iso.value(), a), tb = apply_tqq(iso.value(), b);
      if (ta && tb) v.check(leq0(a, b) == leq0(ta.value(), tb.value()), "transport does not preserve and reflect order");
    }
  // Restriction of a filter generator to t(q0), then transported, equals the
  // restriction of its index-exchanged image.
  for (int k = 0; k < 3; ++k) {
    Cond0 g = gen_extension0(s, rng, q0, 2, bound);
    auto lhs = restrict0_tree(g, *t0);
    auto rhs = restrict0_tree(apply0(pi, g), t1);
    if (!lhs || !rhs) {
      v.check(false, "restriction to t(q) failed on an extension");
      continue;
    }
    auto tl = apply_tqq(iso.value(), lhs.value());
    v.check(tl && tl.value() == rhs.value(), "transport does not commute with restriction of filter generators");
  }
  PName x = name_on(rng, [&] { return ProductCond{relabel0(s, rng, *t0, bound), rng.coin() ? gen_cond1(s, rng, 1, bound) : Cond1{}}; }, bound);
  auto tx = transport_name_tqq(x, iso.value());
  auto ax = act(pi, x);
  v.check(tx && ax && tx.value() == ax.value(), "name transport is not the index exchange on entries");
  if (tx && back) {
    auto bx = transport_name_tqq(tx.value(), back.value());
    v.check(bx && bx.value() == x, "name transport is not invertible");
  }
  if (tx) {
    ProductCond gen{pool[1], {}};
    auto tg = apply_tqq(iso.value(), pool[1]);
    if (tg) v.check(val(tx.value(), FilterP{{{tg.value(), {}}}}) == val(x, FilterP{{gen}}),
                    "transported name values differ under matching filters");
  }
  // A tree with the same tops but a different meet structure must be refused.
  if (auto other = random_top_tree(s, rng, top, ctx.beta)) {
    auto m0 = max_points(*t0), m1 = max_points(*other);
    if (m0 == m1) {
      Cond0 o = relabel0(s, rng, *other, bound);
      auto oi = iso_tqq(s, q0, o, ctx);
      bool same = meet_levels(*t0, m0) == meet_levels(*other, m1);
      v.check(bool(oi) == same, same ? "iso_tqq refused an equal meet structure" : "iso_tqq accepted a different meet structure");
      if (oi) {
        auto to = apply_tqq(oi.value(), q0);
        bool labels_follow = bool(to);
        if (to)
          for (Vertex m : m0)
            for (Level l = 0; l <= top; ++l)
              labels_follow = labels_follow && to->label(*pred_at(*other, m, l)) == q0.label(*pred_at(*t0, m, l));
        v.check(labels_follow, "labels do not follow matching branches");
      }
    }
  }
  return v.result(inputs);
}

// ---------------------------------------------------------------- TPI-COMMUTE

CaseResult tpi_case(const Skeleton& s, std::uint32_t bound, std::uint64_t seed) {
  Rng rng(seed);
  const Level top = quotient_top(s);
  if (top < 2) return CaseResult::skip("skeleton has no quotient top");
  std::optional<Level> col_level;
  for (Level l : succ_prime(s))
    if (l < top && s.f(l) >= 2) col_level = l;
  if (!col_level) return CaseResult::skip("no Succ' level below the top with two columns");
  const Level L = *col_level;
  auto t = random_top_tree(s, rng, top, f_lim(s, top));
  if (!t) return CaseResult::skip("random chains did not unite");
  RestrictedProduct d;
  d.s_tree = *t;
  d.top = top;
  std::uint32_t j = rng.below(2), j2 = 1 - j;
  d.cols = {{L, j}};
  const std::uint32_t ywidth = std::min(s.f(L), bound);
  std::vector<std::uint32_t> rows(bound), ys(ywidth);
  std::iota(rows.begin(), rows.end(), 0u);
  std::iota(ys.begin(), ys.end(), 0u);
  AutPair pi;
  auto a1 = column_swap_aut1({{L, j, j2}}, {{L, rows, ys}});
  if (!a1) return CaseResult::skip("column swap unavailable: " + describe(a1.error()));
  pi.a1 = a1.value();
  pi.a0 = identity0();
  {
    auto tops = t->at_level(top);
    std::uint32_t from = tops[rng.below(tops.size())].v.index;
    std::uint32_t to = rng.below(f_lim(s, top));
    if (rng.coin()) {
      Level low = static_cast<Level>(1 + rng.below(top - 1));
      from = rng.below(f_lim(s, low));
      to = rng.below(f_lim(s, low));
      if (from != to)
        if (auto a0 = index_swap_aut0(s, {{low, from, to}}, Cond0::make(*t))) pi.a0 = a0.value();
    } else if (from != to) {
      if (auto a0 = index_swap_aut0(s, {{top, from, to}}, Cond0::make(*t))) pi.a0 = a0.value();
    }
  }
  auto cond = [&] {
    ProductCond v;
    v.c0 = relabel0(s, rng, *t, bound);
    if (rng.chance(3, 4)) {
      Block b;
      b.level = L;
      b.xs = rows;
      b.ys = {j};
      for (std::size_t k = 0; k < rows.size(); ++k) b.bits.push_back(static_cast<std::uint8_t>(rng.below(2)));
      v.c1.put(b);
    }
    if (rng.coin()) {
      Block b;
      b.level = top;
      b.xs = {rng.below(bound)};
      b.ys = {rng.below(s.f(top))};
      b.bits = {static_cast<std::uint8_t>(rng.below(2))};
      v.c1.put(b);
    }
    return v;
  };
  PName x = name_on(rng, cond, bound);
  io::json inputs{{"data", encode(d)}, {"pi", encode(pi)}, {"x", encode(x)}};
  Verdict v;
  std::function<void(const PName&)> in_domain = [&](const PName& y) {
    for (const auto& e : y.entries) {
      v.check(in_restricted(e.cond, d).empty(), "constructed entry outside the restricted product");
      if (!e.child.is_atom()) in_domain(e.child.name());
    }
  };
  in_domain(x);
  RestrictedProduct d2 = tpi_data(pi, d);
  v.check(d2.s_tree == apply0(pi.a0, d.s_tree), "transported data has the wrong tree");
  v.check(d2.cols == std::vector<std::pair<Level, std::uint32_t>>{{L, j2}}, "transported data has the wrong columns");
  auto ident = transport_tpi(x, AutPair{identity0(), identity1()}, d);
  v.check(ident && ident.value() == x, "identity transport changes the name");
  auto tx = transport_tpi(x, pi, d);
  if (!tx) {
    v.check(false, "transport_tpi failed: " + describe(tx.error()));
    return v.result(inputs);
  }
  PName lhs = tilde_extend(s, tx.value(), d2, bound);
  auto rhs = act(pi, tilde_extend(s, x, d, bound));
  v.check(bool(rhs), [&] { return "act refused the extended name: " + describe(rhs.error()); });
  if (rhs) v.check(lhs == rhs.value(), "tilde(T_pi x) differs from pi(tilde x)");
  auto inv = transport_tpi(tx.value(), invert(pi), d2);
  v.check(inv && inv.value() == x, "transport by the inverse does not return the name");
  return v.result(inputs);
}

// ---------------------------------------------------------------- MBETA-ENUM

struct MBetaConfig {
  Level kappa;
  std::uint32_t beta;
};

std::vector<MBetaConfig> mbeta_configs(const Skeleton& s) {
  std::vector<MBetaConfig> out;
  for (Level k = 1; k + 1 < s.size(); ++k) {
    if (!s.is_limit(k) || s.kind(k + 1) != LevelKind::Successor) continue;
    for (std::uint32_t b = 0; b <= std::min<std::uint32_t>(3, f_lim(s, k + 1)); ++b) out.push_back({k, b});
  }
  return out;
}

constexpr std::uint64_t kFullLimit = 200000;

CaseResult mbeta_case(const Skeleton& s, std::uint32_t bound, const MBetaConfig& cfg, std::uint64_t seed) {
  const Level top = static_cast<Level>(cfg.kappa + 1);
  MBetaSpace space(s, cfg.kappa, cfg.beta, bound);
  MBetaSpace again(s, cfg.kappa, cfg.beta, bound);
  io::json inputs{{"kappa", cfg.kappa}, {"beta", cfg.beta}, {"bound", bound}};
  Verdict v;
  std::map<std::string, std::uint64_t> counters;
  v.check(space.size() == again.size(), "size not deterministic");
  if (cfg.beta == 0) {
    v.check(space.size() == 0 && enum_m_beta(s, cfg.kappa, 0, bound, 0, 10).empty(), "beta = 0 gives tuples");
    return v.result(inputs);
  }
  std::vector<std::pair<Level, std::uint32_t>> cols;
  for (Level l : succ_prime(s))
    if (l < cfg.kappa)
      for (std::uint32_t y = 0; y < std::min(s.f(l), cfg.beta); ++y) cols.push_back({l, y});
  v.check(space.column_universe() == cols, "column universe is not the Succ' columns below kappa and beta");
  // Independent size: distinct valid unions of chains to tops below beta.
  const std::uint32_t ntop = std::min(cfg.beta, f_lim(s, top));
  std::set<FlimTree> trees{FlimTree{}};  // the empty condition qualifies vacuously
  auto lower = chains_to(s, static_cast<Level>(top - 1), UINT32_MAX);
  for (std::uint32_t mask = 1; mask < (1u << ntop); ++mask) {
    std::vector<std::uint32_t> tops;
    for (std::uint32_t i = 0; i < ntop; ++i)
      if (mask >> i & 1u) tops.push_back(i);
    std::vector<std::size_t> pick(tops.size(), 0);
    while (true) {
      std::optional<FlimTree> t = FlimTree{};
      for (std::size_t k = 0; k < tops.size() && t; ++k) {
        auto ch = lower[pick[k]];
        ch.push_back(tops[k]);
        t = unite(s, *t, FlimTree::chain(ch));
      }
      if (t) trees.insert(*t);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == lower.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  std::uint64_t per_label = 1;
  for (std::uint32_t z = 0; z < bound; ++z) per_label *= 3;
  std::uint64_t expect = 0;
  for (const auto& t : trees) {
    std::uint64_t n = std::uint64_t(1) << cols.size();
    for (const auto& nd : t.nodes())
      if (s.labelable(nd.v.level)) n *= per_label;
    expect += n;
  }
  v.check(space.size() == expect, [&] {
    return "size " + std::to_string(space.size()) + " differs from the independent count " + std::to_string(expect);
  });
  auto member = [&](const MTuple& m) {
    if (!validate_cond0(s, m.cond).empty()) return false;
    for (Vertex x : max_points(m.cond.tree))
      if (x.level != top || x.index >= cfg.beta) return false;
    for (std::size_t k = 0; k < m.cond.tree.size(); ++k)
      for (const auto& b : m.cond.labels[k])
        if (b.pos >= bound) return false;
    if (!std::is_sorted(m.columns.begin(), m.columns.end())) return false;
    for (const auto& c : m.columns)
      if (!std::binary_search(cols.begin(), cols.end(), c)) return false;
    return true;
  };
  std::vector<std::uint64_t> ranks;
  if (space.size() <= kFullLimit) {
    ranks.resize(space.size());
    std::iota(ranks.begin(), ranks.end(), 0u);
  } else {
    Rng rng(seed);
    for (std::uint64_t r = 0; r < 20000; ++r) ranks.push_back(r);
    for (int k = 0; k < 20000; ++k) ranks.push_back(20000 + rng.next() % (space.size() - 20000));
    ranks.push_back(space.size() - 1);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  }
  std::set<MTuple> seen;
  std::uint64_t dups = 0;
  for (auto r : ranks) {
    MTuple m = space.at(r);
    v.check(member(m), [&] { return "tuple at rank " + std::to_string(r) + " is not an M_beta member"; });
    auto back = space.rank(m);
    v.check(back && *back == r, [&] { return "rank(at(" + std::to_string(r) + ")) is not the index"; });
    v.check(again.at(r) == m, "enumeration not deterministic");
    if (!seen.insert(m).second) ++dups;
  }
  v.check(dups == 0, "enumeration repeats a tuple");
  for (std::uint64_t off : {std::uint64_t(0), space.size() / 2, space.size() > 5 ? space.size() - 5 : 0}) {
    auto page = enum_m_beta(s, cfg.kappa, cfg.beta, bound, off, 7);
    bool ok = page.size() == std::min<std::uint64_t>(7, space.size() - off);
    for (std::size_t k = 0; ok && k < page.size(); ++k) ok = page[k] == space.at(off + k);
    v.check(ok, "pagination disagrees with rank order");
  }
  counters["tuples_checked"] = ranks.size();
  counters["space_size"] = space.size();
  auto res = v.result(inputs);
  res.counters = std::move(counters);
  return res;
}

std::unique_ptr<Checker> make_mbeta(const Env& env, Mode) {
  auto cfgs = std::make_shared<std::vector<MBetaConfig>>(mbeta_configs(env.skel));
  return checker(
      cfgs->size(), [env, cfgs](std::uint64_t i) { return mbeta_case(env.skel, env.bound, (*cfgs)[i], env.seed); },
      [env, cfgs](std::uint64_t, std::uint64_t seed) {
        if (cfgs->empty()) return CaseResult::skip("no limit level below a successor");
        Rng rng(seed);
        return mbeta_case(env.skel, env.bound, (*cfgs)[rng.below(cfgs->size())], seed);
      });
}

}  // namespace

void add_quotient(std::vector<PropertyInfo>& out) {
  out.push_back({"QT-POSET", "quotient", "qtree_leq is a partial order and qtree_embed realizes it", true, make_qt});
  out.push_back({"RHO0-PROJ", "quotient",
                 "rho0 is order preserving, sends r_bar to the top, and lift0 witnesses the projection property",
                 true, make_rho0});
  out.push_back({"RHO1-PROJ", "quotient",
                 "rho1 is the truncation, order preserving, top preserving, and lift1 witnesses the projection property",
                 true, make_rho1});
  out.push_back({"TQQ-ISO", "quotient",
                 "iso_tqq is an order isomorphism agreeing with the index exchange and commuting with restriction",
                 false, [](const Env& env, Mode) {
                   return checker(0, nullptr, [env](std::uint64_t, std::uint64_t seed) {
                     return tqq_case(env.skel, env.bound, seed);
                   });
                 }});
  out.push_back({"TPI-COMMUTE", "quotient", "tilde(T_pi x) equals pi applied to tilde(x)", false,
                 [](const Env& env, Mode) {
                   return checker(0, nullptr, [env](std::uint64_t, std::uint64_t seed) {
                     return tpi_case(env.skel, env.bound, seed);
                   });
                 }});
  out.push_back({"MBETA-ENUM", "quotient", "enum_m_beta is deterministic, duplicate-free and ranked by index", true,
                 make_mbeta});
}

}  // namespace forcelab::props
