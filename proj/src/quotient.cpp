#include "forcelab/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forcelab/mutation.hpp"

namespace forcelab {

std::optional<std::size_t> QTree::cell_of(Level l, std::uint32_t i) const {
  if (l >= parts.size()) return std::nullopt;
  for (std::size_t c = 0; c < parts[l].size(); ++c)
    if (std::binary_search(parts[l][c].begin(), parts[l][c].end(), i)) return c;
  return std::nullopt;
}

QTree empty_qtree(Level top) {
  QTree t;
  t.top = top;
  t.parts.resize(top + 1);
  return t;
}

Errors validate_qtree(const Skeleton& s, const QTree& t) {
  Errors errs;
  auto bad = [&](Code c, std::string d) { errs.push_back(make_error(c, std::move(d))); };
  if (t.top >= s.size() || t.parts.size() != std::size_t(t.top) + 1) {
    bad(Code::StructureMismatch, "partition count does not match the top level");
    return errs;
  }
  if (!std::is_sorted(t.support.begin(), t.support.end()) ||
      std::adjacent_find(t.support.begin(), t.support.end()) != t.support.end())
    bad(Code::StructureMismatch, "support not sorted and unique");
  for (auto i : t.support)
    if (i >= f_lim(s, t.top)) bad(Code::IndexOutOfRange, "support index " + std::to_string(i));
  for (Level l = 0; l <= t.top; ++l) {
    std::vector<std::uint32_t> all;
    for (const auto& c : t.parts[l]) {
      if (c.empty()) bad(Code::StructureMismatch, "empty cell");
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    if (all != t.support) {
      bad(Code::StructureMismatch, "level " + std::to_string(l) + " is not a partition of the support");
      return errs;
    }
    if (!std::is_sorted(t.parts[l].begin(), t.parts[l].end())) bad(Code::StructureMismatch, "cells unsorted");
  }
  if (t.empty()) return errs;
  if (t.parts[0].size() != 1) bad(Code::StructureMismatch, "base partition must be a single cell");
  if (t.parts[t.top].size() != t.support.size()) bad(Code::StructureMismatch, "top partition must be discrete");
  for (Level l = 1; l <= t.top; ++l) {
    for (const auto& c : t.parts[l]) {
      auto lower = t.cell_of(static_cast<Level>(l - 1), c.front());
      for (auto i : c)
        if (t.cell_of(static_cast<Level>(l - 1), i) != lower)
          bad(Code::StructureMismatch, "level " + std::to_string(l) + " does not refine its predecessor");
    }
    if (s.is_limit(l) && t.parts[l] != t.parts[l - 1]) bad(Code::LimitSplit, "partition splits at a limit");
  }
  return errs;
}

namespace {

bool same_cell(const QTree& t, Level l, std::uint32_t a, std::uint32_t b) { return t.cell_of(l, a) == t.cell_of(l, b); }

bool subset(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool qtree_leq(const QTree& sub, const QTree& sup) {
  if (sub.top != sup.top) return false;
  if (!subset(sub.support, sup.support)) return false;
  for (Level l = 0; l <= sup.top; ++l)
    for (std::size_t a = 0; a < sup.support.size(); ++a)
      for (std::size_t b = a + 1; b < sup.support.size(); ++b)
        if (same_cell(sup, l, sup.support[a], sup.support[b]) != same_cell(sub, l, sup.support[a], sup.support[b]))
          return false;
  return true;
}

Outcome<CellMap> qtree_embed(const QTree& t, const QTree& s) {
  if (!qtree_leq(s, t)) return make_error(Code::NotComparable, "no embedding: s is not below t");
  CellMap emb(t.parts.size());
  for (Level l = 0; l < t.parts.size(); ++l)
    for (const auto& c : t.parts[l]) emb[l].push_back(*s.cell_of(l, c.front()));
  return emb;
}

QTree qtree_of(const FlimTree& t, Level top, const std::vector<std::uint32_t>& support) {
  QTree q = empty_qtree(top);
  q.support = support;
  for (Level l = 0; l <= top; ++l) {
    std::map<std::optional<Vertex>, Cell> groups;
    for (auto i : support) groups[pred_at(t, Vertex{top, i}, l)].push_back(i);
    for (auto& [v, c] : groups) q.parts[l].push_back(std::move(c));
    std::sort(q.parts[l].begin(), q.parts[l].end());
  }
  return q;
}

std::vector<std::uint32_t> protected_indices(const SymContext& ctx) {
  std::set<std::uint32_t> out;
  for (Vertex v : ctx.protected_tops) {
    if (v.level >= ctx.top) {
      if (auto u = pred_at(ctx.r_bar.tree, v, ctx.top)) out.insert(u->index);
      continue;
    }
    for (const auto& n : ctx.r_bar.tree.at_level(ctx.top))
      if (pred_at(ctx.r_bar.tree, n.v, v.level) == v) {
        out.insert(n.v.index);
        break;
      }
  }
  return {out.begin(), out.end()};
}

std::optional<std::uint32_t> cut_at(const SymContext& ctx, Level l) {
  std::optional<std::uint32_t> out;
  if (l >= ctx.top) return out;
  for (auto [lv, a] : ctx.small0_cuts)
    if (lv == l) out = std::max(out.value_or(0), a);
  return out;
}

namespace {

// Property (1) and the branch-height requirement of the dense subforcing.
Errors tilde_errors(const Cond0& p, const SymContext& ctx) {
  Errors errs;
  for (Vertex m : max_points(p.tree))
    if (m.level < ctx.top) errs.push_back(make_error(Code::NotTilde, "branch ends below the top level"));
  for (auto [lv, a] : ctx.small0_cuts) {
    if (lv > ctx.top) continue;
    for (const auto& n : p.tree.at_level(lv)) {
      if (n.v.index >= a) continue;
      bool found = false;
      for (const auto& t : p.tree.at_level(ctx.top))
        if (t.v.index < ctx.beta && pred_at(p.tree, t.v, lv) == n.v) found = true;
      if (!found) errs.push_back(make_error(Code::NotTilde, "vertex below a cut has no successor below beta"));
    }
  }
  return errs;
}

}  // namespace

Errors validate_ctx(const Skeleton& s, const SymContext& ctx) {
  Errors errs;
  auto bad = [&](std::string d) { errs.push_back(make_error(Code::ConfigError, std::move(d))); };
  if (ctx.top == 0 || ctx.top >= s.size() || s.kind(ctx.top) != LevelKind::Successor) {
    bad("top must be a successor level");
    return errs;
  }
  for (auto& e : validate_cond0(s, ctx.r_bar)) errs.push_back(e);
  if (!(ctx.beta_tilde < ctx.beta && ctx.beta <= f_lim(s, ctx.top))) bad("need beta_tilde < beta <= f_lim(top)");
  for (Vertex v : ctx.protected_tops)
    if (!ctx.r_bar.tree.contains(v)) bad("protected vertex outside t(r_bar)");
  auto prot = protected_indices(ctx);
  for (Vertex v : ctx.protected_tops) {
    SymContext one = ctx;
    one.protected_tops = {v};
    if (protected_indices(one).empty()) bad("protected vertex has no projection on the top level");
  }
  for (auto i : prot)
    if (i >= ctx.beta_tilde) bad("beta_tilde must exceed every protected projection");
  for (auto [l, a] : ctx.small0_cuts)
    if (l <= ctx.top && a >= ctx.beta_tilde) bad("beta_tilde must exceed every Small0 cut up to top");
  for (auto [l, i] : ctx.fix1_cols)
    if (l + 1 < ctx.top && i >= ctx.beta_tilde) bad("beta_tilde must exceed every fixed column below kappa");
  for (auto [l, a] : ctx.small1_cuts)
    if (l + 1 < ctx.top && a >= ctx.beta_tilde) bad("beta_tilde must exceed every Small1 cut below kappa");
  for (const auto& n : ctx.r_bar.tree.at_level(ctx.top))
    if (n.v.index < ctx.beta && !std::binary_search(prot.begin(), prot.end(), n.v.index))
      bad("r_bar has an unprotected top-level vertex below beta");
  for (Vertex m : max_points(ctx.r_bar.tree))
    if (m.level < ctx.top) bad("r_bar has a branch below the top level");
  for (auto& e : tilde_errors(Cond0::make(ctx.r_bar.tree), ctx)) bad("r_bar: " + e.detail);
  return errs;
}

namespace {

// N-domain value forced for a cell, or Absent if the cell is outside dom N.
// `index` is the P0 vertex index the cell stands for.
NVal n_for(const SymContext& ctx, const std::vector<std::uint32_t>& prot, Level l, const Cell& c,
           std::uint32_t index) {
  for (auto i : prot)
    if (std::binary_search(c.begin(), c.end(), i)) return {NVal::Index, index};
  if (auto a = cut_at(ctx, l)) return index < *a ? NVal{NVal::Index, index} : NVal{NVal::Star, 0};
  return {};
}

bool in_ndom(const SymContext& ctx, const std::vector<std::uint32_t>& prot, Level l, const Cell& c) {
  for (auto i : prot)
    if (std::binary_search(c.begin(), c.end(), i)) return true;
  return cut_at(ctx, l).has_value();
}

}  // namespace

Errors validate_icond(const Skeleton& s, const ICond& q, const SymContext& ctx) {
  Errors errs = validate_qtree(s, q.tree);
  if (!errs.empty()) return errs;
  auto bad = [&](Code c, std::string d) { errs.push_back(make_error(c, std::move(d))); };
  const QTree& t = q.tree;
  if (t.top != ctx.top) bad(Code::StructureMismatch, "wrong top level");
  if (q.labels.size() != t.parts.size() || q.n.size() != t.parts.size()) {
    bad(Code::StructureMismatch, "labels or N not parallel to the partitions");
    return errs;
  }
  for (auto i : t.support)
    if (i >= ctx.beta) bad(Code::IndexOutOfRange, "support index not below beta");
  auto prot = protected_indices(ctx);
  for (auto i : prot)
    if (!std::binary_search(t.support.begin(), t.support.end(), i))
      bad(Code::StructureMismatch, "protected top missing from the support");
  if (!errs.empty()) return errs;
  for (std::size_t a = 0; a < prot.size(); ++a)
    for (std::size_t b = a + 1; b < prot.size(); ++b)
      for (Level l = 0; l <= t.top; ++l) {
        bool in_r = pred_at(ctx.r_bar.tree, {t.top, prot[a]}, l) == pred_at(ctx.r_bar.tree, {t.top, prot[b]}, l);
        if (in_r != same_cell(t, l, prot[a], prot[b]))
          bad(Code::StructureMismatch, "protected structure differs from r_bar");
      }
  for (Level l = 0; l <= t.top; ++l) {
    if (q.labels[l].size() != t.parts[l].size() || q.n[l].size() != t.parts[l].size()) {
      bad(Code::StructureMismatch, "labels or N not parallel to the partitions");
      return errs;
    }
    std::set<std::uint32_t> used;
    for (std::size_t c = 0; c < t.parts[l].size(); ++c) {
      const Cell& cell = t.parts[l][c];
      if (!s.labelable(l) && !q.labels[l][c].empty()) bad(Code::NonemptyLimitLabel, "label on an unlabeled level");
      const NVal& nv = q.n[l][c];
      bool prot_cell = false;
      std::uint32_t forced = 0;
      for (auto i : prot)
        if (std::binary_search(cell.begin(), cell.end(), i)) {
          prot_cell = true;
          forced = pred_at(ctx.r_bar.tree, {t.top, i}, l)->index;
        }
      if (!in_ndom(ctx, prot, l, cell)) {
        if (nv.kind != NVal::Absent) bad(Code::StructureMismatch, "N defined outside its domain");
        continue;
      }
      if (nv.kind == NVal::Absent) bad(Code::StructureMismatch, "N missing on its domain");
      if (prot_cell && !(nv.kind == NVal::Index && nv.index == forced))
        bad(Code::StructureMismatch, "protected cell does not carry the r_bar index");
      if (!prot_cell && nv.kind == NVal::Index && nv.index >= cut_at(ctx, l).value_or(0))
        bad(Code::IndexOutOfRange, "N index not below the cut");
      if (nv.kind == NVal::Index && !used.insert(nv.index).second)
        bad(Code::StructureMismatch, "N not injective");
    }
  }
  return errs;
}

bool icond_leq(const ICond& a, const ICond& b) {
  auto emb = qtree_embed(b.tree, a.tree);
  if (!emb) return false;
  for (Level l = 0; l < b.tree.parts.size(); ++l)
    for (std::size_t c = 0; c < b.tree.parts[l].size(); ++c) {
      std::size_t e = emb.value()[l][c];
      if (!label_contains(a.labels[l][e], b.labels[l][c])) return false;
      if (b.n[l][c].kind != NVal::Absent && a.n[l][e] != b.n[l][c]) return false;
    }
  return true;
}

ICond icond_one(const SymContext& ctx) {
  ICond q;
  auto prot = protected_indices(ctx);
  q.tree = qtree_of(ctx.r_bar.tree, ctx.top, prot);
  q.labels.resize(q.tree.parts.size());
  q.n.resize(q.tree.parts.size());
  for (Level l = 0; l < q.tree.parts.size(); ++l)
    for (const auto& c : q.tree.parts[l]) {
      q.labels[l].emplace_back();
      q.n[l].push_back(n_for(ctx, prot, l, c, pred_at(ctx.r_bar.tree, {ctx.top, c.front()}, l)->index));
    }
  return q;
}

Errors tilde_check(const Skeleton& s, const Cond0& p, const SymContext& ctx) {
  (void)s;
  Errors errs;
  if (!tree_leq(p.tree, ctx.r_bar.tree)) errs.push_back(make_error(Code::NotBelowRbar, "t(p) does not extend t(r_bar)"));
  for (auto& e : tilde_errors(p, ctx)) errs.push_back(e);
  return errs;
}

Outcome<ICond> rho0(const Skeleton& s, const Cond0& p, const SymContext& ctx) {
  if (auto errs = tilde_check(s, p, ctx); !errs.empty()) return errs.front();
  std::vector<std::uint32_t> support;
  for (const auto& n : p.tree.at_level(ctx.top))
    if (n.v.index < ctx.beta) support.push_back(n.v.index);
  ICond q;
  q.tree = qtree_of(p.tree, ctx.top, support);
  q.labels.resize(q.tree.parts.size());
  q.n.resize(q.tree.parts.size());
  auto prot = protected_indices(ctx);
  for (Level l = 0; l < q.tree.parts.size(); ++l)
    for (const auto& c : q.tree.parts[l]) {
      Vertex v = *pred_at(p.tree, {ctx.top, c.front()}, l);
      q.labels[l].push_back(p.label(v));
      q.n[l].push_back(n_for(ctx, prot, l, c, v.index));
    }
  return q;
}

Outcome<Cond0> lift0(const Skeleton& s, const Cond0& p, const ICond& q, const SymContext& ctx) {
  auto rp = rho0(s, p, ctx);
  if (!rp) return rp.error();
  if (!icond_leq(q, rp.value())) return make_error(Code::Precondition, "q is not below rho0(p)");
  const ICond& r = rp.value();
  auto emb = qtree_embed(r.tree, q.tree).value();
  const QTree& t = q.tree;
  // Assembled indices per cell of q; unset cells draw from the fresh pools.
  std::vector<std::vector<std::optional<std::uint32_t>>> idx(t.parts.size());
  std::vector<std::set<std::uint32_t>> taken(t.parts.size());
  for (Level l = 0; l < t.parts.size(); ++l) {
    idx[l].resize(t.parts[l].size());
    for (std::size_t c = 0; c < t.parts[l].size(); ++c) {
      if (l == 0) idx[l][c] = 0;
      if (l == t.top) idx[l][c] = t.parts[l][c].front();
      if (q.n[l][c].kind == NVal::Index) idx[l][c] = q.n[l][c].index;
    }
    for (std::size_t c = 0; c < r.tree.parts[l].size(); ++c) {
      std::uint32_t from_p = pred_at(p.tree, {ctx.top, r.tree.parts[l][c].front()}, l)->index;
      auto& slot = idx[l][emb[l][c]];
      if (slot && *slot != from_p) return make_error(Code::StructureMismatch, "assembled indices disagree");
      slot = from_p;
    }
    for (auto& v : idx[l])
      if (v) taken[l].insert(*v);
  }
  for (Level l = 1; l < t.top; ++l) {
    std::uint32_t next = cut_at(ctx, l).value_or(0);
    for (auto& v : idx[l]) {
      if (v) continue;
      while (next < f_lim(s, l) && (taken[l].count(next) || p.tree.contains({l, next}))) ++next;
      if (next >= f_lim(s, l))
        return make_error(Code::PoolExhausted, "no fresh index at level " + s.name(l));
      v = next;
      taken[l].insert(next);
    }
  }
  std::vector<Node> nodes;
  std::map<Vertex, Label> labels;
  for (Level l = 0; l < t.parts.size(); ++l)
    for (std::size_t c = 0; c < t.parts[l].size(); ++c) {
      Vertex v{l, *idx[l][c]};
      std::uint32_t parent = kNoParent;
      if (l > 0) parent = *idx[l - 1][*t.cell_of(static_cast<Level>(l - 1), t.parts[l][c].front())];
      nodes.push_back({v, parent});
      if (!q.labels[l][c].empty()) labels[v] = q.labels[l][c];
    }
  Cond0 qbar = Cond0::make(FlimTree(std::move(nodes)), labels);
  auto out = union0(s, p, qbar);
  if (!out) return make_error(Code::Incompatible, "lifted condition is incompatible with p");
  return out;
}

Cond1 rho1(const Cond1& p, Level max_level, std::uint32_t beta) {
  Cond1 out;
  for (const auto& b : p.blocks) {
    if (b.level > max_level) continue;
    if (mutated(Mutation::Rho1NoTruncate)) {
      out.put(b);
      continue;
    }
    std::vector<std::pair<Level, std::uint32_t>> cols;
    for (auto y : b.ys)
      if (y < beta) cols.push_back({b.level, y});
    for (auto& kept : restrict1_cols(Cond1{{b}}, cols).blocks) out.put(std::move(kept));
  }
  return out;
}

bool in_rho1_target(const Cond1& p, Level max_level, std::uint32_t beta) {
  for (const auto& b : p.blocks) {
    if (b.level > max_level) return false;
    for (auto y : b.ys)
      if (y >= beta) return false;
  }
  return true;
}

Outcome<Cond1> lift1(const Cond1& p, const Cond1& q, Level max_level, std::uint32_t beta) {
  if (!in_rho1_target(q, max_level, beta) || !leq1(q, rho1(p, max_level, beta)))
    return make_error(Code::Precondition, "q is not below rho1(p)");
  Cond1 out = p;
  for (const auto& bq : q.blocks) {
    const Block* bp = p.find(bq.level);
    if (!bp) {
      out.put(bq);
      continue;
    }
    std::vector<std::uint32_t> xs, ys;
    std::set_union(bp->xs.begin(), bp->xs.end(), bq.xs.begin(), bq.xs.end(), std::back_inserter(xs));
    std::set_union(bp->ys.begin(), bp->ys.end(), bq.ys.begin(), bq.ys.end(), std::back_inserter(ys));
    Block nb = make_block(bq.level, xs, ys, {});
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        auto a = bp->at(xs[xi], ys[yi]);
        auto b = bq.at(xs[xi], ys[yi]);
        if (a && b && *a != *b) return make_error(Code::Incompatible, "q disagrees with p");
        nb.cell(xi, yi) = a ? *a : b ? *b : 0;
      }
    out.put(std::move(nb));
  }
  return out;
}

Outcome<TqqIso> iso_tqq(const Skeleton& s, const Cond0& q0, const Cond0& q1, const SymContext& ctx) {
  auto tops = [&](const Cond0& q) -> Outcome<std::vector<Vertex>> {
    auto m = max_points(q.tree);
    for (Vertex v : m)
      if (v.level != ctx.top || v.index >= ctx.beta)
        return make_error(Code::StructureMismatch, "maximal point off the top level or not below beta");
    return m;
  };
  auto t0 = tops(q0);
  if (!t0) return t0.error();
  auto t1 = tops(q1);
  if (!t1) return t1.error();
  if (t0.value() != t1.value()) return make_error(Code::StructureMismatch, "different maximal points");
  auto u0 = union0(s, q0, ctx.r_bar);
  auto u1 = union0(s, q1, ctx.r_bar);
  if (!u0 || !u1) return make_error(Code::Incompatible, "condition incompatible with r_bar");
  auto r0 = rho0(s, u0.value(), ctx);
  if (!r0) return r0.error();
  auto r1 = rho0(s, u1.value(), ctx);
  if (!r1) return r1.error();
  if (r0->tree != r1->tree) return make_error(Code::StructureMismatch, "projected trees differ");
  if (!same_meet_structure(q0.tree, t0.value(), q1.tree, t1.value()))
    return make_error(Code::StructureMismatch, "meet structure differs");
  return TqqIso{q0.tree, q1.tree};
}

Outcome<Cond0> apply_tqq(const TqqIso& iso, const Cond0& p) {
  if (p.tree != iso.from) return make_error(Code::StructureMismatch, "condition not on the source tree");
  return restrict0_structural(p, iso.to);
}

Outcome<PName> transport_name_tqq(const PName& x, const TqqIso& iso) {
  std::vector<NameEntry> es;
  for (const auto& e : x.entries) {
    NameRef child = e.child;
    if (!child.is_atom()) {
      auto sub = transport_name_tqq(child.name(), iso);
      if (!sub) return sub.error();
      child = name_ref(std::move(sub).value());
    }
    auto c0 = apply_tqq(iso, e.cond.c0);
    if (!c0) return c0.error();
    es.push_back({std::move(child), ProductCond{std::move(c0).value(), e.cond.c1}});
  }
  return make_name(std::move(es));
}

Errors in_restricted(const ProductCond& v, const RestrictedProduct& d) {
  Errors errs;
  if (v.c0.tree != d.s_tree) errs.push_back(make_error(Code::DomainMismatch, "P0 part not on t(s)"));
  for (const auto& b : v.c1.blocks) {
    if (b.level == d.top) continue;
    if (b.level > d.top) {
      errs.push_back(make_error(Code::DomainMismatch, "P1 part above the top level"));
      continue;
    }
    for (auto y : b.ys)
      if (!std::binary_search(d.cols.begin(), d.cols.end(), std::pair{b.level, y}))
        errs.push_back(make_error(Code::DomainMismatch, "column outside the restricted set"));
  }
  return errs;
}

namespace {

std::uint32_t col_image(const Aut1& pi, Level l, std::uint32_t y) {
  const Aut1Level* L = pi.find(l);
  if (!L) return y;
  auto it = std::lower_bound(L->supp.begin(), L->supp.end(), y);
  if (it == L->supp.end() || *it != y) return y;
  return L->f[it - L->supp.begin()];
}

}  // namespace

Outcome<ProductCond> tpi_cond(const AutPair& pi, const ProductCond& v, const RestrictedProduct& d) {
  if (auto errs = in_restricted(v, d); !errs.empty()) return errs.front();
  ProductCond out;
  out.c0 = apply0(pi.a0, v.c0);
  for (const auto& b : v.c1.blocks) {
    if (b.level == d.top) {
      out.c1.put(b);
      continue;
    }
    std::vector<std::pair<std::uint32_t, std::size_t>> ys;
    for (std::size_t k = 0; k < b.ys.size(); ++k) ys.push_back({col_image(pi.a1, b.level, b.ys[k]), k});
    std::sort(ys.begin(), ys.end());
    std::vector<std::uint32_t> ny;
    for (auto& [y, k] : ys) ny.push_back(y);
    Block nb = make_block(b.level, b.xs, ny, {});
    for (std::size_t xi = 0; xi < b.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) nb.cell(xi, yi) = b.cell(xi, ys[yi].second);
    out.c1.put(std::move(nb));
  }
  return out;
}

RestrictedProduct tpi_data(const AutPair& pi, const RestrictedProduct& d) {
  RestrictedProduct out;
  out.s_tree = apply0(pi.a0, d.s_tree);
  out.top = d.top;
  for (auto [l, y] : d.cols) out.cols.push_back({l, col_image(pi.a1, l, y)});
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

Outcome<PName> transport_tpi(const PName& x, const AutPair& pi, const RestrictedProduct& d) {
  std::vector<NameEntry> es;
  for (const auto& e : x.entries) {
    NameRef child = e.child;
    if (!child.is_atom()) {
      auto sub = transport_tpi(child.name(), pi, d);
      if (!sub) return sub.error();
      child = name_ref(std::move(sub).value());
    }
    auto c = tpi_cond(pi, e.cond, d);
    if (!c) return c.error();
    es.push_back({std::move(child), std::move(c).value()});
  }
  return make_name(std::move(es));
}

namespace {

std::vector<Cond1> widenings(const Skeleton& s, const Cond1& v, const RestrictedProduct& d, std::uint32_t bound) {
  std::vector<Cond1> out{v};
  for (const auto& b : v.blocks) {
    if (b.level >= d.top) continue;
    std::vector<std::uint32_t> ys = b.ys;
    for (std::uint32_t y = 0; y < std::min(s.f(b.level), bound); ++y)
      if (!std::binary_search(d.cols.begin(), d.cols.end(), std::pair{b.level, y})) ys.push_back(y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (ys == b.ys) continue;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    Block base = make_block(b.level, b.xs, ys, {});
    for (std::size_t xi = 0; xi < b.xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        if (auto bit = b.at(b.xs[xi], ys[yi]))
          base.cell(xi, yi) = *bit;
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

PName tilde_extend(const Skeleton& s, const PName& x, const RestrictedProduct& d, std::uint32_t bound) {
  std::vector<NameEntry> es;
  for (const auto& e : x.entries) {
    NameRef child = e.child.is_atom() ? e.child : name_ref(tilde_extend(s, e.child.name(), d, bound));
    for (auto& c1 : widenings(s, e.cond.c1, d, bound)) es.push_back({child, ProductCond{e.cond.c0, std::move(c1)}});
  }
  return make_name(std::move(es));
}

MBetaSpace::MBetaSpace(const Skeleton& s, Level kappa, std::uint32_t beta, std::uint32_t bound) : bound_(bound) {
  const Level top = static_cast<Level>(kappa + 1);
  per_label_ = 1;
  for (std::uint32_t k = 0; k < bound; ++k) per_label_ *= 3;
  if (beta == 0 || top >= s.size()) return;
  // Column universe: Succ' levels below kappa (at or below top when kappa is
  // a successor), indices below min(F, beta).
  for (Level l : succ_prime(s)) {
    bool ok = s.is_limit(kappa) ? l < kappa : l <= top;
    if (!ok) continue;
    for (std::uint32_t j = 0; j < std::min(s.f(l), beta); ++j) cols_.push_back({l, j});
  }
  // Chains below a top vertex: one index per level 1..top-1.
  std::vector<std::vector<std::uint32_t>> chains{{}};
  for (Level l = 1; l < top; ++l) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& c : chains)
      for (std::uint32_t i = 0; i < f_lim(s, l); ++i) {
        auto d = c;
        d.push_back(i);
        next.push_back(std::move(d));
      }
    chains = std::move(next);
  }
  const std::uint32_t ntop = std::min(beta, f_lim(s, top));
  std::set<FlimTree> trees{FlimTree{}};
  // Every nonempty set of top indices, each with a chain; invalid unions drop out.
  std::function<void(std::uint32_t, FlimTree)> rec = [&](std::uint32_t from, FlimTree acc) {
    for (std::uint32_t j = from; j < ntop; ++j)
      for (const auto& c : chains) {
        auto ch = c;
        ch.push_back(j);
        auto u = acc.empty() ? Outcome<FlimTree>(FlimTree::chain(ch)) : tree_union(s, acc, FlimTree::chain(ch));
        if (!u || !validate_tree(s, u.value()).empty()) continue;
        trees.insert(u.value());
        rec(j + 1, u.value());
      }
  };
  rec(0, FlimTree{});
  trees_.assign(trees.begin(), trees.end());
  std::uint64_t acc = 0;
  for (const auto& t : trees_) {
    std::vector<Vertex> lv;
    for (const auto& n : t.nodes())
      if (s.labelable(n.v.level)) lv.push_back(n.v);
    std::uint64_t count = std::uint64_t(1) << cols_.size();
    for (std::size_t k = 0; k < lv.size(); ++k) count *= per_label_;
    labelable_.push_back(std::move(lv));
    acc += count;
    prefix_.push_back(acc);
  }
}

namespace {

Label decode_label(std::uint64_t code, std::uint32_t bound) {
  Label l;
  for (std::uint32_t z = 0; z < bound; ++z, code /= 3)
    if (code % 3) l.push_back({z, static_cast<std::uint8_t>(code % 3 - 1)});
  return l;
}

std::optional<std::uint64_t> encode_label(const Label& l, std::uint32_t bound) {
  std::uint64_t code = 0, mul = 1;
  for (std::uint32_t z = 0; z < bound; ++z, mul *= 3)
    if (auto v = label_at(l, z)) code += mul * (*v + 1u);
  for (const auto& b : l)
    if (b.pos >= bound) return std::nullopt;
  return code;
}

}  // namespace

MTuple MBetaSpace::at(std::uint64_t rank) const {
  std::size_t k = std::upper_bound(prefix_.begin(), prefix_.end(), rank) - prefix_.begin();
  std::uint64_t local = rank - (k == 0 ? 0 : prefix_[k - 1]);
  MTuple m;
  std::uint64_t colmask = local % (std::uint64_t(1) << cols_.size());
  local >>= cols_.size();
  std::map<Vertex, Label> labels;
  // Last labelable vertex varies fastest.
  for (std::size_t v = labelable_[k].size(); v-- > 0;) {
    auto code = local % per_label_;
    local /= per_label_;
    if (code) labels[labelable_[k][v]] = decode_label(code, bound_);
  }
  m.cond = Cond0::make(trees_[k], labels);
  for (std::size_t c = 0; c < cols_.size(); ++c)
    if ((colmask >> c) & 1u) m.columns.push_back(cols_[c]);
  return m;
}

std::optional<std::uint64_t> MBetaSpace::rank(const MTuple& m) const {
  auto it = std::lower_bound(trees_.begin(), trees_.end(), m.cond.tree);
  if (it == trees_.end() || *it != m.cond.tree) return std::nullopt;
  std::size_t k = it - trees_.begin();
  std::uint64_t local = 0;
  for (Vertex v : labelable_[k]) {
    auto code = encode_label(m.cond.label(v), bound_);
    if (!code) return std::nullopt;
    local = local * per_label_ + *code;
  }
  std::uint64_t colmask = 0;
  for (const auto& c : m.columns) {
    auto ci = std::lower_bound(cols_.begin(), cols_.end(), c);
    if (ci == cols_.end() || *ci != c) return std::nullopt;
    colmask |= std::uint64_t(1) << (ci - cols_.begin());
  }
  local = (local << cols_.size()) | colmask;
  return (k == 0 ? 0 : prefix_[k - 1]) + local;
}

std::vector<MTuple> MBetaSpace::page(std::uint64_t offset, std::uint64_t limit) const {
  std::vector<MTuple> out;
  for (std::uint64_t r = offset; r < size() && out.size() < limit; ++r) out.push_back(at(r));
  return out;
}

std::vector<MTuple> enum_m_beta(const Skeleton& s, Level kappa, std::uint32_t beta, std::uint32_t bound,
                                std::uint64_t offset, std::uint64_t limit) {
  return MBetaSpace(s, kappa, beta, bound).page(offset, limit);
}

std::optional<std::uint64_t> mtuple_rank(const MBetaSpace& space, const MTuple& m) { return space.rank(m); }

}  // namespace forcelab
