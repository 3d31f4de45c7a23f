// P0-POSET, P1-POSET, P0-SPLIT-DENSE, P0-ANTICHAIN, P0-RESTRICT-DENSE.

#include <algorithm>
#include <map>
#include <set>

#include "props_common.hpp"

namespace forcelab::props {

namespace {

void recheck_into(Verdict& v, const Skeleton& s, const FlimTree& t, const std::string& what) {
  for (const auto& e : tree_recheck(s, t)) v.check(false, [&] { return what + ": " + e; });
}

void valid_into(Verdict& v, const Skeleton& s, const Cond0& p, const std::string& what) {
  auto errs = validate_cond0(s, p);
  v.check(errs.empty(), [&] { return what + " invalid: " + describe(errs); });
  recheck_into(v, s, p.tree, what);
}

// ---------------------------------------------------------------- P0-POSET

struct P0Poset {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond0> u;
  OrderIndex ix;
  std::map<Cond0, std::size_t> where;
  std::vector<FlimTree> trees;
  OrderIndex tix;
  std::map<FlimTree, std::size_t> twhere;
  std::size_t max_vertices = 5, max_tree_vertices = 6;

  CaseResult cond_case(std::size_t i) const {
    const Cond0& p = u[i];
    Verdict v;
    recheck_into(v, s, p.tree, "t(p)");
    v.check(leq0(p, p), "leq0 not reflexive");
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Cond0& q = u[j];
      if (j != i && ix.le(i, j) && ix.le(j, i)) v.check(false, [&] { return "antisymmetry fails against " + show(q); });
      if (ix.le(j, i)) v.check(ix.subset(j, i), [&] { return "transitivity fails below " + show(q); });
      auto un = union0(s, p, q);
      v.check(un.ok() == compat0(s, p, q), "compat0 disagrees with union0");
      if (!un) {
        v.check(ix.meet_empty(i, j), [&] { return "union0 fails but a common extension exists with " + show(q); });
        continue;
      }
      const Cond0& r = un.value();
      if (!validate_cond0(s, r).empty()) valid_into(v, s, r, "union with " + show(q));
      v.check(leq0(r, p) && leq0(r, q), "union is not below both");
      // Greatest lower bound: every common extension in the universe lies
      // below r. A union too large for the universe has none there.
      auto at = where.find(r);
      if (at != where.end())
        v.check(ix.meet_within(i, j, at->second), [&] { return "a common extension with " + show(q) + " is not below the union"; });
      else if (r.tree.size() > max_vertices)
        v.check(ix.meet_empty(i, j), [&] { return "common extension smaller than the union with " + show(q); });
      else
        v.check(false, [&] { return "union with " + show(q) + " is missing from the universe"; });
    }
    return v.result({{"p", encode(p)}});
  }

  CaseResult tree_case(std::size_t i) const {
    const FlimTree& t = trees[i];
    Verdict v;
    recheck_into(v, s, t, "t");
    v.check(tree_leq(t, t), "tree_leq not reflexive");
    v.check(restrict_band(t, 0, s.top()) == t, "restrict_band(t, 0, top) != t");
    for (Level hi = 0; hi <= s.top(); ++hi)
      v.check(validate_tree(s, restrict_band(t, 0, hi)).empty(), [&] { return "band below " + std::to_string(hi) + " invalid"; });
    v.check(validate_tree(s, restrict_to(t, max_points(t))).empty() && restrict_to(t, max_points(t)) == t,
            "restrict_to(max points) differs");
    for (std::size_t j = 0; j < trees.size(); ++j) {
      const FlimTree& w = trees[j];
      if (j != i && tix.le(i, j) && tix.le(j, i)) v.check(false, "tree_leq antisymmetry fails");
      if (tix.le(j, i)) v.check(tix.subset(j, i), "tree_leq transitivity fails");
      auto un = tree_union(s, t, w);
      if (!un || !validate_tree(s, un.value()).empty()) {
        v.check(tix.meet_empty(i, j), "tree_union fails but a common extension exists");
        continue;
      }
      recheck_into(v, s, un.value(), "tree union");
      v.check(tree_leq(un.value(), t) && tree_leq(un.value(), w), "tree union does not extend both");
      auto at = twhere.find(un.value());
      if (at != twhere.end())
        v.check(tix.meet_within(i, j, at->second), "a common extension does not extend the union");
      else if (un.value().size() > max_tree_vertices)
        v.check(tix.meet_empty(i, j), "common extension smaller than the tree union");
      else
        v.check(false, "tree union missing from the universe");
    }
    return v.result({{"tree", encode(t)}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond0 p = gen_cond0(s, rng, 3, bound);
    Cond0 q = gen_extension0(s, rng, p, 3, bound);
    Cond0 r = gen_extension0(s, rng, q, 3, bound);
    Cond0 x = gen_cond0(s, rng, 3, bound);
    Cond0 p2 = relabel0(s, rng, p.tree, bound);
    Verdict v;
    for (auto [c, n] : {std::pair{&p, "p"}, {&q, "q"}, {&r, "r"}, {&x, "x"}, {&p2, "p2"}}) valid_into(v, s, *c, n);
    v.check(leq0(p, p) && leq0(x, x), "leq0 not reflexive");
    v.check(leq0(q, p) && leq0(r, q), "generated extensions are not below");
    v.check(leq0(r, p), "transitivity fails");
    if (leq0(p, p2) && leq0(p2, p)) v.check(p == p2, "antisymmetry fails for relabelings of t(p)");
    if (leq0(p, x) && leq0(x, p)) v.check(p == x, "antisymmetry fails");
    if (auto un = union0(s, p, x)) {
      valid_into(v, s, un.value(), "union(p,x)");
      v.check(leq0(un.value(), p) && leq0(un.value(), x), "union is not below both");
    }
    Cond0 a = gen_weakening0(rng, r), b = gen_weakening0(rng, r);
    v.check(leq0(r, a) && leq0(r, b), "weakenings are not above r");
    auto un = union0(s, a, b);
    v.check(un.ok(), "weakenings of r are incompatible");
    if (un) {
      valid_into(v, s, un.value(), "union(a,b)");
      v.check(leq0(r, un.value()), "r is not below the union of its weakenings");
    }
    // f_lim monotone on a random monotone skeleton.
    Skeleton k;
    k.levels.push_back({"0", LevelKind::Base, 1});
    std::uint32_t f = 2 + rng.below(3);
    k.levels.push_back({"w", LevelKind::Omega, f});
    const unsigned extra = 2 + rng.below(5);
    for (unsigned e = 0; e < extra; ++e) {
      f += rng.below(3);
      bool lim = k.levels.back().kind != LevelKind::Limit && rng.coin();
      k.levels.push_back({"l" + std::to_string(e), lim ? LevelKind::Limit : LevelKind::Successor, f});
    }
    v.check(validate_skeleton(k).empty(), "random skeleton invalid");
    for (Level l = 2; l < k.size(); ++l) v.check(f_lim(k, l - 1) <= f_lim(k, l), "f_lim drops");
    return v.result({{"p", encode(p)}, {"q", encode(q)}, {"r", encode(r)}, {"x", encode(x)}, {"p2", encode(p2)},
                     {"skeleton", encode(k)}});
  }
};

std::unique_ptr<Checker> make_p0_poset(const Env& env, Mode mode) {
  auto st = std::make_shared<P0Poset>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) {
    st->u = all_cond0(env.skel, env.bound, st->max_vertices);
    st->ix = build_order(st->u, [](const Cond0& a, const Cond0& b) { return leq0(a, b); });
    for (std::size_t k = 0; k < st->u.size(); ++k) st->where[st->u[k]] = k;
    st->trees = all_trees(env.skel, st->max_tree_vertices);
    st->tix = build_order(st->trees, [](const FlimTree& a, const FlimTree& b) { return tree_leq(a, b); });
    for (std::size_t k = 0; k < st->trees.size(); ++k) st->twhere[st->trees[k]] = k;
  }
  const std::uint64_t n = st->u.size() + st->trees.size();
  return checker(
      n,
      [st](std::uint64_t i) { return i < st->u.size() ? st->cond_case(i) : st->tree_case(i - st->u.size()); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- P1-POSET

// Common lower bound built cell by cell; meaningful when compat1 holds.
Cond1 glue1(const Cond1& p, const Cond1& q) {
  Cond1 out;
  std::set<Level> lv;
  for (const auto& b : p.blocks) lv.insert(b.level);
  for (const auto& b : q.blocks) lv.insert(b.level);
  for (Level l : lv) {
    Block a = block(p, l), b = block(q, l);
    std::vector<std::uint32_t> xs, ys;
    std::set_union(a.xs.begin(), a.xs.end(), b.xs.begin(), b.xs.end(), std::back_inserter(xs));
    std::set_union(a.ys.begin(), a.ys.end(), b.ys.begin(), b.ys.end(), std::back_inserter(ys));
    Block c = make_block(l, xs, ys, {});
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        auto va = a.at(xs[xi], ys[yi]), vb = b.at(xs[xi], ys[yi]);
        c.cell(xi, yi) = va ? *va : (vb ? *vb : 0);
      }
    out.put(std::move(c));
  }
  return out;
}

// Independent clash search.
bool clash1(const Cond1& p, const Cond1& q) {
  for (const auto& a : p.blocks)
    if (const Block* b = q.find(a.level))
      for (auto x : a.xs)
        for (auto y : a.ys) {
          auto vb = b->at(x, y);
          if (vb && *vb != *a.at(x, y)) return true;
        }
  return false;
}

struct P1Poset {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond1> u;
  OrderIndex ix;

  void filter_checks(Verdict& v, const Filter1& h) const {
    for (const auto& cols : {std::vector<std::pair<Level, std::uint32_t>>{{2, 0}, {4, 1}}, all_columns(s, 2),
                             all_columns(s, 1)}) {
      Filter1 r = filter_restrict1_cols(h, cols);
      v.check(filter_valid(s, r), "column restriction breaks compatibility of generators");
      for (const auto& g : r.gens) v.check(validate_cond1(s, g).empty(), "restricted generator invalid");
    }
  }

  CaseResult exhaustive(std::size_t i) const {
    const Cond1& p = u[i];
    Verdict v;
    v.check(validate_cond1(s, p).empty(), "p invalid");
    v.check(leq1(p, p), "leq1 not reflexive");
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Cond1& q = u[j];
      if (j != i && ix.le(i, j) && ix.le(j, i)) v.check(false, [&] { return "antisymmetry fails against " + show(q); });
      if (ix.le(j, i)) {
        v.check(ix.subset(j, i), [&] { return "transitivity fails below " + show(q); });
        filter_checks(v, Filter1{{p, q}});
      }
      auto cb = ix.common_below(i, j);
      v.check(compat1(p, q) == !cb.empty(), [&] { return "compat1 disagrees with common extensions against " + show(q); });
      v.check(compat1(p, q) == !clash1(p, q), "compat1 disagrees with the cell check");
      if (auto un = union1(p, q)) {
        v.check(validate_cond1(s, un.value()).empty(), "union1 invalid");
        v.check(leq1(un.value(), p) && leq1(un.value(), q), "union1 not below both");
        for (std::size_t k : cb) v.check(leq1(u[k], un.value()), "common extension not below union1");
      }
    }
    return v.result({{"p", encode(p)}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond1 p = gen_cond1(s, rng, 3, bound);
    Cond1 q = gen_extension1(s, rng, p, 3, bound);
    Cond1 r = gen_extension1(s, rng, q, 3, bound);
    Cond1 x = gen_cond1(s, rng, 3, bound);
    Verdict v;
    for (const Cond1* c : {&p, &q, &r, &x}) v.check(validate_cond1(s, *c).empty(), "generated condition invalid");
    v.check(leq1(p, p), "leq1 not reflexive");
    v.check(leq1(q, p) && leq1(r, q), "generated extensions are not below");
    v.check(leq1(r, p), "transitivity fails");
    if (leq1(p, x) && leq1(x, p)) v.check(p == x, "antisymmetry fails");
    v.check(compat1(p, x) == !clash1(p, x), "compat1 disagrees with the cell check");
    if (compat1(p, x)) {
      Cond1 g = glue1(p, x);
      v.check(validate_cond1(s, g).empty() && leq1(g, p) && leq1(g, x), "glued lower bound fails");
    }
    if (auto un = union1(p, x)) {
      v.check(validate_cond1(s, un.value()).empty(), "union1 invalid");
      v.check(leq1(un.value(), p) && leq1(un.value(), x), "union1 not below both");
    }
    Cond1 a = gen_weakening1(rng, r), b = gen_weakening1(rng, r);
    v.check(leq1(r, a) && leq1(r, b) && compat1(a, b), "weakenings of r misbehave");
    if (auto un = union1(a, b)) v.check(leq1(r, un.value()), "r is not below the union of its weakenings");
    filter_checks(v, Filter1{{p, q, r, a, b}});
    return v.result({{"p", encode(p)}, {"q", encode(q)}, {"r", encode(r)}, {"x", encode(x)}});
  }
};

std::unique_ptr<Checker> make_p1_poset(const Env& env, Mode mode) {
  auto st = std::make_shared<P1Poset>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) {
    st->u = all_cond1(env.skel, env.bound);
    st->ix = build_order(st->u, [](const Cond1& a, const Cond1& b) { return leq1(a, b); });
  }
  return checker(
      st->u.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- P0-SPLIT-DENSE

bool split_compatible(const Cond0& a, const Cond0& b, Level lambda) {
  for (const auto& n : b.tree.at_level(lambda))
    if (!a.tree.contains(n.v)) return false;
  return true;
}

Cond0 graft(const Cond0& a, const Cond0& b, Level lambda) {
  std::vector<Node> ns(a.tree.nodes().begin(), a.tree.nodes().end());
  std::map<Vertex, Label> ls;
  for (std::size_t k = 0; k < a.tree.size(); ++k) ls[a.tree.nodes()[k].v] = a.labels[k];
  for (std::size_t k = 0; k < b.tree.size(); ++k) {
    const Node& n = b.tree.nodes()[k];
    if (n.v.level <= lambda) continue;
    ns.push_back(n);
    ls[n.v] = b.labels[k];
  }
  return Cond0::make(FlimTree(std::move(ns)), ls);
}

void split_check(Verdict& v, const Skeleton& s, const Cond0& a, const Cond0& b, Level lambda) {
  Cond0 p = graft(a, b, lambda);
  valid_into(v, s, p, "graft");
  v.check(leq0(restrict0_band(p, 0, lambda), a), "graft's lower band is not below a");
  v.check(leq0(restrict0_band(p, lambda, s.top()), b), "graft's upper band is not below b");
}

struct SplitDense {
  Skeleton s;
  std::uint32_t bound;
  // Per lambda: distinct lower and upper pieces.
  std::vector<Level> lambdas;
  std::vector<std::vector<Cond0>> lower, upper;
  std::vector<std::pair<std::size_t, std::size_t>> cases;  // (lambda slot, lower index)

  CaseResult exhaustive(std::size_t c) const {
    auto [li, ai] = cases[c];
    const Level lambda = lambdas[li];
    const Cond0& a = lower[li][ai];
    Verdict v;
    std::size_t tested = 0;
    for (const auto& b : upper[li]) {
      if (!split_compatible(a, b, lambda)) continue;
      ++tested;
      split_check(v, s, a, b, lambda);
    }
    CaseResult r = v.result({{"lambda", lambda}, {"a", encode(a)}});
    r.counters["pairs"] = tested;
    return r;
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    const Level lambda = static_cast<Level>(1 + rng.below(s.top() - 1));
    Cond0 p = gen_cond0(s, rng, 4, bound);
    Cond0 q = gen_extension0(s, rng, p, 4, bound);
    Cond0 a = restrict0_band(relabel0(s, rng, p.tree, bound), 0, lambda);
    Cond0 b = restrict0_band(relabel0(s, rng, q.tree, bound), lambda, s.top());
    if (!split_compatible(a, b, lambda)) a = restrict0_band(relabel0(s, rng, q.tree, bound), 0, lambda);
    Verdict v;
    split_check(v, s, a, b, lambda);
    return v.result({{"lambda", lambda}, {"a", encode(a)}, {"b", encode(b)}});
  }
};

std::unique_ptr<Checker> make_split(const Env& env, Mode mode) {
  auto st = std::make_shared<SplitDense>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) {
    auto u = all_cond0(env.skel, env.bound, 5);
    for (Level lambda = 1; lambda < env.skel.top(); ++lambda) {
      std::set<Cond0> lo, hi;
      for (const auto& p : u) {
        lo.insert(restrict0_band(p, 0, lambda));
        hi.insert(restrict0_band(p, lambda, env.skel.top()));
      }
      st->lambdas.push_back(lambda);
      st->lower.emplace_back(lo.begin(), lo.end());
      st->upper.emplace_back(hi.begin(), hi.end());
      for (std::size_t k = 0; k < lo.size(); ++k) st->cases.push_back({st->lambdas.size() - 1, k});
    }
  }
  return checker(
      st->cases.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- P0-ANTICHAIN

std::vector<Cond0> greedy_antichain(const Skeleton& s, const std::vector<const Cond0*>& order) {
  std::vector<Cond0> a;
  for (const Cond0* p : order)
    if (std::none_of(a.begin(), a.end(), [&](const Cond0& x) { return compat0(s, x, *p); })) a.push_back(*p);
  return a;
}

// Antichains of the height <= lambda part of `pool` in three fixed orders.
std::vector<std::vector<Cond0>> antichains(const Skeleton& s, const std::vector<Cond0>& pool, Level lambda) {
  std::vector<const Cond0*> q;
  for (const auto& p : pool)
    if (height(p.tree) <= lambda) q.push_back(&p);
  std::vector<std::vector<Cond0>> out;
  out.push_back(greedy_antichain(s, q));
  std::reverse(q.begin(), q.end());
  out.push_back(greedy_antichain(s, q));
  Rng rng(0x5eed);
  for (std::size_t k = q.size(); k > 1; --k) std::swap(q[k - 1], q[rng.below(k)]);
  out.push_back(greedy_antichain(s, q));
  return out;
}

void antichain_check(Verdict& v, const Skeleton& s, const Cond0& p, const std::vector<Cond0>& a, Level lambda) {
  bool met = false;
  for (const auto& x : a) {
    auto r = union0(s, p, x);
    if (!r) continue;
    met = true;
    v.check(leq0(r.value(), p) && leq0(r.value(), x) && validate_cond0(s, r.value()).empty(),
            "common extension with the antichain is malformed");
    break;
  }
  v.check(met, [&] { return "antichain of height <= " + std::to_string(lambda) + " is not maximal against p"; });
}

struct Antichain {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond0> u;
  std::vector<std::pair<Level, std::vector<std::vector<Cond0>>>> chains;  // per lambda
  std::vector<std::vector<Cond0>> sampled_chains;                          // lambda = 1

  void self_check(Verdict& v, const std::vector<Cond0>& a, Level lambda) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      v.check(height(a[i].tree) <= lambda, "antichain member above lambda");
      for (std::size_t j = i + 1; j < a.size(); ++j) v.check(!compat0(s, a[i], a[j]), "antichain members compatible");
    }
  }

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    for (const auto& [lambda, as] : chains)
      for (const auto& a : as) {
        if (i == 0) self_check(v, a, lambda);
        antichain_check(v, s, u[i], a, lambda);
      }
    return v.result({{"p", encode(u[i])}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond0 p = gen_cond0(s, rng, 4, std::min(bound, 3u));
    Verdict v;
    for (const auto& a : sampled_chains) antichain_check(v, s, p, a, 1);
    return v.result({{"p", encode(p)}});
  }
};

std::unique_ptr<Checker> make_antichain(const Env& env, Mode mode) {
  auto st = std::make_shared<Antichain>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) {
    st->u = all_cond0(env.skel, env.bound, 5);
    for (Level lambda = 0; lambda < env.skel.top(); ++lambda)
      st->chains.push_back({lambda, antichains(env.skel, st->u, lambda)});
  } else {
    std::vector<Cond0> pool;
    for (const auto& t : all_trees(env.skel, 5))
      if (height(t) <= 1)
        for (auto& c : all_labelings(env.skel, t, std::min(env.bound, 3u))) pool.push_back(std::move(c));
    st->sampled_chains = antichains(env.skel, pool, 1);
  }
  return checker(
      st->u.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- P0-RESTRICT-DENSE

struct DenseSet {
  std::string name;
  Pred0 pred;
};

std::vector<DenseSet> dense_sets(const Skeleton& s, std::uint32_t bound) {
  std::vector<DenseSet> out;
  out.push_back({"level-1 vertices decide position 0", [](const Cond0& r) {
                   for (std::size_t k = 0; k < r.tree.size(); ++k)
                     if (r.tree.nodes()[k].v.level == 1 && !label_at(r.labels[k], 0)) return false;
                   return true;
                 }});
  out.push_back({"last labelable vertex decides every position", [s, bound](const Cond0& r) {
                   for (std::size_t k = r.tree.size(); k-- > 0;)
                     if (s.labelable(r.tree.nodes()[k].v.level)) {
                       for (std::uint32_t z = 0; z < bound; ++z)
                         if (!label_at(r.labels[k], z)) return false;
                       return true;
                     }
                   return true;
                 }});
  out.push_back({"everything", [](const Cond0&) { return true; }});
  return out;
}

void restrict_dense_check(Verdict& v, const Skeleton& s, std::uint32_t bound, const Cond0& p, const Cond0& q) {
  for (const auto& d : dense_sets(s, bound)) {
    auto w = dense_lift_check0(s, p, d.pred, q, bound);
    v.check(w.ok(), [&] { return "no witness for '" + d.name + "' below " + show(q); });
    if (!w) continue;
    valid_into(v, s, w.value(), "witness");
    v.check(leq0(w.value(), q), "witness not below q");
    auto r = restrict0_tree(w.value(), p.tree);
    v.check(r.ok() && d.pred(r.value()), [&] { return "witness restricted to t(p) is not in '" + d.name + "'"; });
    Filter0 h{{p, q, w.value()}};
    Filter0 hr = filter_restrict0_tree(h, p.tree);
    v.check(hr.gens.size() == 3 && filter_valid(s, hr), "restricted filter generators incompatible");
  }
}

struct RestrictDense {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond0> u;
  OrderIndex ix;

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    for (std::size_t j : ix.below(i)) restrict_dense_check(v, s, bound, u[i], u[j]);
    return v.result({{"p", encode(u[i])}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond0 p = gen_cond0(s, rng, 3, bound);
    Cond0 q = gen_extension0(s, rng, p, 3, bound);
    Verdict v;
    restrict_dense_check(v, s, bound, p, q);
    return v.result({{"p", encode(p)}, {"q", encode(q)}});
  }
};

std::unique_ptr<Checker> make_restrict(const Env& env, Mode mode) {
  auto st = std::make_shared<RestrictDense>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) {
    st->u = all_cond0(env.skel, env.bound, 5);
    st->ix = build_order(st->u, [](const Cond0& a, const Cond0& b) { return leq0(a, b); });
  }
  return checker(
      st->u.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

}  // namespace

void add_conditions(std::vector<PropertyInfo>& out) {
  out.push_back({"P0-POSET", "conditions",
                 "leq0 is a partial order with union0 as greatest lower bound; tree laws of the core module", true,
                 make_p0_poset});
  out.push_back({"P0-SPLIT-DENSE", "conditions",
                 "every compatible pair of lower and upper bands has a common refinement in P0", true, make_split});
  out.push_back({"P0-ANTICHAIN", "conditions",
                 "maximal antichains of the height-bounded subposet stay maximal in P0", true, make_antichain});
  out.push_back({"P0-RESTRICT-DENSE", "conditions",
                 "dense sets of P0 restricted to t(p) lift below p; restricted filters stay filters", true,
                 make_restrict});
  out.push_back({"P1-POSET", "conditions",
                 "leq1 is a partial order, compat1 is common extension, restricted filters stay filters", true,
                 make_p1_poset});
}

}  // namespace forcelab::props
