// NAME-BAR-VAL, NAME-EQUIVARIANCE, SYM-CANONICAL, CLOUD-DISJOINT, CLOUD-DIFF-DENSE.

#include <algorithm>
#include <map>
#include <set>

#include "props_common.hpp"

namespace forcelab::props {

namespace {

// ---------------------------------------------------------------- shared

// Valuation written out directly: an entry counts when some generator
// extends its condition.
bool member(const FilterP& h, const ProductCond& c) {
  return std::any_of(h.gens.begin(), h.gens.end(),
                     [&](const ProductCond& g) { return leq0(g.c0, c.c0) && leq1(g.c1, c.c1); });
}

Value value_of(const PName& x, const FilterP& h) {
  std::set<Value> elems;
  for (const auto& e : x.entries)
    if (member(h, e.cond)) elems.insert(e.child.is_atom() ? Value{e.child.atom(), {}} : value_of(e.child.name(), h));
  return Value{std::nullopt, std::vector<Value>(elems.begin(), elems.end())};
}

using props::show;
std::string show(const PName& x) { return encode(x).dump(); }

ProductCond pc0(Cond0 c) { return ProductCond{std::move(c), {}}; }
ProductCond pc1(Cond1 c) { return ProductCond{{}, std::move(c)}; }
Cond1 one_block(Level l, std::uint32_t x, std::uint32_t y, std::uint8_t b) {
  Cond1 c;
  c.put(make_block(l, {x}, {y}, {b}));
  return c;
}

// The finite name family of the exhaustive regime on the standard
// five-level skeleton: atoms from levels 1 and 2, eight entry conditions,
// every rank-1 name with at most two entries, and every rank-2 name with at
// most two entries over six chosen rank-1 names.
struct NameWorld {
  Skeleton s;
  std::uint32_t bound = 2;
  std::vector<PName> names;
  std::vector<AutPair> auts;
  std::vector<FilterP> filters;
};

std::vector<ProductCond> entry_conditions(const Skeleton& s) {
  std::vector<ProductCond> out;
  out.push_back({});
  out.push_back(pc0(Cond0::make(FlimTree::chain({0}), {{{1, 0}, {{0, 1}}}})));
  out.push_back(pc0(Cond0::make(FlimTree::chain({1}), {{{1, 1}, {{1, 0}}}})));
  out.push_back(pc0(Cond0::make(FlimTree::chain({0, 1}), {{{2, 1}, {{0, 1}}}})));
  const auto sp = succ_prime(s);
  out.push_back(pc1(one_block(sp.front(), 0, 0, 1)));
  out.push_back(pc1(one_block(sp.front(), 1, 1, 0)));
  out.push_back(pc1(one_block(sp.back(), 0, s.f(sp.back()) - 1, 1)));
  ProductCond mixed = pc0(Cond0::make(FlimTree::chain({0})));
  mixed.c1 = one_block(sp.front(), 0, 1, 1);
  out.push_back(mixed);
  return out;
}

std::vector<PName> name_family(const Skeleton& s, std::uint32_t bound) {
  const auto conds = entry_conditions(s);
  std::vector<Atom> atoms{tagged(1, 0), tagged(1, 1), tagged(2, 0)};
  std::vector<NameEntry> e1;
  for (Atom a : atoms)
    for (const auto& c : conds) e1.push_back({atom_ref(a), c});
  std::vector<PName> out;
  out.push_back(make_name({}));
  for (std::size_t a = 0; a < e1.size(); ++a) {
    out.push_back(make_name({e1[a]}));
    for (std::size_t b = a + 1; b < e1.size(); ++b) out.push_back(make_name({e1[a], e1[b]}));
  }
  const auto sp = succ_prime(s);
  std::vector<PName> inner{g0_branch(s, 1, 0, bound),
                           g0_branch(s, 2, 1, bound),
                           g1_column(sp.front(), 0, bound),
                           check_name({tagged(1, 0), tagged(2, 1)}),
                           make_name({e1[1], e1[9 + 4]}),
                           make_name({e1[2 * conds.size() + 7]})};
  for (const auto& x : inner) out.push_back(x);
  std::vector<NameEntry> e2;
  for (const auto& x : inner)
    for (const auto& c : conds) e2.push_back({name_ref(x), c});
  for (std::size_t a = 0; a < e2.size(); ++a) {
    out.push_back(make_name({e2[a]}));
    for (std::size_t b = a + 1; b < e2.size(); ++b) out.push_back(make_name({e2[a], e2[b]}));
  }
  return out;
}

// Aut1 family: identity, flips, a column swap and a pair of columns moved with
// a nontrivial colmap. Rectangles sit inside [0, bound) x [0, F).
std::vector<Aut1> aut1_family(const Skeleton& s, std::uint32_t bound) {
  const auto sp = succ_prime(s);
  const Level a = sp.front(), b = sp.back();
  std::vector<std::uint32_t> rows;
  for (std::uint32_t x = 0; x < bound; ++x) rows.push_back(x);
  std::vector<Aut1> out{identity1()};
  Aut1 flip;
  flip.levels.push_back(Aut1Level{a, {}, {}, {0}, {0, 1}, {1, 0}, {{0}}});
  out.push_back(flip);
  Aut1 flip_top;
  flip_top.levels.push_back(
      Aut1Level{b, {}, {}, rows, {0}, std::vector<std::uint8_t>(rows.size(), 1), std::vector<std::vector<std::uint32_t>>(rows.size(), {0})});
  out.push_back(flip_top);
  out.push_back(column_swap_aut1({{a, 0, 1}}, {{a, rows, {0, 1}}}).value());
  return out;
}

std::vector<FilterP> filter_family(const Skeleton& s, std::uint32_t bound) {
  std::vector<FilterP> out{FilterP{{ProductCond{}}}};
  Rng rng(0xf117e5);
  const auto sp = succ_prime(s);
  const std::vector<FlimTree> trees{FlimTree::chain({0, 0}), FlimTree::chain({1, 1}), FlimTree::chain({0, 1, 0}),
                                    FlimTree(std::vector<Node>{{{0, 0}, kNoParent}, {{1, 0}, 0}, {{1, 1}, 0}})};
  for (int k = 0; k < 10; ++k) {
    ProductCond g;
    const FlimTree& t = trees[k % trees.size()];
    std::map<Vertex, Label> ls;
    for (const auto& n : t.nodes())
      if (s.labelable(n.v.level))
        for (std::uint32_t z = 0; z < bound; ++z)
          if (rng.chance(3, 4)) label_set(ls[n.v], z, static_cast<std::uint8_t>(rng.coin()));
    g.c0 = Cond0::make(t, ls);
    if (k % 3 != 2)
      for (Level l : sp) {
        std::vector<std::uint32_t> xs, ys;
        for (std::uint32_t x = 0; x < bound; ++x) xs.push_back(x);
        for (std::uint32_t y = 0; y < s.f(l); ++y) ys.push_back(y);
        std::vector<std::uint8_t> bits(xs.size() * ys.size());
        for (auto& bit : bits) bit = static_cast<std::uint8_t>(rng.coin());
        g.c1.put(make_block(l, xs, ys, bits));
      }
    FilterP h{{g}};
    if (k % 2 == 1) h.gens.push_back(ProductCond{gen_weakening0(rng, g.c0), g.c1});
    out.push_back(h);
  }
  return out;
}

std::shared_ptr<NameWorld> make_world(const Env& env) {
  auto w = std::make_shared<NameWorld>();
  w->s = env.skel;
  w->bound = env.bound;
  w->names = name_family(env.skel, env.bound);
  for (const auto& a0 : all_aut0_total(env.skel, 2))
    for (const auto& a1 : aut1_family(env.skel, env.bound)) w->auts.push_back({a0, a1});
  w->filters = filter_family(env.skel, env.bound);
  return w;
}

bool filter_in_domain(const FilterP& h, const Aut1& pi) {
  return std::all_of(h.gens.begin(), h.gens.end(), [&](const ProductCond& g) { return dpi(pi, g.c1); });
}

// A rank-2 name with random entries from generated conditions.
PName random_name(const Skeleton& s, Rng& rng, std::uint32_t bound) {
  auto cond = [&] {
    ProductCond c;
    if (rng.coin()) c.c0 = gen_cond0(s, rng, 1, bound);
    if (rng.coin()) c.c1 = gen_cond1(s, rng, 1, bound);
    return c;
  };
  std::vector<PName> inner;
  for (int k = 0, n = 1 + static_cast<int>(rng.below(3)); k < n; ++k) {
    std::vector<NameEntry> es;
    for (int e = 0, m = static_cast<int>(rng.below(4)); e < m; ++e) {
      Level l = static_cast<Level>(1 + rng.below(2));
      es.push_back({atom_ref(tagged(l, rng.below(bound))), cond()});
    }
    inner.push_back(make_name(std::move(es)));
  }
  std::vector<NameEntry> es;
  for (const auto& x : inner) es.push_back({name_ref(x), cond()});
  if (rng.coin()) es.push_back({atom_ref(tagged(1, 0)), cond()});
  return make_name(std::move(es));
}

// A filter whose generators lie in D_pi.
FilterP random_filter(const Skeleton& s, Rng& rng, std::uint32_t bound, const Aut1& pi) {
  FilterP h;
  ProductCond g{gen_cond0(s, rng, 3, bound), fill_into_domain(rng, gen_cond1(s, rng, 3, bound), pi)};
  h.gens.push_back(g);
  if (rng.coin()) h.gens.push_back(ProductCond{gen_weakening0(rng, g.c0), gen_weakening1(rng, g.c1)});
  if (!filter_in_domain(h, pi)) h.gens.resize(1);
  return h;
}

// ---------------------------------------------------------------- NAME-BAR-VAL

void bar_val_check(Verdict& v, const PName& x, const Aut1& pi, const Aut1& sigma, const FilterP& h,
                   std::map<std::string, std::uint64_t>& counters) {
  PName b = bar(x, pi);
  v.check(all_in_domain(b, pi), [&] { return "bar leaves D_pi for " + show(x); });
  v.check(bar(b, pi) == b, [&] { return "bar is not idempotent on " + show(x); });
  v.check(bar(b, sigma) == bar(bar(x, sigma), pi), [&] { return "bar extensions do not commute on " + show(x); });
  if (!filter_in_domain(h, pi)) {
    ++counters["filter_outside_domain"];
    return;
  }
  const Value expect = value_of(x, h);
  v.check(val(x, h) == expect, [&] { return "val disagrees with direct valuation on " + show(x); });
  v.check(val(b, h) == expect, [&] { return "val(bar x) != val(x) for " + show(x); });
}

struct BarVal {
  std::shared_ptr<NameWorld> w;
  std::vector<Aut1> a1;

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    for (std::size_t k = 0; k < a1.size(); ++k)
      for (const auto& h : w->filters) bar_val_check(v, w->names[i], a1[k], a1[(k + 1) % a1.size()], h, counters);
    CaseResult r = v.result({{"x", encode(w->names[i])}});
    r.counters = counters;
    return r;
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    PName x = random_name(w->s, rng, w->bound);
    Aut1 pi = gen_aut1(w->s, rng, 2, w->bound), sigma = gen_aut1(w->s, rng, 2, w->bound);
    FilterP h = random_filter(w->s, rng, w->bound, pi);
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    bar_val_check(v, x, pi, sigma, h, counters);
    CaseResult r = v.result({{"x", encode(x)}, {"pi", encode(pi)}, {"sigma", encode(sigma)}, {"filter", encode(h)}});
    r.counters = counters;
    return r;
  }
};

std::unique_ptr<Checker> make_bar_val(const Env& env, Mode mode) {
  auto st = std::make_shared<BarVal>();
  st->w = mode == Mode::Exhaustive ? make_world(env) : std::make_shared<NameWorld>(NameWorld{env.skel, env.bound, {}, {}, {}});
  if (mode == Mode::Exhaustive) st->a1 = aut1_family(env.skel, env.bound);
  return checker(
      st->w->names.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- NAME-EQUIVARIANCE

// One (x, pi) pair against several filters; act and bar are computed once.
// The module's equivariance_check runs on the first filter in D_pi, the
// remaining filters go through the direct valuation only.
void equivariance_into(Verdict& v, const PName& x, const AutPair& pi, const std::vector<FilterP>& hs) {
  const PName b = bar(x, pi.a1);
  auto moved = act(pi, b);
  v.check(moved.ok(), [&] { return "act rejects the bar extension of " + show(x); });
  if (!moved) return;
  auto back = act(invert(pi), moved.value());
  v.check(back.ok() && back.value() == b, [&] { return "inverse does not undo act on " + show(x); });
  bool module_checked = false;
  for (const auto& h : hs) {
    if (!filter_in_domain(h, pi.a1)) continue;
    if (!module_checked) {
      v.check(equivariance_check(x, pi, h), [&] { return "equivariance_check fails for " + show(x); });
      module_checked = true;
    }
    FilterP image;
    for (const auto& g : h.gens) image.gens.push_back({apply0(pi.a0, g.c0), apply1(pi.a1, g.c1).value()});
    v.check(value_of(moved.value(), image) == value_of(x, h),
            [&] { return "val(pi x, pi H) != val(x, H) for " + show(x) + " under " + encode(pi).dump(); });
  }
}

struct Equivariance {
  std::shared_ptr<NameWorld> w;

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    for (const auto& pi : w->auts) equivariance_into(v, w->names[i], pi, w->filters);
    return v.result({{"x", encode(w->names[i])}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    PName x = random_name(w->s, rng, w->bound);
    AutPair pi{gen_aut0(w->s, rng, 2), gen_aut1(w->s, rng, 2, w->bound)};
    FilterP h = random_filter(w->s, rng, w->bound, pi.a1);
    Verdict v;
    equivariance_into(v, x, pi, {h});
    return v.result({{"x", encode(x)}, {"pi", encode(pi)}, {"filter", encode(h)}});
  }
};

std::unique_ptr<Checker> make_equivariance(const Env& env, Mode mode) {
  auto st = std::make_shared<Equivariance>();
  st->w = mode == Mode::Exhaustive ? make_world(env) : std::make_shared<NameWorld>(NameWorld{env.skel, env.bound, {}, {}, {}});
  return checker(
      st->w->names.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- SYM-CANONICAL

struct Defined {
  CanonicalName name;
  GroupSpec spec;
};

CanonicalName canon(CanonKind k, Level l, std::uint32_t i, std::uint32_t cut = 0) {
  return CanonicalName{k, l, i, cut, {}, nullptr, nullptr};
}

// Every canonical name of the skeleton with its defining subgroup.
std::vector<Defined> canonical_family(const Skeleton& s, std::uint32_t bound) {
  std::vector<Defined> out;
  const std::uint32_t w = s.block_width;
  for (Level l = 1; l < s.size(); ++l) {
    for (std::uint32_t i = 0; i < f_lim(s, l); ++i) out.push_back({canon(CanonKind::G0Branch, l, i), {{GenKind::Fix0, l, i}}});
    std::vector<std::uint32_t> cuts;
    for (std::uint32_t c = w; c < f_lim(s, l); c += w) cuts.push_back(c);
    cuts.push_back(f_lim(s, l));
    for (std::uint32_t i = 0; i < f_lim(s, l); i += w)
      for (auto c : cuts)
        if (i < c) out.push_back({canon(CanonKind::Cloud0, l, i, c), {{GenKind::Small0, l, c}}});
  }
  for (Level l : succ_prime(s))
    for (std::uint32_t i = 0; i < s.f(l); ++i) {
      out.push_back({canon(CanonKind::G1Column, l, i), {{GenKind::Fix1, l, i}}});
      // Clouds are defined around columns below the cut.
      for (std::uint32_t c = i + 1; c <= s.f(l); ++c)
        out.push_back({canon(CanonKind::Cloud1, l, i, c), {{GenKind::Small1, l, c}}});
    }
  CanonicalName chk{CanonKind::Check, 0, 0, 0, {tagged(1, 0), tagged(2, 1)}, nullptr, nullptr};
  out.push_back({chk, {}});
  out.push_back({chk, {{GenKind::Small0, 1, 0}}});
  // Pairs of a P0 and a P1 name under the union of their subgroups.
  const Level l1 = succ_prime(s).front();
  CanonicalName pair{CanonKind::Pair, 0, 0, 0, {}, nullptr, nullptr};
  pair.left = std::make_shared<const PName>(expand(s, canon(CanonKind::G0Branch, 1, 0), bound));
  pair.right = std::make_shared<const PName>(expand(s, canon(CanonKind::G1Column, l1, 0), bound));
  out.push_back({pair, {{GenKind::Fix0, 1, 0}, {GenKind::Fix1, l1, 0}}});
  pair.left = std::make_shared<const PName>(expand(s, canon(CanonKind::Cloud0, 2, 0, f_lim(s, 2)), bound));
  out.push_back({pair, {{GenKind::Small0, 2, f_lim(s, 2)}, {GenKind::Fix1, l1, 0}}});
  return out;
}

struct SymCanonical {
  Skeleton s;
  std::uint32_t bound;
  std::uint64_t seed;
  std::vector<Defined> family;
  std::size_t members = 200;

  CaseResult one(const Defined& d, std::uint64_t seed0) const {
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    v.check(validate_canonical(s, d.name).empty(), "canonical name invalid");
    for (const auto& g : d.spec) v.check(validate_gen(s, g).empty(), "defining generator invalid");
    const PName x = expand(s, d.name, bound);
    Rng rng(seed0);
    std::size_t tested = 0;
    for (std::size_t k = 0; k < members; ++k) {
      AutPair pi = member_of(s, d.spec, rng, bound);
      if (!in_group(pi, d.spec, s.block_width)) {
        v.check(false, "constructed member is outside the subgroup");
        continue;
      }
      ++tested;
      PName b = bar(x, pi.a1);
      auto moved = act(pi, b);
      v.check(moved.ok() && moved.value() == b,
              [&] { return "member " + encode(pi).dump() + " moves the bar extension"; });
    }
    // The module's own rejection sampler must not find a counterexample.
    SymVerdict sv = sym_check(s, x, d.spec, seed0, 20, bound);
    v.check(!sv.counterexample, [&] { return "sym_check counterexample " + encode(*sv.witness).dump(); });
    counters["members_tested"] = tested;
    counters["sym_check_sampled"] = sv.sampled;
    CaseResult r = v.result({{"name", encode(d.name)}, {"spec", encode(d.spec)}});
    r.counters = counters;
    return r;
  }
};

std::unique_ptr<Checker> make_sym(const Env& env, Mode mode) {
  auto st = std::make_shared<SymCanonical>(SymCanonical{env.skel, env.bound, env.seed, {}});
  st->family = canonical_family(env.skel, env.bound);
  if (mode == Mode::Sampled) st->members = 20;
  return checker(
      st->family.size(), [st](std::uint64_t i) { return st->one(st->family[i], case_seed(st->seed, i)); },
      [st](std::uint64_t serial, std::uint64_t seed) { return st->one(st->family[serial % st->family.size()], seed); });
}

// ---------------------------------------------------------------- CLOUD-DISJOINT

struct CloudPair {
  Level level;
  std::uint32_t i, j;
};

CaseResult cloud_disjoint_case(const Skeleton& s, std::uint32_t bound, const CloudPair& c) {
  Verdict v;
  const std::uint32_t w = s.block_width, lim = f_lim(s, c.level);
  auto cloud = [&](std::uint32_t i) { return expand(s, canon(CanonKind::Cloud0, c.level, i, lim), bound); };
  PName a = cloud(c.i), b = cloud(c.j);
  std::set<PName> sa, sb;
  for (const auto& e : a.entries) {
    v.check(!e.child.is_atom() && e.cond == ProductCond{}, "cloud entry is not (name, 1)");
    if (!e.child.is_atom()) sa.insert(e.child.name());
  }
  for (const auto& e : b.entries)
    if (!e.child.is_atom()) sb.insert(e.child.name());
  // Block arithmetic: the cloud at i consists of the branches i .. i+W-1.
  std::set<PName> expect;
  for (std::uint32_t n = c.i; n < std::min(lim, c.i + w); ++n) expect.insert(g0_branch(s, c.level, n, bound));
  v.check(sa == expect, "cloud differs from the branch names of its block");
  for (const auto& x : sa) v.check(!sb.count(x), "clouds share a branch name");
  auto seq = cloud_sequence(s, c.level, lim, bound);
  v.check(seq.entries.size() == (lim + w - 1) / w, "cloud sequence has the wrong length");
  return v.result({{"level", c.level}, {"i", c.i}, {"j", c.j}});
}

std::unique_ptr<Checker> make_cloud_disjoint(const Env& env, Mode) {
  auto pairs = std::make_shared<std::vector<CloudPair>>();
  const Skeleton s = env.skel;
  for (Level l = 1; l < s.size(); ++l)
    for (std::uint32_t i = 0; i < f_lim(s, l); i += s.block_width)
      for (std::uint32_t j = 0; j < f_lim(s, l); j += s.block_width)
        if (i != j) pairs->push_back({l, i, j});
  const std::uint32_t bound = env.bound;
  return checker(
      pairs->size(), [=](std::uint64_t k) { return cloud_disjoint_case(s, bound, (*pairs)[k]); },
      [=](std::uint64_t, std::uint64_t seed) {
        if (pairs->empty()) return CaseResult::skip("a single block per level");
        Rng rng(seed);
        return cloud_disjoint_case(s, bound, (*pairs)[rng.below(pairs->size())]);
      });
}

// ---------------------------------------------------------------- CLOUD-DIFF-DENSE

// Positions labeled along the branch to v, computed from parent links.
std::map<std::uint64_t, std::uint8_t> branch_bits(const Cond0& p, Vertex v) {
  std::map<std::uint64_t, std::uint8_t> out;
  std::optional<Vertex> cur = v;
  while (cur) {
    for (const auto& b : p.label(*cur)) out[(std::uint64_t(cur->level) << 32) | b.pos] = b.val;
    if (cur->level == 0) break;
    const Node* n = p.tree.find(*cur);
    if (!n || n->parent == kNoParent) break;
    cur = Vertex{static_cast<Level>(cur->level - 1), n->parent};
  }
  return out;
}

bool differs(const Cond0& p, Vertex a, Vertex b) {
  auto ba = branch_bits(p, a), bb = branch_bits(p, b);
  for (auto [k, bit] : ba) {
    auto it = bb.find(k);
    if (it != bb.end() && it->second != bit) return true;
  }
  return false;
}

void diff_dense_into(Verdict& v, const Skeleton& s, const Cond0& p, std::uint64_t& pairs) {
  for (Level l = 1; l < s.size(); ++l) {
    auto at = p.tree.at_level(l);
    for (const auto& na : at)
      for (const auto& nb : at) {
        if (na.v.index == nb.v.index) continue;
        ++pairs;
        auto w = cloud_difference_witness(s, p, l, na.v.index, nb.v.index);
        v.check(w.ok(), [&] { return "no witness below " + show(p); });
        if (!w) continue;
        const Cond0& q = w.value();
        v.check(validate_cond0(s, q).empty() && leq0(q, p), [&] { return "witness invalid or not below " + show(p); });
        v.check(differs(q, na.v, nb.v), [&] { return "witness branches agree below " + show(p); });
        v.check(cloud_difference_dense(l, na.v.index, nb.v.index)(q), "predicate rejects the witness");
      }
  }
}

std::unique_ptr<Checker> make_diff_dense(const Env& env, Mode mode) {
  auto u = std::make_shared<std::vector<Cond0>>();
  if (mode == Mode::Exhaustive) *u = all_cond0(env.skel, env.bound, 5);
  const Skeleton s = env.skel;
  const std::uint32_t bound = env.bound;
  auto run = [s](const Cond0& p) {
    Verdict v;
    std::uint64_t pairs = 0;
    diff_dense_into(v, s, p, pairs);
    CaseResult r = v.result({{"p", encode(p)}});
    r.counters["pairs"] = pairs;
    return r;
  };
  return checker(
      u->size(), [u, run](std::uint64_t i) { return run((*u)[i]); },
      [s, bound, run](std::uint64_t, std::uint64_t seed) {
        Rng rng(seed);
        return run(gen_cond0(s, rng, 4, bound));
      });
}

}  // namespace

void add_names(std::vector<PropertyInfo>& out) {
  out.push_back({"NAME-BAR-VAL", "names",
                 "bar extensions lie in D_pi and keep their value under filters meeting D_pi", true, make_bar_val});
  out.push_back({"NAME-EQUIVARIANCE", "names", "val(pi x, pi H) = val(x, H)", true, make_equivariance});
  out.push_back({"SYM-CANONICAL", "names", "canonical names are fixed by their defining subgroups", true, make_sym});
  out.push_back({"CLOUD-DISJOINT", "names", "clouds of distinct blocks share no branch name", true,
                 make_cloud_disjoint});
  out.push_back({"CLOUD-DIFF-DENSE", "names",
                 "branches through two vertices can always be made to differ below any condition", true,
                 make_diff_dense});
}

}  // namespace forcelab::props
