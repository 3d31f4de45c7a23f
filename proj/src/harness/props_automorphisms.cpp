// A0-GROUP, A1-GROUP-EXT, DPI-CLOSURE, FIX1-COLUMN, HOMOG0, HOMOG1, NORMALITY.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "props_common.hpp"

namespace forcelab::props {

namespace {



bool same_perm(const Skeleton& s, const Aut0& a, const Aut0& b) {
  for (Level l = 0; l < s.size(); ++l)
    for (std::uint32_t i = 0; i < f_lim(s, l); ++i)
      if (a.at(l, i) != b.at(l, i)) return false;
  return true;
}

// ---------------------------------------------------------------- A0-GROUP

struct A0Group {
  Skeleton s;
  std::vector<Aut0> g;
  std::map<std::vector<std::vector<std::uint32_t>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> mult;  // mult[i][j] = g[i] after g[j]
  std::vector<Cond0> pool;

  std::optional<std::size_t> find(const Aut0& a) const {
    auto it = index.find(canonical0(a).perms);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  void laws(Verdict& v, const Aut0& a, const Aut0& b, const Aut0& c) const {
    v.check(valid_aut0(s, compose0(a, b)), "composition invalid");
    for (Level l = 0; l < s.size(); ++l)
      for (std::uint32_t i = 0; i < f_lim(s, l); ++i)
        v.check(compose0(a, b).at(l, i) == a.at(l, b.at(l, i)), "compose0 is not pointwise composition");
    v.check(same_perm(s, compose0(compose0(a, b), c), compose0(a, compose0(b, c))), "associativity fails");
    v.check(same_perm(s, compose0(identity0(), a), a) && same_perm(s, compose0(a, identity0()), a),
            "identity law fails");
    v.check(compose0(invert0(a), a).is_identity() && compose0(a, invert0(a)).is_identity(), "inverse law fails");
    for (const auto& p : pool) {
      Cond0 ap = apply0(a, p);
      v.check(validate_cond0(s, ap).empty(), "apply0 breaks validity");
      v.check(apply0(compose0(a, b), p) == apply0(a, apply0(b, p)), "action is not compatible with composition");
      v.check(apply0(identity0(), p) == p && apply0(invert0(a), ap) == p, "action identity/inverse fails");
    }
    for (std::size_t k = 0; k + 1 < pool.size(); ++k)
      if (leq0(pool[k + 1], pool[k]))
        v.check(leq0(apply0(a, pool[k + 1]), apply0(a, pool[k])), "apply0 does not preserve order");
  }

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    const Aut0& a = g[i];
    v.check(valid_aut0(s, a), "element invalid");
    for (std::size_t j = 0; j < g.size(); ++j) {
      v.check(mult[i][j] < g.size(), "not closed under composition");
      for (Level l = 0; l < s.size(); ++l)
        for (std::uint32_t x = 0; x < f_lim(s, l); ++x)
          if (g[mult[i][j]].at(l, x) != a.at(l, g[j].at(l, x))) v.check(false, "compose0 is not pointwise");
      for (std::size_t k = 0; k < g.size(); ++k)
        if (mult[mult[i][j]][k] != mult[i][mult[j][k]]) v.check(false, "associativity fails");
    }
    auto inv = find(invert0(a));
    v.check(inv && mult[i][*inv] == 0 && mult[*inv][i] == 0, "inverse missing or wrong");
    v.check(mult[0][i] == i && mult[i][0] == i, "identity law fails");
    for (std::size_t j = 0; j < g.size(); j += 7) {
      for (const auto& p : pool)
        v.check(apply0(g[mult[i][j]], p) == apply0(a, apply0(g[j], p)), "action is not compatible with composition");
    }
    for (const auto& p : pool) {
      v.check(validate_cond0(s, apply0(a, p)).empty(), "apply0 breaks validity");
      v.check(apply0(g[*inv], apply0(a, p)) == p, "inverse does not undo the action");
    }
    return v.result({{"pi", encode(a)}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Aut0 a = gen_aut0(s, rng, 3), b = gen_aut0(s, rng, 3), c = gen_aut0(s, rng, 3);
    Verdict v;
    laws(v, a, b, c);
    return v.result({{"a", encode(a)}, {"b", encode(b)}, {"c", encode(c)}});
  }
};

std::unique_ptr<Checker> make_a0(const Env& env, Mode mode) {
  auto st = std::make_shared<A0Group>();
  st->s = env.skel;
  auto u = all_cond0(env.skel, 1, 5);
  for (std::size_t k = 0; k < u.size(); k += 97) st->pool.push_back(u[k]);
  if (mode == Mode::Exhaustive) {
    st->g = all_aut0(env.skel, 3);
    for (std::size_t k = 0; k < st->g.size(); ++k) st->index[canonical0(st->g[k]).perms] = k;
    st->mult.assign(st->g.size(), std::vector<std::size_t>(st->g.size(), SIZE_MAX));
    for (std::size_t i = 0; i < st->g.size(); ++i)
      for (std::size_t j = 0; j < st->g.size(); ++j)
        if (auto k = st->find(compose0(st->g[i], st->g[j]))) st->mult[i][j] = *k;
  } else {
    Rng rng(env.seed);
    st->pool.clear();
    for (int k = 0; k < 6; ++k) {
      Cond0 p = gen_cond0(env.skel, rng, 3, env.bound);
      st->pool.push_back(p);
      st->pool.push_back(gen_extension0(env.skel, rng, p, 2, env.bound));
    }
  }
  return checker(
      st->g.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- A1-GROUP-EXT

struct A1Group {
  Skeleton s;
  std::uint32_t bound;

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Aut1 pi = gen_aut1(s, rng, 2, bound), sg = gen_aut1(s, rng, 2, bound), ta = gen_aut1(s, rng, 2, bound);
    Cond1 p = gen_cond1(s, rng, 3, bound);
    p = fill_into_domain(rng, fill_into_domain(rng, fill_into_domain(rng, p, pi), sg), ta);
    Verdict v;
    for (const Aut1* a : {&pi, &sg, &ta}) v.check(validate_aut1(s, *a).empty(), "generated automorphism invalid");
    v.check(dpi(pi, p) && dpi(sg, p) && dpi(ta, p), "p is not in the common domain");
    auto ap = [&](const Aut1& a, const Cond1& c) { return apply1(a, c); };
    auto e1 = ap(compose1(sg, pi), p);
    auto e2 = ap(pi, p);
    v.check(e1.ok() && e2.ok(), "apply1 rejects a domain member");
    if (e1 && e2) {
      auto e3 = ap(sg, e2.value());
      v.check(e3.ok() && e3.value() == e1.value(), "compose1 is not extensional composition");
    }
    Aut1 left = compose1(compose1(ta, sg), pi), right = compose1(ta, compose1(sg, pi));
    v.check(validate_aut1(s, left).empty() && validate_aut1(s, right).empty(), "composition invalid");
    auto l1 = ap(left, p), r1 = ap(right, p);
    v.check(l1.ok() && r1.ok() && l1.value() == r1.value(), "associativity fails");
    auto id1 = ap(compose1(identity1(), pi), p), id2 = ap(compose1(pi, identity1()), p);
    v.check(id1.ok() && id2.ok() && e2.ok() && id1.value() == e2.value() && id2.value() == e2.value(),
            "identity law fails");
    v.check(ap(identity1(), p).ok() && ap(identity1(), p).value() == p, "identity does not fix p");
    Aut1 inv = invert1(pi);
    v.check(validate_aut1(s, inv).empty(), "inverse invalid");
    if (e2) {
      auto back = ap(inv, e2.value());
      v.check(back.ok() && back.value() == p, "inverse does not undo");
    }
    auto c1 = ap(compose1(inv, pi), p), c2 = ap(compose1(pi, inv), p);
    v.check(c1.ok() && c1.value() == p && c2.ok() && c2.value() == p, "inverse law fails");
    Aut1 n = normalize_supp(pi);
    v.check(validate_aut1(s, n).empty(), "normalize_supp invalid");
    v.check(normalize_supp(n) == n, "normalize_supp not idempotent");
    auto np = ap(n, p);
    v.check(np.ok() && e2.ok() && np.value() == e2.value(), "normalize_supp changes the action");
    for (const auto& L : pi.levels)
      for (auto y : L.dom_y)
        if (!std::binary_search(L.supp.begin(), L.supp.end(), y)) {
          Aut1 padded = pad_supp(pi, L.level, y);
          auto pp = ap(padded, p);
          v.check(validate_aut1(s, padded).empty(), "pad_supp invalid");
          v.check(pp.ok() && e2.ok() && pp.value() == e2.value(), "pad_supp changes the action");
          auto pn = ap(normalize_supp(padded), p);
          v.check(pn.ok() && e2.ok() && pn.value() == e2.value(), "normalizing a padding changes the action");
          break;
        }
    return v.result({{"pi", encode(pi)}, {"sigma", encode(sg)}, {"tau", encode(ta)}, {"p", encode(p)}});
  }
};

std::unique_ptr<Checker> make_a1(const Env& env, Mode) {
  auto st = std::make_shared<A1Group>(A1Group{env.skel, env.bound});
  return checker(0, nullptr, [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- DPI-CLOSURE

CaseResult dpi_case(const Skeleton& s, std::uint32_t bound, std::uint64_t seed) {
  Rng rng(seed);
  Aut1 pi = gen_aut1(s, rng, 2, bound);
  Cond1 p = fill_into_domain(rng, gen_cond1(s, rng, 3, bound), pi);
  Cond1 q = gen_extension1(s, rng, p, 3, bound);
  // Same support: drop the blocks q gained at new levels.
  Cond1 qs;
  for (const auto& b : q.blocks)
    if (p.find(b.level)) qs.put(b);
  Verdict v;
  v.check(dpi(pi, p), "filled condition not in D_pi");
  v.check(leq1(qs, p) && qs.support() == p.support(), "same-support extension malformed");
  v.check(dpi(pi, qs), "same-support extension left D_pi");
  auto lv = p.support();
  for (std::size_t k = 0; k < lv.size(); ++k) {
    Cond1 sub = restrict1_band(p, lv[k], lv[k]);
    v.check(dpi(pi, sub), "restriction to a sub-support left D_pi");
    Cond1 drop = p;
    drop.blocks.erase(drop.blocks.begin() + static_cast<std::ptrdiff_t>(k));
    v.check(dpi(pi, drop), "dropping a level left D_pi");
  }
  auto ap = apply1(pi, p), aq = apply1(pi, qs);
  v.check(ap.ok() && aq.ok(), "apply1 rejects a member of D_pi");
  if (ap && aq) {
    v.check(leq1(aq.value(), ap.value()), "apply1 does not preserve order");
    v.check(validate_cond1(s, ap.value()).empty() && dpi(pi, ap.value()), "apply1 result invalid or outside D_pi");
  }
  return v.result({{"pi", encode(pi)}, {"p", encode(p)}, {"q", encode(qs)}});
}

// ---------------------------------------------------------------- FIX1-COLUMN

CaseResult fix1_case(const Skeleton& s, std::uint32_t bound, std::uint64_t seed) {
  Rng rng(seed);
  auto sp = succ_prime(s);
  const Level l = sp[rng.below(sp.size())];
  const std::uint32_t i = rng.below(s.f(l));
  Aut1 pi;
  bool found = false;
  for (int t = 0; t < 200 && !found; ++t) {
    pi = gen_aut1(s, rng, 2, bound);
    found = fixes_column(pi, l, i) && pi.find(l);
  }
  if (!found) {
    // Swap two other columns, flipping the rest of the rectangle at random.
    std::vector<std::uint32_t> others;
    for (std::uint32_t y = 0; y < s.f(l); ++y)
      if (y != i) others.push_back(y);
    std::vector<std::uint32_t> xs;
    for (std::uint32_t x = 0; x < bound; ++x) xs.push_back(x);
    std::vector<std::uint32_t> ys(others.begin(), others.begin() + std::min<std::size_t>(2, others.size()));
    ys.push_back(i);
    std::sort(ys.begin(), ys.end());
    if (others.size() >= 2) {
      pi = column_swap_aut1({{l, others[0], others[1]}}, {{l, xs, ys}}).value();
    } else {
      pi.levels = {Aut1Level{l, {}, {}, xs, ys, std::vector<std::uint8_t>(xs.size() * ys.size(), 0),
                             std::vector<std::vector<std::uint32_t>>(xs.size(), {0})}};
    }
    auto& L = pi.levels.front();
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi)
      for (std::size_t yi = 0; yi < L.dom_y.size(); ++yi)
        if (L.dom_y[yi] != i && !std::binary_search(L.supp.begin(), L.supp.end(), L.dom_y[yi]))
          L.flips[xi * L.dom_y.size() + yi] = static_cast<std::uint8_t>(rng.coin());
  }
  Cond1 p = gen_cond1(s, rng, 3, bound);
  if (!p.find(l)) p.put(make_block(l, {0}, {i}, {static_cast<std::uint8_t>(rng.coin())}));
  p = fill_into_domain(rng, p, pi);
  Verdict v;
  v.check(validate_aut1(s, pi).empty(), "automorphism invalid");
  v.check(in_subgroup(pi, SubgroupGen{GenKind::Fix1, l, i}, s.block_width), "member of Fix1 by construction rejected");
  auto ap = apply1(pi, p);
  v.check(ap.ok(), "apply1 rejects a member of D_pi");
  if (ap) {
    const Block* before = p.find(l);
    const Block* after = ap.value().find(l);
    v.check(after != nullptr, "block disappeared");
    if (before && after)
      for (auto x : before->xs) v.check(before->at(x, i) == after->at(x, i), "column moved by a Fix1 member");
  }
  return v.result({{"level", l}, {"column", i}, {"pi", encode(pi)}, {"p", encode(p)}});
}

// ---------------------------------------------------------------- HOMOG0

struct HomogSetup {
  Level floor = 0;
  FlimTree prot;
};

Cond0 core_of(const Cond0& p, const HomogSetup& h) {
  std::vector<Node> keep(h.prot.nodes().begin(), h.prot.nodes().end());
  for (const auto& n : p.tree.nodes())
    if (n.v.level <= h.floor && !h.prot.contains(n.v)) keep.push_back(n);
  return restrict0_tree(p, FlimTree(std::move(keep))).value();
}

// Largest floor below the top where p and q agree, then every branch of p
// that can join the protected part without clashing with q.
HomogSetup maximal_setup(const Skeleton& s, const Cond0& p, const Cond0& q) {
  HomogSetup h;
  for (Level f = 0; f < s.top(); ++f)
    if (compat0(s, restrict0_band(p, 0, f), q)) h.floor = f;
  for (Vertex m : max_points(p.tree)) {
    HomogSetup t = h;
    auto merged = tree_union(s, h.prot, restrict_to(p.tree, {m}));
    if (!merged) continue;
    t.prot = merged.value();
    if (compat0(s, core_of(p, t), q)) h = t;
  }
  return h;
}

void homog0_check(Verdict& v, const Skeleton& s, const Cond0& p, const Cond0& q, const HomogSetup& h,
                  std::map<std::string, std::uint64_t>& counters) {
  auto r = homog0(s, p, q, h.floor, h.prot);
  if (!r) {
    ++counters[std::string(code_name(r.error().code))];
    v.check(false, [&] { return "homog0 failed: " + describe(r.error()) + " against " + show(q); });
    return;
  }
  const Aut0& pi = r.value();
  const std::uint32_t w = s.block_width;
  v.check(valid_aut0(s, pi), "result is not a permutation family");
  for (Level l = 0; l < s.size(); ++l)
    for (std::uint32_t i = 0; i < f_lim(s, l); ++i) {
      const std::uint32_t j = pi.at(l, i);
      if (j / w != i / w) {
        v.check(false, [&] { return "moves (" + std::to_string(l) + "," + std::to_string(i) + ") out of its block"; });
        l = s.size() - 1;
        break;
      }
      if (l <= h.floor && j != i) v.check(false, "moves a vertex at or below the floor");
    }
  for (const auto& n : h.prot.nodes())
    v.check(pi.at(n.v.level, n.v.index) == n.v.index, "moves a protected vertex");
  Cond0 moved = apply0(pi, p);
  v.check(validate_cond0(s, moved).empty(), "moved condition invalid");
  auto un = union0(s, moved, q);
  v.check(un.ok(), [&] { return "moved condition still incompatible with " + show(q); });
  if (un)
    for (const auto& e : tree_recheck(s, un.value().tree)) v.check(false, [&] { return "union after homogenizing: " + e; });
}

struct Homog0 {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond0> u;

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    const Cond0& p = u[i];
    for (const auto& q : u) {
      homog0_check(v, s, p, q, {}, counters);
      if (!compat0(s, p, q)) {
        HomogSetup h = maximal_setup(s, p, q);
        if (h.floor > 0 || !h.prot.empty()) homog0_check(v, s, p, q, h, counters);
      }
    }
    CaseResult r = v.result({{"p", encode(p)}});
    r.counters = counters;
    return r;
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond0 p = gen_cond0(s, rng, 3, bound), q = gen_cond0(s, rng, 3, bound);
    Verdict v;
    std::map<std::string, std::uint64_t> counters;
    homog0_check(v, s, p, q, {}, counters);
    homog0_check(v, s, p, q, maximal_setup(s, p, q), counters);
    CaseResult r = v.result({{"p", encode(p)}, {"q", encode(q)}});
    r.counters = counters;
    return r;
  }
};

// Conditions of the exhaustive regime: the SKEL-A universe, embedded in the
// run's skeleton (same level kinds, larger F), limited to max_vertices.
std::vector<Cond0> embedded_universe(const Skeleton& s, std::uint32_t bound, std::size_t max_vertices) {
  Skeleton small = skel_a();
  bool fits = s.size() == small.size();
  for (Level l = 0; fits && l < s.size(); ++l)
    fits = s.kind(l) == small.kind(l) && f_lim(s, l) >= f_lim(small, l);
  return all_cond0(fits ? small : s, bound, max_vertices);
}

std::unique_ptr<Checker> make_homog0(const Env& env, Mode mode) {
  auto st = std::make_shared<Homog0>();
  st->s = env.skel;
  st->bound = env.bound;
  // At W >= 8 the full 5-vertex universe; narrower blocks use 4 vertices.
  if (mode == Mode::Exhaustive)
    st->u = embedded_universe(env.skel, env.bound, env.skel.block_width >= 8 ? 5 : 4);
  return checker(
      st->u.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- HOMOG1

bool cells_agree(const Cond1& p, const Cond1& q) {
  for (const auto& a : p.blocks)
    if (const Block* b = q.find(a.level))
      for (auto x : a.xs)
        for (auto y : a.ys) {
          auto vb = b->at(x, y);
          if (vb && *vb != *a.at(x, y)) return false;
        }
  return true;
}

void homog1_check(Verdict& v, const Skeleton& s, const Cond1& p, const Cond1& q, Level floor) {
  if (!cells_agree(restrict1_band(p, 0, floor), restrict1_band(q, 0, floor))) return;
  Aut1 pi = homog1(p, q, floor);
  v.check(validate_aut1(s, pi).empty(), "homog1 result invalid");
  v.check(dpi(pi, p), "p is outside D_pi");
  for (const auto& L : pi.levels) {
    v.check(L.level > floor, "homog1 acts at or below the floor");
    v.check(L.supp.empty(), "homog1 result moves columns");
  }
  for (Level l : succ_prime(s))
    v.check(in_subgroup(pi, SubgroupGen{GenKind::Small1, l, s.f(l)}, s.block_width), "result is not small");
  auto ap = apply1(pi, p);
  v.check(ap.ok(), "apply1 rejects p");
  if (ap) {
    v.check(validate_cond1(s, ap.value()).empty(), "moved condition invalid");
    v.check(cells_agree(ap.value(), q), [&] { return "moved condition still clashes with q at floor " + std::to_string(floor); });
  }
}

struct Homog1 {
  Skeleton s;
  std::uint32_t bound;
  std::vector<Cond1> u;

  std::vector<Level> floors() const {
    std::vector<Level> out{0};
    for (Level l : succ_prime(s)) out.push_back(l);
    return out;
  }

  CaseResult exhaustive(std::size_t i) const {
    Verdict v;
    for (const auto& q : u)
      for (Level f : floors()) homog1_check(v, s, u[i], q, f);
    return v.result({{"p", encode(u[i])}});
  }

  CaseResult sample(std::uint64_t seed) const {
    Rng rng(seed);
    Cond1 p = gen_cond1(s, rng, 3, bound), q = gen_cond1(s, rng, 3, bound);
    Verdict v;
    for (Level f : floors()) homog1_check(v, s, p, q, f);
    return v.result({{"p", encode(p)}, {"q", encode(q)}});
  }
};

std::unique_ptr<Checker> make_homog1(const Env& env, Mode mode) {
  auto st = std::make_shared<Homog1>();
  st->s = env.skel;
  st->bound = env.bound;
  if (mode == Mode::Exhaustive) st->u = all_cond1(env.skel, env.bound);
  return checker(
      st->u.size(), [st](std::uint64_t i) { return st->exhaustive(i); },
      [st](std::uint64_t, std::uint64_t seed) { return st->sample(seed); });
}

// ---------------------------------------------------------------- NORMALITY

SubgroupGen random_gen(const Skeleton& s, Rng& rng) {
  auto sp = succ_prime(s);
  const std::uint32_t w = s.block_width;
  switch (rng.below(4)) {
    case 0: {
      Level l = static_cast<Level>(1 + rng.below(s.top()));
      return {GenKind::Fix0, l, rng.below(f_lim(s, l))};
    }
    case 1: {
      Level l = static_cast<Level>(1 + rng.below(s.top()));
      std::vector<std::uint32_t> cuts;
      for (std::uint32_t c = 0; c < f_lim(s, l); c += w) cuts.push_back(c);
      cuts.push_back(f_lim(s, l));
      return {GenKind::Small0, l, cuts[rng.below(cuts.size())]};
    }
    case 2: {
      Level l = sp[rng.below(sp.size())];
      return {GenKind::Fix1, l, rng.below(s.f(l))};
    }
    default: {
      Level l = sp[rng.below(sp.size())];
      return {GenKind::Small1, l, rng.below(s.f(l) + 1)};
    }
  }
}

CaseResult normality_case(const Skeleton& s, std::uint32_t bound, std::uint64_t seed) {
  Rng rng(seed);
  AutPair pi{gen_aut0(s, rng, 3), gen_aut1(s, rng, 2, bound)};
  SubgroupGen g = random_gen(s, rng);
  GroupSpec spec = conjugate_witness(pi, g);
  AutPair sigma = member_of(s, spec, rng, bound);
  Verdict v;
  v.check(validate_gen(s, g).empty(), "generator invalid");
  for (const auto& h : spec) v.check(validate_gen(s, h).empty(), "witness generator invalid");
  v.check(validate_aut1(s, sigma.a1).empty() && valid_aut0(s, sigma.a0), "sampled member invalid");
  v.check(in_group(sigma, spec, s.block_width), "sampled member is outside the witness intersection");
  AutPair conj = compose(pi, compose(sigma, invert(pi)));
  v.check(in_subgroup(conj, g, s.block_width), "conjugate leaves the generator's subgroup");
  return v.result({{"pi", encode(pi)}, {"generator", encode(g)}, {"witness", encode(spec)}, {"sigma", encode(sigma)}});
}

}  // namespace

// A random member of the intersection, built to respect every generator.
AutPair member_of(const Skeleton& s, const GroupSpec& spec, Rng& rng, std::uint32_t bound) {
  const std::uint32_t w = s.block_width;
  AutPair out;
  out.a0.perms.resize(s.size());
  for (Level l = 1; l < s.size(); ++l) {
    const std::uint32_t lim = f_lim(s, l);
    std::set<std::uint32_t> fixed;
    std::uint32_t cut = 0;
    for (const auto& g : spec) {
      if (g.level != l) continue;
      if (g.kind == GenKind::Fix0) fixed.insert(g.value);
      if (g.kind == GenKind::Small0) cut = std::max(cut, g.value);
    }
    std::vector<std::uint32_t> p(lim);
    std::iota(p.begin(), p.end(), 0u);
    for (int k = 0, n = static_cast<int>(rng.below(3)); k < n; ++k) {
      std::uint32_t a = rng.below(lim), b = rng.below(lim);
      if (fixed.count(a) || fixed.count(b)) continue;
      if ((a < cut || b < cut) && a / w != b / w) continue;
      // Positions are tracked through p, so constraints apply to images.
      auto ia = std::find(p.begin(), p.end(), a) - p.begin();
      auto ib = std::find(p.begin(), p.end(), b) - p.begin();
      std::swap(p[ia], p[ib]);
    }
    out.a0.perms[l] = p;
  }
  out.a0 = canonical0(out.a0);
  for (Level l : succ_prime(s)) {
    if (!rng.coin()) continue;
    std::set<std::uint32_t> fixed;
    std::uint32_t cut = 0;
    for (const auto& g : spec) {
      if (g.level != l) continue;
      if (g.kind == GenKind::Fix1) fixed.insert(g.value);
      if (g.kind == GenKind::Small1) cut = std::max(cut, g.value);
    }
    std::vector<std::uint32_t> movable;
    for (std::uint32_t y = cut; y < s.f(l); ++y)
      if (!fixed.count(y)) movable.push_back(y);
    Aut1Level L{l, {}, {}, {}, {}, {}, {}};
    for (std::uint32_t x = 0; x < bound; ++x)
      if (rng.coin()) L.dom_x.push_back(x);
    std::set<std::uint32_t> supp, ys;
    if (movable.size() >= 2 && rng.coin()) {
      supp.insert(movable[rng.below(movable.size())]);
      supp.insert(movable[rng.below(movable.size())]);
    }
    ys = supp;
    for (std::uint32_t y = 0; y < s.f(l); ++y)
      if (rng.coin()) ys.insert(y);
    L.supp.assign(supp.begin(), supp.end());
    L.dom_y.assign(ys.begin(), ys.end());
    L.f = L.supp;
    std::shuffle(L.f.begin(), L.f.end(), rng.engine());
    L.flips.assign(L.dom_x.size() * L.dom_y.size(), 0);
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi)
      for (std::size_t yi = 0; yi < L.dom_y.size(); ++yi) {
        const std::uint32_t y = L.dom_y[yi];
        if (!supp.count(y) && !fixed.count(y)) L.flips[xi * L.dom_y.size() + yi] = static_cast<std::uint8_t>(rng.coin());
      }
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi) {
      std::vector<std::uint32_t> c(std::size_t(1) << L.supp.size());
      std::iota(c.begin(), c.end(), 0u);
      if (rng.coin()) std::shuffle(c.begin(), c.end(), rng.engine());
      L.colmaps.push_back(std::move(c));
    }
    out.a1.levels.push_back(std::move(L));
  }
  return out;
}

void add_automorphisms(std::vector<PropertyInfo>& out) {
  out.push_back({"DPI-CLOSURE", "automorphisms",
                 "D_pi is closed under same-support extension and sub-support restriction; apply1 is monotone",
                 false, [](const Env& env, Mode) {
                   return checker(0, nullptr, [env](std::uint64_t, std::uint64_t seed) {
                     return dpi_case(env.skel, env.bound, seed);
                   });
                 }});
  out.push_back({"A0-GROUP", "automorphisms", "Aut0 is a group acting on P0", true, make_a0});
  out.push_back({"A1-GROUP-EXT", "automorphisms", "Aut1 satisfies the group laws extensionally on D", false, make_a1});
  out.push_back({"FIX1-COLUMN", "automorphisms", "Fix1 members preserve their column", false,
                 [](const Env& env, Mode) {
                   return checker(0, nullptr, [env](std::uint64_t, std::uint64_t seed) {
                     return fix1_case(env.skel, env.bound, seed);
                   });
                 }});
  out.push_back({"HOMOG0", "automorphisms",
                 "homog0 finds a small automorphism fixing floor and protected part that makes p compatible with q",
                 true, make_homog0});
  out.push_back({"HOMOG1", "automorphisms", "homog1 finds a small flip automorphism making p compatible with q",
                 true, make_homog1});
  out.push_back({"NORMALITY", "automorphisms",
                 "members of conjugate_witness(pi, g) conjugate into the subgroup of g", false,
                 [](const Env& env, Mode) {
                   return checker(0, nullptr, [env](std::uint64_t, std::uint64_t seed) {
                     return normality_case(env.skel, env.bound, seed);
                   });
                 }});
}

}  // namespace forcelab::props
