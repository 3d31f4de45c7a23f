#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <string>

#include "forcelab/automorphisms.hpp"
#include "forcelab/mutation.hpp"

namespace forcelab {

namespace {

std::optional<std::size_t> idx(const std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

bool includes(const std::vector<std::uint32_t>& big, const std::vector<std::uint32_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::uint32_t> merged(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint32_t f_of(const Aut1Level& L, std::uint32_t i) {
  auto k = idx(L.supp, i);
  return k ? L.f[*k] : i;
}

std::uint8_t flip_at(const Aut1Level& L, std::size_t xi, std::uint32_t y) {
  auto yi = idx(L.dom_y, y);
  return yi ? L.flips[xi * L.dom_y.size() + *yi] : 0;
}

// Transforms one row (values on the lines ys) at position x in place.
void act_row(const Aut1Level& L, std::uint32_t x, const std::vector<std::uint32_t>& ys,
             std::vector<std::uint8_t>& row) {
  auto xi = idx(L.dom_x, x);
  if (xi) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < L.supp.size(); ++k) mask |= std::uint32_t(row[*idx(ys, L.supp[k])]) << k;
    std::uint32_t nm = L.colmaps[*xi][mask];
    for (std::size_t k = 0; k < L.supp.size(); ++k) row[*idx(ys, L.supp[k])] = (nm >> k) & 1u;
    if (mutated(Mutation::Apply1SkipFlips)) return;
    for (std::size_t yi = 0; yi < L.dom_y.size(); ++yi)
      if (L.flips[*xi * L.dom_y.size() + yi]) row[*idx(ys, L.dom_y[yi])] ^= 1u;
  } else {
    std::vector<std::uint8_t> old = row;
    for (std::size_t k = 0; k < L.supp.size(); ++k) row[*idx(ys, L.supp[k])] = old[*idx(ys, L.f[k])];
  }
}

Aut1Level empty_level(Level l) { return Aut1Level{l, {}, {}, {}, {}, {}, {}}; }

// Re-expresses L over a larger rectangle and support (lines added to supp act
// by their flips; rows added to dom_x act by f).
Aut1Level widen(const Aut1Level& L, const std::vector<std::uint32_t>& xs, const std::vector<std::uint32_t>& ys,
                const std::vector<std::uint32_t>& supp) {
  Aut1Level out{L.level, supp, {}, xs, ys, {}, {}};
  for (auto i : supp) out.f.push_back(f_of(L, i));
  out.flips.assign(xs.size() * ys.size(), 0);
  out.colmaps.assign(xs.size(), std::vector<std::uint32_t>(1u << supp.size()));
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    for (std::uint32_t mask = 0; mask < (1u << supp.size()); ++mask) {
      std::vector<std::uint8_t> row(ys.size(), 0);
      for (std::size_t k = 0; k < supp.size(); ++k) row[*idx(ys, supp[k])] = (mask >> k) & 1u;
      act_row(L, xs[xi], ys, row);
      std::uint32_t nm = 0;
      for (std::size_t k = 0; k < supp.size(); ++k) nm |= std::uint32_t(row[*idx(ys, supp[k])]) << k;
      out.colmaps[xi][mask] = nm;
      if (mask == 0)
        for (std::size_t yi = 0; yi < ys.size(); ++yi)
          if (!idx(supp, ys[yi])) out.flips[xi * ys.size() + yi] = row[yi];
    }
  }
  return out;
}

}  // namespace

const Aut1Level* Aut1::find(Level l) const {
  for (const auto& L : levels)
    if (L.level == l) return &L;
  return nullptr;
}

Aut1 identity1() { return {}; }

Errors validate_aut1(const Skeleton& s, const Aut1& pi) {
  Errors errs;
  auto sp = succ_prime(s);
  for (std::size_t k = 0; k < pi.levels.size(); ++k) {
    const auto& L = pi.levels[k];
    std::string at = "aut1 level " + std::to_string(L.level);
    if (k > 0 && pi.levels[k - 1].level >= L.level) errs.push_back(make_error(Code::ConfigError, at + " out of order"));
    if (std::find(sp.begin(), sp.end(), L.level) == sp.end()) {
      errs.push_back(make_error(Code::IndexOutOfRange, at + " is not a Succ' level"));
      continue;
    }
    if (!std::is_sorted(L.supp.begin(), L.supp.end()) || !std::is_sorted(L.dom_x.begin(), L.dom_x.end()) ||
        !std::is_sorted(L.dom_y.begin(), L.dom_y.end()) || !includes(L.dom_y, L.supp))
      errs.push_back(make_error(Code::NonRectangular, at + " supp/dom malformed"));
    for (auto y : L.dom_y)
      if (y >= s.f(L.level)) errs.push_back(make_error(Code::IndexOutOfRange, at + " index " + std::to_string(y)));
    std::vector<std::uint32_t> fs = L.f;
    std::sort(fs.begin(), fs.end());
    if (L.f.size() != L.supp.size() || fs != L.supp) errs.push_back(make_error(Code::ConfigError, at + " f is not a bijection"));
    if (L.flips.size() != L.dom_x.size() * L.dom_y.size() || L.colmaps.size() != L.dom_x.size()) {
      errs.push_back(make_error(Code::NonRectangular, at + " table sizes"));
      continue;
    }
    for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi) {
      for (auto i : L.supp)
        if (flip_at(L, xi, i)) errs.push_back(make_error(Code::ConfigError, at + " flip on a supp line"));
      const auto& c = L.colmaps[xi];
      std::vector<std::uint32_t> cs = c;
      std::sort(cs.begin(), cs.end());
      std::vector<std::uint32_t> id(1u << L.supp.size());
      std::iota(id.begin(), id.end(), 0u);
      if (cs != id) errs.push_back(make_error(Code::ConfigError, at + " colmap is not a bijection"));
    }
  }
  return errs;
}

bool dpi(const Aut1& pi, const Cond1& p) {
  for (const auto& b : p.blocks) {
    const Aut1Level* L = pi.find(b.level);
    if (L && (!includes(b.xs, L->dom_x) || !includes(b.ys, L->dom_y))) return false;
  }
  return true;
}

Outcome<Cond1> apply1(const Aut1& pi, const Cond1& p) {
  if (!dpi(pi, p)) return make_error(Code::NotInDomain, "condition lies outside D_pi");
  Cond1 out = p;
  for (auto& b : out.blocks) {
    const Aut1Level* L = pi.find(b.level);
    if (!L) continue;
    std::vector<std::uint8_t> row(b.ys.size());
    for (std::size_t xi = 0; xi < b.xs.size(); ++xi) {
      for (std::size_t yi = 0; yi < b.ys.size(); ++yi) row[yi] = b.cell(xi, yi);
      act_row(*L, b.xs[xi], b.ys, row);
      for (std::size_t yi = 0; yi < b.ys.size(); ++yi) b.cell(xi, yi) = row[yi];
    }
  }
  return out;
}

Aut1 compose1(const Aut1& sigma, const Aut1& pi) {
  Aut1 out;
  std::set<Level> lv;
  for (const auto& L : sigma.levels) lv.insert(L.level);
  for (const auto& L : pi.levels) lv.insert(L.level);
  for (Level l : lv) {
    const Aut1Level* a = pi.find(l);
    const Aut1Level* b = sigma.find(l);
    Aut1Level A = a ? *a : empty_level(l);
    Aut1Level B = b ? *b : empty_level(l);
    auto xs = merged(A.dom_x, B.dom_x);
    auto ys = merged(A.dom_y, B.dom_y);
    auto supp = merged(A.supp, B.supp);
    Aut1Level C{l, supp, {}, xs, ys, {}, {}};
    for (auto i : supp) C.f.push_back(f_of(A, f_of(B, i)));
    C.flips.assign(xs.size() * ys.size(), 0);
    C.colmaps.assign(xs.size(), std::vector<std::uint32_t>(1u << supp.size()));
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
      for (std::uint32_t mask = 0; mask < (1u << supp.size()); ++mask) {
        std::vector<std::uint8_t> row(ys.size(), 0);
        for (std::size_t k = 0; k < supp.size(); ++k) row[*idx(ys, supp[k])] = (mask >> k) & 1u;
        act_row(A, xs[xi], ys, row);
        act_row(B, xs[xi], ys, row);
        std::uint32_t nm = 0;
        for (std::size_t k = 0; k < supp.size(); ++k) nm |= std::uint32_t(row[*idx(ys, supp[k])]) << k;
        C.colmaps[xi][mask] = nm;
        if (mask == 0)
          for (std::size_t yi = 0; yi < ys.size(); ++yi)
            if (!idx(supp, ys[yi])) C.flips[xi * ys.size() + yi] = row[yi];
      }
    }
    out.levels.push_back(std::move(C));
  }
  return out;
}

Aut1 invert1(const Aut1& pi) {
  Aut1 out = pi;
  for (auto& L : out.levels) {
    for (std::size_t k = 0; k < L.supp.size(); ++k) L.f[*idx(L.supp, pi.find(L.level)->f[k])] = L.supp[k];
    for (auto& c : L.colmaps) {
      std::vector<std::uint32_t> inv(c.size());
      for (std::uint32_t m = 0; m < c.size(); ++m) inv[c[m]] = m;
      c = std::move(inv);
    }
  }
  return out;
}

namespace {

// Line supp[k] acts like a non-supp line: fixed by f, and inside dom_x its
// output is input xor a per-row constant, and no other line reads it.
std::optional<std::vector<std::uint8_t>> removable(const Aut1Level& L, std::size_t k) {
  if (L.f[k] != L.supp[k]) return std::nullopt;
  std::vector<std::uint8_t> consts(L.dom_x.size());
  const std::uint32_t bit = 1u << k;
  for (std::size_t xi = 0; xi < L.dom_x.size(); ++xi) {
    const auto& c = L.colmaps[xi];
    consts[xi] = static_cast<std::uint8_t>(((c[0] >> k) & 1u));
    for (std::uint32_t m = 0; m < c.size(); ++m) {
      if ((((c[m] >> k) & 1u) ^ ((m >> k) & 1u)) != consts[xi]) return std::nullopt;
      if (((c[m] ^ c[m ^ bit]) & ~bit) != 0) return std::nullopt;
    }
  }
  return consts;
}

}  // namespace

Aut1 normalize_supp(const Aut1& pi) {
  Aut1 out = pi;
  for (auto& L : out.levels) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < L.supp.size(); ++k) {
        auto consts = removable(L, k);
        if (!consts) continue;
        std::vector<std::uint32_t> supp = L.supp;
        supp.erase(supp.begin() + static_cast<std::ptrdiff_t>(k));
        Aut1Level n = widen(L, L.dom_x, L.dom_y, supp);
        L = std::move(n);
        changed = true;
        break;
      }
    }
  }
  return out;
}

Aut1 pad_supp(const Aut1& pi, Level l, std::uint32_t extra) {
  Aut1 out = pi;
  for (auto& L : out.levels) {
    if (L.level != l || idx(L.supp, extra) || !idx(L.dom_y, extra)) continue;
    auto supp = L.supp;
    supp.insert(std::upper_bound(supp.begin(), supp.end(), extra), extra);
    L = widen(L, L.dom_x, L.dom_y, supp);
  }
  return out;
}

bool fixes_column(const Aut1& pi, Level l, std::uint32_t i) {
  const Aut1Level* L = pi.find(l);
  if (!L) return true;
  if (auto k = idx(L->supp, i)) {
    if (L->f[*k] != i) return false;
    for (const auto& c : L->colmaps)
      for (std::uint32_t m = 0; m < c.size(); ++m)
        if (((c[m] ^ m) >> *k) & 1u) return false;
    return true;
  }
  for (std::size_t xi = 0; xi < L->dom_x.size(); ++xi)
    if (flip_at(*L, xi, i)) return false;
  return true;
}

Aut1 homog1(const Cond1& p, const Cond1& q, Level floor) {
  Aut1 out;
  for (const auto& bp : p.blocks) {
    if (bp.level <= floor) continue;
    const Block* bq = q.find(bp.level);
    if (!bq) continue;
    std::vector<std::uint32_t> xs, ys;
    std::set_intersection(bp.xs.begin(), bp.xs.end(), bq->xs.begin(), bq->xs.end(), std::back_inserter(xs));
    std::set_intersection(bp.ys.begin(), bp.ys.end(), bq->ys.begin(), bq->ys.end(), std::back_inserter(ys));
    if (xs.empty() || ys.empty()) continue;
    Aut1Level L{bp.level, {}, {}, xs, ys, std::vector<std::uint8_t>(xs.size() * ys.size(), 0),
                std::vector<std::vector<std::uint32_t>>(xs.size(), std::vector<std::uint32_t>{0})};
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
      for (std::size_t yi = 0; yi < ys.size(); ++yi)
        L.flips[xi * ys.size() + yi] = *bp.at(xs[xi], ys[yi]) != *bq->at(xs[xi], ys[yi]);
    out.levels.push_back(std::move(L));
  }
  return out;
}

Outcome<Aut1> column_swap_aut1(const std::vector<ColumnSwap>& swaps, const std::vector<Rect>& doms) {
  Aut1 out;
  std::set<std::pair<Level, std::uint32_t>> seen;
  std::set<Level> lv;
  for (const auto& sw : swaps) {
    if (sw.j == sw.j2 || !seen.insert({sw.level, sw.j}).second || !seen.insert({sw.level, sw.j2}).second)
      return make_error(Code::Overlap, "column swaps are not pairwise disjoint");
    lv.insert(sw.level);
  }
  for (Level l : lv) {
    const Rect* r = nullptr;
    for (const auto& d : doms)
      if (d.level == l) r = &d;
    if (!r) return make_error(Code::DomainMismatch, "no domain rectangle for level " + std::to_string(l));
    Aut1Level L{l, {}, {}, r->xs, r->ys, {}, {}};
    std::sort(L.dom_x.begin(), L.dom_x.end());
    std::sort(L.dom_y.begin(), L.dom_y.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& sw : swaps)
      if (sw.level == l) {
        if (!idx(L.dom_y, sw.j) || !idx(L.dom_y, sw.j2))
          return make_error(Code::DomainMismatch, "swapped column outside dom_y");
        L.supp.push_back(sw.j);
        L.supp.push_back(sw.j2);
        pairs.push_back({sw.j, sw.j2});
      }
    std::sort(L.supp.begin(), L.supp.end());
    for (auto i : L.supp) {
      std::uint32_t img = i;
      for (auto [a, b] : pairs) img = i == a ? b : (i == b ? a : img);
      L.f.push_back(img);
    }
    L.flips.assign(L.dom_x.size() * L.dom_y.size(), 0);
    std::vector<std::uint32_t> cm(1u << L.supp.size());
    for (std::uint32_t m = 0; m < cm.size(); ++m) {
      std::uint32_t nm = 0;
      for (std::size_t k = 0; k < L.supp.size(); ++k)
        nm |= ((m >> *idx(L.supp, L.f[k])) & 1u) << k;
      cm[m] = nm;
    }
    L.colmaps.assign(L.dom_x.size(), cm);
    out.levels.push_back(std::move(L));
  }
  return out;
}

bool in_subgroup(const Aut0& pi, const SubgroupGen& g, std::uint32_t w) {
  switch (g.kind) {
    case GenKind::Fix0: return pi.at(g.level, g.value) == g.value;
    case GenKind::Small0: return small_below(pi, g.level, g.value, w);
    default: return true;
  }
}

bool in_subgroup(const Aut1& pi, const SubgroupGen& g, std::uint32_t) {
  switch (g.kind) {
    case GenKind::Fix1: return fixes_column(pi, g.level, g.value);
    case GenKind::Small1: {
      Aut1 n = normalize_supp(pi);
      const Aut1Level* L = n.find(g.level);
      if (!L) return true;
      return std::none_of(L->supp.begin(), L->supp.end(), [&](std::uint32_t i) { return i < g.value; });
    }
    default: return true;
  }
}

bool in_subgroup(const AutPair& pi, const SubgroupGen& g, std::uint32_t w) {
  return in_subgroup(pi.a0, g, w) && in_subgroup(pi.a1, g, w);
}

bool in_group(const AutPair& pi, const GroupSpec& spec, std::uint32_t w) {
  return std::all_of(spec.begin(), spec.end(), [&](const SubgroupGen& g) { return in_subgroup(pi, g, w); });
}

Errors validate_gen(const Skeleton& s, const SubgroupGen& g) {
  Errors errs;
  if (g.level >= s.size()) {
    errs.push_back(make_error(Code::IndexOutOfRange, "generator level"));
    return errs;
  }
  const bool p1 = g.kind == GenKind::Fix1 || g.kind == GenKind::Small1;
  if (p1 && !in_succ_prime(s, g.level)) errs.push_back(make_error(Code::IndexOutOfRange, "P1 generator off Succ'"));
  const std::uint32_t bound = p1 ? s.f(g.level) : f_lim(s, g.level);
  const bool fix = g.kind == GenKind::Fix0 || g.kind == GenKind::Fix1;
  if (fix ? g.value >= bound : g.value > bound) errs.push_back(make_error(Code::IndexOutOfRange, "generator value"));
  if (g.kind == GenKind::Small0 && g.value % s.block_width != 0 && g.value != bound)
    errs.push_back(make_error(Code::ConfigError, "Small0 cut must be a multiple of the block width"));
  return errs;
}

GroupSpec conjugate_witness(const AutPair& pi, const SubgroupGen& g) {
  GroupSpec out;
  switch (g.kind) {
    case GenKind::Fix0: {
      Aut0 inv = invert0(pi.a0);
      out.push_back({GenKind::Fix0, g.level, inv.at(g.level, g.value)});
      break;
    }
    case GenKind::Small0:
      out.push_back(g);
      for (auto j : pi.a0.support(g.level)) out.push_back({GenKind::Fix0, g.level, j});
      break;
    case GenKind::Fix1: {
      out.push_back(g);
      Aut1 n = normalize_supp(pi.a1);
      if (const Aut1Level* L = n.find(g.level))
        for (auto j : L->supp)
          if (j != g.value) out.push_back({GenKind::Fix1, g.level, j});
      break;
    }
    case GenKind::Small1: {
      Aut1 n = normalize_supp(pi.a1);
      const Aut1Level* L = n.find(g.level);
      std::uint32_t cut = g.value;
      if (L && !L->supp.empty()) cut = std::max(cut, L->supp.back() + 1);
      out.push_back({GenKind::Small1, g.level, cut});
      if (L)
        for (auto j : L->supp) out.push_back({GenKind::Fix1, g.level, j});
      break;
    }
  }
  return out;
}

ProductCond apply(const AutPair& pi, const ProductCond& p) {
  return ProductCond{apply0(pi.a0, p.c0), apply1(pi.a1, p.c1).value()};
}

AutPair compose(const AutPair& sigma, const AutPair& pi) {
  return {compose0(sigma.a0, pi.a0), compose1(sigma.a1, pi.a1)};
}

AutPair invert(const AutPair& pi) { return {invert0(pi.a0), invert1(pi.a1)}; }

}  // namespace forcelab
