#include "forcelab/cond0.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "forcelab/mutation.hpp"

namespace forcelab {

namespace {

std::string vstr(Vertex v) {
  return "(" + std::to_string(v.level) + "," + std::to_string(v.index) + ")";
}

const Label kEmptyLabel;

}  // namespace

bool label_contains(const Label& big, const Label& small) {
  std::size_t i = 0;
  for (const Bit& b : small) {
    while (i < big.size() && big[i].pos < b.pos) ++i;
    if (i == big.size() || big[i].pos != b.pos || big[i].val != b.val) return false;
    ++i;
  }
  return true;
}

bool label_compatible(const Label& a, const Label& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].pos < b[j].pos) {
      ++i;
    } else if (b[j].pos < a[i].pos) {
      ++j;
    } else {
      if (a[i].val != b[j].val) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

Outcome<Label> label_union(const Label& a, const Label& b) {
  Label out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].pos < b[j].pos)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].pos < a[i].pos) {
      out.push_back(b[j++]);
    } else {
      if (a[i].val != b[j].val)
        return make_error(Code::Incompatible, "position " + std::to_string(a[i].pos));
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<std::uint8_t> label_at(const Label& l, std::uint32_t pos) {
  auto it = std::lower_bound(l.begin(), l.end(), pos,
                             [](const Bit& b, std::uint32_t p) { return b.pos < p; });
  if (it == l.end() || it->pos != pos) return std::nullopt;
  return it->val;
}

void label_set(Label& l, std::uint32_t pos, std::uint8_t val) {
  auto it = std::lower_bound(l.begin(), l.end(), pos,
                             [](const Bit& b, std::uint32_t p) { return b.pos < p; });
  if (it != l.end() && it->pos == pos)
    it->val = val;
  else
    l.insert(it, Bit{pos, val});
}

Cond0 Cond0::make(FlimTree t, const std::map<Vertex, Label>& ls) {
  Cond0 c;
  c.labels.resize(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    auto it = ls.find(t.nodes()[k].v);
    if (it != ls.end()) c.labels[k] = it->second;
  }
  c.tree = std::move(t);
  return c;
}

const Label& Cond0::label(Vertex v) const {
  auto k = tree.position(v);
  return k ? labels[*k] : kEmptyLabel;
}

Label* Cond0::label_mut(Vertex v) {
  auto k = tree.position(v);
  return k ? &labels[*k] : nullptr;
}

std::vector<std::pair<Vertex, Bit>> branch_union(const Cond0& p, Vertex v) {
  std::vector<std::pair<Vertex, Bit>> out;
  for (Vertex u : branch(p.tree, v))
    for (const Bit& b : p.label(u)) out.push_back({u, b});
  return out;
}

namespace {

Errors cap_errors(const Skeleton& s, const Cond0& p) {
  Errors errs;
  for (auto [lvl, cap] : s.caps)
    for (const auto& n : p.tree.at_level(lvl))
      if (branch_union(p, n.v).size() >= cap)
        errs.push_back(make_error(Code::CapExceeded, "branch below " + vstr(n.v)));
  return errs;
}

}  // namespace

Errors validate_cond0(const Skeleton& s, const Cond0& p) {
  Errors errs = validate_tree(s, p.tree);
  if (p.labels.size() != p.tree.size()) {
    errs.push_back(make_error(Code::MissingPredecessor, "label table does not match tree"));
    return errs;
  }
  for (std::size_t k = 0; k < p.labels.size(); ++k) {
    const Vertex v = p.tree.nodes()[k].v;
    const Label& l = p.labels[k];
    if (v.level < s.size() && !s.labelable(v.level) && !l.empty())
      errs.push_back(make_error(Code::NonemptyLimitLabel, vstr(v)));
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i].val > 1 || (i > 0 && l[i - 1].pos >= l[i].pos))
        errs.push_back(make_error(Code::NonRectangular, "malformed label at " + vstr(v)));
    }
  }
  if (errs.empty()) {
    auto ce = cap_errors(s, p);
    errs.insert(errs.end(), ce.begin(), ce.end());
  }
  return errs;
}

bool leq0(const Cond0& q, const Cond0& p) {
  if (!tree_leq(q.tree, p.tree)) return false;
  if (mutated(Mutation::Leq0IgnoreLabels)) return true;
  const auto& pn = p.tree.nodes();
  const auto& qn = q.tree.nodes();
  std::size_t j = 0;
  for (std::size_t i = 0; i < pn.size(); ++i) {
    if (p.labels[i].empty()) continue;
    while (qn[j].v < pn[i].v) ++j;
    if (!label_contains(q.labels[j], p.labels[i])) return false;
  }
  return true;
}

Outcome<Cond0> union0(const Skeleton& s, const Cond0& p, const Cond0& q) {
  auto t = tree_union(s, p.tree, q.tree);
  if (!t) return make_error(Code::Incompatible, describe(t.error()));
  Cond0 out;
  out.tree = std::move(t).value();
  out.labels.resize(out.tree.size());
  for (std::size_t k = 0; k < out.tree.size(); ++k) {
    Vertex v = out.tree.nodes()[k].v;
    auto u = label_union(p.label(v), q.label(v));
    if (!u) return make_error(Code::Incompatible, "label clash at " + vstr(v));
    out.labels[k] = std::move(u).value();
  }
  if (!s.caps.empty()) {
    auto ce = cap_errors(s, out);
    if (!ce.empty()) return make_error(Code::Incompatible, describe(ce.front()));
  }
  return out;
}

bool compat0(const Skeleton& s, const Cond0& p, const Cond0& q) {
  if (!s.caps.empty()) return union0(s, p, q).ok();
  // Merge walk over both node lists: shared vertices need equal parents and
  // compatible labels; at limit levels the merged parents must stay distinct.
  const auto& a = p.tree.nodes();
  const auto& b = q.tree.nodes();
  std::size_t i = 0, j = 0;
  Level cur = 0;
  std::vector<std::uint32_t> lim_parents;
  auto see = [&](const Node& n) {
    if (!s.is_limit(n.v.level) || mutated(Mutation::NoLimitSplit)) return true;
    if (n.v.level != cur) {
      cur = n.v.level;
      lim_parents.clear();
    }
    if (std::find(lim_parents.begin(), lim_parents.end(), n.parent) != lim_parents.end()) return false;
    lim_parents.push_back(n.parent);
    return true;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].v < b[j].v)) {
      if (!see(a[i++])) return false;
    } else if (i == a.size() || b[j].v < a[i].v) {
      if (!see(b[j++])) return false;
    } else {
      if (a[i].parent != b[j].parent || !label_compatible(p.labels[i], q.labels[j])) return false;
      if (!see(a[i])) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

Cond0 restrict0_band(const Cond0& p, Level lo, Level hi) {
  Cond0 out;
  out.tree = restrict_band(p.tree, lo, hi);
  out.labels.reserve(out.tree.size());
  for (const auto& n : out.tree.nodes()) {
    if (n.v.level == lo && lo > 0)
      out.labels.emplace_back();
    else
      out.labels.push_back(p.label(n.v));
  }
  return out;
}

Outcome<Cond0> restrict0_tree(const Cond0& p, const FlimTree& base) {
  if (!tree_leq(p.tree, base)) return make_error(Code::NotAnExtension, "t(p) does not extend the base tree");
  Cond0 out;
  out.tree = base;
  out.labels.reserve(base.size());
  for (const auto& n : base.nodes()) out.labels.push_back(p.label(n.v));
  return out;
}

Outcome<Cond0> restrict0_structural(const Cond0& p, const FlimTree& s) {
  Cond0 out;
  out.tree = s;
  out.labels.resize(s.size());
  if (s.empty()) return out;
  const Level top = static_cast<Level>(height(s));
  for (Vertex m : max_points(s)) {
    if (m.level != top) return make_error(Code::StructureMismatch, "maximal point below the top level");
    if (!p.tree.contains(m)) return make_error(Code::StructureMismatch, vstr(m) + " not in t(p)");
  }
  std::vector<bool> assigned(s.size(), false);
  for (const auto& topn : s.at_level(top)) {
    for (Vertex u : branch(s, topn.v)) {
      auto src = pred_at(p.tree, topn.v, u.level);
      if (!src) return make_error(Code::StructureMismatch, "no predecessor in t(p)");
      std::size_t k = *s.position(u);
      if (assigned[k]) continue;
      out.labels[k] = p.label(*src);
      assigned[k] = true;
    }
  }
  // Sharing check: tops sharing a vertex of s share the predecessor in t(p).
  auto tops = s.at_level(top);
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t j = i + 1; j < tops.size(); ++j)
      for (Level l = 0; l <= top; ++l)
        if (pred_at(s, tops[i].v, l) == pred_at(s, tops[j].v, l) &&
            pred_at(p.tree, tops[i].v, l) != pred_at(p.tree, tops[j].v, l))
          return make_error(Code::StructureMismatch,
                            "tops " + vstr(tops[i].v) + "," + vstr(tops[j].v) + " split in t(p)");
  return out;
}

Outcome<Cond0> dense_lift_check0(const Skeleton& s, const Cond0& p, const Pred0& in_d, const Cond0& q,
                                 std::uint32_t bound, int max_bits) {
  auto base = restrict0_tree(q, p.tree);
  if (!base) return base.error();
  const Cond0& r0 = base.value();
  struct Slot {
    Vertex v;
    std::uint32_t pos;
  };
  std::vector<Slot> slots;
  for (std::size_t k = 0; k < r0.tree.size(); ++k) {
    Vertex v = r0.tree.nodes()[k].v;
    if (!s.labelable(v.level)) continue;
    for (std::uint32_t z = 0; z < bound; ++z)
      if (!label_at(r0.labels[k], z)) slots.push_back({v, z});
  }
  auto graft = [&](const Cond0& r) {
    Cond0 out = q;
    for (std::size_t k = 0; k < r.tree.size(); ++k) *out.label_mut(r.tree.nodes()[k].v) = r.labels[k];
    return out;
  };
  // Subsets of slots in order of size, each with every bit assignment.
  std::vector<std::size_t> pick;
  std::function<std::optional<Cond0>(std::size_t, int)> rec = [&](std::size_t from,
                                                                   int left) -> std::optional<Cond0> {
    if (left == 0) {
      for (std::uint32_t mask = 0; mask < (1u << pick.size()); ++mask) {
        Cond0 r = r0;
        for (std::size_t i = 0; i < pick.size(); ++i)
          label_set(*r.label_mut(slots[pick[i]].v), slots[pick[i]].pos,
                    static_cast<std::uint8_t>((mask >> i) & 1u));
        if (in_d(r)) {
          Cond0 out = graft(r);
          if (validate_cond0(s, out).empty()) return out;
        }
      }
      return std::nullopt;
    }
    for (std::size_t i = from; i < slots.size(); ++i) {
      pick.push_back(i);
      auto got = rec(i + 1, left - 1);
      pick.pop_back();
      if (got) return got;
    }
    return std::nullopt;
  };
  for (int k = 0; k <= max_bits && k <= static_cast<int>(slots.size()); ++k)
    if (auto got = rec(0, k)) return *got;
  return make_error(Code::NoWitness, "no member of D below q restricted to t(p) within the bound");
}

}  // namespace forcelab
