#include "forcelab/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "forcelab/mutation.hpp"

namespace forcelab {

namespace {

std::string vstr(Vertex v) {
  return "(" + std::to_string(v.level) + "," + std::to_string(v.index) + ")";
}

bool limit_split_check_enabled() { return !mutated(Mutation::NoLimitSplit); }

}  // namespace

FlimTree::FlimTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
}

const Node* FlimTree::find(Vertex v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v,
                             [](const Node& n, const Vertex& x) { return n.v < x; });
  if (it == nodes_.end() || it->v != v) return nullptr;
  return &*it;
}

std::optional<std::size_t> FlimTree::position(Vertex v) const {
  const Node* n = find(v);
  if (!n) return std::nullopt;
  return static_cast<std::size_t>(n - nodes_.data());
}

std::optional<Vertex> FlimTree::parent(Vertex v) const {
  const Node* n = find(v);
  if (!n || n->parent == kNoParent || v.level == 0) return std::nullopt;
  return Vertex{static_cast<Level>(v.level - 1), n->parent};
}

std::span<const Node> FlimTree::at_level(Level l) const {
  auto lo = std::lower_bound(nodes_.begin(), nodes_.end(), l,
                             [](const Node& n, Level x) { return n.v.level < x; });
  auto hi = std::lower_bound(lo, nodes_.end(), static_cast<Level>(l + 1),
                             [](const Node& n, Level x) { return n.v.level < x; });
  return {nodes_.data() + (lo - nodes_.begin()), static_cast<std::size_t>(hi - lo)};
}

void FlimTree::insert(Vertex v, std::uint32_t parent) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v,
                             [](const Node& n, const Vertex& x) { return n.v < x; });
  if (it != nodes_.end() && it->v == v) return;
  nodes_.insert(it, Node{v, parent});
}

FlimTree FlimTree::chain(const std::vector<std::uint32_t>& indices) {
  std::vector<Node> ns;
  ns.push_back({{0, 0}, kNoParent});
  std::uint32_t prev = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    ns.push_back({{static_cast<Level>(k + 1), indices[k]}, prev});
    prev = indices[k];
  }
  return FlimTree(std::move(ns));
}

Outcome<FlimTree> tree_from_raw(const Skeleton& s, const RawTree& raw) {
  std::set<Vertex> vs(raw.vertices.begin(), raw.vertices.end());
  std::map<Vertex, std::set<Vertex>> below;  // direct generating pairs
  for (auto [u, v] : raw.order) {
    if (!vs.count(u) || !vs.count(v))
      return make_error(Code::MissingPredecessor, "order pair mentions unknown vertex");
    if (u == v) continue;
    if (u.level >= v.level)
      return make_error(Code::AmbiguousPredecessor,
                        "pair " + vstr(u) + "<=" + vstr(v) + " does not respect levels");
    below[v].insert(u);
  }
  std::vector<Node> nodes;
  for (Vertex v : vs) {
    if (v.level >= s.size()) return make_error(Code::IndexOutOfRange, "level of " + vstr(v));
    // Transitive closure below v.
    std::set<Vertex> preds;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex u : below[x])
        if (preds.insert(u).second) stack.push_back(u);
    }
    std::map<Level, std::vector<Vertex>> per_level;
    for (Vertex u : preds) per_level[u.level].push_back(u);
    for (Level l = 0; l < v.level; ++l) {
      auto it = per_level.find(l);
      if (it == per_level.end())
        return make_error(Code::MissingPredecessor, vstr(v) + " has none at level " + std::to_string(l));
      if (it->second.size() > 1)
        return make_error(Code::AmbiguousPredecessor, vstr(v) + " at level " + std::to_string(l));
    }
    std::uint32_t parent = v.level == 0 ? kNoParent : per_level[v.level - 1].front().index;
    nodes.push_back({v, parent});
  }
  FlimTree t(std::move(nodes));
  auto errs = validate_tree(s, t);
  if (!errs.empty()) return errs.front();
  return t;
}

RawTree tree_to_raw(const FlimTree& t) {
  RawTree raw;
  for (const auto& n : t.nodes()) {
    raw.vertices.push_back(n.v);
    if (n.parent != kNoParent && n.v.level > 0)
      raw.order.push_back({Vertex{static_cast<Level>(n.v.level - 1), n.parent}, n.v});
  }
  return raw;
}

Errors validate_tree(const Skeleton& s, const FlimTree& t) {
  Errors errs;
  const auto& ns = t.nodes();
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const Node& n = ns[k];
    if (k > 0 && ns[k - 1].v == n.v)
      errs.push_back(make_error(Code::AmbiguousPredecessor, "duplicate vertex " + vstr(n.v)));
    if (n.v.level >= s.size() || n.v.index >= f_lim(s, n.v.level)) {
      errs.push_back(make_error(Code::IndexOutOfRange, vstr(n.v)));
      continue;
    }
    if (n.v.level == 0) continue;
    if (n.parent == kNoParent || !t.contains({static_cast<Level>(n.v.level - 1), n.parent}))
      errs.push_back(make_error(Code::MissingPredecessor, vstr(n.v)));
  }
  if (limit_split_check_enabled()) {
    for (Level l = 0; l < s.size(); ++l) {
      if (!s.is_limit(l)) continue;
      auto lv = t.at_level(l);
      std::set<std::uint32_t> parents;
      for (const auto& n : lv)
        if (!parents.insert(n.parent).second)
          errs.push_back(make_error(Code::LimitSplit, "split below " + vstr(n.v)));
    }
  }
  return errs;
}

bool tree_leq(const FlimTree& sub, const FlimTree& sup) {
  if (sup.size() > sub.size()) return false;
  const auto& a = sub.nodes();
  const auto& b = sup.nodes();
  std::size_t i = 0;
  for (const auto& n : b) {
    while (i < a.size() && a[i].v < n.v) ++i;
    if (i == a.size() || a[i].v != n.v) return false;
    if (n.parent != kNoParent && a[i].parent != n.parent) return false;
    ++i;
  }
  return true;
}

Outcome<FlimTree> tree_union(const Skeleton& s, const FlimTree& x, const FlimTree& y) {
  const auto& a = x.nodes();
  const auto& b = y.nodes();
  std::vector<Node> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].v < b[j].v)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].v < a[i].v) {
      out.push_back(b[j++]);
    } else {
      if (a[i].parent != b[j].parent)
        return make_error(Code::AmbiguousPredecessor, "parents disagree at " + vstr(a[i].v));
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  FlimTree t;
  t = FlimTree(std::move(out));
  if (limit_split_check_enabled()) {
    for (Level l = 0; l < s.size(); ++l) {
      if (!s.is_limit(l)) continue;
      std::set<std::uint32_t> parents;
      for (const auto& n : t.at_level(l))
        if (!parents.insert(n.parent).second)
          return make_error(Code::LimitSplit, "union splits below " + vstr(n.v));
    }
  }
  return t;
}

std::vector<Vertex> max_points(const FlimTree& t) {
  std::vector<Vertex> out;
  for (const auto& n : t.nodes()) {
    auto next = t.at_level(static_cast<Level>(n.v.level + 1));
    bool has_child = std::any_of(next.begin(), next.end(),
                                 [&](const Node& c) { return c.parent == n.v.index; });
    if (!has_child) out.push_back(n.v);
  }
  return out;
}

int height(const FlimTree& t) { return t.empty() ? -1 : t.nodes().back().v.level; }

std::optional<Vertex> pred_at(const FlimTree& t, Vertex v, Level l) {
  if (l > v.level || !t.contains(v)) return std::nullopt;
  Vertex cur = v;
  while (cur.level > l) {
    auto p = t.parent(cur);
    if (!p) return std::nullopt;
    cur = *p;
  }
  return cur;
}

std::vector<Vertex> branch(const FlimTree& t, Vertex v) {
  std::vector<Vertex> out;
  if (!t.contains(v)) return out;
  Vertex cur = v;
  out.push_back(cur);
  while (auto p = t.parent(cur)) {
    cur = *p;
    out.push_back(cur);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Vertex> children(const FlimTree& t, Vertex v) {
  std::vector<Vertex> out;
  for (const auto& n : t.at_level(static_cast<Level>(v.level + 1)))
    if (n.parent == v.index) out.push_back(n.v);
  return out;
}

FlimTree restrict_band(const FlimTree& t, Level lo, Level hi) {
  std::vector<Node> out;
  for (const auto& n : t.nodes()) {
    if (n.v.level < lo || n.v.level > hi) continue;
    Node m = n;
    if (n.v.level == lo && lo > 0) m.parent = kNoParent;
    out.push_back(m);
  }
  return FlimTree(std::move(out));
}

FlimTree restrict_to(const FlimTree& t, const std::vector<Vertex>& vs) {
  std::set<Vertex> keep;
  for (Vertex v : vs)
    for (Vertex u : branch(t, v)) keep.insert(u);
  std::vector<Node> out;
  for (const auto& n : t.nodes())
    if (keep.count(n.v)) out.push_back(n);
  return FlimTree(std::move(out));
}

bool same_meet_structure(const FlimTree& a, const std::vector<Vertex>& tops_a, const FlimTree& b,
                         const std::vector<Vertex>& tops_b) {
  if (tops_a.size() != tops_b.size()) return false;
  for (std::size_t i = 0; i < tops_a.size(); ++i) {
    if (tops_a[i].level != tops_b[i].level) return false;
    for (std::size_t j = i + 1; j < tops_a.size(); ++j) {
      Level top = std::min(tops_a[i].level, tops_a[j].level);
      for (Level l = 0; l <= top; ++l) {
        bool sa = pred_at(a, tops_a[i], l) == pred_at(a, tops_a[j], l);
        bool sb = pred_at(b, tops_b[i], l) == pred_at(b, tops_b[j], l);
        if (sa != sb) return false;
      }
    }
  }
  return true;
}

}  // namespace forcelab
