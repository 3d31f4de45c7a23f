#include "forcelab/product.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace forcelab {

Errors validate_product(const Skeleton& s, const ProductCond& p) {
  Errors errs = validate_cond0(s, p.c0);
  Errors e1 = validate_cond1(s, p.c1);
  errs.insert(errs.end(), e1.begin(), e1.end());
  return errs;
}

bool leq(const ProductCond& q, const ProductCond& p) { return leq0(q.c0, p.c0) && leq1(q.c1, p.c1); }

bool compat(const Skeleton& s, const ProductCond& p, const ProductCond& q) {
  return compat0(s, p.c0, q.c0) && compat1(p.c1, q.c1);
}

Level eta(const ProductCond& p) {
  int h = std::max(height(p.c0.tree), 0);
  if (!p.c1.blocks.empty()) h = std::max<int>(h, p.c1.blocks.back().level);
  return static_cast<Level>(h);
}

bool filter_member(const Filter0& h, const Cond0& p) {
  return std::any_of(h.gens.begin(), h.gens.end(), [&](const Cond0& g) { return leq0(g, p); });
}
bool filter_member(const Filter1& h, const Cond1& p) {
  return std::any_of(h.gens.begin(), h.gens.end(), [&](const Cond1& g) { return leq1(g, p); });
}
bool filter_member(const FilterP& h, const ProductCond& p) {
  return std::any_of(h.gens.begin(), h.gens.end(), [&](const ProductCond& g) { return leq(g, p); });
}

bool filter_valid(const Skeleton& s, const Filter0& h) {
  for (std::size_t i = 0; i < h.gens.size(); ++i)
    for (std::size_t j = i + 1; j < h.gens.size(); ++j)
      if (!compat0(s, h.gens[i], h.gens[j])) return false;
  return true;
}
bool filter_valid(const Skeleton&, const Filter1& h) {
  for (std::size_t i = 0; i < h.gens.size(); ++i)
    for (std::size_t j = i + 1; j < h.gens.size(); ++j)
      if (!compat1(h.gens[i], h.gens[j])) return false;
  return true;
}
bool filter_valid(const Skeleton& s, const FilterP& h) {
  for (std::size_t i = 0; i < h.gens.size(); ++i)
    for (std::size_t j = i + 1; j < h.gens.size(); ++j)
      if (!compat(s, h.gens[i], h.gens[j])) return false;
  return true;
}

Filter0 filter_restrict0_tree(const Filter0& h, const FlimTree& base) {
  Filter0 out;
  for (const auto& g : h.gens)
    if (auto r = restrict0_tree(g, base)) out.gens.push_back(std::move(r).value());
  return out;
}

Filter1 filter_restrict1_cols(const Filter1& h, const std::vector<std::pair<Level, std::uint32_t>>& cols) {
  Filter1 out;
  for (const auto& g : h.gens) out.gens.push_back(restrict1_cols(g, cols));
  return out;
}

bool filter_meets(const Filter0& h, const std::function<bool(const Cond0&)>& in_d, std::size_t budget) {
  std::set<Cond0> seen;
  std::deque<Cond0> work(h.gens.begin(), h.gens.end());
  while (!work.empty() && seen.size() < budget) {
    Cond0 p = std::move(work.front());
    work.pop_front();
    if (!seen.insert(p).second) continue;
    if (in_d(p)) return true;
    for (std::size_t k = 0; k < p.tree.size(); ++k)
      for (std::size_t b = 0; b < p.labels[k].size(); ++b) {
        Cond0 w = p;
        w.labels[k].erase(w.labels[k].begin() + static_cast<std::ptrdiff_t>(b));
        work.push_back(std::move(w));
      }
    for (Vertex leaf : max_points(p.tree)) {
      if (!p.label(leaf).empty()) continue;
      std::vector<Node> ns;
      std::map<Vertex, Label> ls;
      for (std::size_t k = 0; k < p.tree.size(); ++k)
        if (p.tree.nodes()[k].v != leaf) {
          ns.push_back(p.tree.nodes()[k]);
          ls[p.tree.nodes()[k].v] = p.labels[k];
        }
      work.push_back(Cond0::make(FlimTree(std::move(ns)), ls));
    }
  }
  return false;
}

}  // namespace forcelab
