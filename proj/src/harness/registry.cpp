#include "forcelab/harness/registry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "props_common.hpp"

namespace forcelab {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

CaseResult Checker::exhaustive(std::uint64_t) const { return CaseResult::skip("no exhaustive mode"); }

CaseResult Verdict::result(io::json inputs) const {
  CaseResult r;
  r.inputs = std::move(inputs);
  if (count_ == 0) return r;
  r.status = Status::Fail;
  for (std::size_t k = 0; k < fails_.size(); ++k) r.detail += (k ? "; " : "") + fails_[k];
  if (count_ > fails_.size()) r.detail += "; +" + std::to_string(count_ - fails_.size()) + " more";
  return r;
}

const std::vector<PropertyInfo>& registry() {
  static const std::vector<PropertyInfo> reg = [] {
    std::vector<PropertyInfo> out;
    props::add_conditions(out);
    props::add_automorphisms(out);
    props::add_names(out);
    props::add_quotient(out);
    return out;
  }();
  return reg;
}

const PropertyInfo* find_property(std::string_view id) {
  for (const auto& p : registry())
    if (p.id == id) return &p;
  return nullptr;
}

const std::vector<InvariantEntry>& invariant_table() {
  static const std::vector<InvariantEntry> table = {
      {"core", "f_lim is weakly monotone whenever F is", {"P0-POSET"}},
      {"core", "tree_leq is a partial order on validated trees", {"P0-POSET"}},
      {"core", "tree_union, when it validates, is the least common extension", {"P0-POSET"}},
      {"core", "restrictions of a valid tree are valid; the full band is the identity", {"P0-POSET"}},
      {"conditions", "leq0/leq1 are partial orders and union0/union1 are greatest lower bounds",
       {"P0-POSET", "P1-POSET"}},
      {"conditions", "P0 is dense in the split product of its lower and upper bands", {"P0-SPLIT-DENSE"}},
      {"conditions", "maximal antichains of the height-bounded subposet stay maximal", {"P0-ANTICHAIN"}},
      {"conditions", "filter restriction keeps generators pairwise compatible", {"P0-RESTRICT-DENSE", "P1-POSET"}},
      {"conditions", "dense_lift_check0 witnesses lie below q and restrict into D", {"P0-RESTRICT-DENSE"}},
      {"automorphisms", "group laws for Aut0 and extensional group laws for Aut1", {"A0-GROUP", "A1-GROUP-EXT"}},
      {"automorphisms", "D_pi is closed under same-support extension and sub-support restriction", {"DPI-CLOSURE"}},
      {"automorphisms", "apply1 preserves order on D_pi", {"DPI-CLOSURE"}},
      {"automorphisms", "homog0/homog1 succeed and meet their postconditions", {"HOMOG0", "HOMOG1"}},
      {"automorphisms", "conjugate_witness members conjugate into the generator's subgroup", {"NORMALITY"}},
      {"automorphisms", "Fix1 members preserve their column", {"FIX1-COLUMN"}},
      {"names", "bar-extension does not change the valuation on D-meeting filters", {"NAME-BAR-VAL"}},
      {"names", "valuation is equivariant for names of rank <= 2", {"NAME-EQUIVARIANCE"}},
      {"names", "clouds of distinct blocks are disjoint", {"CLOUD-DISJOINT"}},
      {"names", "cloud_difference_dense is dense below conditions holding both vertices", {"CLOUD-DIFF-DENSE"}},
      {"names", "canonical names are fixed by their defining subgroups", {"SYM-CANONICAL"}},
      {"quotient", "qtree_leq is a partial order and embeddings agree with the partition definition", {"QT-POSET"}},
      {"quotient", "rho0 and rho1 are projections (order, top, lift)", {"RHO0-PROJ", "RHO1-PROJ"}},
      {"quotient", "filter images under rho0/rho1 stay filters", {"RHO0-PROJ", "RHO1-PROJ"}},
      {"quotient", "iso_tqq is an order isomorphism commuting with restriction", {"TQQ-ISO"}},
      {"quotient", "transport_tpi commutes with the canonical extension", {"TPI-COMMUTE"}},
      {"quotient", "enum_m_beta is a duplicate-free enumeration indexed by mtuple_rank", {"MBETA-ENUM"}},
  };
  return table;
}

namespace props {

std::vector<std::string> tree_recheck(const Skeleton& s, const FlimTree& t) {
  // Plain quadratic scans over the node list; trees here are small.
  std::vector<std::string> out;
  const auto& ns = t.nodes();
  if (ns.empty()) return out;
  auto has = [&](Level l, std::uint32_t i) {
    return std::any_of(ns.begin(), ns.end(), [&](const Node& n) { return n.v.level == l && n.v.index == i; });
  };
  if (!has(0, 0)) out.push_back("no root (0,0)");
  for (std::size_t a = 0; a < ns.size(); ++a) {
    const Vertex v = ns[a].v;
    for (std::size_t b = a + 1; b < ns.size(); ++b) {
      if (ns[b].v == v) out.push_back("duplicate vertex");
      if (ns[b].v.level == v.level && v.level < s.size() && s.kind(v.level) == LevelKind::Limit &&
          ns[b].parent == ns[a].parent)
        out.push_back("split at a limit level");
    }
    if (v.level >= s.size() || v.index >= f_lim(s, v.level)) out.push_back("index out of range");
    if (v.level == 0) {
      if (v.index != 0) out.push_back("second vertex at the base level");
      continue;
    }
    if (!has(static_cast<Level>(v.level - 1), ns[a].parent)) out.push_back("missing predecessor");
  }
  return out;
}

std::vector<std::size_t> OrderIndex::below(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < down[j].size(); ++w)
    for (std::uint64_t m = down[j][w]; m; m &= m - 1) out.push_back(w * 64 + __builtin_ctzll(m));
  return out;
}

std::vector<std::size_t> OrderIndex::common_below(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < down[a].size(); ++w)
    for (std::uint64_t m = down[a][w] & down[b][w]; m; m &= m - 1) out.push_back(w * 64 + __builtin_ctzll(m));
  return out;
}

bool OrderIndex::subset(std::size_t a, std::size_t b) const {
  for (std::size_t w = 0; w < down[a].size(); ++w)
    if (down[a][w] & ~down[b][w]) return false;
  return true;
}

std::string show(const Cond0& p) { return encode(p).dump(); }
std::string show(const Cond1& p) { return encode(p).dump(); }

std::vector<std::pair<Level, std::uint32_t>> all_columns(const Skeleton& s, std::uint32_t limit) {
  std::vector<std::pair<Level, std::uint32_t>> out;
  for (Level l : succ_prime(s))
    for (std::uint32_t y = 0; y < s.f(l) && y < limit; ++y) out.push_back({l, y});
  return out;
}

}  // namespace props

}  // namespace forcelab
