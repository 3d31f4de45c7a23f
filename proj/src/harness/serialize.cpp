#include "forcelab/harness/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace forcelab::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Failure(make_error(Code::ParseError, what)); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T num(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(std::string(what) + " must be a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<T>::max()) fail(std::string(what) + " out of range");
  return static_cast<T>(v);
}

std::vector<std::uint32_t> indices(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& x : j) out.push_back(num<std::uint32_t>(x, what));
  return out;
}

json level_pairs(const std::vector<std::pair<Level, std::uint32_t>>& v) {
  json out = json::array();
  for (auto [l, i] : v) out.push_back({l, i});
  return out;
}

std::vector<std::pair<Level, std::uint32_t>> decode_pairs(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::pair<Level, std::uint32_t>> out;
  for (const auto& x : j) {
    Vertex v = decode_vertex(x);
    out.push_back({v.level, v.index});
  }
  return out;
}

std::string_view canon_kind_name(CanonKind k) {
  switch (k) {
    case CanonKind::G0Branch: return "G0Branch";
    case CanonKind::G1Column: return "G1Column";
    case CanonKind::Cloud0: return "Cloud0";
    case CanonKind::Cloud1: return "Cloud1";
    case CanonKind::Pair: return "Pair";
    case CanonKind::Check: return "Check";
  }
  return "?";
}

std::string_view gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Fix0: return "Fix0";
    case GenKind::Small0: return "Small0";
    case GenKind::Fix1: return "Fix1";
    case GenKind::Small1: return "Small1";
  }
  return "?";
}

}  // namespace

json encode(const Skeleton& s) {
  json levels = json::array();
  for (const auto& l : s.levels) {
    json e{{"name", l.name}, {"kind", std::string(kind_name(l.kind))}};
    if (l.kind != LevelKind::Base) e["f"] = l.f;
    levels.push_back(e);
  }
  json caps = json::object();
  for (auto [l, c] : s.caps) caps[s.levels.at(l).name] = c;
  return {{"levels", levels}, {"block_width", s.block_width}, {"caps", caps}};
}

Skeleton decode_skeleton(const json& j) {
  Skeleton s;
  const json& levels = field(j, "levels");
  if (!levels.is_array()) fail("levels must be an array");
  for (const auto& e : levels) {
    LevelSpec l;
    const json& name = field(e, "name");
    l.name = name.is_string() ? name.get<std::string>() : name.dump();
    const json& kind = field(e, "kind");
    if (!kind.is_string()) fail("kind must be a string");
    auto k = parse_kind(kind.get<std::string>());
    if (!k) fail("unknown level kind '" + kind.get<std::string>() + "'");
    l.kind = *k;
    l.f = *k == LevelKind::Base ? 1 : num<std::uint32_t>(field(e, "f"), "f");
    s.levels.push_back(std::move(l));
  }
  s.block_width = num<std::uint32_t>(field(j, "block_width"), "block_width");
  if (j.contains("caps")) {
    for (const auto& [key, val] : j.at("caps").items()) {
      auto l = s.find(key);
      if (!l) fail("cap on unknown level '" + key + "'");
      s.caps[*l] = num<std::uint32_t>(val, "cap");
    }
  }
  return s;
}

json encode(Vertex v) { return json::array({v.level, v.index}); }

Vertex decode_vertex(const json& j) {
  if (!j.is_array() || j.size() != 2) fail("vertex must be [level, index]");
  return {num<Level>(j[0], "level"), num<std::uint32_t>(j[1], "index")};
}

json encode(const FlimTree& t) {
  RawTree raw = tree_to_raw(t);
  json vs = json::array(), order = json::array();
  for (Vertex v : raw.vertices) vs.push_back(encode(v));
  for (auto [u, v] : raw.order) order.push_back({encode(u), encode(v)});
  return {{"vertices", vs}, {"order", order}};
}

FlimTree decode_tree(const json& j) {
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) fail("vertices must be an array");
  std::map<Vertex, std::uint32_t> parent;
  for (const auto& x : vs) {
    Vertex v = decode_vertex(x);
    if (!parent.emplace(v, kNoParent).second) fail("duplicate vertex");
  }
  const json& order = j.contains("order") ? j.at("order") : json::array();
  for (const auto& e : order) {
    if (!e.is_array() || e.size() != 2) fail("order entries must be [u, v]");
    Vertex u = decode_vertex(e[0]), v = decode_vertex(e[1]);
    if (!parent.count(u) || !parent.count(v)) fail("order pair mentions an unknown vertex");
    if (u.level + 1 != v.level) fail("order pairs must join adjacent levels");
    if (parent[v] != kNoParent && parent[v] != u.index) fail("two predecessors for one vertex");
    parent[v] = u.index;
  }
  std::vector<Node> nodes;
  for (auto [v, p] : parent) nodes.push_back({v, p});
  return FlimTree(std::move(nodes));
}

json encode(const Label& l) {
  json out = json::array();
  for (const Bit& b : l) out.push_back(std::to_string(b.pos) + ":" + std::to_string(b.val));
  return out;
}

Label decode_label(const json& j) {
  if (!j.is_array()) fail("label must be an array of \"pos:bit\" strings");
  Label out;
  for (const auto& e : j) {
    if (!e.is_string()) fail("label entries must be strings");
    const std::string s = e.get<std::string>();
    auto colon = s.find(':');
    if (colon == std::string::npos) fail("label entry '" + s + "' lacks ':'");
    std::uint32_t pos = 0;
    auto r = std::from_chars(s.data(), s.data() + colon, pos);
    if (r.ec != std::errc() || r.ptr != s.data() + colon) fail("bad label position in '" + s + "'");
    const std::string bit = s.substr(colon + 1);
    if (bit != "0" && bit != "1") fail("bad label bit in '" + s + "'");
    if (!out.empty() && out.back().pos >= pos) fail("label positions must be strictly increasing");
    out.push_back({pos, static_cast<std::uint8_t>(bit == "1")});
  }
  return out;
}

json encode(const Cond0& p) {
  json labels = json::array();
  for (std::size_t k = 0; k < p.tree.size(); ++k)
    if (!p.labels[k].empty()) labels.push_back({{"at", encode(p.tree.nodes()[k].v)}, {"bits", encode(p.labels[k])}});
  return {{"tree", encode(p.tree)}, {"labels", labels}};
}

Cond0 decode_cond0(const json& j) {
  FlimTree t = decode_tree(field(j, "tree"));
  std::map<Vertex, Label> ls;
  if (j.contains("labels")) {
    for (const auto& e : j.at("labels")) {
      Vertex v = decode_vertex(field(e, "at"));
      if (!t.contains(v)) fail("label on a vertex outside the tree");
      if (!ls.emplace(v, decode_label(field(e, "bits"))).second) fail("two labels for one vertex");
    }
  }
  return Cond0::make(std::move(t), ls);
}

json encode(const Block& b) {
  return {{"level", b.level}, {"xs", b.xs}, {"ys", b.ys}, {"bits", b.bits}};
}

Block decode_block(const json& j) {
  Block b;
  b.level = num<Level>(field(j, "level"), "level");
  b.xs = indices(field(j, "xs"), "xs");
  b.ys = indices(field(j, "ys"), "ys");
  for (const auto& x : field(j, "bits")) {
    auto v = num<std::uint32_t>(x, "bit");
    if (v > 1) fail("bits must be 0 or 1");
    b.bits.push_back(static_cast<std::uint8_t>(v));
  }
  if (b.bits.size() != b.xs.size() * b.ys.size()) fail("block bit count does not match its rectangle");
  return b;
}

json encode(const Cond1& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(encode(b));
  return {{"blocks", blocks}};
}

Cond1 decode_cond1(const json& j) {
  Cond1 out;
  for (const auto& b : field(j, "blocks")) {
    Block blk = decode_block(b);
    if (out.find(blk.level)) fail("two blocks at one level");
    out.put(std::move(blk));
  }
  return out;
}

json encode(const ProductCond& p) { return {{"p0", encode(p.c0)}, {"p1", encode(p.c1)}}; }

ProductCond decode_product(const json& j) {
  ProductCond p;
  if (j.contains("p0")) p.c0 = decode_cond0(j.at("p0"));
  if (j.contains("p1")) p.c1 = decode_cond1(j.at("p1"));
  return p;
}

json encode(const Aut0& a) {
  json levels = json::array();
  for (Level l = 0; l < a.perms.size(); ++l) {
    const auto& p = a.perms[l];
    if (p.empty()) continue;
    std::vector<bool> seen(p.size(), false);
    json cycles = json::array();
    for (std::uint32_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == i) continue;
      json cyc = json::array();
      for (std::uint32_t k = i; !seen[k]; k = p[k]) {
        seen[k] = true;
        cyc.push_back(k);
      }
      cycles.push_back(cyc);
    }
    if (!cycles.empty()) levels.push_back({{"level", l}, {"cycles", cycles}});
  }
  return {{"levels", levels}};
}

Aut0 decode_aut0(const json& j, const Skeleton& s) {
  Aut0 a;
  for (const auto& e : field(j, "levels")) {
    Level l = num<Level>(field(e, "level"), "level");
    if (l >= s.size()) fail("aut0 level beyond the skeleton");
    if (a.perms.size() <= l) a.perms.resize(l + 1);
    auto& p = a.perms[l];
    if (!p.empty()) fail("aut0 level listed twice");
    p.resize(f_lim(s, l));
    std::iota(p.begin(), p.end(), 0u);
    std::set<std::uint32_t> used;
    for (const auto& cyc : field(e, "cycles")) {
      auto c = indices(cyc, "cycle");
      for (auto x : c) {
        if (x >= p.size()) fail("cycle index beyond f_lim");
        if (!used.insert(x).second) fail("cycles overlap");
      }
      for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return canonical0(a);
}

json encode(const Aut1& a) {
  json levels = json::array();
  for (const auto& L : a.levels)
    levels.push_back({{"level", L.level},
                      {"supp", L.supp},
                      {"f", L.f},
                      {"dom_x", L.dom_x},
                      {"dom_y", L.dom_y},
                      {"flips", L.flips},
                      {"colmaps", L.colmaps}});
  return {{"levels", levels}};
}

Aut1 decode_aut1(const json& j) {
  Aut1 a;
  for (const auto& e : field(j, "levels")) {
    Aut1Level L;
    L.level = num<Level>(field(e, "level"), "level");
    L.supp = indices(field(e, "supp"), "supp");
    L.f = indices(field(e, "f"), "f");
    L.dom_x = indices(field(e, "dom_x"), "dom_x");
    L.dom_y = indices(field(e, "dom_y"), "dom_y");
    for (auto x : indices(field(e, "flips"), "flips")) {
      if (x > 1) fail("flips must be 0 or 1");
      L.flips.push_back(static_cast<std::uint8_t>(x));
    }
    for (const auto& c : field(e, "colmaps")) L.colmaps.push_back(indices(c, "colmap"));
    if (L.f.size() != L.supp.size()) fail("f must list one image per supp index");
    if (L.flips.size() != L.dom_x.size() * L.dom_y.size()) fail("flip table does not match the rectangle");
    if (L.colmaps.size() != L.dom_x.size()) fail("one colmap per dom_x position");
    for (const auto& c : L.colmaps)
      if (c.size() != (std::size_t(1) << L.supp.size())) fail("colmap size must be 2^|supp|");
    a.levels.push_back(std::move(L));
  }
  std::sort(a.levels.begin(), a.levels.end(), [](const Aut1Level& x, const Aut1Level& y) { return x.level < y.level; });
  return a;
}

json encode(const AutPair& a) { return {{"a0", encode(a.a0)}, {"a1", encode(a.a1)}}; }

AutPair decode_aut_pair(const json& j, const Skeleton& s) {
  AutPair a;
  if (j.contains("a0")) a.a0 = decode_aut0(j.at("a0"), s);
  if (j.contains("a1")) a.a1 = decode_aut1(j.at("a1"));
  return a;
}

json encode(const SubgroupGen& g) {
  return {{"kind", std::string(gen_kind_name(g.kind))}, {"level", g.level}, {"value", g.value}};
}

SubgroupGen decode_gen(const json& j) {
  SubgroupGen g;
  const json& k = field(j, "kind");
  if (!k.is_string()) fail("generator kind must be a string");
  const std::string ks = k.get<std::string>();
  if (ks == "Fix0") g.kind = GenKind::Fix0;
  else if (ks == "Small0") g.kind = GenKind::Small0;
  else if (ks == "Fix1") g.kind = GenKind::Fix1;
  else if (ks == "Small1") g.kind = GenKind::Small1;
  else fail("unknown generator kind '" + ks + "'");
  g.level = num<Level>(field(j, "level"), "level");
  g.value = num<std::uint32_t>(field(j, "value"), "value");
  return g;
}

json encode(const GroupSpec& g) {
  json out = json::array();
  for (const auto& x : g) out.push_back(encode(x));
  return out;
}

GroupSpec decode_group(const json& j) {
  if (!j.is_array()) fail("group spec must be an array");
  GroupSpec out;
  for (const auto& x : j) out.push_back(decode_gen(x));
  return out;
}

json encode(const PName& x) {
  json es = json::array();
  for (const auto& e : x.entries) {
    json item{{"cond", encode(e.cond)}};
    if (e.child.is_atom())
      item["atom"] = e.child.atom();
    else
      item["name"] = encode(e.child.name());
    es.push_back(item);
  }
  return {{"entries", es}};
}

PName decode_name(const json& j) {
  std::vector<NameEntry> es;
  for (const auto& e : field(j, "entries")) {
    ProductCond c = e.contains("cond") ? decode_product(e.at("cond")) : ProductCond{};
    if (e.contains("atom"))
      es.push_back({atom_ref(num<Atom>(e.at("atom"), "atom")), std::move(c)});
    else
      es.push_back({name_ref(decode_name(field(e, "name"))), std::move(c)});
  }
  return make_name(std::move(es));
}

json encode(const CanonicalName& c) {
  json out{{"kind", std::string(canon_kind_name(c.kind))}};
  switch (c.kind) {
    case CanonKind::Check: out["atoms"] = c.atoms; break;
    case CanonKind::Pair:
      out["left"] = c.left ? encode(*c.left) : json();
      out["right"] = c.right ? encode(*c.right) : json();
      break;
    case CanonKind::Cloud0:
    case CanonKind::Cloud1: out["cut"] = c.cut; [[fallthrough]];
    default:
      out["level"] = c.level;
      out["index"] = c.index;
  }
  return out;
}

CanonicalName decode_canonical(const json& j) {
  CanonicalName c;
  const json& k = field(j, "kind");
  if (!k.is_string()) fail("canonical kind must be a string");
  const std::string ks = k.get<std::string>();
  static const std::pair<const char*, CanonKind> kinds[] = {
      {"G0Branch", CanonKind::G0Branch}, {"G1Column", CanonKind::G1Column}, {"Cloud0", CanonKind::Cloud0},
      {"Cloud1", CanonKind::Cloud1},     {"Pair", CanonKind::Pair},         {"Check", CanonKind::Check}};
  bool found = false;
  for (auto [n, kind] : kinds)
    if (ks == n) {
      c.kind = kind;
      found = true;
    }
  if (!found) fail("unknown canonical name kind '" + ks + "'");
  switch (c.kind) {
    case CanonKind::Check:
      for (const auto& a : field(j, "atoms")) c.atoms.push_back(num<Atom>(a, "atom"));
      break;
    case CanonKind::Pair:
      c.left = std::make_shared<const PName>(decode_name(field(j, "left")));
      c.right = std::make_shared<const PName>(decode_name(field(j, "right")));
      break;
    case CanonKind::Cloud0:
    case CanonKind::Cloud1: c.cut = num<std::uint32_t>(field(j, "cut"), "cut"); [[fallthrough]];
    default:
      c.level = num<Level>(field(j, "level"), "level");
      c.index = num<std::uint32_t>(field(j, "index"), "index");
  }
  return c;
}

json encode(const Value& v) {
  if (v.atom) return *v.atom;
  json out = json::array();
  for (const auto& e : v.elems) out.push_back(encode(e));
  return out;
}

json encode(const FilterP& h) {
  json gens = json::array();
  for (const auto& g : h.gens) gens.push_back(encode(g));
  return {{"generators", gens}};
}

FilterP decode_filter(const json& j) {
  FilterP h;
  for (const auto& g : field(j, "generators")) h.gens.push_back(decode_product(g));
  return h;
}

json encode(const QTree& t) { return {{"top", t.top}, {"support", t.support}, {"partitions", t.parts}}; }

QTree decode_qtree(const json& j) {
  QTree t;
  t.top = num<Level>(field(j, "top"), "top");
  t.support = indices(field(j, "support"), "support");
  for (const auto& part : field(j, "partitions")) {
    Partition p;
    for (const auto& cell : part) p.push_back(indices(cell, "cell"));
    t.parts.push_back(std::move(p));
  }
  return t;
}

json encode(const ICond& q) {
  json labels = json::array(), n = json::array();
  for (std::size_t l = 0; l < q.labels.size(); ++l) {
    json lr = json::array(), nr = json::array();
    for (const auto& x : q.labels[l]) lr.push_back(encode(x));
    for (const auto& v : q.n[l]) {
      if (v.kind == NVal::Absent)
        nr.push_back(nullptr);
      else if (v.kind == NVal::Star)
        nr.push_back("*");
      else
        nr.push_back(v.index);
    }
    labels.push_back(lr);
    n.push_back(nr);
  }
  return {{"tree", encode(q.tree)}, {"labels", labels}, {"n", n}};
}

ICond decode_icond(const json& j) {
  ICond q;
  q.tree = decode_qtree(field(j, "tree"));
  for (const auto& row : field(j, "labels")) {
    std::vector<Label> r;
    for (const auto& x : row) r.push_back(decode_label(x));
    q.labels.push_back(std::move(r));
  }
  for (const auto& row : field(j, "n")) {
    std::vector<NVal> r;
    for (const auto& x : row) {
      if (x.is_null())
        r.push_back({});
      else if (x.is_string() && x.get<std::string>() == "*")
        r.push_back({NVal::Star, 0});
      else
        r.push_back({NVal::Index, num<std::uint32_t>(x, "N index")});
    }
    q.n.push_back(std::move(r));
  }
  return q;
}

json encode(const SymContext& c) {
  json prot = json::array();
  for (Vertex v : c.protected_tops) prot.push_back(encode(v));
  return {{"r_bar", encode(c.r_bar)},        {"top", c.top},
          {"protected", prot},               {"small0", level_pairs(c.small0_cuts)},
          {"fix1", level_pairs(c.fix1_cols)}, {"small1", level_pairs(c.small1_cuts)},
          {"beta_tilde", c.beta_tilde},      {"beta", c.beta}};
}

SymContext decode_ctx(const json& j) {
  SymContext c;
  c.r_bar = j.contains("r_bar") ? decode_cond0(j.at("r_bar")) : Cond0{};
  c.top = num<Level>(field(j, "top"), "top");
  if (j.contains("protected"))
    for (const auto& v : j.at("protected")) c.protected_tops.push_back(decode_vertex(v));
  if (j.contains("small0")) c.small0_cuts = decode_pairs(j.at("small0"), "small0");
  if (j.contains("fix1")) c.fix1_cols = decode_pairs(j.at("fix1"), "fix1");
  if (j.contains("small1")) c.small1_cuts = decode_pairs(j.at("small1"), "small1");
  c.beta_tilde = num<std::uint32_t>(field(j, "beta_tilde"), "beta_tilde");
  c.beta = num<std::uint32_t>(field(j, "beta"), "beta");
  return c;
}

json encode(const MTuple& m) { return {{"cond", encode(m.cond)}, {"columns", level_pairs(m.columns)}}; }

MTuple decode_mtuple(const json& j) {
  MTuple m;
  m.cond = decode_cond0(field(j, "cond"));
  m.columns = decode_pairs(field(j, "columns"), "columns");
  std::sort(m.columns.begin(), m.columns.end());
  return m;
}

json encode(const RestrictedProduct& d) {
  return {{"s_tree", encode(d.s_tree)}, {"cols", level_pairs(d.cols)}, {"top", d.top}};
}

RestrictedProduct decode_restricted(const json& j) {
  RestrictedProduct d;
  d.s_tree = decode_tree(field(j, "s_tree"));
  d.cols = decode_pairs(field(j, "cols"), "cols");
  std::sort(d.cols.begin(), d.cols.end());
  d.top = num<Level>(field(j, "top"), "top");
  return d;
}

std::string line(const json& j) { return j.dump(); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

}  // namespace forcelab::io
