#pragma once

#include <string>

#include <json.hpp>

#include "forcelab/automorphisms.hpp"
#include "forcelab/names.hpp"
#include "forcelab/quotient.hpp"

// Canonical structured-text forms. Vertices are [level, index], labels are
// sorted "pos:bit" strings, blocks are {level, xs, ys, bits} with bits
// row-major. Decoders throw Failure(PARSE_ERROR) on malformed input.
namespace forcelab::io {

using json = nlohmann::json;

json encode(const Skeleton& s);
json encode(Vertex v);
json encode(const FlimTree& t);
json encode(const Label& l);
json encode(const Cond0& p);
json encode(const Block& b);
json encode(const Cond1& p);
json encode(const ProductCond& p);
json encode(const Aut0& a);
json encode(const Aut1& a);
json encode(const AutPair& a);
json encode(const SubgroupGen& g);
json encode(const GroupSpec& g);
json encode(const PName& x);
json encode(const CanonicalName& c);
json encode(const Value& v);
json encode(const FilterP& h);
json encode(const QTree& t);
json encode(const ICond& q);
json encode(const SymContext& c);
json encode(const MTuple& m);
json encode(const RestrictedProduct& d);

Skeleton decode_skeleton(const json& j);
Vertex decode_vertex(const json& j);
FlimTree decode_tree(const json& j);
Label decode_label(const json& j);
Cond0 decode_cond0(const json& j);
Block decode_block(const json& j);
Cond1 decode_cond1(const json& j);
ProductCond decode_product(const json& j);
// Aut0 needs the skeleton to size its permutations.
Aut0 decode_aut0(const json& j, const Skeleton& s);
Aut1 decode_aut1(const json& j);
AutPair decode_aut_pair(const json& j, const Skeleton& s);
SubgroupGen decode_gen(const json& j);
GroupSpec decode_group(const json& j);
PName decode_name(const json& j);
CanonicalName decode_canonical(const json& j);
FilterP decode_filter(const json& j);
QTree decode_qtree(const json& j);
ICond decode_icond(const json& j);
SymContext decode_ctx(const json& j);
MTuple decode_mtuple(const json& j);
RestrictedProduct decode_restricted(const json& j);

// Compact single-line dump used for reports.
std::string line(const json& j);
json parse(const std::string& text);

}  // namespace forcelab::io
