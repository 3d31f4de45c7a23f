#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "forcelab/automorphisms.hpp"
#include "forcelab/product.hpp"

namespace forcelab {

using Atom = std::uint64_t;

// Atom for position zeta of the position set owned by a level.
constexpr Atom tagged(Level l, std::uint32_t zeta) { return (Atom(l) + 1) << 32 | zeta; }

struct PName;
using NamePtr = std::shared_ptr<const PName>;

struct NameRef {
  std::variant<Atom, NamePtr> v;
  bool is_atom() const { return v.index() == 0; }
  Atom atom() const { return std::get<0>(v); }
  const PName& name() const { return *std::get<1>(v); }
};

struct NameEntry {
  NameRef child;
  ProductCond cond;
};

// A name: a finite set of (name-or-atom, condition) pairs kept sorted and
// duplicate-free, so equality is entry-set equality.
struct PName {
  std::vector<NameEntry> entries;
};

std::strong_ordering compare(const NameRef& a, const NameRef& b);
std::strong_ordering compare(const PName& a, const PName& b);
inline bool operator==(const PName& a, const PName& b) { return compare(a, b) == 0; }
inline bool operator<(const PName& a, const PName& b) { return compare(a, b) < 0; }

PName make_name(std::vector<NameEntry> entries);  // sorts, dedups
NameRef atom_ref(Atom a);
NameRef name_ref(PName x);
int rank(const PName& x);
std::size_t total_entries(const PName& x);

enum class CanonKind : std::uint8_t { G0Branch, G1Column, Cloud0, Cloud1, Pair, Check };

struct CanonicalName {
  CanonKind kind = CanonKind::Check;
  Level level = 0;
  std::uint32_t index = 0;
  std::uint32_t cut = 0;
  std::vector<Atom> atoms;  // Check
  std::shared_ptr<const PName> left, right;  // Pair
};

Errors validate_canonical(const Skeleton& s, const CanonicalName& c);
PName expand(const Skeleton& s, const CanonicalName& c, std::uint32_t bound);

PName g0_branch(const Skeleton& s, Level l, std::uint32_t i, std::uint32_t bound);
PName g1_column(Level l, std::uint32_t i, std::uint32_t bound);
PName check_name(const std::vector<Atom>& atoms);
PName unordered_pair(const NameRef& a, const NameRef& b);
PName ordered_pair(const NameRef& a, const NameRef& b);

// Hereditarily finite set over atoms.
struct Value {
  std::optional<Atom> atom;
  std::vector<Value> elems;  // sorted, unique
};
std::strong_ordering compare(const Value& a, const Value& b);
inline bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

Value val(const PName& x, const FilterP& h);

Outcome<PName> act(const AutPair& pi, const PName& x);
Outcome<PName> act(const Aut0& pi, const PName& x);
// Replace each entry by every filling of its P1 blocks out to the rectangles
// of pi, so that all entry conditions lie in D_pi.
PName bar(const PName& x, const Aut1& pi);
bool all_in_domain(const PName& x, const Aut1& pi);

FilterP image_filter(const AutPair& pi, const FilterP& h);
bool equivariance_check(const PName& x, const AutPair& pi, const FilterP& h);

struct SymVerdict {
  bool counterexample = false;
  std::optional<AutPair> witness;
  std::size_t sampled = 0;
};

// Draws n members of the intersection (rejection sampling over generated
// candidates) and tests whether each fixes the bar-extension of x.
SymVerdict sym_check(const Skeleton& s, const PName& x, const GroupSpec& spec, std::uint64_t seed, std::size_t n,
                     std::uint32_t bound);

// Candidate automorphisms for sampling; callers filter by in_group.
AutPair random_aut(const Skeleton& s, std::uint64_t seed, std::uint32_t bound);
std::vector<AutPair> sample_group(const Skeleton& s, const GroupSpec& spec, std::uint64_t seed, std::size_t n,
                                  std::uint32_t bound, std::size_t max_tries = 200000);

PName cloud_sequence(const Skeleton& s, Level l, std::uint32_t cut, std::uint32_t bound);
Pred0 cloud_difference_dense(Level l, std::uint32_t i, std::uint32_t j);
// Constructive witness: extend both branches at a fresh position.
Outcome<Cond0> cloud_difference_witness(const Skeleton& s, const Cond0& p, Level l, std::uint32_t i, std::uint32_t j);

}  // namespace forcelab
