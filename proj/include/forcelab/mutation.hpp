#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace forcelab {

// Seeded faults for checking that the property suite is not vacuous.
enum class Mutation {
  None,
  NoLimitSplit,       // validate_tree / tree_union skip the no-splitting check
  Apply1SkipFlips,    // apply1 ignores the flip table
  Leq0IgnoreLabels,   // leq0 compares trees only
  Homog0IgnoreBlocks, // homog0 picks fresh indices outside the source block
  Rho1NoTruncate,     // rho1 keeps columns at or above the cut
};

Mutation active_mutation() noexcept;
void set_mutation(Mutation m) noexcept;
inline bool mutated(Mutation m) noexcept { return active_mutation() == m; }

std::string_view mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view s);
std::vector<Mutation> all_mutations();

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m) : prev_(active_mutation()) { set_mutation(m); }
  ~ScopedMutation() { set_mutation(prev_); }
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation prev_;
};

}  // namespace forcelab
