#include "forcelab/mutation.hpp"

#include <atomic>

namespace forcelab {

namespace {
std::atomic<Mutation> g_mutation{Mutation::None};
}

Mutation active_mutation() noexcept { return g_mutation.load(std::memory_order_relaxed); }
void set_mutation(Mutation m) noexcept { g_mutation.store(m, std::memory_order_relaxed); }

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::NoLimitSplit: return "no-limit-split";
    case Mutation::Apply1SkipFlips: return "apply1-skip-flips";
    case Mutation::Leq0IgnoreLabels: return "leq0-ignore-labels";
    case Mutation::Homog0IgnoreBlocks: return "homog0-ignore-blocks";
    case Mutation::Rho1NoTruncate: return "rho1-no-truncate";
  }
  return "?";
}

std::vector<Mutation> all_mutations() {
  return {Mutation::NoLimitSplit, Mutation::Apply1SkipFlips, Mutation::Leq0IgnoreLabels,
          Mutation::Homog0IgnoreBlocks, Mutation::Rho1NoTruncate};
}

std::optional<Mutation> parse_mutation(std::string_view s) {
  if (s == "none") return Mutation::None;
  for (auto m : all_mutations())
    if (mutation_name(m) == s) return m;
  return std::nullopt;
}

}  // namespace forcelab
