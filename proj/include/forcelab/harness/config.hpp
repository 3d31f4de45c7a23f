#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/error.hpp"
#include "forcelab/mutation.hpp"
#include "forcelab/skeleton.hpp"

namespace forcelab {

// Skeleton files are YAML:
//
//   levels:
//     - {name: "0", kind: base}
//     - {name: aleph0, kind: omega, f: 2}
//     - {name: aleph1, kind: successor, f: 2}
//     - {name: alephw, kind: limit, f: 3}
//   block_width: 4
//   caps: {alephw: 5}        # optional, keys are limit level names
Outcome<Skeleton> parse_skeleton_yaml(const std::string& text);
Outcome<Skeleton> load_skeleton(const std::string& path);
std::string skeleton_yaml(const Skeleton& s);

enum class Mode : std::uint8_t { Sampled, Exhaustive };

struct RunConfig {
  std::string skeleton_path;  // informational once `skeleton` is set
  Skeleton skeleton;
  std::uint32_t bound = 1;
  std::optional<std::uint32_t> width;  // overrides skeleton.block_width
  std::uint64_t seed = 0;
  std::uint64_t cases = 100;
  Mode mode = Mode::Sampled;
  std::vector<std::string> properties;  // "all" selects the whole registry
  Mutation mutation = Mutation::None;
  unsigned jobs = 1;
  bool stop_on_fail = false;

  // Skeleton with the width override applied.
  Skeleton effective_skeleton() const;
};

Errors validate_config(const RunConfig& cfg);

}  // namespace forcelab
