#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forcelab/error.hpp"

namespace forcelab {

using Level = std::uint16_t;

enum class LevelKind : std::uint8_t { Base, Omega, Successor, Limit };

std::string_view kind_name(LevelKind k);
std::optional<LevelKind> parse_kind(std::string_view s);

struct LevelSpec {
  std::string name;
  LevelKind kind = LevelKind::Successor;
  std::uint32_t f = 0;  // unused at the base level
};

struct Skeleton {
  std::vector<LevelSpec> levels;
  std::uint32_t block_width = 4;
  std::map<Level, std::uint32_t> caps;  // optional regular-limit caps

  Level size() const { return static_cast<Level>(levels.size()); }
  Level top() const { return static_cast<Level>(levels.size() - 1); }
  LevelKind kind(Level l) const { return levels[l].kind; }
  std::uint32_t f(Level l) const { return levels[l].f; }
  // Omega and successor levels own a position set; base and limits do not.
  bool labelable(Level l) const {
    return levels[l].kind == LevelKind::Omega || levels[l].kind == LevelKind::Successor;
  }
  bool is_limit(Level l) const { return levels[l].kind == LevelKind::Limit; }
  std::optional<Level> find(std::string_view name) const;
  const std::string& name(Level l) const { return levels[l].name; }
};

Errors validate_skeleton(const Skeleton& s);

std::uint32_t f_lim(const Skeleton& s, Level l);

// Successor levels where F strictly exceeds F at every smaller successor level.
std::vector<Level> succ_prime(const Skeleton& s);
bool in_succ_prime(const Skeleton& s, Level l);

// Greatest limit level strictly below l, if any.
std::optional<Level> limit_below(const Skeleton& s, Level l);

// 0 / aleph_0 / aleph_1 / aleph_omega / aleph_omega+1 with F = -,2,2,3,3 and W = 4.
Skeleton skel_a();
// Same levels, every F = 8, W = 8: room for the fresh indices of homogeneity.
Skeleton skel_h();

}  // namespace forcelab
