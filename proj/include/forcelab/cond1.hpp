#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forcelab/error.hpp"
#include "forcelab/skeleton.hpp"

namespace forcelab {

// One rectangle xs (positions) x ys (indices), bits row-major by position.
struct Block {
  Level level = 0;
  std::vector<std::uint32_t> xs;
  std::vector<std::uint32_t> ys;
  std::vector<std::uint8_t> bits;

  bool empty() const { return xs.empty() || ys.empty(); }
  std::optional<std::uint8_t> at(std::uint32_t x, std::uint32_t y) const;
  std::uint8_t& cell(std::size_t xi, std::size_t yi) { return bits[xi * ys.size() + yi]; }
  std::uint8_t cell(std::size_t xi, std::size_t yi) const { return bits[xi * ys.size() + yi]; }

  friend auto operator<=>(const Block&, const Block&) = default;
  friend bool operator==(const Block&, const Block&) = default;
};

// A P1 condition: nonempty blocks sorted by level.
struct Cond1 {
  std::vector<Block> blocks;

  const Block* find(Level l) const;
  Block* find_mut(Level l);
  std::vector<Level> support() const;
  bool empty() const { return blocks.empty(); }
  // Inserts or replaces; empty blocks are dropped.
  void put(Block b);

  friend auto operator<=>(const Cond1&, const Cond1&) = default;
  friend bool operator==(const Cond1&, const Cond1&) = default;
};

Errors validate_cond1(const Skeleton& s, const Cond1& p);
bool leq1(const Cond1& q, const Cond1& p);
// True compatibility: bits agree wherever both rectangles are defined.
bool compat1(const Cond1& p, const Cond1& q);
// Rectangle closure of the union; FREE_CELLS if a closure cell is unset.
Outcome<Cond1> union1(const Cond1& p, const Cond1& q);

// Levels lo..hi inclusive.
Cond1 restrict1_band(const Cond1& p, Level lo, Level hi);
Cond1 restrict1_cols(const Cond1& p, const std::vector<std::pair<Level, std::uint32_t>>& cols);
Block block(const Cond1& p, Level l);

Block make_block(Level l, std::vector<std::uint32_t> xs, std::vector<std::uint32_t> ys,
                 std::vector<std::uint8_t> bits);

}  // namespace forcelab
