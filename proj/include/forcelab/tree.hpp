#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "forcelab/error.hpp"
#include "forcelab/skeleton.hpp"

namespace forcelab {

struct Vertex {
  Level level = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

struct Node {
  Vertex v;
  std::uint32_t parent = kNoParent;  // index of the predecessor at level v.level - 1
  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;
};

// A finite tree stored as its nodes sorted by vertex; the order is generated
// by the parent links. Band pieces (restrict_band with lo > 0) have parentless
// nodes at their lowest level.
class FlimTree {
 public:
  FlimTree() = default;
  explicit FlimTree(std::vector<Node> nodes);  // sorts

  const std::vector<Node>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }

  const Node* find(Vertex v) const;
  bool contains(Vertex v) const { return find(v) != nullptr; }
  std::optional<std::size_t> position(Vertex v) const;
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Node> at_level(Level l) const;

  // Adds v with the given parent index; replaces nothing if v is present.
  void insert(Vertex v, std::uint32_t parent);

  friend auto operator<=>(const FlimTree&, const FlimTree&) = default;
  friend bool operator==(const FlimTree&, const FlimTree&) = default;

  // Chain (0,0) < (1,idx[0]) < (2,idx[1]) < ...
  static FlimTree chain(const std::vector<std::uint32_t>& indices);

 private:
  std::vector<Node> nodes_;
};

// Vertex set plus generating order pairs (u below v); used for parsing.
struct RawTree {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> order;
};

Outcome<FlimTree> tree_from_raw(const Skeleton& s, const RawTree& raw);
RawTree tree_to_raw(const FlimTree& t);

Errors validate_tree(const Skeleton& s, const FlimTree& t);

// sub extends sup: every vertex of sup lies in sub with the same predecessor.
bool tree_leq(const FlimTree& sub, const FlimTree& sup);
Outcome<FlimTree> tree_union(const Skeleton& s, const FlimTree& a, const FlimTree& b);
std::vector<Vertex> max_points(const FlimTree& t);
int height(const FlimTree& t);  // -1 for the empty tree
std::optional<Vertex> pred_at(const FlimTree& t, Vertex v, Level l);
std::vector<Vertex> branch(const FlimTree& t, Vertex v);  // root .. v
std::vector<Vertex> children(const FlimTree& t, Vertex v);
FlimTree restrict_band(const FlimTree& t, Level lo, Level hi);
FlimTree restrict_to(const FlimTree& t, const std::vector<Vertex>& vs);

// Tops given as vertices of both trees (possibly at different indices):
// true iff for every pair of tops and level the trees agree on whether the
// tops share their predecessor at that level.
bool same_meet_structure(const FlimTree& a, const std::vector<Vertex>& tops_a, const FlimTree& b,
                         const std::vector<Vertex>& tops_b);

}  // namespace forcelab
