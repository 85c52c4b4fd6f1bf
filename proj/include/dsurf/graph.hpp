#pragma once

#include <array>
#include <vector>

#include "dsurf/types.hpp"

namespace dsurf {

// Shift of an oriented edge in the period lattice Z^r.
using Shift = Eigen::VectorXi;

struct OrientedEdge {
  int origin = -1;
  int terminus = -1;
  Shift shift;  // size = period_rank
};

// Unoriented edge class used when constructing a graph.
struct EdgeSpec {
  int a = -1;
  int b = -1;
  Shift shift;  // shift of the a->b orientation
};

// 3-valent graph with rotation system and Z^r periodicity labels.
//
// Edge class m yields oriented edge ids 2m (a->b, shift s) and 2m+1
// (b->a, shift -s); reverse(e) == e^1.
class TrivalentGraph {
 public:
  static TrivalentGraph build(int vertex_count, std::vector<EdgeSpec> edges,
                              std::vector<std::array<int, 3>> rotation,
                              int period_rank);

  // Convenience constructor from per-vertex neighbor lists given in rotation
  // order. Pairs up reverse edges automatically.
  struct Neighbor {
    int vertex;
    Shift shift;
  };
  static TrivalentGraph from_adjacency(
      const std::vector<std::array<Neighbor, 3>>& stars, int period_rank);

  int vertex_count() const { return vertex_count_; }
  int period_rank() const { return period_rank_; }
  int edge_class_count() const { return static_cast<int>(edges_.size()) / 2; }
  int oriented_edge_count() const { return static_cast<int>(edges_.size()); }

  const OrientedEdge& edge(int oriented_id) const { return edges_[oriented_id]; }
  static int reverse(int oriented_id) { return oriented_id ^ 1; }
  static int edge_class(int oriented_id) { return oriented_id >> 1; }

  // Outgoing oriented edge ids of x in rotation order (Def 3.1 (iii)).
  const std::array<int, 3>& star(int x) const { return rotation_[x]; }
  // Slot of an oriented edge within its origin's rotation.
  int star_slot(int oriented_id) const;

  // Swaps the second and third slot of x's rotation (orientation flip).
  void flip_vertex(int x);

  bool is_connected() const;

 private:
  TrivalentGraph() = default;
  int vertex_count_ = 0;
  int period_rank_ = 0;
  std::vector<OrientedEdge> edges_;
  std::vector<std::array<int, 3>> rotation_;
};

}  // namespace dsurf
