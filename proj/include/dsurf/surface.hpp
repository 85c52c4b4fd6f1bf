#pragma once

#include <array>
#include <vector>

#include "dsurf/graph.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// Piecewise linear realization of a 3-valent graph: positions per vertex of
// one period cell plus r lattice translation vectors.
class DiscreteSurface {
 public:
  // Validates Def 3.1: valence, rotation, and condition (ii) at every vertex.
  static DiscreteSurface build(TrivalentGraph graph, std::vector<Vec3> positions,
                               std::vector<Vec3> lattice);

  const TrivalentGraph& graph() const { return graph_; }
  const std::vector<Vec3>& positions() const { return positions_; }
  const std::vector<Vec3>& lattice() const { return lattice_; }
  int vertex_count() const { return graph_.vertex_count(); }

  const Vec3& position(int x) const { return positions_[x]; }
  Vec3 lattice_offset(const Shift& shift) const;

  // Phi(t(e)) + lattice*shift - Phi(o(e)).
  Vec3 edge_vector(int oriented_id) const;
  // Phi(o(e)) + edge vector, i.e. the in-cell-consistent neighbor position.
  Vec3 neighbor_position(int oriented_id) const;

  std::array<int, 3> ordered_star(int x) const { return graph_.star(x); }
  std::array<Vec3, 3> star_vectors(int x) const;

  double max_edge_length(int x) const;
  double mean_edge_length() const;

  // Same graph/lattice with different positions (revalidates).
  DiscreteSurface with_positions(std::vector<Vec3> positions) const;

 private:
  DiscreteSurface() = default;
  TrivalentGraph graph_;
  std::vector<Vec3> positions_;
  std::vector<Vec3> lattice_;
};

// Scale-relative tolerance for Def 3.1 condition (ii).
inline constexpr double kDegeneracyTol = 1e-12;

}  // namespace dsurf
