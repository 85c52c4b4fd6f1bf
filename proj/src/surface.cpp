#include "dsurf/surface.hpp"

#include <algorithm>
#include <cmath>

namespace dsurf {

DiscreteSurface DiscreteSurface::build(TrivalentGraph graph,
                                       std::vector<Vec3> positions,
                                       std::vector<Vec3> lattice) {
  if (static_cast<int>(positions.size()) != graph.vertex_count())
    throw Error(ErrorCode::ValidationError, "position count mismatch");
  if (static_cast<int>(lattice.size()) != graph.period_rank())
    throw Error(ErrorCode::ValidationError,
                "lattice vector count must equal the period rank");

  DiscreteSurface s;
  s.graph_ = std::move(graph);
  s.positions_ = std::move(positions);
  s.lattice_ = std::move(lattice);

  // Def 3.1 condition (ii): two of the three edge vectors independent.
  for (int v = 0; v < s.graph_.vertex_count(); ++v) {
    const auto e = s.star_vectors(v);
    bool ok = false;
    for (int i = 0; i < 3 && !ok; ++i) {
      for (int j = i + 1; j < 3 && !ok; ++j) {
        double scale = std::max(e[i].norm(), e[j].norm());
        if (e[i].cross(e[j]).norm() > kDegeneracyTol * scale * scale) ok = true;
      }
    }
    if (!ok)
      throw Error(ErrorCode::DegenerateVertex,
                  "edge vectors at vertex " + std::to_string(v) +
                      " span no plane");
  }

  // Injectivity is checked pairwise within the period cell only.
  double scale = s.mean_edge_length();
  for (size_t i = 0; i < s.positions_.size(); ++i)
    for (size_t j = i + 1; j < s.positions_.size(); ++j)
      if ((s.positions_[i] - s.positions_[j]).norm() <= 1e-9 * scale)
        throw Error(ErrorCode::ValidationError,
                    "vertices " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
  return s;
}

Vec3 DiscreteSurface::lattice_offset(const Shift& shift) const {
  Vec3 off = Vec3::Zero();
  for (int i = 0; i < static_cast<int>(lattice_.size()); ++i)
    off += static_cast<double>(shift[i]) * lattice_[i];
  return off;
}

Vec3 DiscreteSurface::edge_vector(int oriented_id) const {
  const OrientedEdge& e = graph_.edge(oriented_id);
  return positions_[e.terminus] + lattice_offset(e.shift) - positions_[e.origin];
}

Vec3 DiscreteSurface::neighbor_position(int oriented_id) const {
  const OrientedEdge& e = graph_.edge(oriented_id);
  return positions_[e.origin] + edge_vector(oriented_id);
}

std::array<Vec3, 3> DiscreteSurface::star_vectors(int x) const {
  const auto& star = graph_.star(x);
  return {edge_vector(star[0]), edge_vector(star[1]), edge_vector(star[2])};
}

double DiscreteSurface::max_edge_length(int x) const {
  const auto e = star_vectors(x);
  return std::max({e[0].norm(), e[1].norm(), e[2].norm()});
}

double DiscreteSurface::mean_edge_length() const {
  double total = 0.0;
  int count = graph_.oriented_edge_count();
  for (int oe = 0; oe < count; ++oe) total += edge_vector(oe).norm();
  return count ? total / count : 0.0;
}

DiscreteSurface DiscreteSurface::with_positions(std::vector<Vec3> positions) const {
  return build(graph_, std::move(positions), lattice_);
}

}  // namespace dsurf
