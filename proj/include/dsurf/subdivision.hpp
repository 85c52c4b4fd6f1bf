#pragma once

#include <string>
#include <vector>

#include "dsurf/graph.hpp"
#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// Faces of the oriented map defined by the rotation system, with the shift of
// every visited origin accumulated relative to the face's start.
struct FaceStructure {
  struct EdgeRef {
    int oriented_edge = -1;
    Shift origin_shift;  // accumulated shift of the edge's origin
  };
  std::vector<std::vector<EdgeRef>> faces;
  std::vector<int> face_of;     // oriented edge id -> face id
  std::vector<Shift> sigma_of;  // oriented edge id -> its origin_shift

  int face_count() const { return static_cast<int>(faces.size()); }
  std::vector<int> face_sizes() const;
  int euler_characteristic(const TrivalentGraph& graph) const;
};

FaceStructure face_trace(const TrivalentGraph& graph);

// Dual triangulation: one dual vertex per face, one triangle per primal
// vertex with the faces around it as corners (with instance shifts).
struct Triangulation {
  struct Corner {
    int face = -1;
    Shift shift;
  };
  struct Triangle {
    int primal_vertex = -1;
    std::array<Corner, 3> corners;
  };
  std::vector<Triangle> triangles;
  int dual_vertex_count = 0;  // = number of primal faces
};

Triangulation dualize(const TrivalentGraph& graph);

struct GcResult {
  TrivalentGraph graph;
  std::vector<Vec3> positions;  // barycentric initial embedding
  std::vector<Vec3> lattice;

  DiscreteSurface to_surface() const;
};

// Goldberg-Coxeter (k,0)-subdivision via dual triangulation refinement.
// Vertex count multiplies by k^2; non-hexagon face census is preserved.
GcResult gc_k0(const DiscreteSurface& surface, int k);

// Canonical form of the oriented map (finite graphs); equal strings iff the
// maps are isomorphic up to orientation reversal.
std::string canonical_map_form(const TrivalentGraph& graph);

// GC_{k2,0}(GC_{k1,0}(X)) isomorphic to GC_{k1 k2,0}(X)?
bool gc_compose_check(const DiscreteSurface& surface, int k1, int k2);

}  // namespace dsurf
