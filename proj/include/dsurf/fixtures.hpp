#pragma once

#include <array>
#include <string>
#include <vector>

#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

enum class PolyhedronKind { Hexahedron, Dodecahedron, TruncatedIcosahedron };

// Regular 3-valent polyhedron scaled to circumradius r, rotations outward,
// so Phi(x) = r n(x) holds at every vertex.
DiscreteSurface polyhedron(PolyhedronKind kind, double r);

// Standard realization of the K4 lattice quotient: 4 vertices, 6 edge
// classes, BCC period lattice, uniform edge lengths.
DiscreteSurface k4_lattice();

// Classical Mackay crystal (192 vertices per cell, lattice (2,0,0), (0,2,0),
// (0,0,2)) with the vertex orbit data needed to deform it.
struct MackayCrystal {
  DiscreteSurface surface;
  std::array<int, 3> patch;  // ids of the x0, x1, x2 representatives
  // pos(v) = map_linear[v] * pos(patch[patch_index[v]]) + map_offset[v]
  std::vector<int> patch_index;
  std::vector<Mat3> map_linear;
  std::vector<Vec3> map_offset;
};

const MackayCrystal& mackay_standard();

// Minimal deformation of the Mackay crystal: solves the prescribed-H system
// with H = 0 on the smallest patch plus the two mirror rows.
DiscreteSurface mackay_minimal();

struct MackayTableRow {
  int k = 0;
  int vertices = 0;
  double h_avg = 0.0;
  double h_min_abs = 0.0;
  double h_max_abs = 0.0;
  double k_min = 0.0;  // most negative K
  double k_max = 0.0;  // K closest to zero (nonpositive on these crystals)
  double len_min = 0.0;
  double len_max = 0.0;
  double len_ratio = 0.0;
  bool max_edge_on_octagon = false;
};

// GC_{k,0} subdivisions of the Mackay crystal, standard-realized with unit
// lattice vectors.
std::vector<MackayTableRow> mackay_gc_table(const std::vector<int>& k_values);
MackayTableRow mackay_gc_table_row(int k);

}  // namespace dsurf
