#pragma once

#include <string>
#include <vector>

#include "dsurf/curvature.hpp"
#include "dsurf/surface.hpp"

namespace dsurf {

// RFC-4180 CSV with columns vertex_id,x,y,z,A,H,K,minimal_flag; one row per
// vertex ordered by id, deterministic bytes.
std::string curvature_csv(const DiscreteSurface& surface,
                          const std::vector<CurvatureReport>& reports,
                          double minimal_tol = 1e-10);

enum class ColorField { Mean, Gauss };

// ASCII PLY with per-vertex properties H and K and RGB from a symmetric
// diverging map (blue = most negative, white = zero, red = most positive).
// Faces of periodic surfaces are lifted, so the vertex list may repeat a
// vertex class at several lattice offsets.
std::string export_ply(const DiscreteSurface& surface,
                       const std::vector<CurvatureReport>& reports,
                       ColorField field = ColorField::Mean);

// Wavefront OBJ: vertices plus face polygons from the rotation system.
std::string export_obj(const DiscreteSurface& surface);

}  // namespace dsurf
