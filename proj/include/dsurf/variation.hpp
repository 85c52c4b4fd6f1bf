#pragma once

#include <vector>

#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// One Vec3 per vertex of the period cell (period-equivariant on crystals).
using VectorField = std::vector<Vec3>;

// Sum of A(x) over one period cell.
double area_functional(const DiscreteSurface& surface);

// d/dt A[Phi + t u] at t = 0.
double first_variation(const DiscreteSurface& surface, const VectorField& u);

// Per-vertex coefficient of the first variation: V_x with
// dA/dt = sum_x <V_x, u_x>.
VectorField first_variation_gradient(const DiscreteSurface& surface);

struct VariationSeries {
  struct Entry {
    double area = 0.0;          // A(x)
    double first_order = 0.0;   // -2 H(x) A(x)
    double second_order = 0.0;  // {2K + tr(I^-1 (III' - III))} A(x)
  };
  std::vector<Entry> per_vertex;
  double area_total = 0.0;
  double first_total = 0.0;
  double second_total = 0.0;
};

// Coefficients of the normal variation Phi + t n.
VariationSeries normal_variation_series(const DiscreteSurface& surface);

struct SteinerEntry {
  double area_t = 0.0;       // A_t(x), area element after the offset
  double steiner_rhs = 0.0;  // (1 - 2tH + t^2 K) A(x)
};

// Area elements of the parallel offset Phi + t n; requires the parallel
// hypothesis (normal differences tangent to the neighbor triangle), else
// throws NotParallel with the worst deviation.
std::vector<SteinerEntry> steiner_check(const DiscreteSurface& surface, double t);

}  // namespace dsurf
