#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dsurf/graph.hpp"
#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// Positive symmetric weight per unoriented edge class.
struct EdgeWeights {
  std::vector<double> per_class;
  static EdgeWeights uniform(const TrivalentGraph& graph, double m = 1.0);
  double of_oriented(int oriented_id) const {
    return per_class[oriented_id >> 1];
  }
};

struct Gauge {
  enum class Kind { FixVertex, FixBarycenter };
  Kind kind = Kind::FixBarycenter;
  int vertex = 0;
  Vec3 value = Vec3::Zero();

  static Gauge fix_vertex(int v, const Vec3& p) {
    return Gauge{Kind::FixVertex, v, p};
  }
  static Gauge fix_barycenter(const Vec3& p = Vec3::Zero()) {
    return Gauge{Kind::FixBarycenter, 0, p};
  }
};

// Solves sum_i m(e_i) Phi(e_i) = 0 at every vertex for the given lattice.
DiscreteSurface harmonic_realize(const TrivalentGraph& graph,
                                 const EdgeWeights& weights,
                                 const std::vector<Vec3>& lattice,
                                 const Gauge& gauge);

// Largest residual |sum m_i Phi(e_i)| over vertices, relative to mean edge
// length.
double harmonic_residual(const DiscreteSurface& surface,
                         const EdgeWeights& weights);

// Closed-form (H, K) at one star. e_i are the edge vectors at x (tangent by
// harmonicity), n_i the neighbor unit normals, m_i the edge weights.
std::pair<double, double> harmonic_star_curvature(
    const Vec3& e1, const Vec3& e2, const Vec3& e3, const Vec3& n1,
    const Vec3& n2, const Vec3& n3, double m1, double m2, double m3);

// Per-vertex closed-form curvatures; requires the harmonic residual below
// tolerance, else throws NotHarmonic.
std::vector<std::pair<double, double>> harmonic_curvatures(
    const DiscreteSurface& surface, const EdgeWeights& weights,
    double residual_tol = 1e-10);

// <Phi(e1),Phi(e2)> = <Phi(e2),Phi(e3)> = <Phi(e3),Phi(e1)> at x.
bool conformality_check(const DiscreteSurface& surface, int x,
                        double tol = 1e-10);

// Affine tie Phi(target) = M Phi(source) + offset. target == source rows act
// as fixed-point restrictions (including pins via M = 0).
struct AffineConstraint {
  int target = -1;
  int source = -1;
  Mat3 M = Mat3::Identity();
  Vec3 offset = Vec3::Zero();

  static AffineConstraint pin(int v, const Vec3& p) {
    return AffineConstraint{v, v, Mat3::Zero(), p};
  }
};

// Solves the prescribed mean curvature equation with the reference surface
// supplying normals and tangent projections:
//   2 H(x) m0(x) = sum_cyc grad_{e_b - e_c} n0 x Phi(e_a)   for every x.
// Constraints are imposed by elimination; the reduced linear system must have
// full rank (else RankDeficient with the nullity). Throws HypothesisFailed if
// {grad_{e2-e1} n0, grad_{e3-e1} n0} is dependent at some vertex.
DiscreteSurface solve_prescribed_h(const DiscreteSurface& reference,
                                   const std::vector<double>& target_h,
                                   const std::vector<AffineConstraint>& constraints);

}  // namespace dsurf
