#pragma once

#include <utility>
#include <vector>

#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// Fundamental forms of a normal-decorated triangle. II may be asymmetric;
// entries are laid out as I = [E F; F G], II = [L M2; M1 N], III = [c_ij].
struct TriangleForms {
  Mat2 I = Mat2::Zero();
  Mat2 II = Mat2::Zero();
  Mat2 III = Mat2::Zero();
};

enum class CurvatureMethod { Weighted, LargeTriangle };

struct PairContribution {
  int alpha = 0;  // 1-based edge slots of the pair (alpha,beta)
  int beta = 0;
  double mean = 0.0;
  double gauss = 0.0;
  double weight_area = 0.0;  // sqrt(det I_ab)
};

struct CurvatureReport {
  Vec3 normal = Vec3::Zero();
  double area_element = 0.0;  // A(x) = |e1 x e2 + e2 x e3 + e3 x e1|
  double mean = 0.0;
  double gauss = 0.0;
  std::vector<PairContribution> contributions;
  std::vector<int> skipped_pairs;  // 1-based alpha of (alpha,beta) pairs dropped
};

// Unnormalized normal m(x) = e1 x e2 + e2 x e3 + e3 x e1 in rotation order.
Vec3 vertex_normal_raw(const DiscreteSurface& surface, int x);
// n(x) = m(x)/A(x); throws ZeroNormal when A(x) vanishes.
Vec3 vertex_normal(const DiscreteSurface& surface, int x);

// v - <v,n>n.
Vec3 tangent_project(const Vec3& unit_normal, const Vec3& v);

// Forms of the triangle (x0,x1,x2) with unit vectors n0,n1,n2 assigned to the
// corners. II uses raw normal differences; III uses differences projected
// onto the triangle plane.
TriangleForms triangle_forms(const Vec3& x0, const Vec3& x1, const Vec3& x2,
                             const Vec3& n0, const Vec3& n1, const Vec3& n2);

// (H, K) of a triangle from its forms.
std::pair<double, double> triangle_curvatures(const TriangleForms& forms);

CurvatureReport vertex_curvature(const DiscreteSurface& surface, int x,
                                 CurvatureMethod method);

// Right-hand side of the mean curvature vector identity; equals 2 H A n.
Vec3 mean_curvature_vector(const DiscreteSurface& surface, int x);

struct MinimalityResult {
  bool minimal = false;
  int worst_vertex = -1;
  double max_abs_mean = 0.0;
};
MinimalityResult is_minimal(const DiscreteSurface& surface, double tol);

// All per-vertex reports (LargeTriangle by default).
std::vector<CurvatureReport> curvature_field(
    const DiscreteSurface& surface,
    CurvatureMethod method = CurvatureMethod::LargeTriangle);

}  // namespace dsurf
