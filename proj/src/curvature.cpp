#include "dsurf/curvature.hpp"

#include <cmath>

namespace dsurf {

namespace {

constexpr double kPairDropTol = 1e-12;

Vec3 raw_normal(const std::array<Vec3, 3>& e) {
  return e[0].cross(e[1]) + e[1].cross(e[2]) + e[2].cross(e[0]);
}

}  // namespace

Vec3 vertex_normal_raw(const DiscreteSurface& surface, int x) {
  return raw_normal(surface.star_vectors(x));
}

Vec3 vertex_normal(const DiscreteSurface& surface, int x) {
  Vec3 m = vertex_normal_raw(surface, x);
  double a = m.norm();
  double scale = surface.max_edge_length(x);
  if (a <= kPairDropTol * scale * scale)
    throw Error(ErrorCode::ZeroNormal,
                "area element vanishes at vertex " + std::to_string(x));
  return m / a;
}

Vec3 tangent_project(const Vec3& unit_normal, const Vec3& v) {
  return v - v.dot(unit_normal) * unit_normal;
}

TriangleForms triangle_forms(const Vec3& x0, const Vec3& x1, const Vec3& x2,
                             const Vec3& n0, const Vec3& n1, const Vec3& n2) {
  const Vec3 v1 = x1 - x0;
  const Vec3 v2 = x2 - x0;
  const Vec3 cross = v1.cross(v2);
  double area2 = cross.squaredNorm();
  double scale = std::max(v1.norm(), v2.norm());
  if (area2 <= kPairDropTol * kPairDropTol * std::pow(scale, 4.0) || scale == 0.0)
    throw Error(ErrorCode::DegenerateTriangle, "triangle frame is degenerate");

  TriangleForms f;
  f.I << v1.dot(v1), v1.dot(v2), v2.dot(v1), v2.dot(v2);

  const Vec3 dn1 = n1 - n0;
  const Vec3 dn2 = n2 - n0;
  f.II << -v1.dot(dn1), -v1.dot(dn2), -v2.dot(dn1), -v2.dot(dn2);

  const Vec3 plane_normal = cross / cross.norm();
  const Vec3 g1 = tangent_project(plane_normal, dn1);
  const Vec3 g2 = tangent_project(plane_normal, dn2);
  f.III << g1.dot(g1), g1.dot(g2), g2.dot(g1), g2.dot(g2);
  return f;
}

std::pair<double, double> triangle_curvatures(const TriangleForms& forms) {
  const double E = forms.I(0, 0), F = forms.I(0, 1), G = forms.I(1, 1);
  const double L = forms.II(0, 0), M2 = forms.II(0, 1);
  const double M1 = forms.II(1, 0), N = forms.II(1, 1);
  const double det = E * G - F * F;
  if (det <= 0.0)
    throw Error(ErrorCode::DegenerateTriangle, "first form is singular");
  double h = (E * N + G * L - F * (M1 + M2)) / (2.0 * det);
  double k = (L * N - M1 * M2) / det;
  return {h, k};
}

namespace {

struct StarData {
  std::array<Vec3, 3> e;
  std::array<Vec3, 3> neighbor_normal;
  Vec3 m;
  double area;
  Vec3 n;
};

StarData star_data(const DiscreteSurface& surface, int x) {
  StarData d;
  d.e = surface.star_vectors(x);
  const auto& star = surface.graph().star(x);
  for (int i = 0; i < 3; ++i)
    d.neighbor_normal[i] =
        vertex_normal(surface, surface.graph().edge(star[i]).terminus);
  d.m = raw_normal(d.e);
  d.area = d.m.norm();
  double scale = surface.max_edge_length(x);
  if (d.area <= kPairDropTol * scale * scale)
    throw Error(ErrorCode::DegenerateVertex,
                "area element vanishes at vertex " + std::to_string(x));
  d.n = d.m / d.area;
  return d;
}

}  // namespace

CurvatureReport vertex_curvature(const DiscreteSurface& surface, int x,
                                 CurvatureMethod method) {
  StarData d = star_data(surface, x);
  CurvatureReport report;
  report.normal = d.n;
  report.area_element = d.area;

  if (method == CurvatureMethod::LargeTriangle) {
    // Triangle over the three neighbors; its raw normal equals m(x).
    const Vec3 w1 = d.e[1] - d.e[0];
    const Vec3 w2 = d.e[2] - d.e[0];
    Mat2 I;
    I << w1.dot(w1), w1.dot(w2), w2.dot(w1), w2.dot(w2);
    const Vec3 dn1 = d.neighbor_normal[1] - d.neighbor_normal[0];
    const Vec3 dn2 = d.neighbor_normal[2] - d.neighbor_normal[0];
    Mat2 II;
    II << -w1.dot(dn1), -w1.dot(dn2), -w2.dot(dn1), -w2.dot(dn2);
    double det = I.determinant();
    if (det <= 0.0)
      throw Error(ErrorCode::DegenerateVertex,
                  "neighbor triangle degenerate at vertex " + std::to_string(x));
    report.mean = (I(0, 0) * II(1, 1) + I(1, 1) * II(0, 0) -
                   I(0, 1) * (II(1, 0) + II(0, 1))) /
                  (2.0 * det);
    report.gauss = II.determinant() / det;
    return report;
  }

  // Weighted average over the pair triangles (Def of H and K).
  const double scale = surface.max_edge_length(x);
  const double drop = kPairDropTol * std::pow(scale, 4.0);
  std::array<Vec3, 3> v;   // projected edge vectors
  std::array<Vec3, 3> gn;  // projected normal differences
  for (int i = 0; i < 3; ++i) {
    v[i] = tangent_project(d.n, d.e[i]);
    gn[i] = tangent_project(d.n, d.neighbor_normal[i] - d.n);
  }
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3;
    Mat2 I;
    I << v[a].dot(v[a]), v[a].dot(v[b]), v[b].dot(v[a]), v[b].dot(v[b]);
    double det = I.determinant();
    if (det <= drop) {
      report.skipped_pairs.push_back(a + 1);
      continue;
    }
    Mat2 II;
    II << -v[a].dot(gn[a]), -v[a].dot(gn[b]), -v[b].dot(gn[a]), -v[b].dot(gn[b]);
    double h = (I(0, 0) * II(1, 1) + I(1, 1) * II(0, 0) -
                I(0, 1) * (II(1, 0) + II(0, 1))) /
               (2.0 * det);
    double k = II.determinant() / det;
    double weight_area = std::sqrt(det);
    report.contributions.push_back({a + 1, b + 1, h, k, weight_area});
    report.mean += weight_area / d.area * h;
    report.gauss += weight_area / d.area * k;
  }
  if (report.contributions.empty())
    throw Error(ErrorCode::AllPairsSkipped,
                "all pair triangles degenerate at vertex " + std::to_string(x));
  return report;
}

Vec3 mean_curvature_vector(const DiscreteSurface& surface, int x) {
  StarData d = star_data(surface, x);
  std::array<Vec3, 3> gn;
  for (int i = 0; i < 3; ++i)
    gn[i] = tangent_project(d.n, d.neighbor_normal[i] - d.n);
  // grad_{e2-e3} n x Phi(e1) + grad_{e3-e1} n x Phi(e2) + grad_{e1-e2} n x Phi(e3)
  return (gn[1] - gn[2]).cross(d.e[0]) + (gn[2] - gn[0]).cross(d.e[1]) +
         (gn[0] - gn[1]).cross(d.e[2]);
}

MinimalityResult is_minimal(const DiscreteSurface& surface, double tol) {
  MinimalityResult r;
  for (int x = 0; x < surface.vertex_count(); ++x) {
    double h = std::abs(vertex_curvature(surface, x, CurvatureMethod::LargeTriangle).mean);
    if (h > r.max_abs_mean) {
      r.max_abs_mean = h;
      r.worst_vertex = x;
    }
  }
  r.minimal = r.max_abs_mean <= tol;
  return r;
}

std::vector<CurvatureReport> curvature_field(const DiscreteSurface& surface,
                                             CurvatureMethod method) {
  std::vector<CurvatureReport> out;
  out.reserve(surface.vertex_count());
  for (int x = 0; x < surface.vertex_count(); ++x)
    out.push_back(vertex_curvature(surface, x, method));
  return out;
}

}  // namespace dsurf
