#include "dsurf/variation.hpp"

#include <cmath>

#include "dsurf/curvature.hpp"

namespace dsurf {

double area_functional(const DiscreteSurface& surface) {
  double total = 0.0;
  for (int x = 0; x < surface.vertex_count(); ++x)
    total += vertex_normal_raw(surface, x).norm();
  return total;
}

VectorField first_variation_gradient(const DiscreteSurface& surface) {
  const TrivalentGraph& g = surface.graph();
  VectorField grad(surface.vertex_count(), Vec3::Zero());
  // Moving x changes A(z) exactly at the neighbors z of x. The derivative of
  // A(z) in the corner reached by e is the 90-degree rotation n(z) x (w_j - w_k)
  // of the opposite side, with (corner, j, k) cyclic in z's rotation order.
  for (int x = 0; x < surface.vertex_count(); ++x) {
    for (int oe : g.star(x)) {
      int z = g.edge(oe).terminus;
      int slot = g.star_slot(TrivalentGraph::reverse(oe));
      const auto& star_z = g.star(z);
      Vec3 wj = surface.edge_vector(star_z[(slot + 1) % 3]);
      Vec3 wk = surface.edge_vector(star_z[(slot + 2) % 3]);
      grad[x] += vertex_normal(surface, z).cross(wj - wk);
    }
  }
  return grad;
}

double first_variation(const DiscreteSurface& surface, const VectorField& u) {
  if (static_cast<int>(u.size()) != surface.vertex_count())
    throw Error(ErrorCode::ValidationError, "vector field size mismatch");
  VectorField grad = first_variation_gradient(surface);
  double total = 0.0;
  for (int x = 0; x < surface.vertex_count(); ++x) total += grad[x].dot(u[x]);
  return total;
}

namespace {

struct TriangleData {
  Vec3 w1, w2;    // corner differences of the neighbor triangle
  Vec3 dn1, dn2;  // corner normal differences
  Vec3 n;         // unit normal of the triangle (= n(x))
};

TriangleData neighbor_triangle(const DiscreteSurface& surface, int x) {
  TriangleData t;
  const auto e = surface.star_vectors(x);
  const auto& star = surface.graph().star(x);
  std::array<Vec3, 3> nn;
  for (int i = 0; i < 3; ++i)
    nn[i] = vertex_normal(surface, surface.graph().edge(star[i]).terminus);
  t.w1 = e[1] - e[0];
  t.w2 = e[2] - e[0];
  t.dn1 = nn[1] - nn[0];
  t.dn2 = nn[2] - nn[0];
  t.n = vertex_normal(surface, x);
  return t;
}

}  // namespace

VariationSeries normal_variation_series(const DiscreteSurface& surface) {
  VariationSeries series;
  series.per_vertex.resize(surface.vertex_count());
  for (int x = 0; x < surface.vertex_count(); ++x) {
    TriangleData t = neighbor_triangle(surface, x);
    CurvatureReport rep = vertex_curvature(surface, x, CurvatureMethod::LargeTriangle);
    Mat2 I;
    I << t.w1.dot(t.w1), t.w1.dot(t.w2), t.w2.dot(t.w1), t.w2.dot(t.w2);
    Mat2 third_raw;
    third_raw << t.dn1.dot(t.dn1), t.dn1.dot(t.dn2), t.dn2.dot(t.dn1),
        t.dn2.dot(t.dn2);
    Vec3 g1 = tangent_project(t.n, t.dn1);
    Vec3 g2 = tangent_project(t.n, t.dn2);
    Mat2 third;
    third << g1.dot(g1), g1.dot(g2), g2.dot(g1), g2.dot(g2);
    double correction = (I.inverse() * (third_raw - third)).trace();

    auto& entry = series.per_vertex[x];
    entry.area = rep.area_element;
    entry.first_order = -2.0 * rep.mean * rep.area_element;
    entry.second_order = (2.0 * rep.gauss + correction) * rep.area_element;
    series.area_total += entry.area;
    series.first_total += entry.first_order;
    series.second_total += entry.second_order;
  }
  return series;
}

std::vector<SteinerEntry> steiner_check(const DiscreteSurface& surface, double t) {
  std::vector<SteinerEntry> out(surface.vertex_count());
  double worst = 0.0;
  int worst_vertex = -1;
  for (int x = 0; x < surface.vertex_count(); ++x) {
    TriangleData tri = neighbor_triangle(surface, x);
    double dev = std::max(std::abs(tri.dn1.dot(tri.n)), std::abs(tri.dn2.dot(tri.n)));
    if (dev > worst) {
      worst = dev;
      worst_vertex = x;
    }
  }
  if (worst > 1e-9)
    throw Error(ErrorCode::NotParallel,
                "normal differences leave the tangent plane (deviation " +
                    std::to_string(worst) + " at vertex " +
                    std::to_string(worst_vertex) + ")");
  for (int x = 0; x < surface.vertex_count(); ++x) {
    TriangleData tri = neighbor_triangle(surface, x);
    CurvatureReport rep = vertex_curvature(surface, x, CurvatureMethod::LargeTriangle);
    out[x].area_t = (tri.w1 + t * tri.dn1).cross(tri.w2 + t * tri.dn2).norm();
    out[x].steiner_rhs =
        (1.0 - 2.0 * t * rep.mean + t * t * rep.gauss) * rep.area_element;
  }
  return out;
}

}  // namespace dsurf
