#include "dsurf/realization.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <numeric>

#include "dsurf/curvature.hpp"

namespace dsurf {

EdgeWeights EdgeWeights::uniform(const TrivalentGraph& graph, double m) {
  return EdgeWeights{std::vector<double>(graph.edge_class_count(), m)};
}

DiscreteSurface harmonic_realize(const TrivalentGraph& graph,
                                 const EdgeWeights& weights,
                                 const std::vector<Vec3>& lattice,
                                 const Gauge& gauge) {
  const int n = graph.vertex_count();
  if (static_cast<int>(lattice.size()) != graph.period_rank())
    throw Error(ErrorCode::ValidationError, "lattice/period rank mismatch");
  if (graph.period_rank() == 0)
    throw Error(ErrorCode::SingularSystem,
                "harmonic realization of a finite graph collapses to a point");
  if (!graph.is_connected())
    throw Error(ErrorCode::SingularSystem, "graph is not connected");
  if (static_cast<int>(weights.per_class.size()) != graph.edge_class_count())
    throw Error(ErrorCode::ValidationError, "weight table size mismatch");
  for (double m : weights.per_class)
    if (!(m > 0.0))
      throw Error(ErrorCode::ValidationError, "edge weights must be positive");

  int pin = 0;
  Vec3 pin_value = Vec3::Zero();
  if (gauge.kind == Gauge::Kind::FixVertex) {
    if (gauge.vertex < 0 || gauge.vertex >= n)
      throw Error(ErrorCode::GaugeConflict, "gauge vertex out of range");
    pin = gauge.vertex;
    pin_value = gauge.value;
  }

  // Weighted Laplacian rows sum m_e (p_t - p_o) = -sum m_e L s_e, one vertex
  // pinned. The pinned row is implied by the rest, so nothing is lost.
  std::vector<Eigen::Triplet<double>> trips;
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 3);
  for (int v = 0; v < n; ++v) {
    if (v == pin) {
      trips.emplace_back(v, v, 1.0);
      rhs.row(v) = pin_value.transpose();
      continue;
    }
    double diag = 0.0;
    for (int oe : graph.star(v)) {
      const OrientedEdge& e = graph.edge(oe);
      double m = weights.of_oriented(oe);
      diag -= m;
      trips.emplace_back(v, e.terminus, m);
      Vec3 off = Vec3::Zero();
      for (int i = 0; i < graph.period_rank(); ++i)
        off += static_cast<double>(e.shift[i]) * lattice[i];
      rhs.row(v) -= (m * off).transpose();
    }
    trips.emplace_back(v, v, diag);
  }
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(trips.begin(), trips.end());
  A.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
  if (lu.info() != Eigen::Success)
    throw Error(ErrorCode::SingularSystem, "harmonic system is singular");
  Eigen::MatrixXd X = lu.solve(rhs);

  std::vector<Vec3> positions(n);
  for (int v = 0; v < n; ++v) positions[v] = X.row(v).transpose();
  if (gauge.kind == Gauge::Kind::FixBarycenter) {
    Vec3 mean = Vec3::Zero();
    for (const Vec3& p : positions) mean += p;
    mean /= static_cast<double>(n);
    for (Vec3& p : positions) p += gauge.value - mean;
  }
  return DiscreteSurface::build(graph, std::move(positions), lattice);
}

double harmonic_residual(const DiscreteSurface& surface,
                         const EdgeWeights& weights) {
  double worst = 0.0;
  for (int v = 0; v < surface.vertex_count(); ++v) {
    Vec3 sum = Vec3::Zero();
    for (int oe : surface.graph().star(v))
      sum += weights.of_oriented(oe) * surface.edge_vector(oe);
    worst = std::max(worst, sum.norm());
  }
  double scale = surface.mean_edge_length();
  return scale > 0.0 ? worst / scale : worst;
}

std::pair<double, double> harmonic_star_curvature(
    const Vec3& e1, const Vec3& e2, const Vec3& e3, const Vec3& n1,
    const Vec3& n2, const Vec3& n3, double m1, double m2, double m3) {
  const Vec3 m = e1.cross(e2) + e2.cross(e3) + e3.cross(e1);
  const double area2 = m.squaredNorm();
  if (area2 <= 0.0)
    throw Error(ErrorCode::DegenerateVertex, "area element vanishes");
  const Vec3 e[3] = {e1, e2, e3};
  const Vec3 nn[3] = {n1, n2, n3};
  const double w[3] = {m1, m2, m3};
  const double total = m1 + m2 + m3;
  double sum_h = 0.0, sum_k = 0.0;
  for (int a = 0; a < 3; ++a) {
    int b = (a + 1) % 3, c = (a + 2) % 3;
    double ab = e[a].dot(e[b]);
    double an_b = e[a].dot(nn[b]);
    double bn_a = e[b].dot(nn[a]);
    sum_h += ab * (an_b + bn_a) / w[c];
    sum_k += an_b * bn_a / w[c];
  }
  // The K prefactor is total/area2: det I_ab = m_c^2 A^2 / total^2, which
  // fixes the weight to m_c/total per pair.
  return {total / (2.0 * area2) * sum_h, -total / area2 * sum_k};
}

std::vector<std::pair<double, double>> harmonic_curvatures(
    const DiscreteSurface& surface, const EdgeWeights& weights,
    double residual_tol) {
  double res = harmonic_residual(surface, weights);
  if (res > residual_tol)
    throw Error(ErrorCode::NotHarmonic,
                "harmonic residual " + std::to_string(res) + " above tolerance");
  std::vector<std::pair<double, double>> out;
  out.reserve(surface.vertex_count());
  for (int v = 0; v < surface.vertex_count(); ++v) {
    const auto& star = surface.graph().star(v);
    const auto e = surface.star_vectors(v);
    std::array<Vec3, 3> nn;
    for (int i = 0; i < 3; ++i)
      nn[i] = vertex_normal(surface, surface.graph().edge(star[i]).terminus);
    out.push_back(harmonic_star_curvature(
        e[0], e[1], e[2], nn[0], nn[1], nn[2], weights.of_oriented(star[0]),
        weights.of_oriented(star[1]), weights.of_oriented(star[2])));
  }
  return out;
}

bool conformality_check(const DiscreteSurface& surface, int x, double tol) {
  const auto e = surface.star_vectors(x);
  double scale = surface.max_edge_length(x);
  double p01 = e[0].dot(e[1]);
  double p12 = e[1].dot(e[2]);
  double p20 = e[2].dot(e[0]);
  double bound = tol * scale * scale;
  return std::abs(p01 - p12) <= bound && std::abs(p12 - p20) <= bound &&
         std::abs(p20 - p01) <= bound;
}

namespace {

Mat3 skew(const Vec3& v) {
  Mat3 s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

// Union-find where every vertex position is an affine function of its root:
// pos(v) = A_v pos(root) + b_v.
struct AffineForest {
  std::vector<int> parent;
  std::vector<Mat3> lin;
  std::vector<Vec3> off;

  explicit AffineForest(int n) : parent(n), lin(n, Mat3::Identity()), off(n, Vec3::Zero()) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int v) {
    if (parent[v] == v) return v;
    int p = parent[v];
    int r = find(p);  // afterwards p's expression is relative to r (roots stay identity)
    Mat3 lv = lin[v];
    lin[v] = lv * lin[p];
    off[v] = lv * off[p] + off[v];
    parent[v] = r;
    return r;
  }

  // pos(v) = lin_to_root * pos(root) + off_to_root
  std::pair<Mat3, Vec3> expr(int v) {
    find(v);
    return {lin[v], off[v]};
  }
};

}  // namespace

DiscreteSurface solve_prescribed_h(const DiscreteSurface& reference,
                                   const std::vector<double>& target_h,
                                   const std::vector<AffineConstraint>& constraints) {
  const TrivalentGraph& g = reference.graph();
  const int n = g.vertex_count();
  if (static_cast<int>(target_h.size()) != n)
    throw Error(ErrorCode::ValidationError, "target curvature size mismatch");

  // Reference normals and tangent data; hypothesis check.
  std::vector<Vec3> n0(n);
  for (int v = 0; v < n; ++v) n0[v] = vertex_normal(reference, v);
  std::vector<std::array<Vec3, 3>> gdiff(n);  // grad_{e_b - e_c} n0, cyclic
  for (int v = 0; v < n; ++v) {
    const auto& star = g.star(v);
    std::array<Vec3, 3> nb;
    for (int i = 0; i < 3; ++i)
      nb[i] = tangent_project(n0[v], n0[g.edge(star[i]).terminus] - n0[v]);
    Vec3 d21 = nb[1] - nb[0];
    Vec3 d31 = nb[2] - nb[0];
    double s = std::max(d21.norm(), d31.norm());
    if (d21.cross(d31).norm() <= 1e-12 * s * s || s == 0.0)
      throw Error(ErrorCode::HypothesisFailed,
                  "normal derivative pair dependent at vertex " + std::to_string(v));
    for (int a = 0; a < 3; ++a) gdiff[v][a] = nb[(a + 1) % 3] - nb[(a + 2) % 3];
  }

  // Eliminate pair constraints; collect fixed-point restrictions per root.
  AffineForest forest(n);
  std::vector<std::vector<std::pair<Mat3, Vec3>>> restrictions(n);
  for (const AffineConstraint& c : constraints) {
    if (c.target < 0 || c.target >= n || c.source < 0 || c.source >= n)
      throw Error(ErrorCode::ValidationError, "constraint vertex out of range");
    int rt = forest.find(c.target);
    int rs = forest.find(c.source);
    auto [At, bt] = forest.expr(c.target);
    auto [As, bs] = forest.expr(c.source);
    if (rt != rs) {
      // pos(target) = M pos(source) + offset, i.e.
      // At p_rt + bt = M (As p_rs + bs) + offset.
      Eigen::FullPivLU<Mat3> lu(At);
      if (!lu.isInvertible())
        throw Error(ErrorCode::ValidationError,
                    "constraint chain is not invertible");
      Mat3 inv = lu.inverse();
      forest.parent[rt] = rs;
      forest.lin[rt] = inv * c.M * As;
      forest.off[rt] = inv * (c.M * bs + c.offset - bt);
      // migrate any restrictions gathered on rt
      for (auto& [C, d] : restrictions[rt])
        restrictions[rs].emplace_back(C * forest.lin[rt], d - C * forest.off[rt]);
      restrictions[rt].clear();
    } else {
      // (At - M As) p_r = M bs + offset - bt
      restrictions[rt].emplace_back(At - c.M * As, c.M * bs + c.offset - bt);
    }
  }

  // Parameterize每 root: pos(root) = p0 + N y.
  std::vector<int> root_of(n), y_offset(n, -1);
  std::vector<Vec3> p0(n, Vec3::Zero());
  std::vector<Eigen::Matrix<double, 3, Eigen::Dynamic>> kernel(n);
  int y_dim = 0;
  for (int v = 0; v < n; ++v) root_of[v] = forest.find(v);
  for (int r = 0; r < n; ++r) {
    if (root_of[r] != r) continue;
    const auto& rows = restrictions[r];
    if (rows.empty()) {
      p0[r] = Vec3::Zero();
      kernel[r] = Mat3::Identity();
    } else {
      Eigen::MatrixXd C(3 * rows.size(), 3);
      Eigen::VectorXd d(3 * rows.size());
      for (size_t i = 0; i < rows.size(); ++i) {
        C.middleRows<3>(3 * i) = rows[i].first;
        d.segment<3>(3 * i) = rows[i].second;
      }
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(C);
      Eigen::VectorXd sol = cod.solve(d);
      if ((C * sol - d).norm() > 1e-9 * (1.0 + d.norm()))
        throw Error(ErrorCode::GaugeConflict,
                    "contradictory constraints at vertex " + std::to_string(r));
      p0[r] = sol;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
      lu.setThreshold(1e-10);
      Eigen::MatrixXd null = lu.kernel();
      if (lu.dimensionOfKernel() == 0)
        kernel[r].resize(3, 0);
      else
        kernel[r] = null;
    }
    y_offset[r] = y_dim;
    y_dim += static_cast<int>(kernel[r].cols());
  }

  // Assemble the curvature rows over the reduced unknowns.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3 * n, y_dim);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(3 * n);
  auto add_position = [&](int row, const Mat3& coeff, int v, double sgn) {
    auto [Av, bv] = forest.expr(v);
    int r = root_of[v];
    Mat3 toroot = coeff * Av;
    if (kernel[r].cols() > 0)
      A.block(row, y_offset[r], 3, kernel[r].cols()) +=
          sgn * toroot * kernel[r];
    b.segment<3>(row) -= sgn * (toroot * p0[r] + coeff * bv);
  };
  for (int v = 0; v < n; ++v) {
    int row = 3 * v;
    Vec3 m0 = vertex_normal_raw(reference, v);
    b.segment<3>(row) += 2.0 * target_h[v] * m0;
    const auto& star = g.star(v);
    for (int a = 0; a < 3; ++a) {
      const OrientedEdge& e = g.edge(star[a]);
      Mat3 cross = skew(gdiff[v][a]);
      // Phi(e_a) = pos(terminus) + lattice shift - pos(v)
      add_position(row, cross, e.terminus, 1.0);
      add_position(row, cross, v, -1.0);
      b.segment<3>(row) -= cross * reference.lattice_offset(e.shift);
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-9);
  int rank = static_cast<int>(qr.rank());
  if (rank < y_dim)
    throw Error(ErrorCode::RankDeficient,
                "prescribed curvature system underdetermined, nullity " +
                    std::to_string(y_dim - rank));
  Eigen::VectorXd y = qr.solve(b);
  double residual = (A * y - b).norm();
  if (residual > 1e-8 * (1.0 + b.norm()))
    throw Error(ErrorCode::ValidationError,
                "prescribed curvature system inconsistent, residual " +
                    std::to_string(residual));

  std::vector<Vec3> positions(n);
  for (int v = 0; v < n; ++v) {
    auto [Av, bv] = forest.expr(v);
    int r = root_of[v];
    Vec3 pr = p0[r];
    if (kernel[r].cols() > 0)
      pr += kernel[r] * y.segment(y_offset[r], kernel[r].cols());
    positions[v] = Av * pr + bv;
  }
  return reference.with_positions(std::move(positions));
}

}  // namespace dsurf
