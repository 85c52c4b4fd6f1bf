#include "dsurf/hex_lattice.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "dsurf/curvature.hpp"

namespace dsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec2 rot2(double theta, const Vec2& v) {
  double c = std::cos(theta), s = std::sin(theta);
  return Vec2(c * v.x() - s * v.y(), s * v.x() + c * v.y());
}

}  // namespace

Vec2 HexLattice::xi2() const { return rot2(2.0 * kPi / 3.0, xi); }
Vec2 HexLattice::xi3() const { return rot2(-2.0 * kPi / 3.0, xi); }

HexLattice HexLattice::standard(double lambda) {
  HexLattice h;
  h.u = Vec2::Zero();
  h.xi = lambda * Vec2(-std::sqrt(3.0) / 2.0, -0.5);
  return h;
}

GCIndex GCIndex::compose(const GCIndex& next) const {
  // (k1 + conj(w) l1)(k2 + conj(w) l2) with conj(w)^2 = conj(w) - 1.
  GCIndex out;
  out.k = next.k * k - next.l * l;
  out.l = next.k * l + next.l * k + next.l * l;
  return out;
}

double ChiralSpec::l0() const {
  return std::sqrt(3.0 * static_cast<double>(c1 * c1 + c1 * c2 + c2 * c2));
}

double ChiralSpec::radius() const { return lambda * l0() / (2.0 * kPi); }

long long ChiralSpec::d() const {
  long long a = std::llabs(c1 + 2 * c2), b = std::llabs(2 * c1 + c2);
  return std::gcd(a, b);
}

std::pair<long long, long long> ChiralSpec::t_vector() const {
  long long dd = d();
  return {-(c1 + 2 * c2) / dd, (2 * c1 + c2) / dd};
}

double ChiralSpec::big_c1() const { return 3.0 * kPi * static_cast<double>(c1) / (l0() * l0()); }
double ChiralSpec::big_c2() const { return 3.0 * kPi * static_cast<double>(c2) / (l0() * l0()); }
double ChiralSpec::big_t1() const {
  return -3.0 * kPi * static_cast<double>(c1 + 2 * c2) / (l0() * l0());
}
double ChiralSpec::big_t2() const {
  return 3.0 * kPi * static_cast<double>(2 * c1 + c2) / (l0() * l0());
}

Vec3 ChiralSpec::vertex_position(double alpha1, double alpha2) const {
  double r = radius();
  double phi = big_t2() * alpha1 - big_t1() * alpha2;
  double psi = big_c2() * alpha1 - big_c1() * alpha2;
  return Vec3(r * std::cos(phi), r * std::sin(phi), -std::sqrt(3.0) * r * psi);
}

DiscreteSurface hex_patch(const HexLattice& lattice, int n1, int n2) {
  if (n1 < 1 || n2 < 1)
    throw Error(ErrorCode::ValidationError, "supercell bounds must be positive");
  const Vec2 a1 = lattice.a1(), a2 = lattice.a2();
  auto to3 = [](const Vec2& v) { return Vec3(v.x(), v.y(), 0.0); };
  const int cells = n1 * n2;
  auto a_id = [&](int i, int j) { return i * n2 + j; };
  auto b_id = [&](int i, int j) { return cells + i * n2 + j; };

  std::vector<Vec3> positions(2 * cells);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      Vec2 base = lattice.u + static_cast<double>(i) * a1 + static_cast<double>(j) * a2;
      positions[a_id(i, j)] = to3(base);
      positions[b_id(i, j)] = to3(base + lattice.xi);
    }

  auto wrap = [&](int i, int j, int& wi, int& wj, Shift& s) {
    s = Shift::Zero(2);
    wi = i;
    wj = j;
    while (wi < 0) { wi += n1; s[0] -= 1; }
    while (wi >= n1) { wi -= n1; s[0] += 1; }
    while (wj < 0) { wj += n2; s[1] -= 1; }
    while (wj >= n2) { wj -= n2; s[1] += 1; }
  };

  std::vector<std::array<TrivalentGraph::Neighbor, 3>> stars(2 * cells);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int wi, wj;
      Shift s;
      // A neighbors: B(i,j), B(i+1,j), B(i,j+1) along xi1, xi2, xi3.
      wrap(i, j, wi, wj, s);
      stars[a_id(i, j)][0] = {b_id(wi, wj), s};
      wrap(i + 1, j, wi, wj, s);
      stars[a_id(i, j)][1] = {b_id(wi, wj), s};
      wrap(i, j + 1, wi, wj, s);
      stars[a_id(i, j)][2] = {b_id(wi, wj), s};
      // B neighbors: A(i,j), A(i-1,j), A(i,j-1) along -xi1, -xi2, -xi3.
      wrap(i, j, wi, wj, s);
      stars[b_id(i, j)][0] = {a_id(wi, wj), s};
      wrap(i - 1, j, wi, wj, s);
      stars[b_id(i, j)][1] = {a_id(wi, wj), s};
      wrap(i, j - 1, wi, wj, s);
      stars[b_id(i, j)][2] = {a_id(wi, wj), s};
    }

  TrivalentGraph graph = TrivalentGraph::from_adjacency(stars, 2);
  std::vector<Vec3> lat = {to3(static_cast<double>(n1) * a1),
                           to3(static_cast<double>(n2) * a2)};
  return DiscreteSurface::build(std::move(graph), std::move(positions), std::move(lat));
}

namespace {

// Canonical representative of an integer pair modulo the column lattice
// [c | rings*t], plus the wrap in lattice coordinates.
struct QuotientMap {
  long long m00, m01, m10, m11;  // columns c and rings*t
  long long det;

  static long long floordiv(long long a, long long b) {
    long long qd = a / b, rm = a % b;
    return (rm != 0 && ((rm < 0) != (b < 0))) ? qd - 1 : qd;
  }

  std::pair<long long, long long> reduce(long long x, long long y,
                                         long long& wc, long long& wt) const {
    // u = M^-1 (x,y) componentwise-floored, exactly in integers.
    long long fu = floordiv(m11 * x - m01 * y, det);
    long long fv = floordiv(-m10 * x + m00 * y, det);
    wc = fu;
    wt = fv;
    return {x - fu * m00 - fv * m01, y - fu * m10 - fv * m11};
  }
};

}  // namespace

DiscreteSurface cnt_build(const ChiralSpec& spec, int rings) {
  if (spec.c1 == 0 && spec.c2 == 0)
    throw Error(ErrorCode::ValidationError, "chiral index must be nonzero");
  if (!(spec.lambda > 0.0))
    throw Error(ErrorCode::ValidationError, "scale factor must be positive");
  if (rings < 1)
    throw Error(ErrorCode::ValidationError, "ring count must be positive");

  auto [t1, t2] = spec.t_vector();
  QuotientMap q{spec.c1, rings * t1, spec.c2, rings * t2, 0};
  q.det = q.m00 * q.m11 - q.m01 * q.m10;
  if (q.det == 0)
    throw Error(ErrorCode::DegenerateChirality, "period lattice collapses");

  // Enumerate integer representatives of Z^2 / (c, rings*t).
  std::map<std::pair<long long, long long>, int> rep_id;
  std::vector<std::pair<long long, long long>> reps;
  long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (long long cx : {0LL, q.m00, q.m01, q.m00 + q.m01}) {
    xmin = std::min(xmin, cx);
    xmax = std::max(xmax, cx);
  }
  for (long long cy : {0LL, q.m10, q.m11, q.m10 + q.m11}) {
    ymin = std::min(ymin, cy);
    ymax = std::max(ymax, cy);
  }
  for (long long x = xmin - 1; x <= xmax + 1; ++x)
    for (long long y = ymin - 1; y <= ymax + 1; ++y) {
      long long wc, wt;
      auto r = q.reduce(x, y, wc, wt);
      if (r.first == x && r.second == y) {
        rep_id[r] = static_cast<int>(reps.size());
        reps.push_back(r);
      }
    }
  const int ncell = static_cast<int>(reps.size());
  if (ncell != std::llabs(q.det))
    throw Error(ErrorCode::ValidationError, "quotient enumeration failed");

  // Vertex ids: A(rep) = id, B(rep) = ncell + id, B at fractional -1/3.
  std::vector<Vec3> positions(2 * ncell);
  for (int i = 0; i < ncell; ++i) {
    auto [x, y] = reps[i];
    positions[i] = spec.vertex_position(static_cast<double>(x), static_cast<double>(y));
    positions[ncell + i] = spec.vertex_position(x - 1.0 / 3.0, y - 1.0 / 3.0);
  }

  auto lookup = [&](long long x, long long y, Shift& s) {
    long long wc, wt;
    auto r = q.reduce(x, y, wc, wt);
    s = Shift::Zero(1);
    s[0] = static_cast<int>(wt);  // winding around the tube carries no shift
    return rep_id.at(r);
  };

  std::vector<std::array<TrivalentGraph::Neighbor, 3>> stars(2 * ncell);
  for (int i = 0; i < ncell; ++i) {
    auto [x, y] = reps[i];
    Shift s;
    // A(x,y) -> B(x,y), B(x+1,y), B(x,y+1)
    int b0 = lookup(x, y, s);
    stars[i][0] = {ncell + b0, s};
    int b1 = lookup(x + 1, y, s);
    stars[i][1] = {ncell + b1, s};
    int b2 = lookup(x, y + 1, s);
    stars[i][2] = {ncell + b2, s};
    // B(x,y) -> A(x,y), A(x-1,y), A(x,y-1)
    int a0 = lookup(x, y, s);
    stars[ncell + i][0] = {a0, s};
    int a1 = lookup(x - 1, y, s);
    stars[ncell + i][1] = {a1, s};
    int a2v = lookup(x, y - 1, s);
    stars[ncell + i][2] = {a2v, s};
  }

  double dz = -std::sqrt(3.0) * spec.radius() *
              (spec.big_c2() * static_cast<double>(t1) -
               spec.big_c1() * static_cast<double>(t2));
  std::vector<Vec3> lat = {Vec3(0.0, 0.0, rings * dz)};

  try {
    TrivalentGraph graph = TrivalentGraph::from_adjacency(stars, 1);
    // Rotations must point away from the tube axis; flip a sublattice when
    // its listed order points inward.
    DiscreteSurface probe =
        DiscreteSurface::build(graph, positions, lat);
    for (int base : {0, ncell}) {
      Vec3 m = vertex_normal_raw(probe, base);
      Vec3 radial(probe.position(base).x(), probe.position(base).y(), 0.0);
      if (m.dot(radial) < 0.0)
        for (int i = base; i < base + ncell; ++i) graph.flip_vertex(i);
    }
    return DiscreteSurface::build(std::move(graph), std::move(positions),
                                  std::move(lat));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::DegenerateVertex ||
        err.code() == ErrorCode::ValidationError)
      throw Error(ErrorCode::DegenerateChirality,
                  std::string("collapsed tube: ") + err.what());
    throw;
  }
}

CntNormalData cnt_normal_closed(const ChiralSpec& spec) {
  CntNormalData out;
  double r = spec.radius();
  double C1 = spec.big_c1(), C2 = spec.big_c2();
  double T1 = spec.big_t1(), T2 = spec.big_t2();
  out.mx = C1 * std::cos(C2 / 2) * std::sin(T2 / 2) -
           C2 * std::cos(C1 / 2) * std::sin(T1 / 2);
  out.my = -C1 * std::sin(C2 / 2) * std::sin(T2 / 2) +
           C2 * std::sin(C1 / 2) * std::sin(T1 / 2);
  out.mz = std::sin(T1 / 2) * std::sin(T2 / 2) * std::sin((T1 + T2) / 2);
  double scale = 2.0 * std::sqrt(3.0) * r * r;
  out.m0 = scale * Vec3(out.mx, out.my, 2.0 / std::sqrt(3.0) * out.mz);
  double m1x = C1 * std::sin(T2 / 2) * std::cos(T2 / 2) -
               C2 * std::sin(T1 / 2) * std::cos(T1 / 2);
  double m1y = -C1 * std::sin(T2 / 2) * std::sin(T2 / 2) -
               C2 * std::sin(T1 / 2) * std::sin(T1 / 2);
  out.m1 = scale * Vec3(m1x, m1y, -2.0 / std::sqrt(3.0) * out.mz);
  return out;
}

std::pair<double, double> cnt_curvature_closed(const ChiralSpec& spec) {
  CntNormalData nd = cnt_normal_closed(spec);
  double cscale = std::max(std::abs(spec.big_c1()), std::abs(spec.big_c2()));
  if (std::abs(nd.mx) <= 1e-9 * cscale)
    throw Error(ErrorCode::DegenerateChirality,
                "m_x vanishes for chiral index (" + std::to_string(spec.c1) +
                    "," + std::to_string(spec.c2) + ")");
  double r = spec.radius();
  double planar = nd.mx * nd.mx + nd.my * nd.my;
  double den = planar + 4.0 / 3.0 * nd.mz * nd.mz;
  double h = -nd.mx / (2.0 * r) * (planar + 8.0 / 3.0 * nd.mz * nd.mz) /
             std::pow(den, 1.5);
  double k = 4.0 * nd.mz * nd.mz * planar / (3.0 * r * r * den * den);
  return {h, k};
}

HexLattice gc_hex(const HexLattice& lattice, const GCIndex& idx) {
  if (idx.k <= 0 || idx.l < 0)
    throw Error(ErrorCode::ValidationError, "GC index requires k > 0, l >= 0");
  const double n = static_cast<double>(idx.norm());
  const Vec2 xi = lattice.xi;
  // Clockwise-positive rotations; this is the orientation of the printed
  // subdivision tables.
  const Vec2 r60 = rot2(-kPi / 3.0, xi);
  const Vec2 r120 = rot2(-2.0 * kPi / 3.0, xi);
  HexLattice out;
  out.u = lattice.u + rot2(2.0 * kPi / 3.0, -xi) -
          ((idx.k + 2.0 * idx.l) * xi + (2.0 * idx.k + idx.l) * r60 +
           (idx.k - idx.l) * r120) /
              (3.0 * n);
  out.xi = ((2.0 * idx.k + idx.l) * xi + (idx.k - idx.l) * r60 -
            (idx.k + 2.0 * idx.l) * r120) /
           (3.0 * n);
  return out;
}

ChiralSpec gc_cnt(const ChiralSpec& spec, const GCIndex& idx) {
  if (idx.k <= 0 || idx.l < 0)
    throw Error(ErrorCode::ValidationError, "GC index requires k > 0, l >= 0");
  ChiralSpec out;
  out.lambda = spec.lambda / std::sqrt(static_cast<double>(idx.norm()));
  out.c1 = idx.k * spec.c1 - idx.l * spec.c2;
  out.c2 = idx.l * spec.c1 + (idx.k + idx.l) * spec.c2;
  return out;
}

std::vector<ConvergeRow> cnt_converge_sweep(const ChiralSpec& spec,
                                            const std::vector<GCIndex>& scheme) {
  for (const GCIndex& idx : scheme)
    if (idx.k < 2)
      throw Error(ErrorCode::ValidationError,
                  "strictly monotone subdivision requires k >= 2");
  std::vector<ConvergeRow> rows;
  ChiralSpec current = spec;
  for (int n = 0; n <= static_cast<int>(scheme.size()); ++n) {
    if (n > 0) current = gc_cnt(current, scheme[n - 1]);
    ConvergeRow row;
    row.n = n + 1;
    row.mu = current.lambda;
    row.c1 = current.c1;
    row.c2 = current.c2;
    std::tie(row.h_closed, row.k_closed) = cnt_curvature_closed(current);
    DiscreteSurface tube = cnt_build(current, 1);
    CurvatureReport rep = vertex_curvature(tube, 0, CurvatureMethod::LargeTriangle);
    row.h_general = rep.mean;
    row.k_general = rep.gauss;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dsurf
