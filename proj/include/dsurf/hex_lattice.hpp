#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsurf/surface.hpp"
#include "dsurf/types.hpp"

namespace dsurf {

// Regular hexagonal lattice H(u, xi): base vertex u, first bond vector xi,
// bonds xi, rho(2pi/3) xi, rho(-2pi/3) xi, lattice a1 = xi2 - xi1,
// a2 = xi3 - xi1.
struct HexLattice {
  Vec2 u = Vec2::Zero();
  Vec2 xi = Vec2::Zero();

  Vec2 xi2() const;
  Vec2 xi3() const;
  Vec2 a1() const { return xi2() - xi; }
  Vec2 a2() const { return xi3() - xi; }

  // X(lambda) of the carbon nanotube construction.
  static HexLattice standard(double lambda);
};

// Goldberg-Coxeter index (k, l), k > 0, l >= 0.
struct GCIndex {
  int k = 1;
  int l = 0;

  long long norm() const {
    return static_cast<long long>(k) * k + static_cast<long long>(k) * l +
           static_cast<long long>(l) * l;
  }
  // Eisenstein product: subdividing by `this` then `next` equals subdividing
  // by next*this.
  GCIndex compose(const GCIndex& next) const;
};

// Chiral index (c1, c2) != (0,0) with scale factor lambda.
struct ChiralSpec {
  double lambda = 1.0;
  long long c1 = 0;
  long long c2 = 0;

  double l0() const;     // |c| / lambda = sqrt(3 (c1^2 + c1 c2 + c2^2))
  double radius() const; // |c| / (2 pi)
  long long d() const;   // gcd(c1 + 2 c2, 2 c1 + c2)
  std::pair<long long, long long> t_vector() const;

  // Angle data of Prop (vrep): C_i = 3 pi c_i / L0^2,
  // T1 = -3 pi (c1 + 2 c2)/L0^2, T2 = 3 pi (2 c1 + c2)/L0^2.
  double big_c1() const;
  double big_c2() const;
  double big_t1() const;
  double big_t2() const;

  // Vertex position of the wound lattice at fractional coordinates
  // (alpha1, alpha2) in the a1/a2 basis.
  Vec3 vertex_position(double alpha1, double alpha2) const;
};

// Torus supercell of the hexagonal lattice embedded in the z = 0 plane:
// n1 x n2 cells, 2 vertices per cell, r = 2.
DiscreteSurface hex_patch(const HexLattice& lattice, int n1 = 1, int n2 = 1);

// CNT(lambda, c) quotient with `rings` period cells along the tube axis
// (r = 1). Throws DegenerateChirality for collapsed tubes such as (1,0).
DiscreteSurface cnt_build(const ChiralSpec& spec, int rings = 1);

struct CntNormalData {
  Vec3 m0 = Vec3::Zero();  // unnormalized normal at x(0,0)
  Vec3 m1 = Vec3::Zero();  // unnormalized normal at x(-1/3,-1/3)
  double mx = 0.0, my = 0.0, mz = 0.0;
};
CntNormalData cnt_normal_closed(const ChiralSpec& spec);

// Constant (H, K) of the tube; throws DegenerateChirality when m_x vanishes.
std::pair<double, double> cnt_curvature_closed(const ChiralSpec& spec);

// Closed-form GC subdivision of a hexagonal lattice.
HexLattice gc_hex(const HexLattice& lattice, const GCIndex& idx);

// (k,l)-subdivision of a nanotube: mu = lambda/sqrt(norm),
// d = (k c1 - l c2, l c1 + (k + l) c2). Preserves the radius.
ChiralSpec gc_cnt(const ChiralSpec& spec, const GCIndex& idx);

struct ConvergeRow {
  int n = 0;
  double mu = 0.0;
  long long c1 = 0, c2 = 0;
  double h_closed = 0.0, k_closed = 0.0;
  double h_general = 0.0, k_general = 0.0;
};

// Applies the scheme end to end, recording closed-form and general-method
// curvatures at every step (step 1 is the unsubdivided tube).
std::vector<ConvergeRow> cnt_converge_sweep(const ChiralSpec& spec,
                                            const std::vector<GCIndex>& scheme);

}  // namespace dsurf
