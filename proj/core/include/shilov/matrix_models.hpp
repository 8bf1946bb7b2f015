#pragma once

// Sym_n(C) (flavor SYMMETRIC, boundary = symmetric unitaries) and M_n(C)
// (flavor HERMITIAN, boundary = unitary group) with the fractional-linear
// group action, pair normalization and the reduction of boundary triples to
// the diagonal torus.

#include <array>
#include <vector>

#include "shilov/invariants.hpp"
#include "shilov/numeric.hpp"
#include "shilov/polydisc.hpp"

namespace shilov::models {

// A point of the Shilov boundary. Unitary to eps_val; symmetric as well for
// the SYMMETRIC flavor.
class BoundaryMatrix {
 public:
  BoundaryMatrix(Flavor flavor, CMatrix z, double eps_val = Tolerances{}.val);

  Flavor flavor() const { return flavor_; }
  const CMatrix& matrix() const { return z_; }
  Eigen::Index size() const { return z_.rows(); }

 private:
  Flavor flavor_;
  CMatrix z_;
};

// g = [[a, b], [c, d]] acting by z -> (a z + b)(c z + d)^{-1}. Preserves the
// form diag(I, -I); for SYMMETRIC it is also complex symplectic.
class MoebiusElement {
 public:
  MoebiusElement(Flavor flavor, CMatrix g, double eps_val = Tolerances{}.val);

  static MoebiusElement identity(Flavor flavor, Eigen::Index n);
  // z -> a z d^{-1} with a, d unitary. For SYMMETRIC, d must be conj(a).
  static MoebiusElement linear(Flavor flavor, const CMatrix& a, const CMatrix& d);
  // z -> a z a^T (SYMMETRIC) or a z a^* (HERMITIAN) with a unitary.
  static MoebiusElement congruence(Flavor flavor, const CMatrix& a);
  // Block-diagonal extension acting as `sub` on coordinates [offset, offset+p)
  // and as the identity elsewhere.
  static MoebiusElement embed(const MoebiusElement& sub, Eigen::Index n, Eigen::Index offset);

  Flavor flavor() const { return flavor_; }
  Eigen::Index size() const { return g_.rows() / 2; }
  const CMatrix& matrix() const { return g_; }
  auto a() const { return g_.topLeftCorner(size(), size()); }
  auto b() const { return g_.topRightCorner(size(), size()); }
  auto c() const { return g_.bottomLeftCorner(size(), size()); }
  auto d() const { return g_.bottomRightCorner(size(), size()); }

  // g^{-1} = D g^* D with D = diag(I, -I).
  MoebiusElement inverse() const;
  MoebiusElement operator*(const MoebiusElement& rhs) const;

  // ||g^* D g - D|| and, for SYMMETRIC, ||g^T J g - J||, relative to max(1, ||g||^2).
  double defect() const;

 private:
  struct Unchecked {};
  MoebiusElement(Flavor flavor, CMatrix g, Unchecked) : flavor_(flavor), g_(std::move(g)) {}

  Flavor flavor_;
  CMatrix g_;
};

struct SpectralData {
  std::vector<CMatrix> frame;  // mutually orthogonal primitive tripotents
  RVector eigenvalues;         // weakly decreasing, nonnegative
  double spectral_norm() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
};

SpectralData spectral_decompose(Flavor flavor, const CMatrix& z, const Tolerances& eps = {});

// (a z + b)(c z + d)^{-1}; throws SingularDenominator when c z + d is singular.
CMatrix moebius_apply(const MoebiusElement& g, const CMatrix& z, const Tolerances& eps = {});
BoundaryMatrix moebius_apply(const MoebiusElement& g, const BoundaryMatrix& u, const Tolerances& eps = {});

struct PairNormalization {
  MoebiusElement g;
  int k;  // g(x) = I, g(z) = diag(0 (k times), -1, ..., -1)
};

PairNormalization cayley_pair_normalize(Flavor flavor, const BoundaryMatrix& x, const CMatrix& z,
                                        const Tolerances& eps = {});

struct TorusReduction {
  MoebiusElement g;
  polydisc::TorusTriple turns;
};

// Finds g with g(u_k) = diag(exp(2 pi i t_k)). Each coordinate of the result is
// one of the six circle orbit representatives, so all turns are quarter turns.
TorusReduction reduce_to_torus(const BoundaryMatrix& u1, const BoundaryMatrix& u2, const BoundaryMatrix& u3,
                               double tol = 1e-6, const Tolerances& eps = {});

BoundaryMatrix embed_torus(Flavor flavor, const polydisc::TorusPoint& t);

// dim ker(u - v): the transversality index of the pair (0 means transversal).
int transversality_index(const BoundaryMatrix& u, const BoundaryMatrix& v, const Tolerances& eps = {});

// Face ranks from kernel dimensions; iota through the Lagrangian signature
// (SYMMETRIC) or through reduce_to_torus (HERMITIAN). With cross_check the
// SYMMETRIC iota is also computed by reduction and a mismatch throws
// NoConvergence.
OrbitInvariant direct_invariants(const BoundaryMatrix& u1, const BoundaryMatrix& u2, const BoundaryMatrix& u3,
                                 const Tolerances& eps = {}, bool cross_check = false);

}  // namespace shilov::models
