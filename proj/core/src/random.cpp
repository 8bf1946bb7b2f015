#include "shilov/random.hpp"

#include <cmath>

namespace shilov::random {

namespace {

double normal(Engine& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double uniform(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Hermitian (or real symmetric) matrix with spectral norm `norm`.
CMatrix hermitian(Engine& rng, Eigen::Index n, bool real, double norm) {
  CMatrix g = gaussian(rng, n, n);
  if (real) g = g.real().cast<cplx>();
  CMatrix h = 0.5 * (g + g.adjoint());
  const double top = Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().maxCoeff();
  return top > 0 ? CMatrix(h * (norm / top)) : h;
}

}  // namespace

CMatrix gaussian(Engine& rng, Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  return m;
}

CMatrix unitary(Engine& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix> qr(gaussian(rng, n, n));
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

RMatrix orthogonal(Engine& rng, Eigen::Index n) {
  RMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ() * RMatrix::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    if (qr.matrixQR()(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

models::BoundaryMatrix boundary(Engine& rng, Flavor flavor, Eigen::Index n) {
  if (flavor == Flavor::Hermitian) return {flavor, unitary(rng, n)};
  const CMatrix u = unitary(rng, n);
  CVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) phases(j) = std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi));
  CMatrix z = u * phases.asDiagonal() * u.transpose();
  z = 0.5 * (z + z.transpose()).eval();
  return {flavor, z};
}

models::MoebiusElement moebius(Engine& rng, Flavor flavor, Eigen::Index n, double spread) {
  const bool real = flavor == Flavor::Symmetric;
  const CMatrix x = hermitian(rng, n, real, spread);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(x);
  const CMatrix& v = es.eigenvectors();
  const RVector& lambda = es.eigenvalues();
  CMatrix ch = v * lambda.array().cosh().matrix().cast<cplx>().asDiagonal() * v.adjoint();
  CMatrix sh = v * lambda.array().sinh().matrix().cast<cplx>().asDiagonal() * v.adjoint();
  if (real) {
    ch = ch.real().cast<cplx>();
    sh = sh.real().cast<cplx>();
  }
  CMatrix h(2 * n, 2 * n);
  h << ch, sh, sh, ch;
  const models::MoebiusElement hyperbolic(flavor, h);
  auto lin = [&] {
    const CMatrix a = unitary(rng, n);
    if (flavor == Flavor::Symmetric) return models::MoebiusElement::congruence(flavor, a);
    const CMatrix d = unitary(rng, n);
    return models::MoebiusElement::linear(flavor, a, d);
  };
  const models::MoebiusElement left = lin();
  const models::MoebiusElement right = lin();
  return left * hyperbolic * right;
}

RMatrix symplectic(Engine& rng, int r, double spread) {
  const RMatrix id = RMatrix::Identity(r, r);
  const RMatrix zero = RMatrix::Zero(r, r);
  RMatrix g(r, r);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < r; ++i) g(i, j) = normal(rng);
  const double gn = Eigen::JacobiSVD<RMatrix>(g).singularValues()(0);
  const RMatrix a = id + (spread / gn) * g;
  const RMatrix s = hermitian(rng, r, true, spread).real();
  const RMatrix t = hermitian(rng, r, true, spread).real();
  const CMatrix u = unitary(rng, r);

  RMatrix dilate(2 * r, 2 * r), shear_up(2 * r, 2 * r), shear_down(2 * r, 2 * r), rotate(2 * r, 2 * r);
  dilate << a, zero, zero, a.transpose().inverse();
  shear_up << id, s, zero, id;
  shear_down << id, zero, t, id;
  rotate << u.real(), -u.imag(), u.imag(), u.real();
  return dilate * shear_up * shear_down * rotate;
}

polydisc::Turn rational_turn(Engine& rng, int denominator) {
  std::uniform_int_distribution<int> k(0, denominator - 1);
  return {k(rng), denominator};
}

polydisc::TorusTriple torus_triple(Engine& rng, int r, int denominator) {
  polydisc::TorusTriple t;
  for (auto& p : t)
    for (int j = 0; j < r; ++j) p.turns.push_back(rational_turn(rng, denominator));
  return t;
}

SynthesizedTriple boundary_triple(Engine& rng, Flavor flavor, int r, int denominator, double spread) {
  const polydisc::TorusTriple source = torus_triple(rng, r, denominator);
  const models::MoebiusElement g = moebius(rng, flavor, r, spread);
  return {source,
          {models::moebius_apply(g, models::embed_torus(flavor, source[0])),
           models::moebius_apply(g, models::embed_torus(flavor, source[1])),
           models::moebius_apply(g, models::embed_torus(flavor, source[2]))}};
}

CVector isotropic_vector(Engine& rng, int n) {
  CVector v(n + 1);
  v.head(n) = gaussian(rng, n, 1).col(0);
  v.head(n).normalize();
  v(n) = 1.0;
  const double modulus = uniform(rng, 0.5, 2.0);
  return v * std::polar(modulus, uniform(rng, 0.0, 2.0 * kPi));
}

CMatrix pseudo_unitary(Engine& rng, int n, double spread) {
  auto rotation = [&] {
    CMatrix m = CMatrix::Zero(n + 1, n + 1);
    m.topLeftCorner(n, n) = unitary(rng, n);
    m(n, n) = std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi));
    return m;
  };
  const double t = uniform(rng, -spread, spread) * 3.0;
  CMatrix boost = CMatrix::Identity(n + 1, n + 1);
  boost(0, 0) = boost(n, n) = std::cosh(t);
  boost(0, n) = boost(n, 0) = std::sinh(t);
  const CMatrix left = rotation();
  const CMatrix right = rotation();
  return left * boost * right;
}

}  // namespace shilov::random
