#include "shilov/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shilov/matrix_models.hpp"

namespace shilov::lagrangian {

namespace {

RMatrix orthonormal_columns(const RMatrix& b) {
  Eigen::HouseholderQR<RMatrix> qr(b);
  return qr.householderQ() * RMatrix::Identity(b.rows(), b.cols());
}

// Real and complex forms of C^{-1}(a, b) = ((a + b)/sqrt2, (a - b)/(i sqrt2))
// and its inverse.
CMatrix cayley_inverse_matrix(Eigen::Index r) {
  const CMatrix id = CMatrix::Identity(r, r);
  CMatrix m(2 * r, 2 * r);
  m << id, id, cplx(0, -1) * id, cplx(0, 1) * id;
  return m / std::sqrt(2.0);
}

CMatrix cayley_matrix(Eigen::Index r) {
  const CMatrix id = CMatrix::Identity(r, r);
  CMatrix m(2 * r, 2 * r);
  m << id, cplx(0, 1) * id, id, cplx(0, -1) * id;
  return m / std::sqrt(2.0);
}

CMatrix swap_halves(Eigen::Index r) {
  const CMatrix id = CMatrix::Identity(r, r);
  CMatrix m = CMatrix::Zero(2 * r, 2 * r);
  m.topRightCorner(r, r) = id;
  m.bottomLeftCorner(r, r) = id;
  return m;
}

}  // namespace

RMatrix standard_form(int r) {
  RMatrix j = RMatrix::Zero(2 * r, 2 * r);
  j.topRightCorner(r, r) = RMatrix::Identity(r, r);
  j.bottomLeftCorner(r, r) = -RMatrix::Identity(r, r);
  return j;
}

SymplecticSpace::SymplecticSpace(int r) : r_(r) {
  if (r < 1) fail(ErrorCode::OutOfRange, "symplectic space needs r >= 1");
  j_ = standard_form(r);
  const bool antisymmetric = (j_ + j_.transpose()).norm() == 0.0;
  const bool nondegenerate = (j_ * j_ + RMatrix::Identity(2 * r, 2 * r)).norm() == 0.0;
  if (!antisymmetric || !nondegenerate) fail(ErrorCode::NotLagrangian, "standard form is degenerate");
}

double SymplecticSpace::omega(const RVector& x, const RVector& y) const {
  if (x.size() != 2 * r_ || y.size() != 2 * r_) fail(ErrorCode::DimensionMismatch, "vectors must have 2r entries");
  return x.dot(j_ * y);
}

bool SymplecticSpace::is_symplectic(const RMatrix& g, double tol) const {
  if (g.rows() != 2 * r_ || g.cols() != 2 * r_) return false;
  return (g.transpose() * j_ * g - j_).norm() <= tol;
}

LagrangianSubspace::LagrangianSubspace(RMatrix basis, const Tolerances& eps) : basis_(std::move(basis)) {
  const auto r = basis_.cols();
  if (r < 1 || basis_.rows() != 2 * r) fail(ErrorCode::DimensionMismatch, "Lagrangian basis must be 2r x r");
  const RVector s = Eigen::JacobiSVD<RMatrix>(basis_).singularValues();
  if (s(r - 1) <= eps.rank * s(0)) fail(ErrorCode::NotLagrangian, "basis does not have full column rank");
  const double isotropy = (basis_.transpose() * standard_form(static_cast<int>(r)) * basis_).norm();
  if (isotropy > eps.val * std::max(1.0, s(0) * s(0))) {
    fail(ErrorCode::NotLagrangian, "subspace is not isotropic (residual " + std::to_string(isotropy) + ")");
  }
}

RMatrix LagrangianSubspace::orthonormal() const { return orthonormal_columns(basis_); }

LagrangianSubspace LagrangianSubspace::xi_axis(int r) {
  RMatrix b = RMatrix::Zero(2 * r, r);
  b.topRows(r) = RMatrix::Identity(r, r);
  return LagrangianSubspace(b);
}

LagrangianSubspace LagrangianSubspace::eta_axis(int r) {
  RMatrix b = RMatrix::Zero(2 * r, r);
  b.bottomRows(r) = RMatrix::Identity(r, r);
  return LagrangianSubspace(b);
}

LagrangianSubspace LagrangianSubspace::from_angles(const std::vector<double>& phi) {
  const auto r = static_cast<Eigen::Index>(phi.size());
  RMatrix b = RMatrix::Zero(2 * r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    b(j, j) = std::cos(phi[j]);
    b(r + j, j) = std::sin(phi[j]);
  }
  return LagrangianSubspace(b);
}

LagrangianSubspace LagrangianSubspace::transformed(const RMatrix& g) const {
  if (g.rows() != basis_.rows() || g.cols() != basis_.rows()) fail(ErrorCode::DimensionMismatch, "transform size");
  return LagrangianSubspace(g * basis_);
}

int intersection_dim(const LagrangianSubspace& a, const LagrangianSubspace& b, double eps_rank) {
  if (a.half_dim() != b.half_dim()) fail(ErrorCode::DimensionMismatch, "Lagrangians live in different spaces");
  RMatrix both(a.basis().rows(), 2 * a.half_dim());
  both << a.orthonormal(), b.orthonormal();
  RVector sv = RVector::Zero(both.cols());
  const RVector s = Eigen::JacobiSVD<RMatrix>(both).singularValues();
  sv.head(s.size()) = s;
  return numeric::nullity(sv, eps_rank, ErrorCode::RankUnstable);
}

int raw_signature(const LagrangianSubspace& l1, const LagrangianSubspace& l2, const LagrangianSubspace& l3,
                  double eps_rank) {
  const int r = l1.half_dim();
  if (l2.half_dim() != r || l3.half_dim() != r) fail(ErrorCode::DimensionMismatch, "Lagrangians live in different spaces");
  const RMatrix j = standard_form(r);
  const RMatrix b1 = l1.orthonormal(), b2 = l2.orthonormal(), b3 = l3.orthonormal();
  const RMatrix m12 = b1.transpose() * j * b2;
  const RMatrix m23 = b2.transpose() * j * b3;
  const RMatrix m31 = b3.transpose() * j * b1;
  RMatrix q = RMatrix::Zero(3 * r, 3 * r);
  q.block(0, r, r, r) = m12;
  q.block(r, 2 * r, r, r) = m23;
  q.block(2 * r, 0, r, r) = m31;
  q = 0.5 * (q + q.transpose()).eval();

  const RVector lambda = Eigen::SelfAdjointEigenSolver<RMatrix>(q, Eigen::EigenvaluesOnly).eigenvalues();
  const double sigma_max = lambda.cwiseAbs().maxCoeff();
  const double cut = eps_rank * std::max(sigma_max, 1.0);
  int sig = 0;
  for (double l : lambda) {
    const double a = std::abs(l);
    if (a <= 0.1 * cut) continue;
    if (a <= cut) fail(ErrorCode::SignatureUnstable, "Kashiwara form has an eigenvalue in the guard band");
    sig += l > 0 ? 1 : -1;
  }
  return sig;
}

int calibration_sign() {
  static const int sign = [] {
    CMatrix one(1, 1), minus_one(1, 1), minus_i(1, 1);
    one(0, 0) = 1.0;
    minus_one(0, 0) = -1.0;
    minus_i(0, 0) = cplx(0, -1);
    const int raw =
        raw_signature(unitary_to_lagrangian(one), unitary_to_lagrangian(minus_one), unitary_to_lagrangian(minus_i));
    if (raw != 1 && raw != -1) fail(ErrorCode::SignatureUnstable, "calibration triple is degenerate");
    return raw;
  }();
  return sign;
}

int kashiwara_index(const LagrangianSubspace& l1, const LagrangianSubspace& l2, const LagrangianSubspace& l3,
                    double eps_rank) {
  return calibration_sign() * raw_signature(l1, l2, l3, eps_rank);
}

LagrangianSubspace unitary_to_lagrangian(const CMatrix& u, const Tolerances& eps) {
  const auto r = u.rows();
  if (r < 1 || u.cols() != r) fail(ErrorCode::DimensionMismatch, "unitary must be square");
  if (!numeric::is_unitary(u, eps.val) || !numeric::is_symmetric(u, eps.val)) {
    fail(ErrorCode::NotSymmetricUnitary, "matrix is not a symmetric unitary");
  }
  CMatrix graph(2 * r, r);
  graph << CMatrix::Identity(r, r), u;
  const CMatrix v = cayley_inverse_matrix(r) * graph;
  RMatrix spanning(2 * r, 2 * r);
  spanning << v.real(), v.imag();
  Eigen::JacobiSVD<RMatrix> svd(spanning, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  const double cut = eps.rank * s(0);
  int rank = 0;
  for (double x : s) rank += x > cut;
  if (rank != r) {
    fail(ErrorCode::ExtractionRankFailure, "real span has dimension " + std::to_string(rank) + ", expected " +
                                               std::to_string(r));
  }
  return LagrangianSubspace(svd.matrixU().leftCols(r), eps);
}

CMatrix lagrangian_to_unitary(const LagrangianSubspace& l, const Tolerances& eps) {
  const auto r = l.half_dim();
  const RMatrix b = l.orthonormal();
  const CMatrix x = b.topRows(r).cast<cplx>();
  const CMatrix y = b.bottomRows(r).cast<cplx>();
  const CMatrix num = x - cplx(0, 1) * y;
  const CMatrix den = x + cplx(0, 1) * y;
  const RVector s = Eigen::JacobiSVD<CMatrix>(den).singularValues();
  if (s(r - 1) <= eps.rank * s(0)) fail(ErrorCode::DegenerateFrame, "X + iY is singular");
  CMatrix u = den.transpose().fullPivLu().solve(num.transpose()).transpose();
  u = 0.5 * (u + u.transpose()).eval();
  return u;
}

NormalForm joint_normal_form(const LagrangianSubspace& l1, const LagrangianSubspace& l2,
                             const LagrangianSubspace& l3, double tol, const Tolerances& eps) {
  const int r = l1.half_dim();
  if (l2.half_dim() != r || l3.half_dim() != r) fail(ErrorCode::DimensionMismatch, "Lagrangians live in different spaces");
  const models::BoundaryMatrix u1(Flavor::Symmetric, lagrangian_to_unitary(l1, eps), eps.val);
  const models::BoundaryMatrix u2(Flavor::Symmetric, lagrangian_to_unitary(l2, eps), eps.val);
  const models::BoundaryMatrix u3(Flavor::Symmetric, lagrangian_to_unitary(l3, eps), eps.val);
  const models::TorusReduction red = models::reduce_to_torus(u1, u2, u3, tol, eps);

  // The Moebius action on graphs {(xi, u xi)} is conjugate to a real
  // symplectic map through C.
  const CMatrix swap = swap_halves(r);
  const CMatrix s = cayley_inverse_matrix(r) * swap * red.g.matrix() * swap * cayley_matrix(r);
  if (s.imag().norm() > eps.val * std::max(1.0, s.norm())) {
    fail(ErrorCode::NoConvergence, "transported element is not real");
  }
  const RMatrix j = standard_form(r);
  const RMatrix s_real = s.real();

  NormalForm out;
  out.g = -j * s_real.transpose() * j;
  out.turns = red.turns;
  for (int k = 0; k < 3; ++k) {
    for (const polydisc::Turn& t : red.turns[k].turns) {
      const double frac = boost::rational_cast<double>(t.value());
      out.angles[k].push_back(frac == 0.0 ? 0.0 : kPi * (1.0 - frac));
    }
  }
  return out;
}

OrbitInvariant angle_invariants(const std::array<std::vector<double>, 3>& angles, double tol) {
  polydisc::TorusTriple t;
  for (int k = 0; k < 3; ++k) {
    for (double phi : angles[k]) t[k].turns.push_back(polydisc::Turn::nearest(-phi / kPi, tol));
  }
  return polydisc::torus_invariants(t[0], t[1], t[2]);
}

}  // namespace shilov::lagrangian
