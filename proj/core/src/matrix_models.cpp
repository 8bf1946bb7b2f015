#include "shilov/matrix_models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shilov/lagrangian.hpp"

namespace shilov::models {

namespace {

void require_matrix_flavor(Flavor flavor) {
  if (flavor == Flavor::Polydisc) {
    fail(ErrorCode::UnknownFlavor, "matrix models are SYMMETRIC or HERMITIAN; use torus points for the polydisc");
  }
}

CMatrix symmetrized(const CMatrix& z) { return 0.5 * (z + z.transpose()); }

CMatrix eye(Eigen::Index n) { return CMatrix::Identity(n, n); }

RVector singular_values(const CMatrix& m) { return Eigen::JacobiSVD<CMatrix>(m).singularValues(); }

int kernel_dim(const CMatrix& m, double eps, ErrorCode unstable) {
  RVector sv = RVector::Zero(m.cols());
  const RVector s = singular_values(m);
  sv.head(s.size()) = s;
  return numeric::nullity(sv, eps, unstable);
}

// x = a solution of x * den = num.
CMatrix right_divide(const CMatrix& num, const CMatrix& den) {
  return den.transpose().fullPivLu().solve(num.transpose()).transpose();
}

// Linear element moving the boundary point x to the identity.
MoebiusElement move_to_identity(Flavor flavor, const CMatrix& x, const Tolerances& eps) {
  const auto n = x.rows();
  if ((x - eye(n)).norm() <= 1e-13) return MoebiusElement::identity(flavor, n);
  if (flavor == Flavor::Hermitian) return MoebiusElement::linear(flavor, x.adjoint(), eye(n));
  // x = U U^T for a symmetric unitary, so z -> U^* z conj(U) sends x to I.
  const numeric::Takagi t = numeric::takagi(x, eps.rank);
  return MoebiusElement::congruence(flavor, t.u.adjoint());
}

CMatrix block_matrix(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const auto n = a.rows();
  CMatrix g(2 * n, 2 * n);
  g << a, b, c, d;
  return g;
}

using Mat2 = Eigen::Matrix2cd;

cplx apply2(const Mat2& m, cplx z) { return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1)); }

// z -> conj(a) z
Mat2 rotation_to_one(cplx a) {
  const cplx half = std::polar(1.0, std::arg(a) / 2.0);
  Mat2 m;
  m << std::conj(half), 0.0, 0.0, half;
  return m;
}

// Parabolic element fixing 1 that sends w (!= 1) to -1.
Mat2 parabolic_to_minus_one(cplx w) {
  const double s = -((1.0 + w) / (1.0 - w)).imag();
  const cplx is(0.0, s / 2.0);
  Mat2 m;
  m << 1.0 - is, is, -is, 1.0 + is;
  return m;
}

// Hyperbolic element fixing +-1 that sends c (not +-1) to +-i.
Mat2 dilation_to_axis(cplx c) {
  const double t = 0.5 * std::log(std::abs(std::tan(std::arg(c) / 2.0)));
  Mat2 m;
  m << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
  return m;
}

// SU(1,1) element moving the circle triple (a, b, c) to its orbit representative.
Mat2 canonical_circle_element(cplx a, cplx b, cplx c, double threshold) {
  const bool ab = std::abs(a - b) <= threshold;
  const bool bc = std::abs(b - c) <= threshold;
  const bool ac = std::abs(a - c) <= threshold;
  const Mat2 rot = rotation_to_one(a);
  if ((ab && bc) || (ab && ac) || (bc && ac)) return rot;
  if (ab) return parabolic_to_minus_one(apply2(rot, c)) * rot;
  if (ac || bc) return parabolic_to_minus_one(apply2(rot, b)) * rot;
  const Mat2 first = parabolic_to_minus_one(apply2(rot, b)) * rot;
  return dilation_to_axis(apply2(first, c)) * first;
}

class Reducer {
 public:
  Reducer(Flavor flavor, double tol, const Tolerances& eps) : flavor_(flavor), tol_(tol), eps_(eps) {}

  // Returns g with g(u_k) diagonal for all three k.
  MoebiusElement reduce(const std::array<CMatrix, 3>& u) const {
    const auto m = u[0].rows();
    const MoebiusElement g0 = move_to_identity(flavor_, u[0], eps_);
    std::array<CMatrix, 3> v{eye(m), clean(moebius_apply(g0, u[1], eps_)), clean(moebius_apply(g0, u[2], eps_))};

    CMatrix stacked(2 * m, m);
    stacked << eye(m) - v[1], eye(m) - v[2];
    const numeric::Kernel common = flavor_ == Flavor::Symmetric
                                       ? numeric::real_kernel(stacked, eps_.rank, ErrorCode::NoConvergence)
                                       : numeric::kernel(stacked, eps_.rank, ErrorCode::NoConvergence);
    if (common.dim() == m) return g0;
    if (common.dim() > 0) return split_common_kernel(v, common, g0);

    const int n01 = kernel_dim(v[0] - v[1], eps_.rank, ErrorCode::NoConvergence);
    const int n02 = kernel_dim(v[0] - v[2], eps_.rank, ErrorCode::NoConvergence);
    const int n12 = kernel_dim(v[1] - v[2], eps_.rank, ErrorCode::NoConvergence);
    if (n01 == 0) return transversal_pair(v, 0, 1, 2, g0);
    if (n02 == 0) return transversal_pair(v, 0, 2, 1, g0);
    if (n12 == 0) return transversal_pair(v, 1, 2, 0, g0);
    return through_face(v, g0);
  }

 private:
  CMatrix clean(const CMatrix& z) const { return flavor_ == Flavor::Symmetric ? symmetrized(z) : z; }

  // Common kernel K != 0: with u1 = I all three are I on K, so rotate K to the
  // leading coordinates and reduce the complementary block.
  MoebiusElement split_common_kernel(const std::array<CMatrix, 3>& v, const numeric::Kernel& common,
                                     const MoebiusElement& g0) const {
    const auto m = v[0].rows();
    const auto k = static_cast<Eigen::Index>(common.dim());
    CMatrix w(m, m);
    w << common.basis, common.complement;
    const MoebiusElement basis_change = MoebiusElement::congruence(flavor_, w.adjoint());
    std::array<CMatrix, 3> sub;
    sub[0] = eye(m - k);
    for (int i = 1; i < 3; ++i) {
      sub[i] = clean(moebius_apply(basis_change, v[i], eps_).bottomRightCorner(m - k, m - k));
    }
    const MoebiusElement inner = reduce(sub);
    return MoebiusElement::embed(inner, m, k) * basis_change * g0;
  }

  // (v[p], v[q]) transversal: send it to (I, -I), then diagonalize v[s] inside
  // the stabilizer of that pair.
  MoebiusElement transversal_pair(const std::array<CMatrix, 3>& v, int p, int q, int s,
                                  const MoebiusElement& g0) const {
    const PairNormalization pn = cayley_pair_normalize(flavor_, BoundaryMatrix(flavor_, v[p], eps_.val), v[q], eps_);
    if (pn.k != 0) fail(ErrorCode::NoConvergence, "transversal pair normalized with k != 0");
    const CMatrix third = clean(moebius_apply(pn.g, v[s], eps_));
    if (numeric::off_diagonal_norm(third) <= 1e-14) return pn.g * g0;
    const CMatrix w = numeric::joint_diagonalizer(third, flavor_ == Flavor::Symmetric);
    return MoebiusElement::congruence(flavor_, w.adjoint()) * pn.g * g0;
  }

  // No transversal pair and no common kernel. x = v1 on ker(v1 - v2), 0 on
  // its complement, lies in the interior of Face(v1, v2) and is transversal to
  // I; normalizing (I, x) confines v1, v2 to a smaller block where they are
  // transversal.
  MoebiusElement through_face(const std::array<CMatrix, 3>& v, const MoebiusElement& g0) const {
    const auto m = v[0].rows();
    const numeric::Kernel agree = numeric::kernel(v[1] - v[2], eps_.rank, ErrorCode::NoConvergence);
    const CMatrix x = clean(v[1] * agree.basis * agree.basis.adjoint());
    const PairNormalization pn = cayley_pair_normalize(flavor_, BoundaryMatrix(flavor_, v[0], eps_.val), x, eps_);
    const Eigen::Index k = pn.k;
    if (k != m - agree.dim() || k <= 0 || k >= m) {
      fail(ErrorCode::NoConvergence, "face normalization produced block size " + std::to_string(k));
    }
    std::array<CMatrix, 3> sub;
    sub[0] = eye(k);
    for (int i = 1; i < 3; ++i) {
      const CMatrix w = clean(moebius_apply(pn.g, v[i], eps_));
      const double off = w.topRightCorner(k, m - k).norm() + w.bottomLeftCorner(m - k, k).norm();
      const double tail = (w.bottomRightCorner(m - k, m - k) + eye(m - k)).norm();
      if (off > tol_ || tail > tol_) {
        fail(ErrorCode::NoConvergence, "boundary points did not land in the normalized face");
      }
      sub[i] = w.topLeftCorner(k, k);
    }
    const MoebiusElement inner = reduce(sub);
    return MoebiusElement::embed(inner, m, 0) * pn.g * g0;
  }

  Flavor flavor_;
  double tol_;
  Tolerances eps_;
};

}  // namespace

BoundaryMatrix::BoundaryMatrix(Flavor flavor, CMatrix z, double eps_val) : flavor_(flavor), z_(std::move(z)) {
  require_matrix_flavor(flavor);
  if (z_.rows() != z_.cols() || z_.rows() == 0) fail(ErrorCode::DimensionMismatch, "boundary matrix must be square");
  if (!numeric::is_unitary(z_, eps_val)) fail(ErrorCode::NotBoundary, "matrix is not unitary");
  if (flavor == Flavor::Symmetric && !numeric::is_symmetric(z_, eps_val)) {
    fail(ErrorCode::NotBoundary, "SYMMETRIC boundary matrix is not symmetric");
  }
}

MoebiusElement::MoebiusElement(Flavor flavor, CMatrix g, double eps_val) : flavor_(flavor), g_(std::move(g)) {
  require_matrix_flavor(flavor);
  if (g_.rows() != g_.cols() || g_.rows() % 2 != 0 || g_.rows() == 0) {
    fail(ErrorCode::DimensionMismatch, "Moebius element must be 2n x 2n");
  }
  const double defect_value = defect();
  if (defect_value > eps_val) {
    fail(ErrorCode::InvalidMoebius, "element violates the group conditions (defect " + std::to_string(defect_value) + ")");
  }
}

MoebiusElement MoebiusElement::identity(Flavor flavor, Eigen::Index n) {
  return {flavor, CMatrix::Identity(2 * n, 2 * n), Unchecked{}};
}

MoebiusElement MoebiusElement::linear(Flavor flavor, const CMatrix& a, const CMatrix& d) {
  const auto n = a.rows();
  return {flavor, block_matrix(a, CMatrix::Zero(n, n), CMatrix::Zero(n, n), d)};
}

MoebiusElement MoebiusElement::congruence(Flavor flavor, const CMatrix& a) {
  return linear(flavor, a, flavor == Flavor::Symmetric ? CMatrix(a.conjugate()) : a);
}

MoebiusElement MoebiusElement::embed(const MoebiusElement& sub, Eigen::Index n, Eigen::Index offset) {
  const auto p = sub.size();
  if (offset < 0 || offset + p > n) fail(ErrorCode::DimensionMismatch, "embedded block out of range");
  CMatrix a = eye(n), b = CMatrix::Zero(n, n), c = CMatrix::Zero(n, n), d = eye(n);
  a.block(offset, offset, p, p) = sub.a();
  b.block(offset, offset, p, p) = sub.b();
  c.block(offset, offset, p, p) = sub.c();
  d.block(offset, offset, p, p) = sub.d();
  return {sub.flavor(), block_matrix(a, b, c, d), Unchecked{}};
}

MoebiusElement MoebiusElement::inverse() const {
  const auto n = size();
  CMatrix adj = g_.adjoint();
  adj.topRightCorner(n, n) *= -1.0;
  adj.bottomLeftCorner(n, n) *= -1.0;
  return {flavor_, std::move(adj), Unchecked{}};
}

MoebiusElement MoebiusElement::operator*(const MoebiusElement& rhs) const {
  if (rhs.flavor_ != flavor_ || rhs.size() != size()) fail(ErrorCode::DimensionMismatch, "cannot compose elements");
  return {flavor_, g_ * rhs.g_, Unchecked{}};
}

double MoebiusElement::defect() const {
  const auto n = size();
  CMatrix form = CMatrix::Identity(2 * n, 2 * n);
  form.bottomRightCorner(n, n) *= -1.0;
  double residual = (g_.adjoint() * form * g_ - form).norm();
  if (flavor_ == Flavor::Symmetric) {
    CMatrix j = CMatrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = eye(n);
    j.bottomLeftCorner(n, n) = -eye(n);
    residual = std::max(residual, (g_.transpose() * j * g_ - j).norm());
  }
  return residual / std::max(1.0, g_.squaredNorm() / static_cast<double>(2 * n));
}

SpectralData spectral_decompose(Flavor flavor, const CMatrix& z, const Tolerances& eps) {
  SpectralData out;
  switch (flavor) {
    case Flavor::Polydisc: {
      if (z.cols() != 1) fail(ErrorCode::DimensionMismatch, "polydisc elements are columns");
      const auto r = z.rows();
      std::vector<Eigen::Index> order(r);
      for (Eigen::Index j = 0; j < r; ++j) order[j] = j;
      std::stable_sort(order.begin(), order.end(),
                       [&](Eigen::Index i, Eigen::Index j) { return std::abs(z(i)) > std::abs(z(j)); });
      out.eigenvalues.resize(r);
      for (Eigen::Index j = 0; j < r; ++j) {
        const cplx value = z(order[j]);
        out.eigenvalues(j) = std::abs(value);
        CMatrix c = CMatrix::Zero(r, 1);
        c(order[j]) = std::abs(value) > 0 ? value / std::abs(value) : cplx(1.0);
        out.frame.push_back(c);
      }
      return out;
    }
    case Flavor::Hermitian: {
      if (z.rows() != z.cols()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
      Eigen::JacobiSVD<CMatrix> svd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
      out.eigenvalues = svd.singularValues();
      for (Eigen::Index j = 0; j < z.rows(); ++j) {
        out.frame.push_back(svd.matrixU().col(j) * svd.matrixV().col(j).adjoint());
      }
      return out;
    }
    case Flavor::Symmetric: {
      if (z.rows() != z.cols()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
      if (!numeric::is_symmetric(z, eps.val * std::max(1.0, z.norm()))) {
        fail(ErrorCode::NonSymmetricInput, "Takagi factorization needs a symmetric matrix");
      }
      const numeric::Takagi t = numeric::takagi(symmetrized(z), eps.rank);
      out.eigenvalues = t.sigma;
      for (Eigen::Index j = 0; j < z.rows(); ++j) out.frame.push_back(t.u.col(j) * t.u.col(j).transpose());
      return out;
    }
  }
  return out;
}

CMatrix moebius_apply(const MoebiusElement& g, const CMatrix& z, const Tolerances& eps) {
  if (z.rows() != g.size() || z.cols() != g.size()) fail(ErrorCode::DimensionMismatch, "matrix size does not match element");
  const CMatrix den = g.c() * z + g.d();
  const RVector s = singular_values(den);
  if (s(0) == 0.0 || s(s.size() - 1) <= eps.rank * s(0)) {
    fail(ErrorCode::SingularDenominator, "c z + d is singular; z is outside the domain of g");
  }
  return right_divide(g.a() * z + g.b(), den);
}

BoundaryMatrix moebius_apply(const MoebiusElement& g, const BoundaryMatrix& u, const Tolerances& eps) {
  if (g.flavor() != u.flavor()) fail(ErrorCode::DimensionMismatch, "flavor mismatch between element and matrix");
  CMatrix image = moebius_apply(g, u.matrix(), eps);
  if (u.flavor() == Flavor::Symmetric) image = symmetrized(image);
  const double scale = std::max(1.0, g.matrix().squaredNorm() / static_cast<double>(2 * g.size()));
  return {u.flavor(), std::move(image), eps.val * scale};
}

PairNormalization cayley_pair_normalize(Flavor flavor, const BoundaryMatrix& x, const CMatrix& z,
                                        const Tolerances& eps) {
  if (x.flavor() != flavor) fail(ErrorCode::DimensionMismatch, "flavor mismatch");
  const auto n = x.size();
  if (z.rows() != n || z.cols() != n) fail(ErrorCode::DimensionMismatch, "pair members differ in size");
  if (flavor == Flavor::Symmetric && !numeric::is_symmetric(z, eps.val)) {
    fail(ErrorCode::NonSymmetricInput, "second point is not symmetric");
  }
  if (singular_values(z)(0) > 1.0 + eps.val) fail(ErrorCode::NotInClosedBall, "second point has spectral norm > 1");
  // B(x, z) is invertible exactly when 1 - z^* x is.
  if (kernel_dim(eye(n) - z.adjoint() * x.matrix(), eps.rank, ErrorCode::NoConvergence) > 0) {
    fail(ErrorCode::NotTransversal, "pair is not transversal");
  }

  // x -> I by the linear action
  const MoebiusElement to_identity = move_to_identity(flavor, x.matrix(), eps);
  CMatrix z1 = moebius_apply(to_identity, z, eps);
  if (flavor == Flavor::Symmetric) z1 = symmetrized(z1);

  // Cayley transform zeta = (I + z)(I - z)^{-1}, translate away Im zeta, bring
  // the positive semidefinite real part to diag(I_k, 0) by congruence and map
  // back. Unnormalized Cayley matrices satisfy cayley_inv * cayley = 2.
  const CMatrix id = eye(n);
  const CMatrix zero = CMatrix::Zero(n, n);
  const CMatrix cayley = block_matrix(id, id, -id, id);
  const CMatrix cayley_inv = block_matrix(id, -id, id, id);

  const CMatrix zeta = right_divide(id + z1, id - z1);
  CMatrix im_part = (zeta - zeta.adjoint()) / cplx(0, 2);
  CMatrix re_part = 0.5 * (zeta + zeta.adjoint());
  if (flavor == Flavor::Symmetric) {
    im_part = symmetrized(im_part.real().cast<cplx>());
    re_part = symmetrized(re_part.real().cast<cplx>());
  }
  const CMatrix translate = block_matrix(id, cplx(0, -1) * im_part, zero, id);

  RVector lambda(n);
  CMatrix vecs(n, n);
  if (flavor == Flavor::Symmetric) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(re_part.real());
    lambda = es.eigenvalues().reverse();
    vecs = es.eigenvectors().rowwise().reverse().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(re_part);
    lambda = es.eigenvalues().reverse();
    vecs = es.eigenvectors().rowwise().reverse();
  }
  const double cut = eps.rank * std::max(1.0, zeta.norm());
  int k = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (lambda(j) > cut) {
      ++k;
    } else if (lambda(j) > 0.1 * cut) {
      fail(ErrorCode::NoConvergence, "real part of the Cayley image has an eigenvalue in the guard band");
    }
  }
  CMatrix congruence_block = eye(2 * n);
  if (k > 0) {
    RVector scale = RVector::Ones(n);
    for (int j = 0; j < k; ++j) scale(j) = 1.0 / std::sqrt(lambda(j));
    const CMatrix m = scale.cast<cplx>().asDiagonal() * vecs.adjoint();
    const CMatrix m_inv_adj = scale.cwiseInverse().cast<cplx>().asDiagonal() * vecs.adjoint();
    congruence_block = block_matrix(m, zero, zero, m_inv_adj);
  }
  CMatrix g = cayley_inv * congruence_block * translate * cayley * to_identity.matrix();
  g /= 2.0;
  return {MoebiusElement(flavor, std::move(g), eps.val), k};
}

TorusReduction reduce_to_torus(const BoundaryMatrix& u1, const BoundaryMatrix& u2, const BoundaryMatrix& u3,
                               double tol, const Tolerances& eps) {
  const Flavor flavor = u1.flavor();
  if (u2.flavor() != flavor || u3.flavor() != flavor) fail(ErrorCode::DimensionMismatch, "flavors differ");
  const auto n = u1.size();
  if (u2.size() != n || u3.size() != n) fail(ErrorCode::DimensionMismatch, "boundary matrices differ in size");

  const std::array<const BoundaryMatrix*, 3> u{&u1, &u2, &u3};
  const Reducer reducer(flavor, tol, eps);
  const MoebiusElement g = reducer.reduce({u1.matrix(), u2.matrix(), u3.matrix()});

  std::array<CVector, 3> diag;
  for (int k = 0; k < 3; ++k) {
    const CMatrix image = moebius_apply(g, u[k]->matrix(), eps);
    if (numeric::off_diagonal_norm(image) > tol) {
      fail(ErrorCode::NoConvergence, "reduced triple is not diagonal (off-diagonal " +
                                         std::to_string(numeric::off_diagonal_norm(image)) + ")");
    }
    diag[k] = image.diagonal();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(std::abs(diag[k](j)) - 1.0) > tol) fail(ErrorCode::NoConvergence, "diagonal entry off the circle");
      diag[k](j) /= std::abs(diag[k](j));
    }
  }

  CMatrix a = CMatrix::Zero(n, n), b = CMatrix::Zero(n, n), c = CMatrix::Zero(n, n), d = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Mat2 h = canonical_circle_element(diag[0](j), diag[1](j), diag[2](j), eps.rank);
    a(j, j) = h(0, 0);
    b(j, j) = h(0, 1);
    c(j, j) = h(1, 0);
    d(j, j) = h(1, 1);
  }
  const MoebiusElement canonical(flavor, block_matrix(a, b, c, d), eps.val);
  const MoebiusElement total = canonical * g;

  TorusReduction out{total, {}};
  for (int k = 0; k < 3; ++k) {
    const CMatrix image = moebius_apply(total, u[k]->matrix(), eps);
    if (numeric::off_diagonal_norm(image) > tol) fail(ErrorCode::NoConvergence, "canonical triple is not diagonal");
    polydisc::TorusPoint t;
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx entry = image(j, j);
      const polydisc::Turn turn = polydisc::Turn::nearest(std::arg(entry) / (2.0 * kPi), tol);
      if (std::abs(entry - turn.point()) > tol) fail(ErrorCode::NoConvergence, "diagonal entry does not match its turn");
      t.turns.push_back(turn);
    }
    out.turns[k] = std::move(t);
  }
  return out;
}

BoundaryMatrix embed_torus(Flavor flavor, const polydisc::TorusPoint& t) {
  require_matrix_flavor(flavor);
  CVector entries(t.rank());
  for (int j = 0; j < t.rank(); ++j) entries(j) = t.turns[j].point();
  return {flavor, entries.asDiagonal()};
}

int transversality_index(const BoundaryMatrix& u, const BoundaryMatrix& v, const Tolerances& eps) {
  if (u.flavor() != v.flavor() || u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "pair members differ");
  return kernel_dim(u.matrix() - v.matrix(), eps.rank, ErrorCode::RankUnstable);
}

OrbitInvariant direct_invariants(const BoundaryMatrix& u1, const BoundaryMatrix& u2, const BoundaryMatrix& u3,
                                 const Tolerances& eps, bool cross_check) {
  const Flavor flavor = u1.flavor();
  if (u2.flavor() != flavor || u3.flavor() != flavor) fail(ErrorCode::DimensionMismatch, "flavors differ");
  const auto n = u1.size();
  if (u2.size() != n || u3.size() != n) fail(ErrorCode::DimensionMismatch, "boundary matrices differ in size");

  const int n12 = transversality_index(u1, u2, eps);
  const int n23 = transversality_index(u2, u3, eps);
  const int n31 = transversality_index(u3, u1, eps);
  CMatrix stacked(2 * n, n);
  stacked << u1.matrix() - u2.matrix(), u1.matrix() - u3.matrix();
  const int n123 = kernel_dim(stacked, eps.rank, ErrorCode::RankUnstable);

  auto reduced_iota = [&] {
    const TorusReduction red = reduce_to_torus(u1, u2, u3, 1e-6, eps);
    return polydisc::torus_invariants(red.turns[0], red.turns[1], red.turns[2]).iota();
  };
  int iota = 0;
  if (flavor == Flavor::Symmetric) {
    iota = lagrangian::kashiwara_index(lagrangian::unitary_to_lagrangian(u1.matrix(), eps),
                                       lagrangian::unitary_to_lagrangian(u2.matrix(), eps),
                                       lagrangian::unitary_to_lagrangian(u3.matrix(), eps), eps.rank);
    if (cross_check && reduced_iota() != iota) {
      fail(ErrorCode::NoConvergence, "signature and torus routes disagree on the Maslov index");
    }
  } else {
    iota = reduced_iota();
  }
  return OrbitInvariant(static_cast<int>(n), n12, n23, n31, n123, iota);
}

}  // namespace shilov::models
