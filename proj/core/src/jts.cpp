#include "shilov/jts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shilov::jts {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_positive(int n) {
  if (n < 1) fail(ErrorCode::DimensionMismatch, "model size must be positive, got " + std::to_string(n));
}

}  // namespace

TripleModel TripleModel::polydisc(int rank) {
  require_positive(rank);
  return {Flavor::Polydisc, rank};
}

TripleModel TripleModel::symmetric(int n) {
  require_positive(n);
  return {Flavor::Symmetric, n};
}

TripleModel TripleModel::hermitian(int n) {
  require_positive(n);
  return {Flavor::Hermitian, n};
}

TripleModel TripleModel::make(Flavor flavor, int n) {
  require_positive(n);
  return {flavor, n};
}

Eigen::Index TripleModel::ambient_dim() const {
  const Eigen::Index n = rank_;
  switch (flavor_) {
    case Flavor::Polydisc: return n;
    case Flavor::Symmetric: return n * (n + 1) / 2;
    case Flavor::Hermitian: return n * n;
  }
  return 0;
}

CMatrix TripleModel::unit() const {
  if (flavor_ == Flavor::Polydisc) return CMatrix::Ones(rank_, 1);
  return CMatrix::Identity(rank_, rank_);
}

void TripleModel::check(const CMatrix& x, double tol) const {
  if (x.rows() != rows() || x.cols() != cols()) {
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(rows()) + "x" + std::to_string(cols()) +
                                           " element, got " + std::to_string(x.rows()) + "x" +
                                           std::to_string(x.cols()));
  }
  if (flavor_ == Flavor::Symmetric && !numeric::is_symmetric(x, tol * std::max(1.0, x.norm()))) {
    fail(ErrorCode::NonSymmetricInput, "element of Sym_n(C) is not symmetric");
  }
}

CMatrix TripleModel::triple(const CMatrix& x, const CMatrix& y, const CMatrix& z) const {
  if (flavor_ == Flavor::Polydisc) {
    return (x.array() * y.array().conjugate() * z.array()).matrix();
  }
  const CMatrix ys = y.adjoint();
  return 0.5 * (x * ys * z + z * ys * x);
}

CVector TripleModel::coordinates(const CMatrix& x) const {
  switch (flavor_) {
    case Flavor::Polydisc:
      return x.col(0);
    case Flavor::Hermitian:
      return x.reshaped();
    case Flavor::Symmetric: {
      CVector c(ambient_dim());
      Eigen::Index k = 0;
      for (int i = 0; i < rank_; ++i) c(k++) = x(i, i);
      for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j) c(k++) = kSqrt2 * x(i, j);
      return c;
    }
  }
  return {};
}

CMatrix TripleModel::element(const CVector& coords) const {
  if (coords.size() != ambient_dim()) fail(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  switch (flavor_) {
    case Flavor::Polydisc:
      return coords;
    case Flavor::Hermitian:
      return coords.reshaped(rank_, rank_);
    case Flavor::Symmetric: {
      CMatrix x(rank_, rank_);
      Eigen::Index k = 0;
      for (int i = 0; i < rank_; ++i) x(i, i) = coords(k++);
      for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j) x(i, j) = x(j, i) = coords(k++) / kSqrt2;
      return x;
    }
  }
  return {};
}

RVector realify(const CVector& c) {
  RVector r(2 * c.size());
  r << c.real(), c.imag();
  return r;
}

CVector complexify(const RVector& r) {
  const auto n = r.size() / 2;
  return r.head(n).cast<cplx>() + cplx(0, 1) * r.tail(n).cast<cplx>();
}

RealifiedOperator::RealifiedOperator(RMatrix matrix, Linearity linearity)
    : matrix_(std::move(matrix)), linearity_(linearity) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() % 2 != 0) {
    fail(ErrorCode::DimensionMismatch, "realified operator must be square of even size");
  }
}

RealifiedOperator RealifiedOperator::identity(Eigen::Index complex_dim) {
  return {RMatrix::Identity(2 * complex_dim, 2 * complex_dim), Linearity::Linear};
}

RealifiedOperator RealifiedOperator::zero(Eigen::Index complex_dim, Linearity linearity) {
  return {RMatrix::Zero(2 * complex_dim, 2 * complex_dim), linearity};
}

RMatrix RealifiedOperator::complex_structure(Eigen::Index complex_dim) {
  const auto n = complex_dim;
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RMatrix::Identity(n, n);
  return j;
}

RealifiedOperator RealifiedOperator::assemble(Eigen::Index complex_dim, Linearity linearity,
                                              const std::function<CVector(const CVector&)>& map) {
  const auto n = complex_dim;
  RMatrix m(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < 2 * n; ++k) {
    CVector basis = CVector::Zero(n);
    basis(k % n) = k < n ? cplx(1, 0) : cplx(0, 1);
    const CVector image = map(basis);
    if (image.size() != n) fail(ErrorCode::DimensionMismatch, "operator image has wrong length");
    m.col(k) = realify(image);
  }
  return {std::move(m), linearity};
}

CVector RealifiedOperator::apply(const CVector& coords) const { return complexify(matrix_ * realify(coords)); }

double RealifiedOperator::linearity_defect() const {
  const RMatrix j = complex_structure(complex_dim());
  if (linearity_ == Linearity::Linear) return (matrix_ * j - j * matrix_).norm();
  return (matrix_ * j + j * matrix_).norm();
}

RealifiedOperator RealifiedOperator::operator*(const RealifiedOperator& rhs) const {
  if (rhs.matrix_.rows() != matrix_.rows()) fail(ErrorCode::DimensionMismatch, "operator composition size mismatch");
  const Linearity l = linearity_ == rhs.linearity_ ? Linearity::Linear : Linearity::Antilinear;
  return {matrix_ * rhs.matrix_, l};
}

RealifiedOperator RealifiedOperator::operator+(const RealifiedOperator& rhs) const {
  if (rhs.matrix_.rows() != matrix_.rows()) fail(ErrorCode::DimensionMismatch, "operator sum size mismatch");
  if (rhs.linearity_ != linearity_) fail(ErrorCode::DimensionMismatch, "cannot add linear and antilinear operators");
  return {matrix_ + rhs.matrix_, linearity_};
}

RealifiedOperator RealifiedOperator::operator-(const RealifiedOperator& rhs) const { return *this + rhs * -1.0; }

RealifiedOperator RealifiedOperator::operator*(double s) const { return {matrix_ * s, linearity_}; }

RealifiedOperator box(const TripleModel& model, const CMatrix& x, const CMatrix& y) {
  model.check(x);
  model.check(y);
  return RealifiedOperator::assemble(model.ambient_dim(), Linearity::Linear, [&](const CVector& c) {
    return model.coordinates(model.triple(x, y, model.element(c)));
  });
}

RealifiedOperator quadratic(const TripleModel& model, const CMatrix& x) {
  model.check(x);
  return RealifiedOperator::assemble(model.ambient_dim(), Linearity::Antilinear, [&](const CVector& c) {
    return model.coordinates(model.triple(x, model.element(c), x));
  });
}

RealifiedOperator bergman(const TripleModel& model, const CMatrix& x, const CMatrix& y) {
  return RealifiedOperator::identity(model.ambient_dim()) - box(model, x, y) * 2.0 +
         quadratic(model, x) * quadratic(model, y);
}

bool is_tripotent(const TripleModel& model, const CMatrix& e, double tol) {
  model.check(e);
  return (model.triple(e, e, e) - e).norm() <= tol;
}

PeirceDecomposition peirce(const TripleModel& model, const CMatrix& e, double tol) {
  if (!is_tripotent(model, e, tol)) fail(ErrorCode::NotTripotent, "Peirce decomposition needs a tripotent");
  const RealifiedOperator twice_box = box(model, e, e) * 2.0;
  RMatrix sym = 0.5 * (twice_box.matrix() + twice_box.matrix().transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(sym);
  const auto n2 = sym.rows();
  std::array<RMatrix, 3> proj{RMatrix::Zero(n2, n2), RMatrix::Zero(n2, n2), RMatrix::Zero(n2, n2)};
  std::array<int, 3> real_dims{0, 0, 0};
  for (Eigen::Index k = 0; k < n2; ++k) {
    const double lambda = es.eigenvalues()(k);
    const long j = std::lround(lambda);
    if (j < 0 || j > 2 || std::abs(lambda - static_cast<double>(j)) > tol) {
      fail(ErrorCode::SpectrumOutOfRange, "eigenvalue " + std::to_string(lambda) + " of 2 e□e is not near 0, 1 or 2");
    }
    const RVector v = es.eigenvectors().col(k);
    proj[j] += v * v.transpose();
    ++real_dims[j];
  }
  PeirceDecomposition p{e,
                        {RealifiedOperator(proj[0], Linearity::Linear), RealifiedOperator(proj[1], Linearity::Linear),
                         RealifiedOperator(proj[2], Linearity::Linear)},
                        {real_dims[0] / 2, real_dims[1] / 2, real_dims[2] / 2}};
  return p;
}

bool is_transversal(const TripleModel& model, const CMatrix& x, const CMatrix& y, double tol) {
  const RealifiedOperator b = bergman(model, x, y);
  Eigen::JacobiSVD<RMatrix> svd(b.matrix());
  const RVector& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  return s(s.size() - 1) > tol * std::max(smax, 1.0);
}

}  // namespace shilov::jts
