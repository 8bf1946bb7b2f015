#include "shilov/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace shilov {

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Polydisc: return "POLYDISC";
    case Flavor::Symmetric: return "SYMMETRIC";
    case Flavor::Hermitian: return "HERMITIAN";
  }
  return "UNKNOWN";
}

Flavor parse_flavor(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "POLYDISC") return Flavor::Polydisc;
  if (upper == "SYMMETRIC") return Flavor::Symmetric;
  if (upper == "HERMITIAN") return Flavor::Hermitian;
  fail(ErrorCode::UnknownFlavor, "unknown flavor '" + std::string(name) + "'");
}

namespace numeric {

int nullity(const RVector& singular_values, double eps, ErrorCode unstable) {
  const double sigma_max = singular_values.size() ? singular_values.maxCoeff() : 0.0;
  const double cut = eps * std::max(sigma_max, 1.0);
  int zeros = 0;
  for (double s : singular_values) {
    if (s <= 0.1 * cut) {
      ++zeros;
    } else if (s <= cut) {
      fail(unstable, "singular value " + std::to_string(s) + " inside the guard band (" +
                         std::to_string(0.1 * cut) + ", " + std::to_string(cut) + "]");
    }
  }
  return zeros;
}

namespace {

template <typename Mat>
void split_columns(const Mat& v, int rank, Mat& kernel_basis, Mat& complement) {
  const auto n = v.cols();
  complement = v.leftCols(rank);
  kernel_basis = v.rightCols(n - rank);
}

}  // namespace

Kernel kernel(const CMatrix& m, double eps, ErrorCode unstable) {
  const auto n = m.cols();
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  RVector sv = RVector::Zero(n);
  sv.head(svd.singularValues().size()) = svd.singularValues();
  const int null = nullity(sv, eps, unstable);
  Kernel k;
  split_columns<CMatrix>(svd.matrixV(), static_cast<int>(n) - null, k.basis, k.complement);
  return k;
}

Kernel real_kernel(const CMatrix& m, double eps, ErrorCode unstable) {
  const auto rows = m.rows();
  const auto n = m.cols();
  RMatrix stacked(2 * rows, n);
  stacked.topRows(rows) = m.real();
  stacked.bottomRows(rows) = m.imag();
  Eigen::JacobiSVD<RMatrix> svd(stacked, Eigen::ComputeFullV);
  RVector sv = RVector::Zero(n);
  sv.head(svd.singularValues().size()) = svd.singularValues();
  const int null = nullity(sv, eps, unstable);
  RMatrix basis, complement;
  split_columns<RMatrix>(svd.matrixV(), static_cast<int>(n) - null, basis, complement);
  return Kernel{basis.cast<cplx>(), complement.cast<cplx>()};
}

Takagi takagi(const CMatrix& z, double eps) {
  const auto n = z.rows();
  const RMatrix a = z.real();
  const RMatrix b = z.imag();
  // [[A, B], [B, -A]] has eigenpairs (+-sigma_j); the positive half gives the
  // Takagi vectors u_j = x_j + i y_j with z conj(u_j) = sigma_j u_j.
  RMatrix m(2 * n, 2 * n);
  m << a, b, b, -a;
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(m);
  Takagi t;
  t.u.resize(n, n);
  t.sigma.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = 2 * n - 1 - j;
    t.sigma(j) = std::max(es.eigenvalues()(src), 0.0);
    const RVector v = es.eigenvectors().col(src);
    t.u.col(j) = v.head(n).cast<cplx>() + cplx(0, 1) * v.tail(n).cast<cplx>();
  }
  // Near-zero singular values: the zero eigenspace of m holds both u and i*u,
  // so rebuild those columns as the unitary complement of the rest.
  const double cut = eps * std::max(t.sigma.size() ? t.sigma(0) : 0.0, 1.0);
  Eigen::Index positive = 0;
  while (positive < n && t.sigma(positive) > cut) ++positive;
  if (positive < n) {
    Eigen::HouseholderQR<CMatrix> qr(t.u.leftCols(positive));
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    t.u.rightCols(n - positive) = q.rightCols(n - positive);
    t.sigma.tail(n - positive).setZero();
  }
  return t;
}

double off_diagonal_norm(const CMatrix& m) {
  CMatrix off = m;
  off.diagonal().setZero();
  return off.norm();
}

namespace {

constexpr double kMixing[] = {0.6180339887498949, -1.3247179572447460, 2.2360679774997897,
                              -0.4142135623730950, 3.1415926535897931};

// Diagonalizes the hermitian pencil h1 + mu h2 and recurses on groups of
// columns that stay coupled in s because mu merged distinct eigenvalues.
CMatrix diagonalize_block(const CMatrix& s, bool real, int depth) {
  const auto n = s.rows();
  if (n <= 1 || off_diagonal_norm(s) <= 1e-14) return CMatrix::Identity(n, n);
  const CMatrix h1 = 0.5 * (s + s.adjoint());
  const CMatrix h2 = (s - s.adjoint()) / cplx(0, 2);
  const double mu = kMixing[depth % std::size(kMixing)];
  CMatrix w;
  if (real) {
    RMatrix pencil = (h1 + mu * h2).real();
    pencil = 0.5 * (pencil + pencil.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(pencil);
    w = es.eigenvectors().cast<cplx>();
  } else {
    CMatrix pencil = h1 + mu * h2;
    pencil = 0.5 * (pencil + pencil.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(pencil);
    w = es.eigenvectors();
  }
  if (depth >= 4) return w;

  const CMatrix reduced = w.adjoint() * s * w;
  const double coupled = 1e-11 * std::max(1.0, s.norm());
  // Union-find over strongly coupled index pairs.
  std::vector<Eigen::Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(reduced(i, j)) > coupled || std::abs(reduced(j, i)) > coupled)
        parent[find(i)] = find(j);

  std::vector<std::vector<Eigen::Index>> groups(n);
  for (Eigen::Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    const auto m = static_cast<Eigen::Index>(g.size());
    CMatrix sub(m, m);
    CMatrix cols(n, m);
    for (Eigen::Index a = 0; a < m; ++a) {
      cols.col(a) = w.col(g[a]);
      for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = reduced(g[a], g[b]);
    }
    if (real) sub = 0.5 * (sub + sub.transpose()).eval();
    const CMatrix inner = diagonalize_block(sub, real, depth + 1);
    const CMatrix rotated = cols * inner;
    for (Eigen::Index a = 0; a < m; ++a) w.col(g[a]) = rotated.col(a);
  }
  return w;
}

}  // namespace

CMatrix joint_diagonalizer(const CMatrix& s, bool real) { return diagonalize_block(s, real, 0); }

bool is_unitary(const CMatrix& z, double tol) {
  if (z.rows() != z.cols()) return false;
  return (z * z.adjoint() - CMatrix::Identity(z.rows(), z.cols())).norm() <= tol;
}

bool is_symmetric(const CMatrix& z, double tol) {
  if (z.rows() != z.cols()) return false;
  return (z - z.transpose()).norm() <= tol;
}

}  // namespace numeric
}  // namespace shilov
