#pragma once

// Dense linear-algebra helpers shared by the matrix models: rank decisions
// with a guard band, orthonormal kernels, Takagi factorization and joint
// diagonalization of normal matrices.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "shilov/error.hpp"

namespace shilov {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

enum class Flavor { Polydisc, Symmetric, Hermitian };

std::string_view to_string(Flavor flavor);
Flavor parse_flavor(std::string_view name);

// eps_val bounds validation residuals; eps_rank is the relative singular-value
// threshold used for every kernel and rank decision.
struct Tolerances {
  double val = 1e-8;
  double rank = 1e-8;
};

namespace numeric {

// Number of singular values counted as zero. Values are compared against
// eps * max(sigma_max, 1): at most 0.1 * that is zero, above it is nonzero,
// and anything in between throws `unstable`.
int nullity(const RVector& singular_values, double eps, ErrorCode unstable);

// Orthonormal basis of ker(m) (columns) together with an orthonormal basis of
// its orthogonal complement.
struct Kernel {
  CMatrix basis;
  CMatrix complement;
  int dim() const { return static_cast<int>(basis.cols()); }
};

Kernel kernel(const CMatrix& m, double eps, ErrorCode unstable);

// Kernel of a complex matrix whose kernel is invariant under conjugation; the
// returned bases are real.
Kernel real_kernel(const CMatrix& m, double eps, ErrorCode unstable);

// z = u * diag(sigma) * u^T with u unitary, sigma weakly decreasing. z must be
// complex symmetric.
struct Takagi {
  CMatrix u;
  RVector sigma;
};

Takagi takagi(const CMatrix& z, double eps);

// Unitary w (real orthogonal when `real` is set, which requires s to be
// complex symmetric) such that w^* s w is diagonal, for normal s.
CMatrix joint_diagonalizer(const CMatrix& s, bool real);

double off_diagonal_norm(const CMatrix& m);

bool is_unitary(const CMatrix& z, double tol);
bool is_symmetric(const CMatrix& z, double tol);

}  // namespace numeric
}  // namespace shilov
