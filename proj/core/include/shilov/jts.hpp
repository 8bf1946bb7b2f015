#pragma once

#include <array>
#include <functional>

#include "shilov/numeric.hpp"

namespace shilov::jts {

// A positive hermitian Jordan triple realized on matrices.
//
// POLYDISC elements are r x 1 columns with {x,y,z} = (x_j conj(y_j) z_j)_j.
// SYMMETRIC (Sym_n(C)) and HERMITIAN (M_n(C)) elements are n x n matrices with
// {x,y,z} = (x y^* z + z y^* x) / 2.
class TripleModel {
 public:
  static TripleModel polydisc(int rank);
  static TripleModel symmetric(int n);
  static TripleModel hermitian(int n);
  static TripleModel make(Flavor flavor, int n);

  Flavor flavor() const { return flavor_; }
  int rank() const { return rank_; }
  // Complex dimension N of the underlying vector space.
  Eigen::Index ambient_dim() const;

  Eigen::Index rows() const { return rank_; }
  Eigen::Index cols() const { return flavor_ == Flavor::Polydisc ? 1 : rank_; }

  CMatrix zero() const { return CMatrix::Zero(rows(), cols()); }
  CMatrix unit() const;  // maximal tripotent e_r

  // Throws DimensionMismatch (and NonSymmetricInput for SYMMETRIC) unless x
  // belongs to the model's vector space.
  void check(const CMatrix& x, double tol = 1e-8) const;

  CMatrix triple(const CMatrix& x, const CMatrix& y, const CMatrix& z) const;

  // Coordinates in a basis that is orthonormal for the trace inner product.
  CVector coordinates(const CMatrix& x) const;
  CMatrix element(const CVector& coords) const;

 private:
  TripleModel(Flavor flavor, int rank) : flavor_(flavor), rank_(rank) {}

  Flavor flavor_;
  int rank_;
};

enum class Linearity { Linear, Antilinear };

// A real-linear operator on the realification R^{2N} of C^N, coordinates
// ordered (Re c, Im c).
class RealifiedOperator {
 public:
  RealifiedOperator(RMatrix matrix, Linearity linearity);

  static RealifiedOperator identity(Eigen::Index complex_dim);
  static RealifiedOperator zero(Eigen::Index complex_dim, Linearity linearity);
  // Multiplication by i on the realification.
  static RMatrix complex_structure(Eigen::Index complex_dim);
  // Assembles the operator column by column from its action on the real basis
  // e_1..e_N, i e_1..i e_N.
  static RealifiedOperator assemble(Eigen::Index complex_dim, Linearity linearity,
                                    const std::function<CVector(const CVector&)>& map);

  const RMatrix& matrix() const { return matrix_; }
  Linearity linearity() const { return linearity_; }
  Eigen::Index complex_dim() const { return matrix_.rows() / 2; }

  CVector apply(const CVector& coords) const;

  // Commutator (LINEAR) or anticommutator (ANTILINEAR) with i, in Frobenius norm.
  double linearity_defect() const;

  RealifiedOperator operator*(const RealifiedOperator& rhs) const;
  RealifiedOperator operator+(const RealifiedOperator& rhs) const;
  RealifiedOperator operator-(const RealifiedOperator& rhs) const;
  RealifiedOperator operator*(double s) const;

 private:
  RMatrix matrix_;
  Linearity linearity_;
};

RVector realify(const CVector& c);
CVector complexify(const RVector& r);

struct PeirceDecomposition {
  CMatrix tripotent;
  // projections[j] projects onto the j-eigenspace of 2 e□e
  std::array<RealifiedOperator, 3> projections;
  // complex dimensions of V_0, V_1, V_2
  std::array<int, 3> dims;
};

RealifiedOperator box(const TripleModel& model, const CMatrix& x, const CMatrix& y);
RealifiedOperator quadratic(const TripleModel& model, const CMatrix& x);
// B(x,y) = 1 - 2 x□y + Q(x)Q(y)
RealifiedOperator bergman(const TripleModel& model, const CMatrix& x, const CMatrix& y);

bool is_tripotent(const TripleModel& model, const CMatrix& e, double tol);
PeirceDecomposition peirce(const TripleModel& model, const CMatrix& e, double tol);
bool is_transversal(const TripleModel& model, const CMatrix& x, const CMatrix& y, double tol);

}  // namespace shilov::jts
