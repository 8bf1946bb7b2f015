#pragma once

// Real Lagrangian subspaces of (R^{2r}, omega), the Kashiwara signature index
// and the correspondence with symmetric unitaries.

#include <array>
#include <vector>

#include "shilov/invariants.hpp"
#include "shilov/numeric.hpp"
#include "shilov/polydisc.hpp"

namespace shilov::lagrangian {

// omega((xi, eta), (xi', eta')) = xi^T eta' - eta^T xi' = x^T J y.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int r);

  int half_dim() const { return r_; }
  const RMatrix& form() const { return j_; }
  double omega(const RVector& x, const RVector& y) const;
  bool is_symplectic(const RMatrix& g, double tol) const;

 private:
  int r_;
  RMatrix j_;
};

RMatrix standard_form(int r);

class LagrangianSubspace {
 public:
  // basis: 2r x r, columns spanning the subspace.
  explicit LagrangianSubspace(RMatrix basis, const Tolerances& eps = {});

  int half_dim() const { return static_cast<int>(basis_.cols()); }
  const RMatrix& basis() const { return basis_; }
  // Orthonormal basis of the same subspace.
  RMatrix orthonormal() const;

  static LagrangianSubspace xi_axis(int r);
  static LagrangianSubspace eta_axis(int r);
  // span{cos(phi_j) e_j + sin(phi_j) f_j}
  static LagrangianSubspace from_angles(const std::vector<double>& phi);

  LagrangianSubspace transformed(const RMatrix& g) const;

 private:
  RMatrix basis_;
};

int intersection_dim(const LagrangianSubspace& a, const LagrangianSubspace& b, double eps_rank = 1e-8);

// Signature of the Kashiwara form before calibration.
int raw_signature(const LagrangianSubspace& l1, const LagrangianSubspace& l2, const LagrangianSubspace& l3,
                  double eps_rank = 1e-8);

// Sign fixed once so that the image of the circle triple (1, -1, -i) has index +1.
int calibration_sign();

int kashiwara_index(const LagrangianSubspace& l1, const LagrangianSubspace& l2, const LagrangianSubspace& l3,
                    double eps_rank = 1e-8);

LagrangianSubspace unitary_to_lagrangian(const CMatrix& u, const Tolerances& eps = {});
CMatrix lagrangian_to_unitary(const LagrangianSubspace& l, const Tolerances& eps = {});

struct NormalForm {
  RMatrix g;                                  // symplectic; g^{-1} l_k is in normal position
  std::array<std::vector<double>, 3> angles;  // phi in [0, pi)
  polydisc::TorusTriple turns;
};

NormalForm joint_normal_form(const LagrangianSubspace& l1, const LagrangianSubspace& l2,
                             const LagrangianSubspace& l3, double tol = 1e-6, const Tolerances& eps = {});

// Invariants of the normal-form triple read off from its angles.
OrbitInvariant angle_invariants(const std::array<std::vector<double>, 3>& angles, double tol = 1e-6);

}  // namespace shilov::lagrangian
