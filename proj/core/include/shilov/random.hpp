#pragma once

// Seeded samplers for property checks: Haar-like unitaries, boundary points,
// group elements and synthesized triples with prescribed torus type.

#include <cstdint>
#include <random>

#include "shilov/lagrangian.hpp"
#include "shilov/matrix_models.hpp"
#include "shilov/polydisc.hpp"

namespace shilov::random {

using Engine = std::mt19937_64;

CMatrix gaussian(Engine& rng, Eigen::Index rows, Eigen::Index cols);
CMatrix unitary(Engine& rng, Eigen::Index n);
RMatrix orthogonal(Engine& rng, Eigen::Index n);

// Uniformly random phases; for SYMMETRIC the point is U diag(e^{i theta}) U^T.
models::BoundaryMatrix boundary(Engine& rng, Flavor flavor, Eigen::Index n);

// lin * hyperbolic(X) * lin' with X of norm about `spread`.
models::MoebiusElement moebius(Engine& rng, Flavor flavor, Eigen::Index n, double spread = 0.6);

// Symplectic matrix built from the same ingredients through the Cayley map.
RMatrix symplectic(Engine& rng, int r, double spread = 0.6);

polydisc::Turn rational_turn(Engine& rng, int denominator = 8);
polydisc::TorusTriple torus_triple(Engine& rng, int r, int denominator = 8);

struct SynthesizedTriple {
  polydisc::TorusTriple source;
  std::array<models::BoundaryMatrix, 3> u;
};

// g applied to the embedded torus triple, with random g.
SynthesizedTriple boundary_triple(Engine& rng, Flavor flavor, int r, int denominator = 8, double spread = 0.6);

// CN^{n,1}-isotropic vector (z, 1) with |z| = 1, then scaled by a random complex number.
CVector isotropic_vector(Engine& rng, int n);

// Random element of U(n, 1) acting on C^{n+1}.
CMatrix pseudo_unitary(Engine& rng, int n, double spread = 0.6);

}  // namespace shilov::random
