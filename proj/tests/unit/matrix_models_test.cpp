#include "support.hpp"

#include <set>

#include "shilov/jts.hpp"
#include "shilov/matrix_models.hpp"
#include "shilov/random.hpp"

using namespace shilov;
using namespace shilov::models;
using namespace test;

namespace {

const Flavor kFlavors[] = {Flavor::Symmetric, Flavor::Hermitian};

// (a z + b)(c z + d)^{-1} straight from the blocks
CMatrix act(const CMatrix& g, const CMatrix& z) {
  const auto n = z.rows();
  const CMatrix num = g.topLeftCorner(n, n) * z + g.topRightCorner(n, n);
  const CMatrix den = g.bottomLeftCorner(n, n) * z + g.bottomRightCorner(n, n);
  return num * den.inverse();
}

CMatrix diag_of(const polydisc::TorusPoint& t) {
  CMatrix d = CMatrix::Zero(t.rank(), t.rank());
  for (int j = 0; j < t.rank(); ++j) d(j, j) = std::polar(1.0, t.turns[j].radians());
  return d;
}

polydisc::TorusPoint turns(std::initializer_list<int> eighths) {
  polydisc::TorusPoint t;
  for (int e : eighths) t.turns.emplace_back(e, 8);
  return t;
}

std::multiset<std::array<polydisc::Turn, 3>> coordinate_triples(const polydisc::TorusTriple& t) {
  std::multiset<std::array<polydisc::Turn, 3>> out;
  for (int j = 0; j < t[0].rank(); ++j) out.insert({t[0].turns[j], t[1].turns[j], t[2].turns[j]});
  return out;
}

CMatrix hyperbolic(double t) {
  CMatrix g(2, 2);
  g << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
  return g;
}

}  // namespace

TEST_CASE("boundary matrix validation") {
  CHECK(code_of([] { BoundaryMatrix(Flavor::Hermitian, 2.0 * CMatrix::Identity(2, 2)); }) == ErrorCode::NotBoundary);
  CMatrix swap(2, 2);
  swap << 0, 1, I1, 0;
  CHECK_NOTHROW(BoundaryMatrix(Flavor::Hermitian, swap));
  CHECK(code_of([&] { BoundaryMatrix(Flavor::Symmetric, swap); }) == ErrorCode::NotBoundary);
  CHECK(code_of([] { BoundaryMatrix(Flavor::Hermitian, CMatrix::Identity(2, 3)); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { BoundaryMatrix(Flavor::Polydisc, CMatrix::Identity(2, 2)); }) == ErrorCode::UnknownFlavor);
}

TEST_CASE("Moebius element validation and group law") {
  CHECK_NOTHROW(MoebiusElement(Flavor::Symmetric, hyperbolic(0.7)));
  CMatrix bad = hyperbolic(0.7);
  bad(0, 1) *= -1.0;
  CHECK(code_of([&] { MoebiusElement(Flavor::Hermitian, bad); }) == ErrorCode::InvalidMoebius);
  CHECK(code_of([] { MoebiusElement(Flavor::Hermitian, CMatrix::Identity(3, 3)); }) == ErrorCode::DimensionMismatch);
  // a unitary a with d = a preserves the form but is a congruence only when a is real
  std::mt19937_64 rng(31);
  const CMatrix u = unitary(rng, 2);
  CHECK_NOTHROW(MoebiusElement::linear(Flavor::Hermitian, u, unitary(rng, 2)));
  CHECK(code_of([&] { MoebiusElement::linear(Flavor::Symmetric, u, u); }) == ErrorCode::InvalidMoebius);

  random::Engine eng(32);
  for (Flavor f : kFlavors) {
    for (int n = 1; n <= 3; ++n) {
      const MoebiusElement g = random::moebius(eng, f, n);
      const MoebiusElement h = random::moebius(eng, f, n);
      const CMatrix z = random::boundary(eng, f, n).matrix();
      CHECK((act((g * h).matrix(), z) - act(g.matrix(), act(h.matrix(), z))).norm() < 1e-9);
      CHECK((moebius_apply(g.inverse(), moebius_apply(g, z)) - z).norm() < 1e-9);
      CHECK(((g * g.inverse()).matrix() - CMatrix::Identity(2 * n, 2 * n)).norm() < 1e-9);
      CHECK((g * h).defect() < 1e-10);
      CHECK((moebius_apply(g, z) - act(g.matrix(), z)).norm() < 1e-10);
    }
  }
}

TEST_CASE("linear elements act by congruence") {
  std::mt19937_64 rng(33);
  const CMatrix a = unitary(rng, 3);
  const CMatrix s = 0.5 * (gaussian(rng, 3, 3) + gaussian(rng, 3, 3).transpose());
  const auto sym = MoebiusElement::congruence(Flavor::Symmetric, a);
  CHECK((moebius_apply(sym, s) - a * s * a.transpose()).norm() < 1e-10);
  const CMatrix m = gaussian(rng, 3, 3);
  const auto herm = MoebiusElement::congruence(Flavor::Hermitian, a);
  CHECK((moebius_apply(herm, m) - a * m * a.adjoint()).norm() < 1e-10);
  const auto emb = MoebiusElement::embed(MoebiusElement(Flavor::Symmetric, hyperbolic(0.3)), 3, 1);
  CHECK(emb.defect() < 1e-12);
  CHECK(code_of([] { MoebiusElement::embed(MoebiusElement::identity(Flavor::Symmetric, 2), 3, 2); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("singular denominator") {
  const MoebiusElement g(Flavor::Symmetric, hyperbolic(0.5));
  CMatrix z(1, 1);
  z(0, 0) = -std::cosh(0.5) / std::sinh(0.5);
  CHECK(code_of([&] { moebius_apply(g, z); }) == ErrorCode::SingularDenominator);
  CHECK(code_of([&] { moebius_apply(g, CMatrix::Identity(2, 2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("spectral decomposition") {
  CMatrix pd(3, 1);
  pd << cplx(0, 0.5), -1.0, 0.0;
  const SpectralData s = spectral_decompose(Flavor::Polydisc, pd);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(0.5));
  CHECK(s.eigenvalues(2) == doctest::Approx(0.0));
  CHECK(std::abs(s.frame[1](0, 0) - I1) < 1e-15);

  std::mt19937_64 rng(34);
  for (Flavor f : kFlavors) {
    const auto model = jts::TripleModel::make(f, 4);
    for (int trial = 0; trial < 10; ++trial) {
      CMatrix z = gaussian(rng, 4, 4);
      if (f == Flavor::Symmetric) z = 0.5 * (z + z.transpose()).eval();
      const SpectralData d = spectral_decompose(f, z);
      CMatrix sum = CMatrix::Zero(4, 4);
      for (int j = 0; j < 4; ++j) {
        CHECK(jts::is_tripotent(model, d.frame[j], 1e-10));
        if (j > 0) CHECK(d.eigenvalues(j - 1) >= d.eigenvalues(j));
        for (int k = 0; k < j; ++k) CHECK(model.triple(d.frame[j], d.frame[j], d.frame[k]).norm() < 1e-10);
        sum += d.eigenvalues(j) * d.frame[j];
      }
      CHECK((sum - z).norm() < 1e-9 * z.norm());
      // eigenvalues are the singular values
      const RVector sv = Eigen::JacobiSVD<CMatrix>(z).singularValues();
      CHECK((sv - d.eigenvalues).norm() < 1e-9 * z.norm());
    }
  }
  CMatrix ns(2, 2);
  ns << 1, 2, 3, 4;
  CHECK(code_of([&] { spectral_decompose(Flavor::Symmetric, ns); }) == ErrorCode::NonSymmetricInput);
}

TEST_CASE("Cayley normalization of pairs") {
  const BoundaryMatrix id2(Flavor::Symmetric, CMatrix::Identity(2, 2));
  {
    const PairNormalization p = cayley_pair_normalize(Flavor::Symmetric, id2, -CMatrix::Identity(2, 2));
    CHECK(p.k == 0);
    CHECK((act(p.g.matrix(), CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)).norm() < 1e-10);
    CHECK((act(p.g.matrix(), -CMatrix::Identity(2, 2)) + CMatrix::Identity(2, 2)).norm() < 1e-10);
  }
  {
    CMatrix z = CMatrix::Zero(2, 2);
    z(1, 1) = -1.0;
    const PairNormalization p = cayley_pair_normalize(Flavor::Symmetric, id2, z);
    CHECK(p.k == 1);
    CHECK((act(p.g.matrix(), z) - z).norm() < 1e-10);
  }
  CHECK(code_of([&] { cayley_pair_normalize(Flavor::Symmetric, id2, CMatrix::Identity(2, 2)); }) ==
        ErrorCode::NotTransversal);
  CHECK(code_of([&] { cayley_pair_normalize(Flavor::Symmetric, id2, -2.0 * CMatrix::Identity(2, 2)); }) ==
        ErrorCode::NotInClosedBall);

  random::Engine eng(35);
  for (Flavor f : kFlavors) {
    for (int n = 1; n <= 4; ++n) {
      const BoundaryMatrix x = random::boundary(eng, f, n);
      const PairNormalization p = cayley_pair_normalize(f, x, -x.matrix());
      CHECK(p.k == 0);
      CHECK((act(p.g.matrix(), x.matrix()) - CMatrix::Identity(n, n)).norm() < 1e-8);
      CHECK((act(p.g.matrix(), -x.matrix()) + CMatrix::Identity(n, n)).norm() < 1e-8);

      // transported model pair (I, diag(0_k, -1)) recovers k
      for (int k = 0; k <= n; ++k) {
        CMatrix z0 = -CMatrix::Identity(n, n);
        for (int j = 0; j < k; ++j) z0(j, j) = 0.0;
        const MoebiusElement g0 = random::moebius(eng, f, n);
        const BoundaryMatrix xg = moebius_apply(g0, BoundaryMatrix(f, CMatrix::Identity(n, n)));
        const CMatrix zg = moebius_apply(g0, z0);
        const PairNormalization q = cayley_pair_normalize(f, xg, f == Flavor::Symmetric ? CMatrix(0.5 * (zg + zg.transpose())) : zg);
        CHECK(q.k == k);
        CHECK(q.g.defect() < 1e-8);
        CHECK((act(q.g.matrix(), xg.matrix()) - CMatrix::Identity(n, n)).norm() < 1e-7);
        CHECK((act(q.g.matrix(), zg) - z0).norm() < 1e-7);
      }
    }
  }
}

TEST_CASE("reduction examples") {
  const BoundaryMatrix u1(Flavor::Symmetric, CMatrix::Identity(2, 2));
  const BoundaryMatrix u2(Flavor::Symmetric, -CMatrix::Identity(2, 2));
  const BoundaryMatrix u3(Flavor::Symmetric, diag_phases({0.25, 0.75}));
  const TorusReduction red = reduce_to_torus(u1, u2, u3);
  CHECK((red.g.matrix() - CMatrix::Identity(4, 4)).norm() < 1e-8);
  CHECK(red.turns[0] == turns({0, 0}));
  CHECK(red.turns[1] == turns({4, 4}));
  CHECK(red.turns[2] == turns({2, 6}));

  random::Engine eng(36);
  for (Flavor f : kFlavors) {
    const BoundaryMatrix u = random::boundary(eng, f, 3);
    const TorusReduction same = reduce_to_torus(u, u, u);
    CHECK(same.turns[0] == same.turns[1]);
    CHECK(same.turns[1] == same.turns[2]);
    CHECK(same.turns[0] == polydisc::TorusPoint::constant(3, polydisc::Turn(0, 1)));
  }
  CHECK(code_of([&] { reduce_to_torus(u1, u2, BoundaryMatrix(Flavor::Hermitian, CMatrix::Identity(2, 2))); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("reduction of transported torus triples") {
  // includes a rank-3 triple where no pair is transversal and no direction is
  // common to all three points
  const polydisc::TorusTriple faces{turns({0, 0, 0}), turns({0, 4, 4}), turns({4, 0, 4})};
  random::Engine eng(37);
  for (Flavor f : kFlavors) {
    for (int trial = 0; trial < 60; ++trial) {
      const int r = 1 + trial % 4;
      const polydisc::TorusTriple src = trial % 10 == 3 ? faces : random::torus_triple(eng, r);
      const int rr = src[0].rank();
      const double spread = trial % 3 == 0 ? 1.2 : 0.6;
      const MoebiusElement g0 = random::moebius(eng, f, rr, spread);
      std::array<BoundaryMatrix, 3> u{moebius_apply(g0, embed_torus(f, src[0])),
                                      moebius_apply(g0, embed_torus(f, src[1])),
                                      moebius_apply(g0, embed_torus(f, src[2]))};
      const TorusReduction red = reduce_to_torus(u[0], u[1], u[2]);
      CHECK(red.g.defect() < 1e-7);
      for (int k = 0; k < 3; ++k) CHECK((act(red.g.matrix(), u[k].matrix()) - diag_of(red.turns[k])).norm() < 1e-6);
      CHECK(polydisc::torus_invariants(red.turns[0], red.turns[1], red.turns[2]) ==
            polydisc::torus_invariants(src[0], src[1], src[2]));
      // canonical up to the order of coordinates: a second transport gives
      // the same multiset of circle triples
      const MoebiusElement g1 = random::moebius(eng, f, rr);
      const TorusReduction again = reduce_to_torus(moebius_apply(g1, u[0]), moebius_apply(g1, u[1]),
                                                   moebius_apply(g1, u[2]));
      CHECK(coordinate_triples(again.turns) == coordinate_triples(red.turns));
    }
  }
}

TEST_CASE("direct invariants") {
  const BoundaryMatrix u1(Flavor::Symmetric, CMatrix::Identity(2, 2));
  const BoundaryMatrix u2(Flavor::Symmetric, -CMatrix::Identity(2, 2));
  const BoundaryMatrix u3(Flavor::Symmetric, diag_phases({0.25, 0.75}));
  CHECK(direct_invariants(u1, u2, u3) == OrbitInvariant(2, 0, 0, 0, 0, 0));
  CHECK(direct_invariants(u1, u1, u1) == OrbitInvariant(2, 2, 2, 2, 2, 0));

  for (Flavor f : kFlavors) {
    const polydisc::TorusTriple t = polydisc::standard_triple(MonotoneTuple({0, 1, 2, 3, 3}, 3));
    const OrbitInvariant inv =
        direct_invariants(embed_torus(f, t[0]), embed_torus(f, t[1]), embed_torus(f, t[2]), {}, true);
    CHECK(inv == OrbitInvariant(3, 1, 1, 1, 0, 0));
  }

  random::Engine eng(38);
  for (Flavor f : kFlavors) {
    for (int trial = 0; trial < 40; ++trial) {
      const int r = 1 + trial % 4;
      const random::SynthesizedTriple s = random::boundary_triple(eng, f, r);
      CHECK(direct_invariants(s.u[0], s.u[1], s.u[2], {}, true) ==
            polydisc::torus_invariants(s.source[0], s.source[1], s.source[2]));
    }
  }
}

TEST_CASE("embedding torus points") {
  const BoundaryMatrix e = embed_torus(Flavor::Hermitian, turns({2, 4}));
  CHECK(std::abs(e.matrix()(0, 0) - I1) == 0.0);
  CHECK(std::abs(e.matrix()(1, 1) + 1.0) == 0.0);
  CHECK(std::abs(e.matrix()(0, 1)) == 0.0);
  CHECK(code_of([] { embed_torus(Flavor::Polydisc, turns({0})); }) == ErrorCode::UnknownFlavor);
}

TEST_CASE("transversality index agrees with the Bergman operator") {
  random::Engine eng(39);
  for (Flavor f : kFlavors) {
    for (int trial = 0; trial < 40; ++trial) {
      const int r = 1 + trial % 3;
      const random::SynthesizedTriple s = random::boundary_triple(eng, f, r, 2);
      const auto model = jts::TripleModel::make(f, r);
      for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3;
        const int mu = transversality_index(s.u[a], s.u[b]);
        int equal = 0;
        for (int j = 0; j < r; ++j) equal += s.source[a].turns[j] == s.source[b].turns[j];
        CHECK(mu == equal);
        CHECK((mu == 0) == jts::is_transversal(model, s.u[a].matrix(), s.u[b].matrix(), 1e-9));
      }
    }
  }
}
