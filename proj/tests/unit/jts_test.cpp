#include "support.hpp"

#include "shilov/jts.hpp"

using namespace shilov;
using namespace shilov::jts;
using namespace test;

namespace {

CMatrix random_element(const TripleModel& m, std::mt19937_64& rng) {
  CMatrix x = gaussian(rng, m.rows(), m.cols());
  if (m.flavor() == Flavor::Symmetric) x = 0.5 * (x + x.transpose()).eval();
  return x;
}

// Closed forms: B(x,y)z = (1 - x y*) z (1 - y* x) on Mat_n(C), and its
// restriction to Sym_n(C).
CMatrix bergman_oracle(const CMatrix& x, const CMatrix& y, const CMatrix& z) {
  const auto n = x.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  return (id - x * y.adjoint()) * z * (id - y.adjoint() * x);
}

std::vector<TripleModel> models() {
  return {TripleModel::polydisc(3), TripleModel::symmetric(1), TripleModel::symmetric(3),
          TripleModel::hermitian(1), TripleModel::hermitian(3)};
}

}  // namespace

TEST_CASE("coordinates round trip and ambient dimensions") {
  std::mt19937_64 rng(1);
  CHECK(TripleModel::polydisc(4).ambient_dim() == 4);
  CHECK(TripleModel::symmetric(3).ambient_dim() == 6);
  CHECK(TripleModel::hermitian(3).ambient_dim() == 9);
  for (const auto& m : models()) {
    const CMatrix x = random_element(m, rng);
    CHECK((m.element(m.coordinates(x)) - x).norm() < 1e-12);
    // Hermitian inner product of coordinates is the trace form
    const CMatrix y = random_element(m, rng);
    const cplx trace = (x.array() * y.array().conjugate()).sum();
    CHECK(std::abs(m.coordinates(x).dot(m.coordinates(y)) - std::conj(trace)) < 1e-10);
  }
}

TEST_CASE("model validation") {
  CHECK(code_of([] { TripleModel::symmetric(0); }) == ErrorCode::DimensionMismatch);
  const auto sym = TripleModel::symmetric(2);
  CMatrix x(2, 2);
  x << 1, 2, 3, 4;
  CHECK(code_of([&] { sym.check(x); }) == ErrorCode::NonSymmetricInput);
  CHECK(code_of([&] { sym.check(CMatrix::Zero(3, 3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("box operator examples") {
  const auto pd = TripleModel::polydisc(2);
  CMatrix e(2, 1);
  e << 1, 0;
  const RealifiedOperator b = box(pd, e, e);
  CVector z(2);
  z << cplx(2, 3), cplx(-1, 5);
  const CVector img = b.apply(z);
  CHECK(std::abs(img(0) - z(0)) < 1e-14);
  CHECK(std::abs(img(1)) < 1e-14);

  const auto h1 = TripleModel::hermitian(1);
  const CMatrix one = CMatrix::Identity(1, 1);
  CHECK((box(h1, one, one).matrix() - RMatrix::Identity(2, 2)).norm() < 1e-14);

  std::mt19937_64 rng(2);
  for (const auto& m : models()) {
    const CMatrix x = random_element(m, rng);
    CHECK(box(m, x, m.zero()).matrix().norm() == 0.0);
    CHECK(box(m, x, x).linearity_defect() < 1e-10);
  }
}

TEST_CASE("quadratic operator examples") {
  std::mt19937_64 rng(3);
  const auto sym = TripleModel::symmetric(3);
  const RealifiedOperator q = quadratic(sym, sym.unit());
  const CMatrix y = random_element(sym, rng);
  CHECK((sym.element(q.apply(sym.coordinates(y))) - y.conjugate()).norm() < 1e-12);

  const auto pd = TripleModel::polydisc(1);
  CMatrix i(1, 1);
  i(0, 0) = I1;
  const RealifiedOperator qi = quadratic(pd, i);
  CVector w(1);
  w(0) = cplx(0.3, -0.7);
  CHECK(std::abs(qi.apply(w)(0) + std::conj(w(0))) < 1e-14);

  for (const auto& m : models()) {
    const RealifiedOperator qx = quadratic(m, random_element(m, rng));
    CHECK(qx.linearity() == Linearity::Antilinear);
    CHECK(qx.linearity_defect() < 1e-10);
  }
}

TEST_CASE("Bergman operator against the closed form") {
  const auto h1 = TripleModel::hermitian(1);
  const CMatrix one = CMatrix::Identity(1, 1);
  CHECK((bergman(h1, one, -one).matrix() - 4.0 * RMatrix::Identity(2, 2)).norm() < 1e-12);

  std::mt19937_64 rng(4);
  for (const auto& m : models()) {
    const CMatrix x = random_element(m, rng);
    CHECK((bergman(m, x, m.zero()).matrix() - RMatrix::Identity(2 * m.ambient_dim(), 2 * m.ambient_dim())).norm() <
          1e-14);
    if (m.flavor() == Flavor::Polydisc) continue;
    const CMatrix y = random_element(m, rng);
    const CMatrix z = random_element(m, rng);
    const CVector got = bergman(m, x, y).apply(m.coordinates(z));
    CHECK((m.element(got) - bergman_oracle(x, y, z)).norm() < 1e-9 * (1.0 + x.norm() * y.norm()) *
                                                                   (1.0 + x.norm() * y.norm()) * (1.0 + z.norm()));
  }
}

TEST_CASE("Bergman operator scales Peirce spaces by lambda^j") {
  const auto h = TripleModel::hermitian(2);
  CMatrix e = CMatrix::Zero(2, 2);
  e(0, 0) = 1.0;
  const double lambda = 4.0;
  const RealifiedOperator b = bergman(h, e, (1.0 - lambda) * e);
  const PeirceDecomposition p = peirce(h, e, 1e-9);
  for (int j = 0; j < 3; ++j) {
    const RMatrix& pj = p.projections[j].matrix();
    CHECK((b.matrix() * pj - std::pow(lambda, j) * pj).norm() < 1e-9);
  }
}

TEST_CASE("tripotents and Peirce decomposition") {
  const auto h = TripleModel::hermitian(2);
  CMatrix e = CMatrix::Zero(2, 2);
  e(0, 0) = 1.0;
  CHECK(is_tripotent(h, e, 1e-12));
  CHECK(is_tripotent(h, h.unit(), 1e-12));
  CHECK(!is_tripotent(h, 0.5 * h.unit(), 1e-12));
  CHECK(code_of([&] { peirce(h, 0.5 * h.unit(), 1e-9); }) == ErrorCode::NotTripotent);

  const PeirceDecomposition p = peirce(h, e, 1e-9);
  CHECK(p.dims == std::array<int, 3>{1, 2, 1});

  const auto s = TripleModel::symmetric(3);
  CHECK(peirce(s, s.unit(), 1e-9).dims == std::array<int, 3>{0, 0, 6});
  CHECK(peirce(s, s.zero(), 1e-9).dims == std::array<int, 3>{6, 0, 0});
  const auto pd = TripleModel::polydisc(3);
  CMatrix t(3, 1);
  t << I1, 0, -1;
  CHECK(peirce(pd, t, 1e-9).dims == std::array<int, 3>{1, 0, 2});

  // projections are complementary idempotents, and 2 e box e acts by j
  const RMatrix twice_box = 2.0 * box(h, e, e).matrix();
  RMatrix sum = RMatrix::Zero(8, 8);
  for (int j = 0; j < 3; ++j) {
    const RMatrix& pj = p.projections[j].matrix();
    CHECK((pj * pj - pj).norm() < 1e-12);
    CHECK((twice_box * pj - j * pj).norm() < 1e-12);
    sum += pj;
  }
  CHECK((sum - RMatrix::Identity(8, 8)).norm() < 1e-12);

  // unitary conjugates of a rank-one tripotent in Sym_3
  std::mt19937_64 rng(5);
  const CMatrix u = unitary(rng, 3);
  CMatrix e1 = CMatrix::Zero(3, 3);
  e1(0, 0) = 1.0;
  const CMatrix f = u * e1 * u.transpose();
  CHECK(is_tripotent(s, f, 1e-10));
  CHECK(peirce(s, f, 1e-8).dims == std::array<int, 3>{3, 2, 1});
}

TEST_CASE("transversality examples") {
  const auto h = TripleModel::hermitian(2);
  CHECK(is_transversal(h, h.unit(), -h.unit(), 1e-9));
  CHECK(!is_transversal(h, h.unit(), h.unit(), 1e-9));
  CMatrix d = CMatrix::Identity(2, 2);
  d(1, 1) = -1.0;
  CHECK(!is_transversal(h, h.unit(), d, 1e-9));
  CHECK(is_transversal(h, h.zero(), h.unit(), 1e-9));

  // on the boundary transversality means 1 - v* u is invertible
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = unitary(rng, 2);
    const CMatrix v = unitary(rng, 2);
    const double smin = Eigen::JacobiSVD<CMatrix>(CMatrix::Identity(2, 2) - v.adjoint() * u).singularValues()(1);
    if (smin < 1e-3) continue;
    CHECK(is_transversal(h, u, v, 1e-9));
    CHECK(is_transversal(h, v, u, 1e-9));
    // B(u, u) vanishes up to roundoff
    CHECK(!is_transversal(h, u, u, 1e-9));
  }
}

TEST_CASE("Jordan triple identities") {
  std::mt19937_64 rng(7);
  for (const auto& m : models()) {
    for (int trial = 0; trial < 5; ++trial) {
      const CMatrix x = random_element(m, rng), y = random_element(m, rng), z = random_element(m, rng);
      const CMatrix a = random_element(m, rng), b = random_element(m, rng);
      // JT1: {x,y,z} = {z,y,x}
      CHECK((m.triple(x, y, z) - m.triple(z, y, x)).norm() < 1e-10);
      // JT2: {a,b,{x,y,z}} = {{a,b,x},y,z} - {x,{b,a,y},z} + {x,y,{a,b,z}}
      const CMatrix lhs = m.triple(a, b, m.triple(x, y, z));
      const CMatrix rhs = m.triple(m.triple(a, b, x), y, z) - m.triple(x, m.triple(b, a, y), z) +
                          m.triple(x, y, m.triple(a, b, z));
      CHECK((lhs - rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
      // linear in x and z, conjugate linear in y
      const cplx c(0.3, -1.7);
      CHECK((m.triple(c * x, y, z) - c * m.triple(x, y, z)).norm() < 1e-10 * (1.0 + lhs.norm()));
      CHECK((m.triple(x, c * y, z) - std::conj(c) * m.triple(x, y, z)).norm() < 1e-10 * (1.0 + lhs.norm()));
    }
  }
}

TEST_CASE("realified operator algebra") {
  CHECK(code_of([] { RealifiedOperator(RMatrix::Zero(3, 3), Linearity::Linear); }) == ErrorCode::DimensionMismatch);
  const auto lin = RealifiedOperator::identity(2);
  const auto anti = RealifiedOperator::zero(2, Linearity::Antilinear);
  CHECK((lin * anti).linearity() == Linearity::Antilinear);
  CHECK((anti * anti).linearity() == Linearity::Linear);
  CHECK(code_of([&] { lin + anti; }) == ErrorCode::DimensionMismatch);
  CVector c(2);
  c << cplx(1, 2), cplx(3, -4);
  CHECK((complexify(realify(c)) - c).norm() == 0.0);
}
