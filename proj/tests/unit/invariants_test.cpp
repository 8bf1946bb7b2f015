#include "support.hpp"

#include <set>

#include "shilov/invariants.hpp"
#include "shilov/polydisc.hpp"

using namespace shilov;
using namespace test;

namespace {

using Key = std::array<int, 5>;  // (n123, n12, n23, n31, iota)

// All invariants reached by torus triples of rank r, built by summing the
// contributions of single circle coordinates with turns in {0, 1/4, 1/2, 3/4}.
std::set<Key> reachable(int r) {
  std::set<Key> single;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        int iota = 0;
        if (a != b && b != c && a != c) {
          const double area = std::sin(kPi / 2 * (b - a)) + std::sin(kPi / 2 * (c - b)) + std::sin(kPi / 2 * (a - c));
          iota = area > 0 ? 1 : -1;
        }
        single.insert({a == b && b == c, a == b, b == c, c == a, iota});
      }
  std::set<Key> acc{{0, 0, 0, 0, 0}};
  for (int j = 0; j < r; ++j) {
    std::set<Key> next;
    for (const Key& x : acc)
      for (const Key& y : single) next.insert({x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], x[4] + y[4]});
    acc = std::move(next);
  }
  return acc;
}

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("feasibility examples") {
  CHECK(feasible(0, 0, 0, 0, 1, 1));
  CHECK(feasible(1, 1, 1, 1, 0, 1));
  CHECK(!feasible(0, 0, 0, 0, 0, 1));
  CHECK(!feasible(0, 1, 1, 0, 0, 1));
  CHECK(!feasible(0, 0, 0, 0, 3, 2));
  CHECK(feasible(0, 0, 0, 0, 2, 2));
  CHECK(!feasible(0, 0, 0, 0, 0, 0));
  CHECK(code_of([] { OrbitInvariant(1, 0, 0, 0, 0, 0); }) == ErrorCode::Infeasible);
}

TEST_CASE("feasible set equals the set of torus invariants") {
  for (int r = 1; r <= 4; ++r) {
    const std::set<Key> reach = reachable(r);
    std::set<Key> feas;
    for (int r0 = 0; r0 <= r; ++r0)
      for (int r1 = 0; r1 <= r; ++r1)
        for (int r2 = 0; r2 <= r; ++r2)
          for (int r3 = 0; r3 <= r; ++r3)
            for (int d = -r; d <= r; ++d)
              if (feasible(r0, r1, r2, r3, d, r)) feas.insert({r0, r1, r2, r3, d});
    CHECK(feas == reach);
    CHECK(static_cast<long>(feas.size()) == binomial(r + 5, 5));
  }
}

TEST_CASE("monotone tuple conversion") {
  CHECK(to_monotone_tuple(OrbitInvariant(1, 0, 0, 0, 0, 1)) == MonotoneTuple({0, 0, 0, 0, 1}, 1));
  CHECK(to_monotone_tuple(OrbitInvariant(1, 0, 0, 0, 0, -1)) == MonotoneTuple({0, 0, 0, 0, 0}, 1));
  CHECK(to_monotone_tuple(OrbitInvariant(3, 1, 1, 1, 0, 0)) == MonotoneTuple({0, 1, 2, 3, 3}, 3));
  CHECK(code_of([] { to_monotone_tuple(OrbitInvariant(3, 1, 1, 0, 0, 0)); }) == ErrorCode::Infeasible);
  CHECK(code_of([] { MonotoneTuple({0, 1, 0, 1, 1}, 2); }) == ErrorCode::NotMonotone);
  CHECK(code_of([] { MonotoneTuple({0, 0, 0, 0, 3}, 2); }) == ErrorCode::NotMonotone);
  CHECK(code_of([] { MonotoneTuple({-1, 0, 0, 0, 0}, 2); }) == ErrorCode::NotMonotone);
  CHECK(code_of([] { MonotoneTuple({0, 0, 0, 0, 0}, 0); }) == ErrorCode::OutOfRange);
  for (int r = 1; r <= 5; ++r)
    for (const MonotoneTuple& n : enumerate_orbits(r)) CHECK(to_monotone_tuple(invariant_of(n)) == n);
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_orbits(1).size() == 6);
  CHECK(enumerate_orbits(2).size() == 21);
  CHECK(enumerate_orbits(3).size() == 56);
  for (int r = 1; r <= 6; ++r) {
    const auto all = enumerate_orbits(r);
    CHECK(static_cast<long>(all.size()) == binomial(r + 5, 5));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].values() < all[i].values());
  }
  CHECK(code_of([] { enumerate_orbits(0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("same orbit") {
  const OrbitInvariant a(2, 1, 0, 0, 0, 1);
  CHECK(same_orbit(a, OrbitInvariant(2, 1, 0, 0, 0, 1)));
  CHECK(!same_orbit(a, OrbitInvariant(2, 1, 0, 0, 0, -1)));
  CHECK(code_of([&] { same_orbit(a, OrbitInvariant(1, 0, 0, 0, 0, 1)); }) == ErrorCode::RankMismatch);
}

TEST_CASE("pair classes") {
  const PairClass t = pair_class(0, 3);
  CHECK(t.transversal);
  CHECK(t.representative_turns == std::vector<std::string>{"1/2", "1/2", "1/2"});
  const PairClass d = pair_class(3, 3);
  CHECK(!d.transversal);
  CHECK(d.representative_turns == std::vector<std::string>{"0/1", "0/1", "0/1"});
  CHECK(pair_class(1, 3).representative_turns == std::vector<std::string>{"0/1", "1/2", "1/2"});
  CHECK(code_of([] { pair_class(4, 3); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { pair_class(-1, 3); }) == ErrorCode::OutOfRange);
}

TEST_CASE("Cartan invariant") {
  const auto iso = [](cplx z) {
    CVector v(2);
    v << z, 1.0;
    return v;
  };
  // boundary points 1, -1, -i of the unit disc
  CHECK(std::abs(cartan_invariant(iso(1.0), iso(-1.0), iso(-I1)) + 1.0) < 1e-12);
  CHECK(std::abs(cartan_invariant(iso(1.0), iso(-1.0), iso(I1)) + 1.0) < 1e-12);

  // for n = 1 the value is -1 on every triple of distinct points
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = angle(rng), b = angle(rng), c = angle(rng);
    const cplx f = cartan_invariant(iso(std::polar(1.0, a)) * cplx(2.0, 1.0), iso(std::polar(1.0, b)),
                                    iso(std::polar(1.0, c)) * cplx(0.0, -3.0));
    CHECK(std::abs(f + 1.0) < 1e-9);
  }

  // |F| = 1 and invariance under rescaling in C^{2+1}
  for (int trial = 0; trial < 50; ++trial) {
    std::array<CVector, 3> v;
    for (auto& x : v) {
      CVector w = gaussian(rng, 3, 1);
      w(2) = w.head(2).norm();
      x = w;
    }
    const cplx f = cartan_invariant(v[0], v[1], v[2]);
    CHECK(std::abs(std::abs(f) - 1.0) < 1e-10);
    const cplx g = cartan_invariant(v[0] * cplx(0.5, 2.0), v[1], v[2] * -7.0);
    CHECK(std::abs(f - g) < 1e-10);
    const cplx h = cartan_invariant(v[1], v[0], v[2]);
    CHECK(std::abs(h - std::conj(f)) < 1e-10);
  }

  CVector bad(2);
  bad << 2.0, 1.0;
  CHECK(code_of([&] { cartan_invariant(bad, iso(1.0), iso(-1.0)); }) == ErrorCode::NotIsotropic);
  CHECK(code_of([&] { cartan_invariant(iso(1.0), iso(1.0) * 2.0, iso(-1.0)); }) == ErrorCode::DegeneratePair);
  CHECK(code_of([&] { cartan_invariant(iso(1.0), iso(-1.0), CVector::Zero(3)); }) == ErrorCode::DimensionMismatch);
}
