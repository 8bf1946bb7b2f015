#include "shilov/selftest.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "shilov/invariants.hpp"
#include "shilov/lagrangian.hpp"
#include "shilov/matrix_models.hpp"
#include "shilov/polydisc.hpp"
#include "shilov/random.hpp"

namespace shilov::selftest {

namespace {

using polydisc::Turn;
using polydisc::TorusPoint;
using polydisc::TorusTriple;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

OrbitInvariant torus_invariant(const TorusTriple& t) { return polydisc::torus_invariants(t[0], t[1], t[2]); }

CMatrix circle_unitary(const Turn& t) {
  CMatrix u(1, 1);
  u(0, 0) = t.point();
  return u;
}

std::vector<double> angles_of(const TorusPoint& p) {
  std::vector<double> phi;
  for (const Turn& t : p.turns) {
    const double frac = boost::rational_cast<double>(t.value());
    phi.push_back(frac == 0.0 ? 0.0 : kPi * (1.0 - frac));
  }
  return phi;
}

void exhaustive_round_trip(Outcome& out, random::Engine&) {
  const int expected[] = {6, 21, 56, 126};
  int total = 0;
  for (int r = 1; r <= 4; ++r) {
    const auto tuples = enumerate_orbits(r);
    out.check(static_cast<int>(tuples.size()) == expected[r - 1], "orbit count for r=" + std::to_string(r));
    for (const MonotoneTuple& n : tuples) {
      const TorusTriple t = polydisc::standard_triple(n);
      out.check(to_monotone_tuple(torus_invariant(t)) == n, "round trip for r=" + std::to_string(r));
      ++total;
    }
  }
  out.detail << total << " tuples, r=1..4";
}

void maslov_normalization(Outcome& out, random::Engine&) {
  const int expected[] = {0, 0, 0, 0, 1, -1};
  const auto reps = polydisc::circle_orbit_representatives();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int got = polydisc::circle_maslov(reps[i][0], reps[i][1], reps[i][2]);
    out.check(got == expected[i], "representative " + std::to_string(i) + " gave " + std::to_string(got));
  }
  out.detail << "6 circle representatives";
}

void bridge_identity(Outcome& out, random::Engine& rng) {
  // Per-coordinate table over the 8th roots of unity.
  std::vector<lagrangian::LagrangianSubspace> lines;
  for (int k = 0; k < 8; ++k) lines.push_back(lagrangian::unitary_to_lagrangian(circle_unitary(Turn(k, 8))));
  int table[8][8][8];
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        table[a][b][c] = lagrangian::kashiwara_index(lines[a], lines[b], lines[c]);
        const int expected = polydisc::circle_maslov(Turn(a, 8), Turn(b, 8), Turn(c, 8));
        out.check(table[a][b][c] == expected, "table entry (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                  std::to_string(c) + ")");
      }
  // Additivity on diagonal embeddings for r = 2, 3.
  std::uniform_int_distribution<int> root(0, 7);
  int sampled = 0;
  for (int r = 2; r <= 3; ++r) {
    for (int trial = 0; trial < 2000; ++trial) {
      std::array<std::vector<int>, 3> k;
      TorusTriple t;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < r; ++j) {
          k[i].push_back(root(rng));
          t[i].turns.emplace_back(k[i].back(), 8);
        }
      }
      int sum = 0;
      for (int j = 0; j < r; ++j) sum += table[k[0][j]][k[1][j]][k[2][j]];
      const int signature = lagrangian::kashiwara_index(
          lagrangian::unitary_to_lagrangian(models::embed_torus(Flavor::Symmetric, t[0]).matrix()),
          lagrangian::unitary_to_lagrangian(models::embed_torus(Flavor::Symmetric, t[1]).matrix()),
          lagrangian::unitary_to_lagrangian(models::embed_torus(Flavor::Symmetric, t[2]).matrix()));
      out.check(signature == sum, "additivity at r=" + std::to_string(r));
      out.check(signature == torus_invariant(t).iota(), "torus iota at r=" + std::to_string(r));
      ++sampled;
    }
  }
  out.detail << "512 table entries, " << sampled << " additivity samples";
}

void g_invariance(Outcome& out, random::Engine& rng) {
  int checks = 0;
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Hermitian}) {
    for (int r = 1; r <= 4; ++r) {
      std::vector<random::SynthesizedTriple> triples;
      std::vector<OrbitInvariant> base;
      for (int i = 0; i < 50; ++i) {
        triples.push_back(random::boundary_triple(rng, flavor, r));
        const auto& u = triples.back().u;
        base.push_back(models::direct_invariants(u[0], u[1], u[2], {}, flavor == Flavor::Symmetric));
        out.check(base.back() == torus_invariant(triples.back().source), "synthesized triple invariants");
      }
      for (int i = 0; i < 200; ++i) {
        const models::MoebiusElement g = random::moebius(rng, flavor, r);
        const auto& u = triples[i % 50].u;
        const OrbitInvariant moved = models::direct_invariants(
            models::moebius_apply(g, u[0]), models::moebius_apply(g, u[1]), models::moebius_apply(g, u[2]));
        out.check(moved == base[i % 50], std::string(to_string(flavor)) + " r=" + std::to_string(r) + ": " +
                                             moved.str() + " vs " + base[i % 50].str());
        ++checks;
      }
    }
  }
  out.detail << checks << " transformed triples";
}

void reduction_witness(Outcome& out, random::Engine& rng) {
  double worst = 0.0;
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Hermitian}) {
    for (int i = 0; i < 100; ++i) {
      const int r = 1 + i % 4;
      const random::SynthesizedTriple s = random::boundary_triple(rng, flavor, r);
      const models::TorusReduction red = models::reduce_to_torus(s.u[0], s.u[1], s.u[2]);
      const models::MoebiusElement back = red.g.inverse();
      for (int k = 0; k < 3; ++k) {
        const CMatrix rebuilt = models::moebius_apply(back, models::embed_torus(flavor, red.turns[k]).matrix());
        worst = std::max(worst, (rebuilt - s.u[k].matrix()).norm());
      }
      out.check(torus_invariant(red.turns) == torus_invariant(s.source), "reduced invariants differ from source");
    }
  }
  out.check(worst <= 1e-6, "witness residual " + std::to_string(worst));
  out.detail << "200 triples, max residual " << worst;
}

void pair_classes(Outcome& out, random::Engine& rng) {
  for (Flavor flavor : {Flavor::Symmetric, Flavor::Hermitian}) {
    for (int r = 1; r <= 6; ++r) {
      const auto id = models::embed_torus(flavor, TorusPoint::constant(r, Turn(0, 1)));
      for (int k = 0; k <= r; ++k) {
        TorusPoint eps = TorusPoint::constant(r, Turn(1, 2));
        for (int j = 0; j < k; ++j) eps.turns[j] = Turn(0, 1);
        out.check(models::transversality_index(id, models::embed_torus(flavor, eps)) == k, "mu(I, eps_k)");
      }
    }
  }
  std::array<std::set<int>, 7> seen;
  for (int i = 0; i < 500; ++i) {
    const Flavor flavor = i % 2 ? Flavor::Hermitian : Flavor::Symmetric;
    const int r = 1 + (i / 2) % 6;
    const int k = (i / 12) % (r + 1);
    TorusPoint eps = TorusPoint::constant(r, Turn(1, 2));
    for (int j = 0; j < k; ++j) eps.turns[j] = Turn(0, 1);
    const models::MoebiusElement g = random::moebius(rng, flavor, r);
    const int mu = models::transversality_index(
        models::moebius_apply(g, models::embed_torus(flavor, TorusPoint::constant(r, Turn(0, 1)))),
        models::moebius_apply(g, models::embed_torus(flavor, eps)));
    out.check(mu == k, "random pair of class " + std::to_string(k) + " gave " + std::to_string(mu));
    seen[r].insert(mu);
  }
  for (int r = 1; r <= 6; ++r) {
    out.check(static_cast<int>(seen[r].size()) == r + 1, "class count for r=" + std::to_string(r));
  }
  out.detail << "r=1..6, 500 random pairs";
}

void cocycle(Outcome& out, random::Engine& rng) {
  std::vector<Turn> points;
  std::uniform_int_distribution<int> num(0, 63);
  while (points.size() < 8) {
    const Turn t(num(rng), 64);
    if (std::find(points.begin(), points.end(), t) == points.end()) points.push_back(t);
  }
  auto iota = [&](int a, int b, int c) { return polydisc::circle_maslov(points[a], points[b], points[c]); };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        out.check(iota(a, b, c) == -iota(b, a, c) && iota(a, b, c) == -iota(a, c, b), "circle alternation");
        for (int d = 0; d < 8; ++d) {
          out.check(iota(b, c, d) - iota(a, c, d) + iota(a, b, d) - iota(a, b, c) == 0, "circle cocycle");
        }
      }

  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 4;
    std::vector<lagrangian::LagrangianSubspace> l;
    for (int i = 0; i < 4; ++i) {
      l.push_back(lagrangian::unitary_to_lagrangian(random::boundary(rng, Flavor::Symmetric, r).matrix()));
    }
    auto k = [&](int a, int b, int c) { return lagrangian::kashiwara_index(l[a], l[b], l[c]); };
    out.check(k(0, 1, 2) == -k(1, 0, 2) && k(0, 1, 2) == -k(0, 2, 1), "Kashiwara alternation");
    out.check(k(1, 2, 3) - k(0, 2, 3) + k(0, 1, 3) - k(0, 1, 2) == 0, "Kashiwara cocycle");
  }
  out.detail << "4096 circle quadruples, 100 Lagrangian quadruples";
}

void normal_form(Outcome& out, random::Engine& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 4;
    const TorusTriple source = random::torus_triple(rng, r);
    const RMatrix s = random::symplectic(rng, r);
    std::array<lagrangian::LagrangianSubspace, 3> l{
        lagrangian::LagrangianSubspace::from_angles(angles_of(source[0])).transformed(s),
        lagrangian::LagrangianSubspace::from_angles(angles_of(source[1])).transformed(s),
        lagrangian::LagrangianSubspace::from_angles(angles_of(source[2])).transformed(s)};
    const lagrangian::NormalForm nf = lagrangian::joint_normal_form(l[0], l[1], l[2]);
    const RMatrix j = lagrangian::standard_form(r);
    worst = std::max(worst, (nf.g.transpose() * j * nf.g - j).norm());
    out.check(lagrangian::angle_invariants(nf.angles) == torus_invariant(source), "normal form invariants");
    const RMatrix g_inv = -j * nf.g.transpose() * j;
    for (int k = 0; k < 3; ++k) {
      const auto pulled = l[k].transformed(g_inv);
      const auto target = lagrangian::LagrangianSubspace::from_angles(nf.angles[k]);
      out.check(lagrangian::intersection_dim(pulled, target, 1e-6) == r, "g^{-1} l is not in normal position");
    }
  }
  out.check(worst <= 1e-8, "symplectic defect " + std::to_string(worst));
  out.detail << "100 triples, max symplectic defect " << worst;
}

void cartan(Outcome& out, random::Engine& rng) {
  CVector v1(2), v2(2), v3(2);
  v1 << 1.0, 1.0;
  v2 << 1.0, -1.0;
  v3 << cplx(1.0), cplx(0, 1);
  out.check(std::abs(cartan_invariant(v1, v2, v3) - cplx(-1.0)) <= 1e-10, "fixed point F = -1");

  const int n = 2;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CVector a = random::isotropic_vector(rng, n);
    const CVector b = random::isotropic_vector(rng, n);
    const CVector c = random::isotropic_vector(rng, n);
    const CMatrix g = random::pseudo_unitary(rng, n);
    worst = std::max(worst, std::abs(cartan_invariant(a, b, c) - cartan_invariant(g * a, g * b, g * c)));
  }
  out.check(worst <= 1e-8, "pseudo-unitary drift " + std::to_string(worst));

  std::vector<cplx> distinct;
  for (int trial = 0; trial < 60; ++trial) {
    const CVector a = random::isotropic_vector(rng, n);
    const CVector b = random::isotropic_vector(rng, n);
    const CVector c = random::isotropic_vector(rng, n);
    const cplx f = cartan_invariant(a, b, c);
    out.check(std::abs(std::abs(f) - 1.0) <= 1e-10, "|F| != 1");
    bool fresh = true;
    for (cplx d : distinct) fresh = fresh && std::abs(d - f) >= 1e-3;
    if (fresh) distinct.push_back(f);
  }
  out.check(distinct.size() >= 10, "only " + std::to_string(distinct.size()) + " distinct values");
  out.detail << distinct.size() << " distinct values, max drift " << worst;
}

using SuiteFn = std::function<void(Outcome&, random::Engine&)>;

const std::vector<SuiteFn>& suites() {
  static const std::vector<SuiteFn> fns{exhaustive_round_trip, maslov_normalization, bridge_identity,
                                        g_invariance,          reduction_witness,    pair_classes,
                                        cocycle,               normal_form,          cartan};
  return fns;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "classification round trip", "maslov normalization", "bridge identity",
      "G-invariance",              "reduction witness",    "pair orbit count",
      "maslov cocycle",            "lagrangian normal form", "non-tube cartan invariant"};
  return names;
}

SuiteResult run_suite(int id, std::uint64_t seed) {
  if (id < 1 || id > kSuiteCount) fail(ErrorCode::OutOfRange, "no suite " + std::to_string(id));
  SuiteResult result;
  result.id = id;
  result.name = suite_names()[id - 1];
  random::Engine rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(id)));
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    suites()[id - 1](out, rng);
  } catch (const Error& e) {
    out.passed = false;
    out.detail.str("");
    out.detail << e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = out.passed;
  result.detail = out.detail.str();
  return result;
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (int id = 1; id <= kSuiteCount; ++id) results.push_back(run_suite(id, seed));
  return results;
}

}  // namespace shilov::selftest
