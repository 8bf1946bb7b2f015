#include "shilov/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace shilov {

MonotoneTuple::MonotoneTuple(std::array<int, 5> n, int rank) : n_(n), rank_(rank) {
  if (rank < 1) fail(ErrorCode::OutOfRange, "rank must be positive");
  if (n[0] < 0 || n[4] > rank) fail(ErrorCode::NotMonotone, "tuple entries must lie in {0..r}");
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (n[i] > n[i + 1]) fail(ErrorCode::NotMonotone, "tuple must be weakly increasing");
  }
}

bool feasible(int r0, int r1, int r2, int r3, int d, int rank) {
  if (rank < 1) return false;
  // 0 <= r0 <= ri <= r
  if (r0 < 0) return false;
  for (int ri : {r1, r2, r3}) {
    if (ri < r0 || ri > rank) return false;
  }
  const int sum = r1 + r2 + r3;
  if (sum > rank + 2 * r0) return false;
  if (std::abs(d) > rank + 2 * r0 - sum) return false;
  // parity
  return ((d - rank - sum) % 2) == 0;
}

OrbitInvariant::OrbitInvariant(int rank, int n12, int n23, int n31, int n123, int iota)
    : rank_(rank), n12_(n12), n23_(n23), n31_(n31), n123_(n123), iota_(iota) {
  if (!feasible(n123, n12, n23, n31, iota, rank)) {
    fail(ErrorCode::Infeasible, "invariant " + str() + " violates the feasibility conditions");
  }
}

std::string OrbitInvariant::str() const {
  std::ostringstream os;
  os << "r=" << rank_ << " (n12,n23,n31,n123,iota)=(" << n12_ << "," << n23_ << "," << n31_ << "," << n123_ << ","
     << iota_ << ")";
  return os.str();
}

MonotoneTuple to_monotone_tuple(const OrbitInvariant& inv) {
  const int n1 = inv.n123();
  const int n2 = inv.n12();
  const int n3 = inv.n23() + inv.n12() - inv.n123();
  const int n4 = inv.n31() + inv.n23() + inv.n12() - 2 * inv.n123();
  const int twice_n5 = inv.iota() + inv.rank() + n4;
  if (twice_n5 % 2 != 0) fail(ErrorCode::Infeasible, "n5 is not integral for " + inv.str());
  return MonotoneTuple({n1, n2, n3, n4, twice_n5 / 2}, inv.rank());
}

OrbitInvariant invariant_of(const MonotoneTuple& n) {
  const int r = n.rank();
  return OrbitInvariant(r, n[1], n[0] + n[2] - n[1], n[0] + n[3] - n[2], n[0], 2 * n[4] - n[3] - r);
}

bool same_orbit(const OrbitInvariant& a, const OrbitInvariant& b) {
  if (a.rank() != b.rank()) fail(ErrorCode::RankMismatch, "cannot compare invariants of different ranks");
  return a == b;
}

std::vector<MonotoneTuple> enumerate_orbits(int rank) {
  if (rank < 1) fail(ErrorCode::OutOfRange, "rank must be positive");
  std::vector<MonotoneTuple> out;
  for (int a = 0; a <= rank; ++a)
    for (int b = a; b <= rank; ++b)
      for (int c = b; c <= rank; ++c)
        for (int d = c; d <= rank; ++d)
          for (int e = d; e <= rank; ++e) out.emplace_back(std::array<int, 5>{a, b, c, d, e}, rank);
  return out;
}

PairClass pair_class(int mu, int rank) {
  if (rank < 1 || mu < 0 || mu > rank) {
    fail(ErrorCode::OutOfRange, "transversality index " + std::to_string(mu) + " outside 0.." + std::to_string(rank));
  }
  PairClass pc{mu, rank, mu == 0, {}, {}};
  for (int j = 0; j < rank; ++j) pc.representative_turns.push_back(j < mu ? "0/1" : "1/2");
  if (mu == 0) {
    pc.label = "transversal (e, -e)";
  } else if (mu == rank) {
    pc.label = "diagonal (e, e)";
  } else {
    pc.label = "(e, e_" + std::to_string(mu) + " - (e - e_" + std::to_string(mu) + "))";
  }
  return pc;
}

cplx hermitian_form(const CVector& z, const CVector& w) {
  if (z.size() != w.size() || z.size() < 2) fail(ErrorCode::DimensionMismatch, "h needs two vectors in C^{n+1}");
  const auto n = z.size() - 1;
  return (w.head(n).adjoint() * z.head(n))(0, 0) - z(n) * std::conj(w(n));
}

cplx cartan_invariant(const CVector& v1, const CVector& v2, const CVector& v3, double tol) {
  if (v1.size() != v2.size() || v2.size() != v3.size()) fail(ErrorCode::DimensionMismatch, "vectors differ in length");
  for (const CVector* v : {&v1, &v2, &v3}) {
    if (v->norm() == 0.0 || std::abs(hermitian_form(*v, *v)) > tol * v->squaredNorm()) {
      fail(ErrorCode::NotIsotropic, "vector is not h-isotropic");
    }
  }
  const cplx h12 = hermitian_form(v1, v2);
  const cplx h23 = hermitian_form(v2, v3);
  const cplx h31 = hermitian_form(v3, v1);
  auto degenerate = [tol](cplx h, const CVector& a, const CVector& b) { return std::abs(h) <= tol * a.norm() * b.norm(); };
  if (degenerate(h12, v1, v2) || degenerate(h23, v2, v3) || degenerate(h31, v3, v1)) {
    fail(ErrorCode::DegeneratePair, "two of the isotropic lines coincide");
  }
  return (h12 * h23 * h31) / (std::conj(h12) * std::conj(h23) * std::conj(h31));
}

}  // namespace shilov
