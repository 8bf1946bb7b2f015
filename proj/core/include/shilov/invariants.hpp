#pragma once

// Orbit bookkeeping for triples and pairs in the Shilov boundary: the five
// integer invariants, the monotone 5-tuple labelling standard triples,
// feasibility, enumeration, pair classes, and the non-tube Cartan ratio.

#include <array>
#include <string>
#include <vector>

#include "shilov/numeric.hpp"

namespace shilov {

// Weakly increasing n1 <= ... <= n5 in {0..r}; labels the standard triple.
class MonotoneTuple {
 public:
  MonotoneTuple(std::array<int, 5> n, int rank);

  const std::array<int, 5>& values() const { return n_; }
  int operator[](std::size_t i) const { return n_[i]; }
  int rank() const { return rank_; }

  friend bool operator==(const MonotoneTuple&, const MonotoneTuple&) = default;
  friend auto operator<=>(const MonotoneTuple& a, const MonotoneTuple& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::array<int, 5> n_;
  int rank_;
};

// Face ranks n12, n23, n31, n123 and the Maslov index of a boundary triple.
// Construction rejects tuples violating the feasibility conditions.
class OrbitInvariant {
 public:
  OrbitInvariant(int rank, int n12, int n23, int n31, int n123, int iota);

  int rank() const { return rank_; }
  int n12() const { return n12_; }
  int n23() const { return n23_; }
  int n31() const { return n31_; }
  int n123() const { return n123_; }
  int iota() const { return iota_; }

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;

  std::string str() const;

 private:
  int rank_, n12_, n23_, n31_, n123_, iota_;
};

// Feasibility of (r0, r1, r2, r3, d) = (n123, n12, n23, n31, iota):
//   0 <= r0 <= ri <= r,  r1 + r2 + r3 <= r + 2 r0,
//   |d| <= r + 2 r0 - (r1 + r2 + r3),  d = r + r1 + r2 + r3 (mod 2).
bool feasible(int r0, int r1, int r2, int r3, int d, int rank);

MonotoneTuple to_monotone_tuple(const OrbitInvariant& inv);

// Inverse of to_monotone_tuple: the invariant of the standard triple of type N.
OrbitInvariant invariant_of(const MonotoneTuple& n);

bool same_orbit(const OrbitInvariant& a, const OrbitInvariant& b);

// All monotone tuples for rank r in lexicographic order; C(r+5, 5) of them.
std::vector<MonotoneTuple> enumerate_orbits(int rank);

struct PairClass {
  int mu;
  int rank;
  bool transversal;
  // turns of the representative (e, e_mu - (e_r - e_mu)): mu coordinates 0, the rest 1/2
  std::vector<std::string> representative_turns;
  std::string label;
};

PairClass pair_class(int mu, int rank);

// h(z, w) = sum_{j<=n} z_j conj(w_j) - z_{n+1} conj(w_{n+1}) on C^{n+1}.
cplx hermitian_form(const CVector& z, const CVector& w);

// The ratio h(v1,v2) h(v2,v3) h(v3,v1) / (h(v2,v1) h(v3,v2) h(v1,v3)) on three
// h-isotropic vectors spanning pairwise distinct lines.
cplx cartan_invariant(const CVector& v1, const CVector& v2, const CVector& v3, double tol = 1e-9);

}  // namespace shilov
