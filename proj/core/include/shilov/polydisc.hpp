#pragma once

// Exact model of the r-torus: points are rational fractions of a full turn, so
// coincidence tests and circle orientations are decided without rounding.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "shilov/invariants.hpp"

namespace shilov::polydisc {

// A point exp(2 pi i t) of the unit circle with t rational in [0, 1).
class Turn {
 public:
  using Rational = boost::rational<std::int64_t>;

  Turn() = default;
  explicit Turn(Rational t);
  Turn(std::int64_t num, std::int64_t den) : Turn(Rational(num, den)) {}

  // "3/4", "0", "1/2"; values outside [0,1) are reduced modulo 1.
  static Turn parse(std::string_view text);

  // Closest rational with denominator <= max_den (best approximation by
  // continued fractions). Throws NoConvergence when it is farther than tol.
  static Turn nearest(double turns, double tol, std::int64_t max_den = 1'000'000);

  const Rational& value() const { return t_; }
  std::string str() const;
  double radians() const;
  cplx point() const;

  friend bool operator==(const Turn& a, const Turn& b) { return a.t_ == b.t_; }
  friend bool operator<(const Turn& a, const Turn& b) { return a.t_ < b.t_; }

 private:
  Rational t_{0};
};

struct TorusPoint {
  std::vector<Turn> turns;

  int rank() const { return static_cast<int>(turns.size()); }
  static TorusPoint constant(int rank, Turn t) { return {std::vector<Turn>(rank, t)}; }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

using TorusTriple = std::array<TorusPoint, 3>;

// 0 if two arguments coincide, +1 for counterclockwise cyclic order, -1 otherwise.
// (0, 1/2, 3/4) maps to +1.
int circle_maslov(const Turn& a, const Turn& b, const Turn& c);

OrbitInvariant torus_invariants(const TorusPoint& t1, const TorusPoint& t2, const TorusPoint& t3);

TorusTriple standard_triple(const MonotoneTuple& n);

// (1,1,1), (1,1,-1), (1,-1,1), (1,-1,-1), (1,-1,-i), (1,-1,i) as turns.
std::array<std::array<Turn, 3>, 6> circle_orbit_representatives();

}  // namespace shilov::polydisc
