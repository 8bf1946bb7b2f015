#include "shilov/polydisc.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace shilov::polydisc {

namespace {

Turn::Rational reduce_mod_one(Turn::Rational t) {
  const std::int64_t num = t.numerator();
  const std::int64_t den = t.denominator();  // always positive
  std::int64_t whole = num / den;
  if (num % den < 0) --whole;
  return t - Turn::Rational(whole);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    fail(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in turn");
  }
  return v;
}

}  // namespace

Turn::Turn(Rational t) : t_(reduce_mod_one(t)) {}

Turn Turn::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Turn(Rational(parse_int(text)));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::InvalidTurn, "zero denominator in turn '" + std::string(text) + "'");
  return Turn(Rational(parse_int(text.substr(0, slash)), den));
}

Turn Turn::nearest(double turns, double tol, std::int64_t max_den) {
  if (!std::isfinite(turns)) fail(ErrorCode::NoConvergence, "non-finite angle");
  double x = turns - std::floor(turns);
  // Convergents h/k of the continued fraction of x, plus the best
  // semiconvergent once the denominator cap is reached.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  Rational best(h, k);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    if (k > 0 && a > (max_den - k_prev) / k) {
      const std::int64_t a_cap = (max_den - k_prev) / k;
      if (a_cap > 0) {
        const Rational semi(a_cap * h + h_prev, a_cap * k + k_prev);
        if (std::abs(boost::rational_cast<double>(semi) - x) < std::abs(boost::rational_cast<double>(best) - x)) {
          best = semi;
        }
      }
      break;
    }
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    best = Rational(h, k);
  }
  const double err = std::abs(boost::rational_cast<double>(best) - x);
  if (err > tol) {
    fail(ErrorCode::NoConvergence,
         "turn " + std::to_string(turns) + " is not within tolerance of a rational with bounded denominator");
  }
  return Turn(best);
}

std::string Turn::str() const { return std::to_string(t_.numerator()) + "/" + std::to_string(t_.denominator()); }

double Turn::radians() const { return 2.0 * kPi * boost::rational_cast<double>(t_); }

cplx Turn::point() const {
  // exact values at quarter turns keep embedded matrices free of 1e-17 noise
  if (t_ == Rational(0)) return {1, 0};
  if (t_ == Rational(1, 4)) return {0, 1};
  if (t_ == Rational(1, 2)) return {-1, 0};
  if (t_ == Rational(3, 4)) return {0, -1};
  return std::polar(1.0, radians());
}

int circle_maslov(const Turn& a, const Turn& b, const Turn& c) {
  if (a == b || b == c || a == c) return 0;
  const int descents = (b < a ? 1 : 0) + (c < b ? 1 : 0) + (a < c ? 1 : 0);
  return descents == 1 ? 1 : -1;
}

OrbitInvariant torus_invariants(const TorusPoint& t1, const TorusPoint& t2, const TorusPoint& t3) {
  const int r = t1.rank();
  if (t2.rank() != r || t3.rank() != r) fail(ErrorCode::RankMismatch, "torus points have different ranks");
  if (r < 1) fail(ErrorCode::RankMismatch, "torus points must have positive rank");
  int n12 = 0, n23 = 0, n31 = 0, n123 = 0, iota = 0;
  for (int j = 0; j < r; ++j) {
    const Turn& a = t1.turns[j];
    const Turn& b = t2.turns[j];
    const Turn& c = t3.turns[j];
    n12 += a == b;
    n23 += b == c;
    n31 += c == a;
    n123 += (a == b && b == c);
    iota += circle_maslov(a, b, c);
  }
  return OrbitInvariant(r, n12, n23, n31, n123, iota);
}

TorusTriple standard_triple(const MonotoneTuple& n) {
  const int r = n.rank();
  const Turn zero(0, 1), half(1, 2), quarter(1, 4), three_quarters(3, 4);
  TorusTriple t{TorusPoint::constant(r, zero), TorusPoint::constant(r, zero), TorusPoint::constant(r, zero)};
  for (int j = 1; j <= r; ++j) {
    t[1].turns[j - 1] = j <= n[1] ? zero : half;
    Turn x3;
    if (j <= n[0]) {
      x3 = zero;
    } else if (j <= n[2]) {
      x3 = half;
    } else if (j <= n[3]) {
      x3 = zero;
    } else if (j <= n[4]) {
      x3 = three_quarters;
    } else {
      x3 = quarter;
    }
    t[2].turns[j - 1] = x3;
  }
  return t;
}

std::array<std::array<Turn, 3>, 6> circle_orbit_representatives() {
  const Turn one(0, 1), minus_one(1, 2), minus_i(3, 4), plus_i(1, 4);
  return {{{one, one, one},
           {one, one, minus_one},
           {one, minus_one, one},
           {one, minus_one, minus_one},
           {one, minus_one, minus_i},
           {one, minus_one, plus_i}}};
}

}  // namespace shilov::polydisc
