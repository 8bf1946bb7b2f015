#pragma once

#include <doctest.h>

#include <complex>
#include <functional>
#include <random>

#include "shilov/error.hpp"
#include "shilov/numeric.hpp"

namespace test {

using shilov::cplx;
using shilov::CMatrix;
using shilov::CVector;
using shilov::RMatrix;
using shilov::RVector;

inline const cplx I1{0.0, 1.0};

inline CMatrix gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> nd;
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = nd(rng);
      const double im = nd(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

inline CMatrix unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMatrix> qr(gaussian(rng, n, n));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

inline CMatrix diag_phases(std::initializer_list<double> turns) {
  CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(turns.size()), static_cast<Eigen::Index>(turns.size()));
  Eigen::Index k = 0;
  for (double t : turns) {
    d(k, k) = std::polar(1.0, 2.0 * shilov::kPi * t);
    ++k;
  }
  return d;
}

inline shilov::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const shilov::Error& e) {
    return e.code();
  }
  FAIL("expected shilov::Error");
  return shilov::ErrorCode::ParseError;
}

}  // namespace test
