#pragma once

// Differential verification: every fast path against the brute-force oracle on
// random samples. Errors are measured relative to a magnitude scale of the
// inputs, since results may cancel to zero while rounding scales with the
// operands.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "bch/operators.hpp"
#include "bch/oracle.hpp"
#include "bch/sampling.hpp"
#include "bch/scalar.hpp"
#include "bch/tmodule.hpp"

namespace bch {

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return max_error <= tolerance; }
};

inline double relative_error(const Bicomplex& got, const Bicomplex& want, double scale) {
  return euclid(got - want) / std::max(scale, std::numeric_limits<double>::min());
}

/// Σ |a_ik|·|x_k| bound for a single row-times-vector sum.
inline double product_scale(const TVector& x, const TVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += mod3(x[i]) * mod3(y[i]);
  return s;
}

inline SuiteResult verify_mul(Sampler& rng, std::size_t samples, double tol = 1e-12) {
  SuiteResult r{"mul", samples, 0.0, tol};
  for (std::size_t s = 0; s < samples; ++s) {
    const Bicomplex a = rng.bicomplex();
    const Bicomplex b = rng.bicomplex();
    r.max_error = std::max(r.max_error, relative_error(a * b, oracle::mul(a, b), mod3(a) * mod3(b)));
  }
  return r;
}

inline SuiteResult verify_dot(Sampler& rng, std::size_t samples, double tol = 1e-12) {
  SuiteResult r{"dot", samples, 0.0, tol};
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = rng.dimension(1, 8);
    const TVector x = rng.tvector(n);
    const TVector y = rng.tvector(n);
    r.max_error =
        std::max(r.max_error, relative_error(dot(x, y), oracle::dot(x, y), product_scale(x, y)));
  }
  return r;
}

inline SuiteResult verify_matvec(Sampler& rng, std::size_t samples, double tol = 1e-12) {
  SuiteResult r{"matvec", samples, 0.0, tol};
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = rng.dimension(1, 8);
    const TMatrix a = rng.tmatrix(n, 10.0);
    const TVector x = rng.tvector(n);
    const TVector fast = a * x;
    const TVector slow = oracle::matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) {
      double scale = 0.0;
      for (std::size_t k = 0; k < n; ++k) scale += mod3(a(i, k)) * mod3(x[k]);
      r.max_error = std::max(r.max_error, relative_error(fast[i], slow[i], scale));
    }
  }
  return r;
}

/// Channel k of the cofactor determinant equals the complex determinant of
/// the channel-k matrix.
inline SuiteResult verify_det_channels(Sampler& rng, std::size_t samples, double tol = 1e-10) {
  SuiteResult r{"det_channels", samples, 0.0, tol};
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = rng.dimension(1, 4);
    const TMatrix a = rng.tmatrix(n, 1.0);
    const auto p = to_idempotent(oracle::det(a));
    const ComplexC1 d1 = determinant(project_mat(a, Channel::one));
    const ComplexC1 d2 = determinant(project_mat(a, Channel::two));
    // Hadamard-style bound on either channel determinant.
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t k = 0; k < n; ++k) row += std::numbers::sqrt2 * mod3(a(i, k));
      scale *= row;
    }
    scale = std::max(scale, 1e-300);
    r.max_error = std::max({r.max_error, std::abs(p.p1 - d1) / scale, std::abs(p.p2 - d2) / scale});
  }
  return r;
}

inline std::vector<SuiteResult> run_differential_suites(std::size_t samples, std::uint64_t seed) {
  Sampler rng(seed);
  return {verify_mul(rng, samples), verify_dot(rng, samples), verify_matvec(rng, samples),
          verify_det_channels(rng, std::max<std::size_t>(1, samples / 10))};
}

}  // namespace bch
