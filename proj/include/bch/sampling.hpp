#pragma once

// Seeded random values for property tests and the differential verifier.

#include <cstdint>
#include <random>
#include <vector>

#include "bch/operators.hpp"
#include "bch/types.hpp"

namespace bch {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::size_t dimension(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  ComplexC1 complex(double range = 10.0) { return {real(-range, range), real(-range, range)}; }

  ComplexC2 complex2(double range = 10.0) { return {real(-range, range), real(-range, range)}; }

  Hyperbolic hyperbolic(double range = 10.0) { return {real(-range, range), real(-range, range)}; }

  Bicomplex bicomplex(double range = 10.0) {
    return {real(-range, range), real(-range, range), real(-range, range), real(-range, range)};
  }

  TVector tvector(std::size_t n, double range = 10.0) {
    std::vector<Bicomplex> v(n);
    for (auto& c : v) c = bicomplex(range);
    return TVector(std::move(v));
  }

  ComplexVector complex_vector(std::size_t n, double range = 10.0) {
    std::vector<ComplexC1> v(n);
    for (auto& c : v) c = complex(range);
    return ComplexVector(std::move(v));
  }

  HVector hvector(std::size_t n, double range = 10.0) {
    std::vector<Hyperbolic> v(n);
    for (auto& c : v) c = hyperbolic(range);
    return HVector(std::move(v));
  }

  TMatrix tmatrix(std::size_t n, double range = 1.0) {
    std::vector<Bicomplex> e(n * n);
    for (auto& c : e) c = bicomplex(range);
    return TMatrix(n, std::move(e));
  }

  /// B + B*, self-adjoint by construction.
  TMatrix self_adjoint(std::size_t n, double range = 1.0) {
    const TMatrix b = tmatrix(n, range);
    return b + adjoint(b);
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bch
