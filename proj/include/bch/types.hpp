#pragma once

// Value types shared by every module. This header carries storage, views that
// need no arithmetic, and constructors; it deliberately knows nothing about
// the idempotent decomposition so that the brute-force oracle can depend on it
// without touching the fast paths.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "bch/error.hpp"

namespace bch {

/// x + y·i₁. The idempotent channels and every complex eigenproblem live here.
using ComplexC1 = std::complex<double>;

namespace detail {

inline bool finite(double v) noexcept { return std::isfinite(v); }
inline bool finite(const ComplexC1& z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "non-finite component");
}

}  // namespace detail

/// Validated construction for ComplexC1 values coming from outside the library.
inline ComplexC1 make_complex(double re, double im) {
  detail::require_finite(re);
  detail::require_finite(im);
  return {re, im};
}

/// a + b·i₂. Only produced as the value of the i₂ square modulus and as a
/// scaling factor; kept apart from ComplexC1 so the two units never mix.
class ComplexC2 {
 public:
  constexpr ComplexC2() = default;
  ComplexC2(double re, double i2) : re_(re), i2_(i2) {
    detail::require_finite(re);
    detail::require_finite(i2);
  }

  double re() const noexcept { return re_; }
  double i2() const noexcept { return i2_; }
  double abs() const noexcept { return std::hypot(re_, i2_); }

  friend bool operator==(const ComplexC2&, const ComplexC2&) = default;

 private:
  double re_ = 0.0;
  double i2_ = 0.0;
};

/// x + y·j, also viewed as a·e₁ + b·e₂ with a = x + y and b = x − y.
class Hyperbolic {
 public:
  constexpr Hyperbolic() = default;
  Hyperbolic(double x, double y) : x_(x), y_(y) {
    detail::require_finite(x);
    detail::require_finite(y);
  }
  explicit Hyperbolic(double x) : Hyperbolic(x, 0.0) {}

  static Hyperbolic from_idempotent(double a, double b) {
    return Hyperbolic((a + b) / 2.0, (a - b) / 2.0);
  }

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double a() const noexcept { return x_ + y_; }
  double b() const noexcept { return x_ - y_; }

  /// Membership in 𝔻⁺: both idempotent components non-negative up to tol.
  bool is_positive(double tol = 0.0) const noexcept { return a() >= -tol && b() >= -tol; }

  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;

  friend Hyperbolic operator+(const Hyperbolic& s, const Hyperbolic& t) {
    return {s.x_ + t.x_, s.y_ + t.y_};
  }
  friend Hyperbolic operator-(const Hyperbolic& s, const Hyperbolic& t) {
    return {s.x_ - t.x_, s.y_ - t.y_};
  }
  friend Hyperbolic operator*(const Hyperbolic& s, const Hyperbolic& t) {
    return from_idempotent(s.a() * t.a(), s.b() * t.b());
  }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

/// w₀ + w₁i₁ + w₂i₂ + w₃j, stored as its four real components.
///
/// The cartesian view is w = z₁ + z₂·i₂ with z₁ = w₀ + w₁i₁ and
/// z₂ = w₂ + w₃i₁. The idempotent view lives in scalar.hpp.
class Bicomplex {
 public:
  using Components = std::array<double, 4>;

  constexpr Bicomplex() = default;
  Bicomplex(double w0, double w1, double w2, double w3) : w_{w0, w1, w2, w3} {
    for (double v : w_) detail::require_finite(v);
  }
  explicit Bicomplex(double real) : Bicomplex(real, 0.0, 0.0, 0.0) {}
  explicit Bicomplex(const Components& w) : Bicomplex(w[0], w[1], w[2], w[3]) {}

  static Bicomplex from_cartesian(const ComplexC1& z1, const ComplexC1& z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  static Bicomplex from_c1(const ComplexC1& z) { return {z.real(), z.imag(), 0.0, 0.0}; }
  static Bicomplex from_c2(const ComplexC2& z) { return {z.re(), 0.0, z.i2(), 0.0}; }
  static Bicomplex from_hyperbolic(const Hyperbolic& h) { return {h.x(), 0.0, 0.0, h.y()}; }

  static Bicomplex zero() { return {}; }
  static Bicomplex one() { return {1.0, 0.0, 0.0, 0.0}; }
  static Bicomplex i1() { return {0.0, 1.0, 0.0, 0.0}; }
  static Bicomplex i2() { return {0.0, 0.0, 1.0, 0.0}; }
  static Bicomplex j() { return {0.0, 0.0, 0.0, 1.0}; }
  /// (1 + j)/2
  static Bicomplex e1() { return {0.5, 0.0, 0.0, 0.5}; }
  /// (1 − j)/2
  static Bicomplex e2() { return {0.5, 0.0, 0.0, -0.5}; }

  double w0() const noexcept { return w_[0]; }
  double w1() const noexcept { return w_[1]; }
  double w2() const noexcept { return w_[2]; }
  double w3() const noexcept { return w_[3]; }
  double operator[](std::size_t k) const noexcept { return w_[k]; }
  const Components& components() const noexcept { return w_; }

  ComplexC1 z1() const noexcept { return {w_[0], w_[1]}; }
  ComplexC1 z2() const noexcept { return {w_[2], w_[3]}; }

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  Components w_{0.0, 0.0, 0.0, 0.0};
};

namespace detail {

inline bool finite(const Hyperbolic&) noexcept { return true; }
inline bool finite(const Bicomplex&) noexcept { return true; }

template <class T>
T unit() {
  if constexpr (std::is_same_v<T, Bicomplex>) {
    return Bicomplex::one();
  } else if constexpr (std::is_same_v<T, Hyperbolic>) {
    return Hyperbolic(1.0);
  } else {
    return T(1.0);
  }
}

}  // namespace detail

/// Coordinates of a module element relative to the canonical basis.
/// Length is at least one; every coefficient is finite.
template <class T>
class CoeffVector {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  explicit CoeffVector(std::size_t n) : coeffs_(n) {
    detail::require(n >= 1, ErrorCode::InvalidArgument, "vector length must be at least 1");
  }
  explicit CoeffVector(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    detail::require(!coeffs_.empty(), ErrorCode::InvalidArgument,
                    "vector length must be at least 1");
    for (const auto& c : coeffs_) {
      detail::require(detail::finite(c), ErrorCode::NonFinite, "non-finite coefficient");
    }
  }
  CoeffVector(std::initializer_list<T> coeffs) : CoeffVector(std::vector<T>(coeffs)) {}

  static CoeffVector zero(std::size_t n) { return CoeffVector(n); }

  std::size_t size() const noexcept { return coeffs_.size(); }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  const_iterator begin() const noexcept { return coeffs_.begin(); }
  const_iterator end() const noexcept { return coeffs_.end(); }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<T> coeffs_;
};

/// A ket in the free module 𝕋ⁿ.
using TVector = CoeffVector<Bicomplex>;
/// An element of the complex submodule V (ℂ(i₁)ⁿ).
using ComplexVector = CoeffVector<ComplexC1>;
/// An element of the free module 𝔻ⁿ.
using HVector = CoeffVector<Hyperbolic>;

/// Square n×n matrix, row-major.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {
    detail::require(n >= 1, ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
  }
  SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    detail::require(n >= 1, ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    detail::require(entries_.size() == n * n, ErrorCode::DimensionMismatch,
                    "matrix needs n*n entries");
    for (const auto& c : entries_) {
      detail::require(detail::finite(c), ErrorCode::NonFinite, "non-finite entry");
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = detail::unit<T>();
    return m;
  }

  static SquareMatrix diagonal(const std::vector<T>& diag) {
    SquareMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t n() const noexcept { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<T>& entries() const noexcept { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<T> entries_;
};

/// A linear operator on 𝕋ⁿ in the canonical basis.
using TMatrix = SquareMatrix<Bicomplex>;
/// A linear operator on ℂ(i₁)ⁿ; the image of a TMatrix under one channel.
using ComplexMatrix = SquareMatrix<ComplexC1>;

}  // namespace bch
