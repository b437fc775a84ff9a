#pragma once

// Arithmetic on ℂ(i₁), 𝔻 and 𝕋. Multiplication, inversion and the moduli all
// go through the idempotent decomposition w = p₁e₁ + p₂e₂, in which 𝕋 is two
// independent copies of ℂ(i₁).

#ifdef BCH_ORACLE_ISOLATION
#error "the oracle must not depend on the idempotent fast paths in scalar.hpp"
#endif

#include <algorithm>
#include <cmath>

#include "bch/types.hpp"

namespace bch {

inline constexpr double kDefaultNullConeTol = 1e-12;

/// The two complex components of w in the basis {e₁, e₂}.
struct IdempotentPair {
  ComplexC1 p1;
  ComplexC1 p2;
};

/// p₁ = z₁ − z₂i₁, p₂ = z₁ + z₂i₁.
inline IdempotentPair to_idempotent(const Bicomplex& w) noexcept {
  const ComplexC1 z1 = w.z1();
  const ComplexC1 z2i1{-w.w3(), w.w2()};
  return {z1 - z2i1, z1 + z2i1};
}

/// Inverse of to_idempotent: z₁ = (p₁ + p₂)/2, z₂ = i₁(p₁ − p₂)/2.
inline Bicomplex from_idempotent(const ComplexC1& p1, const ComplexC1& p2) {
  return {(p1.real() + p2.real()) / 2.0, (p1.imag() + p2.imag()) / 2.0,
          (p2.imag() - p1.imag()) / 2.0, (p1.real() - p2.real()) / 2.0};
}

inline Bicomplex from_idempotent(const IdempotentPair& p) { return from_idempotent(p.p1, p.p2); }

/// Channel 1 or 2 of the idempotent decomposition.
enum class Channel { one = 1, two = 2 };

inline Channel to_channel(int k) {
  if (k != 1 && k != 2) throw Error(ErrorCode::InvalidArgument, "channel index must be 1 or 2");
  return static_cast<Channel>(k);
}

inline ComplexC1 channel(const Bicomplex& w, Channel k) noexcept {
  const auto p = to_idempotent(w);
  return k == Channel::one ? p.p1 : p.p2;
}

inline Bicomplex operator+(const Bicomplex& s, const Bicomplex& t) {
  return {s.w0() + t.w0(), s.w1() + t.w1(), s.w2() + t.w2(), s.w3() + t.w3()};
}
inline Bicomplex operator-(const Bicomplex& s, const Bicomplex& t) {
  return {s.w0() - t.w0(), s.w1() - t.w1(), s.w2() - t.w2(), s.w3() - t.w3()};
}
inline Bicomplex operator-(const Bicomplex& w) { return {-w.w0(), -w.w1(), -w.w2(), -w.w3()}; }

inline Bicomplex operator*(const Bicomplex& s, const Bicomplex& t) {
  const auto p = to_idempotent(s);
  const auto q = to_idempotent(t);
  return from_idempotent(p.p1 * q.p1, p.p2 * q.p2);
}

inline Bicomplex operator*(double r, const Bicomplex& w) {
  return {r * w.w0(), r * w.w1(), r * w.w2(), r * w.w3()};
}

inline Bicomplex& operator+=(Bicomplex& s, const Bicomplex& t) { return s = s + t; }
inline Bicomplex& operator-=(Bicomplex& s, const Bicomplex& t) { return s = s - t; }
inline Bicomplex& operator*=(Bicomplex& s, const Bicomplex& t) { return s = s * t; }

// Conjugations -------------------------------------------------------------

/// The identity and the three involutions of 𝕋. Indices match the usual
/// numbering: 1 conjugates i₁, 2 flips i₂, 3 is their composition.
enum class Conjugation { identity = 0, dag1 = 1, dag2 = 2, dag3 = 3 };

inline Conjugation to_conjugation(int k) {
  if (k < 0 || k > 3) throw Error(ErrorCode::InvalidArgument, "conjugation index must be 0..3");
  return static_cast<Conjugation>(k);
}

/// Klein four-group law. The signature of dag_k on (w₁, w₂) is the bit pattern
/// of k, so composition is xor.
inline Conjugation compose(Conjugation a, Conjugation b) noexcept {
  return static_cast<Conjugation>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// Sign pattern on (w₀, w₁, w₂, w₃).
inline std::array<double, 4> signature(Conjugation k) noexcept {
  switch (k) {
    case Conjugation::identity: return {1.0, 1.0, 1.0, 1.0};
    case Conjugation::dag1: return {1.0, -1.0, 1.0, -1.0};
    case Conjugation::dag2: return {1.0, 1.0, -1.0, -1.0};
    case Conjugation::dag3: return {1.0, -1.0, -1.0, 1.0};
  }
  return {1.0, 1.0, 1.0, 1.0};
}

inline Bicomplex conj(const Bicomplex& w, Conjugation k) noexcept {
  const auto s = signature(k);
  return {s[0] * w.w0(), s[1] * w.w1(), s[2] * w.w2(), s[3] * w.w3()};
}

// Moduli ---------------------------------------------------------------------

/// w·w^{†₂} = z₁² + z₂² ∈ ℂ(i₁).
inline ComplexC1 mod_sq_i1(const Bicomplex& w) noexcept {
  const ComplexC1 z1 = w.z1();
  const ComplexC1 z2 = w.z2();
  return z1 * z1 + z2 * z2;
}

/// w·w^{†₁} = (|z₁|² − |z₂|²) + 2Re(z₁z̄₂)i₂ ∈ ℂ(i₂).
inline ComplexC2 mod_sq_i2(const Bicomplex& w) {
  const ComplexC1 z1 = w.z1();
  const ComplexC1 z2 = w.z2();
  return {std::norm(z1) - std::norm(z2), 2.0 * (z1 * std::conj(z2)).real()};
}

/// w·w^{†₃} = (|z₁|² + |z₂|²) − 2Im(z₁z̄₂)j ∈ 𝔻; channel k equals |p_k|².
inline Hyperbolic mod_sq_j(const Bicomplex& w) {
  const ComplexC1 z1 = w.z1();
  const ComplexC1 z2 = w.z2();
  return {std::norm(z1) + std::norm(z2), -2.0 * (z1 * std::conj(z2)).imag()};
}

/// |w|₃ = √(w₀² + w₁² + w₂² + w₃²), the Euclidean norm of ℝ⁴.
inline double mod3(const Bicomplex& w) noexcept {
  return std::hypot(std::hypot(w.w0(), w.w1()), std::hypot(w.w2(), w.w3()));
}

inline double euclid(const Bicomplex& w) noexcept { return mod3(w); }

inline double euclid(const Hyperbolic& h) noexcept { return std::hypot(h.x(), h.y()); }

/// |w|₁ = |z₁² + z₂²|^{1/2} = |p₁p₂|^{1/2}; vanishes exactly on the null-cone.
inline double mod1(const Bicomplex& w) noexcept {
  const auto p = to_idempotent(w);
  return std::sqrt(std::abs(p.p1) * std::abs(p.p2));
}

// Classification ---------------------------------------------------------------

inline bool is_null_cone(const Bicomplex& w, double tol = kDefaultNullConeTol) noexcept {
  const auto p = to_idempotent(w);
  return std::min(std::abs(p.p1), std::abs(p.p2)) <= tol * std::max(1.0, euclid(w));
}

inline bool is_hyperbolic(const Bicomplex& w, double tol) noexcept {
  return std::abs(w.w1()) <= tol && std::abs(w.w2()) <= tol;
}

inline bool is_hyperbolic_positive(const Bicomplex& w, double tol) noexcept {
  if (!is_hyperbolic(w, tol)) return false;
  const auto p = to_idempotent(w);
  return p.p1.real() >= -tol && p.p2.real() >= -tol;
}

/// Drops the i₁ and i₂ components; meaningful after is_hyperbolic.
inline Hyperbolic hyperbolic_part(const Bicomplex& w) { return {w.w0(), w.w3()}; }

/// w⁻¹ computed per channel as (1/p₁, 1/p₂).
inline Bicomplex inverse(const Bicomplex& w, double tol = kDefaultNullConeTol) {
  if (is_null_cone(w, tol)) {
    throw Error(ErrorCode::NullCone, "element of the null-cone has no inverse");
  }
  const auto p = to_idempotent(w);
  return from_idempotent(1.0 / p.p1, 1.0 / p.p2);
}

// Hyperbolic helpers -----------------------------------------------------------

inline Hyperbolic hyp_cos(const Hyperbolic& d) {
  return Hyperbolic::from_idempotent(std::cos(d.a()), std::cos(d.b()));
}

/// θ₁e₁ + θ₂e₂ written as (θ₁+θ₂)/2 + (θ₁−θ₂)/2·j.
inline Hyperbolic hyp_from_angles(double theta1, double theta2) {
  return Hyperbolic::from_idempotent(theta1, theta2);
}

}  // namespace bch
