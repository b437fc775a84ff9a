#pragma once

// Bicomplex matrices as operators on 𝕋ⁿ: algebra, the †₃-adjoint, channel
// projection, and the eigensolver that splits A·ψ = λ·ψ into the two complex
// problems P_k(A)·ψ_k = λ_k·ψ_k and recombines λ = e₁λ₁ + e₂λ₂,
// ψ = e₁ψ₁ + e₂ψ₂.

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string_view>
#include <vector>

#include "bch/complex_eig.hpp"
#include "bch/scalar.hpp"
#include "bch/tmodule.hpp"

namespace bch {

inline constexpr double kDefaultOperatorTol = 1e-10;
inline constexpr std::size_t kMaxFullPairingDimension = 8;

namespace detail {

inline void require_same_dim(const TMatrix& a, const TMatrix& b) {
  require(a.n() == b.n(), ErrorCode::DimensionMismatch, "matrix dimensions differ");
}

}  // namespace detail

// Matrix algebra ------------------------------------------------------------------

inline TVector operator*(const TMatrix& a, const TVector& x) {
  detail::require(a.n() == x.size(), ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  std::vector<Bicomplex> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    Bicomplex acc;
    for (std::size_t k = 0; k < a.n(); ++k) acc += a(i, k) * x[k];
    out[i] = acc;
  }
  return TVector(std::move(out));
}

inline TMatrix operator*(const TMatrix& a, const TMatrix& b) {
  detail::require_same_dim(a, b);
  const std::size_t n = a.n();
  TMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Bicomplex acc;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

inline TMatrix operator+(const TMatrix& a, const TMatrix& b) {
  detail::require_same_dim(a, b);
  TMatrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline TMatrix operator-(const TMatrix& a, const TMatrix& b) {
  detail::require_same_dim(a, b);
  TMatrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline TMatrix operator*(const Bicomplex& lambda, const TMatrix& a) {
  TMatrix c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c(i, j) = lambda * a(i, j);
  return c;
}

/// A − λ·I.
inline TMatrix shift(const TMatrix& a, const Bicomplex& lambda) {
  TMatrix c = a;
  for (std::size_t i = 0; i < a.n(); ++i) c(i, i) = a(i, i) - lambda;
  return c;
}

/// √(Σ |a_ij|²) with |·| the Euclidean modulus of ℝ⁴.
inline double frobenius(const TMatrix& a) noexcept {
  double ssq = 0.0;
  for (const auto& w : a.entries()) ssq += w.w0() * w.w0() + w.w1() * w.w1() + w.w2() * w.w2() +
                                           w.w3() * w.w3();
  return std::sqrt(ssq);
}

/// Entrywise †₃ followed by transposition; (A*X, Y) = (X, AY).
inline TMatrix adjoint(const TMatrix& a) {
  TMatrix t(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t(j, i) = conj(a(i, j), Conjugation::dag3);
  return t;
}

inline ComplexMatrix project_mat(const TMatrix& a, Channel k) {
  ComplexMatrix out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) out(i, j) = channel(a(i, j), k);
  return out;
}

inline TMatrix recombine_mat(const ComplexMatrix& a1, const ComplexMatrix& a2) {
  detail::require(a1.n() == a2.n(), ErrorCode::DimensionMismatch, "channel dimensions differ");
  TMatrix out(a1.n());
  for (std::size_t i = 0; i < a1.n(); ++i)
    for (std::size_t j = 0; j < a1.n(); ++j) out(i, j) = from_idempotent(a1(i, j), a2(i, j));
  return out;
}

/// Largest entrywise distance between A and A*.
inline double self_adjoint_defect(const TMatrix& a) {
  const TMatrix adj = adjoint(a);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, euclid(a.entries()[k] - adj.entries()[k]));
  return worst;
}

inline bool is_self_adjoint(const TMatrix& a, double tol = kDefaultOperatorTol) {
  return self_adjoint_defect(a) <= tol * (1.0 + frobenius(a));
}

// Eigenproblem ------------------------------------------------------------------------

/// Relative residual ‖A·v − λ·v‖ / (‖v‖·(1 + ‖A‖_F)) in the module norm.
/// A zero vector is never an eigenvector; it reports +∞.
inline double verify_eig(const TMatrix& a, const Bicomplex& lambda, const TVector& v) {
  detail::require(a.n() == v.size(), ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  const double nv = norm(v);
  if (nv == 0.0) return std::numeric_limits<double>::infinity();
  return norm(a * v - lambda * v) / (nv * (1.0 + frobenius(a)));
}

enum class Pairing { diagonal, full };

constexpr std::string_view to_string(Pairing p) noexcept {
  return p == Pairing::diagonal ? "diagonal" : "full";
}

inline Pairing to_pairing(std::string_view s) {
  if (s == "diagonal") return Pairing::diagonal;
  if (s == "full") return Pairing::full;
  throw Error(ErrorCode::InvalidArgument, "pairing must be 'diagonal' or 'full'");
}

struct EigenPair {
  Bicomplex lambda;
  TVector vector;
  double residual;
  bool lambda_hyperbolic;
  bool vector_null_cone;
  /// Positions of the channel eigenvalues in EigenReport::spectrum1/2.
  std::size_t index1;
  std::size_t index2;
};

struct EigenReport {
  std::vector<ComplexC1> spectrum1;
  std::vector<ComplexC1> spectrum2;
  std::vector<EigenPair> pairs;
  Pairing pairing;
};

namespace detail {

inline bool lex_less(const ComplexEigenPair& x, const ComplexEigenPair& y) {
  if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
  return x.value.imag() < y.value.imag();
}

inline std::vector<ComplexEigenPair> sorted_channel_eig(const ComplexMatrix& a) {
  auto pairs = complex_eig(a);
  std::stable_sort(pairs.begin(), pairs.end(), lex_less);
  return pairs;
}

/// Both channel vectors are nonzero, so the ket lies outside the null-cone.
inline bool vector_in_null_cone(const TVector& v, double tol) {
  const auto [n1, n2] = channel_norms(v);
  return std::min(n1, n2) <= tol * std::max(1.0, std::max(n1, n2));
}

}  // namespace detail

/// Solves A·ψ = λ·ψ through the two channel problems. Diagonal pairing matches
/// the i-th channel-1 eigenpair with the i-th channel-2 eigenpair after a
/// lexicographic (re, im) sort; full pairing emits all n² combinations.
inline EigenReport bicomplex_eig(const TMatrix& a, Pairing pairing = Pairing::diagonal,
                                 double tol = kDefaultOperatorTol) {
  const std::size_t n = a.n();
  if (n > kMaxEigenDimension) {
    throw Error(ErrorCode::InvalidArgument, "eigensolver supports n <= 32");
  }
  if (pairing == Pairing::full && n > kMaxFullPairingDimension) {
    throw Error(ErrorCode::PairingOverflow, "full pairing supports n <= 8");
  }

  // The channels share nothing; solve the second one concurrently.
  auto second = std::async(std::launch::async, [&a] {
    return detail::sorted_channel_eig(project_mat(a, Channel::two));
  });
  const auto first = detail::sorted_channel_eig(project_mat(a, Channel::one));
  const auto other = second.get();

  EigenReport report;
  report.pairing = pairing;
  for (const auto& p : first) report.spectrum1.push_back(p.value);
  for (const auto& p : other) report.spectrum2.push_back(p.value);

  const auto emit = [&](std::size_t i, std::size_t k) {
    const Bicomplex lambda = from_idempotent(first[i].value, other[k].value);
    TVector v = recombine(first[i].vector, other[k].vector);
    const bool null_cone = detail::vector_in_null_cone(v, kDefaultNullConeTol);
    if (null_cone) return;
    const double residual = verify_eig(a, lambda, v);
    report.pairs.push_back(
        {lambda, std::move(v), residual, is_hyperbolic(lambda, tol), null_cone, i, k});
  };
  if (pairing == Pairing::diagonal) {
    for (std::size_t i = 0; i < n; ++i) emit(i, i);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) emit(i, k);
  }
  return report;
}

/// Outcome of checking that a self-adjoint operator has a hyperbolic spectrum.
struct SpectrumCheck {
  bool all_hyperbolic = true;
  /// max over emitted λ of max(|w₁|, |w₂|), the non-hyperbolic part.
  double max_imaginary = 0.0;
  std::size_t pairs_checked = 0;
  bool full_pairing_checked = false;
};

inline SpectrumCheck selfadjoint_spectrum_check(const TMatrix& a,
                                                double tol = kDefaultOperatorTol) {
  if (!is_self_adjoint(a, tol)) {
    throw Error(ErrorCode::NotSelfAdjoint, "operator is not self-adjoint");
  }
  SpectrumCheck check;
  const auto scan = [&](const EigenReport& report) {
    for (const auto& p : report.pairs) {
      check.max_imaginary =
          std::max({check.max_imaginary, std::abs(p.lambda.w1()), std::abs(p.lambda.w2())});
      check.all_hyperbolic = check.all_hyperbolic && is_hyperbolic(p.lambda, tol);
      ++check.pairs_checked;
    }
  };
  scan(bicomplex_eig(a, Pairing::diagonal, tol));
  if (a.n() <= kMaxFullPairingDimension) {
    scan(bicomplex_eig(a, Pairing::full, tol));
    check.full_pairing_checked = true;
  }
  return check;
}

}  // namespace bch
