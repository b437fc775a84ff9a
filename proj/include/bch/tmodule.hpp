#pragma once

// Finite free 𝕋-modules: kets in 𝕋ⁿ, their projections onto the two complex
// channels, bicomplex and hyperbolic scalar products, the induced norm, bras,
// and the hyperbolic angle.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bch/complex_eig.hpp"
#include "bch/scalar.hpp"
#include "bch/types.hpp"

namespace bch {

namespace detail {

template <class T>
void require_same_size(const CoeffVector<T>& x, const CoeffVector<T>& y) {
  require(x.size() == y.size(), ErrorCode::DimensionMismatch, "vector lengths differ");
}

}  // namespace detail

// Module operations --------------------------------------------------------------

inline TVector operator+(const TVector& x, const TVector& y) {
  detail::require_same_size(x, y);
  std::vector<Bicomplex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return TVector(std::move(out));
}

inline TVector operator-(const TVector& x, const TVector& y) {
  detail::require_same_size(x, y);
  std::vector<Bicomplex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return TVector(std::move(out));
}

inline TVector operator*(const Bicomplex& lambda, const TVector& x) {
  std::vector<Bicomplex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = lambda * x[i];
  return TVector(std::move(out));
}

/// Embeds a ℂ(i₁) vector in 𝕋ⁿ.
inline TVector embed(const ComplexVector& x) {
  std::vector<Bicomplex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = Bicomplex::from_c1(x[i]);
  return TVector(std::move(out));
}

// Channels -------------------------------------------------------------------------

/// P_k applied coefficientwise.
inline ComplexVector project(const TVector& x, Channel k) {
  std::vector<ComplexC1> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = channel(x[i], k);
  return ComplexVector(std::move(out));
}

/// e₁·X₁ + e₂·X₂.
inline TVector recombine(const ComplexVector& x1, const ComplexVector& x2) {
  detail::require(x1.size() == x2.size(), ErrorCode::DimensionMismatch, "channel lengths differ");
  std::vector<Bicomplex> out(x1.size());
  for (std::size_t i = 0; i < x1.size(); ++i) out[i] = from_idempotent(x1[i], x2[i]);
  return TVector(std::move(out));
}

// Scalar products ---------------------------------------------------------------------

/// Canonical product on 𝕋ⁿ: Σ xᵢ^{†₃}·yᵢ. Antilinear in x, linear in y.
inline Bicomplex dot(const TVector& x, const TVector& y) {
  detail::require_same_size(x, y);
  Bicomplex acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += conj(x[i], Conjugation::dag3) * y[i];
  return acc;
}

/// A pair of Hermitian positive-definite Gram matrices, one per channel.
/// The product they define is e₁·(X₁* g1 Y₁) + e₂·(X₂* g2 Y₂).
class SplitMetric {
 public:
  static constexpr double kHermitianTol = 1e-12;

  SplitMetric(ComplexMatrix g1, ComplexMatrix g2) : g1_(std::move(g1)), g2_(std::move(g2)) {
    detail::require(g1_.n() == g2_.n(), ErrorCode::DimensionMismatch,
                    "metric blocks must have the same dimension");
    validate(g1_);
    validate(g2_);
  }

  static SplitMetric identity(std::size_t n) {
    return {ComplexMatrix::identity(n), ComplexMatrix::identity(n)};
  }

  std::size_t n() const noexcept { return g1_.n(); }
  const ComplexMatrix& g1() const noexcept { return g1_; }
  const ComplexMatrix& g2() const noexcept { return g2_; }
  const ComplexMatrix& gram(Channel k) const noexcept { return k == Channel::one ? g1_ : g2_; }

 private:
  static void validate(const ComplexMatrix& g) {
    const double scale = 1.0 + frobenius(g);
    if (max_abs_diff(g, conj_transpose(g)) > kHermitianTol * scale) {
      throw Error(ErrorCode::NotPositiveDefinite, "metric block is not Hermitian");
    }
    if (!(min_real_eigenvalue(g) > 0.0)) {
      throw Error(ErrorCode::NotPositiveDefinite, "metric block is not positive definite");
    }
  }

  ComplexMatrix g1_;
  ComplexMatrix g2_;
};

inline Bicomplex dot_split(const TVector& x, const TVector& y, const SplitMetric& m) {
  detail::require_same_size(x, y);
  detail::require(x.size() == m.n(), ErrorCode::DimensionMismatch, "metric dimension mismatch");
  const auto channel_product = [&](Channel k) {
    return hermitian_dot(project(x, k), m.gram(k) * project(y, k));
  };
  return from_idempotent(channel_product(Channel::one), channel_product(Channel::two));
}

/// The split product is closed on V (ℂ(i₁) vectors map to ℂ(i₁)) iff g1 = g2.
inline bool is_closed(const SplitMetric& m, double tol) {
  return max_abs_diff(m.g1(), m.g2()) <= tol;
}

// Norm and metric ---------------------------------------------------------------------

/// Channel norms ‖X₁‖, ‖X₂‖ of a ket.
inline std::pair<double, double> channel_norms(const TVector& x) {
  return {norm2(project(x, Channel::one)), norm2(project(x, Channel::two))};
}

/// ‖X‖ = |(X,X)^{1/2}| = √((‖X₁‖² + ‖X₂‖²)/2).
inline double norm(const TVector& x) {
  const auto [n1, n2] = channel_norms(x);
  return std::hypot(n1, n2) / std::numbers::sqrt2;
}

inline double distance(const TVector& x, const TVector& y) { return norm(x - y); }

/// The three quantities of the bicomplex Schwarz chain lhs ≤ mid ≤ rhs.
struct SchwarzWitness {
  double lhs;  ///< |(X,Y)|
  double mid;  ///< |(X,X)^{1/2}(Y,Y)^{1/2}|
  double rhs;  ///< √2·‖X‖·‖Y‖
};

inline SchwarzWitness schwarz_witness(const TVector& x, const TVector& y) {
  detail::require_same_size(x, y);
  const auto [x1, x2] = channel_norms(x);
  const auto [y1, y2] = channel_norms(y);
  const Hyperbolic root_product = Hyperbolic::from_idempotent(x1 * y1, x2 * y2);
  return {euclid(dot(x, y)), euclid(root_product), std::numbers::sqrt2 * norm(x) * norm(y)};
}

// Bras -----------------------------------------------------------------------------

/// A linear functional on 𝕋ⁿ induced by a ket: ⟨φ|ψ⟩ = (φ, ψ).
class Functional {
 public:
  explicit Functional(TVector ket) : ket_(std::move(ket)) {}

  std::size_t size() const noexcept { return ket_.size(); }
  const TVector& ket() const noexcept { return ket_; }

  Bicomplex operator()(const TVector& psi) const {
    detail::require(psi.size() == ket_.size(), ErrorCode::DimensionMismatch,
                    "functional dimension mismatch");
    return dot(ket_, psi);
  }

  /// (λ·f)(ψ) = λ·f(ψ); the inducing ket becomes λ^{†₃}·φ.
  friend Functional operator*(const Bicomplex& lambda, const Functional& f) {
    return Functional(conj(lambda, Conjugation::dag3) * f.ket_);
  }
  friend Functional operator+(const Functional& f, const Functional& g) {
    return Functional(f.ket_ + g.ket_);
  }

 private:
  TVector ket_;
};

inline Functional bra(const TVector& x) { return Functional(x); }

inline Bicomplex bra_apply(const Functional& f, const TVector& y) { return f(y); }

/// The channel-k functional ψ_k ↦ (φ_k, ψ_k) on V.
class ComplexFunctional {
 public:
  explicit ComplexFunctional(ComplexVector ket) : ket_(std::move(ket)) {}

  const ComplexVector& ket() const noexcept { return ket_; }

  ComplexC1 operator()(const ComplexVector& psi) const { return hermitian_dot(ket_, psi); }

 private:
  ComplexVector ket_;
};

inline ComplexFunctional bra_project(const TVector& x, Channel k) {
  return ComplexFunctional(project(x, k));
}

// Hyperbolic module ------------------------------------------------------------------

inline constexpr double kDefaultZeroChannelTol = 1e-12;

/// Σ xᵢ·yᵢ; †₃ is the identity on 𝔻.
inline Hyperbolic hyp_dot(const HVector& x, const HVector& y) {
  detail::require_same_size(x, y);
  Hyperbolic acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
  return acc;
}

/// Idempotent channel k of a 𝔻-vector, a real vector.
inline std::vector<double> hyp_channel(const HVector& x, Channel k) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = k == Channel::one ? x[i].a() : x[i].b();
  return out;
}

inline double real_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double c : v) acc = std::hypot(acc, c);
  return acc;
}

/// θ₁e₁ + θ₂e₂ where θ_k is the angle between the real channel-k vectors.
inline Hyperbolic hyperbolic_angle(const HVector& x, const HVector& y,
                                   double tol = kDefaultZeroChannelTol) {
  detail::require_same_size(x, y);
  const Hyperbolic d = hyp_dot(x, y);
  double theta[2];
  for (int k = 0; k < 2; ++k) {
    const Channel ch = k == 0 ? Channel::one : Channel::two;
    const double nx = real_norm(hyp_channel(x, ch));
    const double ny = real_norm(hyp_channel(y, ch));
    if (nx <= tol || ny <= tol) {
      throw Error(ErrorCode::ZeroChannel, "hyperbolic angle undefined: a channel vector vanishes");
    }
    const double c = (k == 0 ? d.a() : d.b()) / (nx * ny);
    theta[k] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  return hyp_from_angles(theta[0], theta[1]);
}

}  // namespace bch
