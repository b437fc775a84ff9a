#pragma once

// Dense complex linear algebra for the two channel problems: products,
// LU solves, determinants and the eigensolver.
//
// Eigenvalues come from the characteristic polynomial (Faddeev–LeVerrier)
// solved by Durand–Kerner; eigenvectors from shifted inverse iteration, with
// the eigenvalue refined to the Rayleigh quotient of the final vector. The
// acceptance test for every pair is the residual bound on the matrix itself,
// so inaccurate polynomial roots are repaired rather than reported.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "bch/types.hpp"

namespace bch {

inline constexpr std::size_t kMaxEigenDimension = 32;

// Basic operations ------------------------------------------------------------

inline ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  detail::require(a.n() == x.size(), ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  std::vector<ComplexC1> y(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    ComplexC1 acc = 0.0;
    for (std::size_t k = 0; k < a.n(); ++k) acc += a(i, k) * x[k];
    y[i] = acc;
  }
  return ComplexVector(std::move(y));
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require(a.n() == b.n(), ErrorCode::DimensionMismatch, "matrix size mismatch");
  const std::size_t n = a.n();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexC1 aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// Σ conj(xᵢ)·yᵢ, linear in the second argument.
inline ComplexC1 hermitian_dot(const ComplexVector& x, const ComplexVector& y) {
  detail::require(x.size() == y.size(), ErrorCode::DimensionMismatch, "vector size mismatch");
  ComplexC1 acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

inline double norm2(const ComplexVector& x) noexcept {
  double scale = 0.0;
  for (const auto& c : x) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  double ssq = 0.0;
  for (const auto& c : x) ssq += std::norm(c / scale);
  return scale * std::sqrt(ssq);
}

inline double frobenius(const ComplexMatrix& a) noexcept {
  double ssq = 0.0;
  for (const auto& c : a.entries()) ssq += std::norm(c);
  return std::sqrt(ssq);
}

inline ComplexMatrix conj_transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require(a.n() == b.n(), ErrorCode::DimensionMismatch, "matrix size mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

// LU with partial pivoting -------------------------------------------------------

class ComplexLU {
 public:
  explicit ComplexLU(const ComplexMatrix& a) : lu_(a), perm_(a.n()) {
    const std::size_t n = a.n();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          pivot = i;
        }
      }
      if (pivot != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pivot, j));
        std::swap(perm_[k], perm_[pivot]);
        sign_ = -sign_;
      }
      if (best == 0.0) {
        singular_ = true;
        continue;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const ComplexC1 factor = lu_(i, k) / lu_(k, k);
        lu_(i, k) = factor;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
      }
    }
  }

  bool singular() const noexcept { return singular_; }

  ComplexC1 determinant() const {
    ComplexC1 det = sign_;
    for (std::size_t k = 0; k < lu_.n(); ++k) det *= lu_(k, k);
    return det;
  }

  /// Solves A·x = b. Exactly zero pivots are replaced by `floor` so that
  /// inverse iteration at an exact eigenvalue still produces a direction.
  ComplexVector solve(const ComplexVector& b, double floor = 0.0) const {
    const std::size_t n = lu_.n();
    detail::require(b.size() == n, ErrorCode::DimensionMismatch, "rhs size mismatch");
    std::vector<ComplexC1> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      ComplexC1 acc = b[perm_[i]];
      for (std::size_t k = 0; k < i; ++k) acc -= lu_(i, k) * y[k];
      y[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      ComplexC1 acc = y[ii];
      for (std::size_t k = ii + 1; k < n; ++k) acc -= lu_(ii, k) * y[k];
      ComplexC1 pivot = lu_(ii, ii);
      if (pivot == 0.0) {
        if (floor == 0.0) throw Error(ErrorCode::InvalidArgument, "singular matrix");
        pivot = floor;
      }
      y[ii] = acc / pivot;
    }
    return ComplexVector(std::move(y));
  }

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  double sign_ = 1.0;
  bool singular_ = false;
};

inline ComplexC1 determinant(const ComplexMatrix& a) { return ComplexLU(a).determinant(); }

// Characteristic polynomial and roots ------------------------------------------------

/// Coefficients c₀..cₙ (ascending, cₙ = 1) of det(λI − A), by Faddeev–LeVerrier.
inline std::vector<ComplexC1> characteristic_polynomial(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  std::vector<ComplexC1> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m(n);  // M₀ = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const ComplexMatrix am = a * m;
    ComplexC1 trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

inline ComplexC1 eval_polynomial(const std::vector<ComplexC1>& coeffs, ComplexC1 z) {
  ComplexC1 acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

struct PolynomialRoots {
  std::vector<ComplexC1> roots;
  int iterations = 0;
  bool converged = false;
};

/// Durand–Kerner (Weierstrass) iteration for a monic polynomial given in
/// ascending order. Starting points are the powers of 0.4 + 0.9i.
inline PolynomialRoots durand_kerner(const std::vector<ComplexC1>& monic, int max_iterations = 500,
                                     double rel_tol = 1e-13) {
  const std::size_t n = monic.size() - 1;
  PolynomialRoots out;
  out.roots.resize(n);
  const ComplexC1 seed{0.4, 0.9};
  ComplexC1 power = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.roots[i] = power;
    power *= seed;
  }
  if (n == 1) {
    out.roots[0] = -monic[0];
    out.converged = true;
    return out;
  }
  for (int it = 1; it <= max_iterations; ++it) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexC1 denom = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i) continue;
        ComplexC1 gap = out.roots[i] - out.roots[k];
        if (gap == 0.0) gap = std::numeric_limits<double>::epsilon();
        denom *= gap;
      }
      const ComplexC1 step = eval_polynomial(monic, out.roots[i]) / denom;
      out.roots[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(out.roots[i])));
    }
    out.iterations = it;
    if (!std::isfinite(worst)) break;
    if (worst <= rel_tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

// Eigenpairs ----------------------------------------------------------------------

struct ComplexEigenPair {
  ComplexC1 value;
  ComplexVector vector;
  /// Size of the root cluster (relative spacing 1e-8) this value belongs to.
  std::size_t multiplicity = 1;
};

/// ‖A·v − λ·v‖ / ‖v‖.
inline double eigen_residual(const ComplexMatrix& a, ComplexC1 lambda, const ComplexVector& v) {
  const ComplexVector av = a * v;
  std::vector<ComplexC1> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = av[i] - lambda * v[i];
  const double nv = norm2(v);
  if (nv == 0.0) return std::numeric_limits<double>::infinity();
  return norm2(ComplexVector(std::move(r))) / nv;
}

/// Unit 2-norm; the largest-magnitude coefficient (first one on ties) is made
/// real and positive.
inline ComplexVector normalize_phase(const ComplexVector& v) {
  std::size_t lead = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
  const double nv = norm2(v);
  const ComplexC1 phase = std::abs(v[lead]) > 0.0 ? std::conj(v[lead]) / std::abs(v[lead]) : 1.0;
  std::vector<ComplexC1> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * phase / nv;
  out[lead] = ComplexC1(out[lead].real(), 0.0);
  return ComplexVector(std::move(out));
}

namespace detail {

inline ComplexVector start_vector(std::size_t n) {
  std::vector<ComplexC1> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i + 1);
    v[i] = {1.0 / t + 0.1 * std::sin(3.0 * t), 0.05 * std::cos(5.0 * t)};
  }
  return ComplexVector(std::move(v));
}

inline void orthogonalize(std::vector<ComplexC1>& v, const std::vector<ComplexVector>& against) {
  for (const auto& u : against) {
    ComplexC1 proj = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) proj += std::conj(u[i]) * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
  }
}

struct Refined {
  ComplexC1 value;
  ComplexVector vector;
  double residual;
};

/// Shifted inverse iteration. When `against` is non-empty the iterate is kept
/// orthogonal to it, which separates eigenvectors of a repeated eigenvalue.
inline Refined inverse_iteration(const ComplexMatrix& a, ComplexC1 root, double scale,
                                 const std::vector<ComplexVector>& against, int max_iterations,
                                 double stop_residual) {
  const std::size_t n = a.n();
  const ComplexC1 shift = root + ComplexC1(1e-10, 0.7e-10) * scale;
  ComplexMatrix shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= shift;
  const ComplexLU lu(shifted);
  const double floor = std::numeric_limits<double>::epsilon() * scale;

  std::vector<ComplexC1> v = start_vector(n).coeffs();
  orthogonalize(v, against);
  if (!against.empty() && norm2(ComplexVector(v)) < 1e-3) {
    // The default start lies in the span already found; take the coordinate
    // axis with the largest component outside it.
    double best_norm = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<ComplexC1> e(n);
      e[k] = 1.0;
      orthogonalize(e, against);
      const double ne = norm2(ComplexVector(e));
      if (ne > best_norm) {
        best_norm = ne;
        v = std::move(e);
      }
    }
  }
  Refined best{root, ComplexVector(n), std::numeric_limits<double>::infinity()};
  for (int it = 0; it < max_iterations; ++it) {
    if (!std::all_of(v.begin(), v.end(), [](const ComplexC1& c) { return finite(c); })) break;
    ComplexVector vv(v);
    double nv = norm2(vv);
    if (nv == 0.0 || !std::isfinite(nv)) break;
    std::vector<ComplexC1> y = lu.solve(vv, floor).coeffs();
    orthogonalize(y, against);
    if (!std::all_of(y.begin(), y.end(), [](const ComplexC1& c) { return finite(c); })) break;
    ComplexVector yy(std::move(y));
    const double ny = norm2(yy);
    if (ny == 0.0 || !std::isfinite(ny)) break;
    const ComplexVector unit = normalize_phase(yy);
    const ComplexC1 rayleigh = hermitian_dot(unit, a * unit);
    const double r_rayleigh = eigen_residual(a, rayleigh, unit);
    const double r_root = eigen_residual(a, root, unit);
    const bool use_rayleigh = r_rayleigh <= r_root;
    const double r = use_rayleigh ? r_rayleigh : r_root;
    if (r < best.residual) best = {use_rayleigh ? rayleigh : root, unit, r};
    if (r <= stop_residual) break;
    v = unit.coeffs();
  }
  return best;
}

}  // namespace detail

/// All n eigenpairs of a complex matrix (n ≤ 32), eigenvalues with multiplicity.
/// Each pair satisfies ‖A·v − λ·v‖ ≤ 1e-8·(1 + ‖A‖_F) with ‖v‖ = 1; otherwise
/// ConvergenceFailure is thrown.
inline std::vector<ComplexEigenPair> complex_eig(const ComplexMatrix& a) {
  const std::size_t n = a.n();
  if (n > kMaxEigenDimension) {
    throw Error(ErrorCode::InvalidArgument, "eigensolver supports n <= 32");
  }
  const double fro = frobenius(a);
  const double accept = 1e-8 * (1.0 + fro);
  std::vector<ComplexEigenPair> out;
  out.reserve(n);

  if (fro == 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      ComplexVector e(n);
      e[i] = 1.0;
      out.push_back({0.0, e, n});
    }
    return out;
  }

  // Work on A/‖A‖_F so the polynomial coefficients stay O(1).
  ComplexMatrix scaled = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) /= fro;
  const auto poly = characteristic_polynomial(scaled);
  const auto found = durand_kerner(poly);
  std::vector<ComplexC1> roots = found.roots;
  for (auto& r : roots) r *= fro;
  std::sort(roots.begin(), roots.end(), [](ComplexC1 x, ComplexC1 y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  // Durand–Kerner resolves an m-fold root only to about ε^{1/m}, so
  // repeated eigenvalues are recognised after refinement, not from the roots.
  const double stop = 1e-14 * (1.0 + fro);
  const double same = 1e-6 * (1.0 + fro);
  for (std::size_t i = 0; i < n; ++i) {
    auto refined = detail::inverse_iteration(a, roots[i], fro, {}, 50, stop);
    std::vector<ComplexVector> siblings;
    for (const auto& p : out) {
      if (std::abs(p.value - refined.value) > same) continue;
      // Orthonormal basis of the sibling span, so one projection pass suffices.
      std::vector<ComplexC1> v = p.vector.coeffs();
      detail::orthogonalize(v, siblings);
      const double nv = norm2(ComplexVector(v));
      if (nv <= 1e-8) continue;
      for (auto& c : v) c /= nv;
      siblings.emplace_back(std::move(v));
    }
    if (!siblings.empty()) {
      // Semisimple: an independent vector exists. Defective: keep the repeat.
      auto other = detail::inverse_iteration(a, refined.value, fro, siblings, 50, stop);
      if (other.residual <= accept) refined = std::move(other);
    }
    if (!(refined.residual <= accept)) {
      throw Error(ErrorCode::ConvergenceFailure,
                  "eigenpair did not reach the residual bound within the iteration budget");
    }
    out.push_back({refined.value, refined.vector, 1});
  }
  for (auto& p : out) {
    p.multiplicity = 0;
    for (const auto& q : out) p.multiplicity += std::abs(p.value - q.value) <= same ? 1 : 0;
  }
  return out;
}

/// Smallest real part over the spectrum; used to test positive definiteness.
inline double min_real_eigenvalue(const ComplexMatrix& a) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : complex_eig(a)) lo = std::min(lo, p.value.real());
  return lo;
}

}  // namespace bch
