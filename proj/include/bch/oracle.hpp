#pragma once

// Brute-force reference arithmetic over 𝕋, straight from the multiplication
// table of {1, i₁, i₂, j}. Nothing here may use the idempotent decomposition:
// the differential tests are only meaningful while the two routes share no
// code. This header includes types.hpp and nothing else from the library,
// which tests/unit/oracle_isolation.cpp enforces at compile time.

#include <array>
#include <cstddef>
#include <vector>

#include "bch/types.hpp"

namespace bch::oracle {

inline constexpr std::size_t kMaxDeterminantDimension = 6;

/// One cell of the basis table: basis[a]·basis[b] = sign·basis[index].
struct BasisProduct {
  int sign;
  int index;
};

/// Rows and columns ordered 1, i₁, i₂, j. i₁² = i₂² = −1, j² = 1, i₁i₂ = j,
/// i₁j = −i₂, i₂j = −i₁.
inline constexpr std::array<std::array<BasisProduct, 4>, 4> kBasisTable{{
    {{{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}}},
    {{{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}}},
    {{{+1, 2}, {+1, 3}, {-1, 0}, {-1, 1}}},
    {{{+1, 3}, {-1, 2}, {-1, 1}, {+1, 0}}},
}};

inline Bicomplex add(const Bicomplex& s, const Bicomplex& t) {
  return {s[0] + t[0], s[1] + t[1], s[2] + t[2], s[3] + t[3]};
}

inline Bicomplex sub(const Bicomplex& s, const Bicomplex& t) {
  return {s[0] - t[0], s[1] - t[1], s[2] - t[2], s[3] - t[3]};
}

/// The 16-term expansion Σ s_a·t_b·table(a, b).
inline Bicomplex mul(const Bicomplex& s, const Bicomplex& t) {
  std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto cell = kBasisTable[a][b];
      acc[cell.index] += cell.sign * s[a] * t[b];
    }
  return Bicomplex(acc);
}

/// †₃ by its signature (+, −, −, +).
inline Bicomplex conj3(const Bicomplex& w) { return {w[0], -w[1], -w[2], w[3]}; }

inline Bicomplex dot(const TVector& x, const TVector& y) {
  detail::require(x.size() == y.size(), ErrorCode::DimensionMismatch, "vector lengths differ");
  Bicomplex acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(conj3(x[i]), y[i]));
  return acc;
}

inline TVector matvec(const TMatrix& a, const TVector& x) {
  detail::require(a.n() == x.size(), ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
  std::vector<Bicomplex> out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    Bicomplex acc;
    for (std::size_t k = 0; k < a.n(); ++k) acc = add(acc, mul(a(i, k), x[k]));
    out[i] = acc;
  }
  return TVector(std::move(out));
}

namespace detail {

inline Bicomplex cofactor_det(const TMatrix& a, std::vector<std::size_t>& rows,
                              std::vector<bool>& used_cols, std::size_t depth) {
  const std::size_t n = a.n();
  if (depth == n) return Bicomplex::one();
  Bicomplex acc;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used_cols[c]) continue;
    used_cols[c] = true;
    const Bicomplex minor = cofactor_det(a, rows, used_cols, depth + 1);
    used_cols[c] = false;
    const Bicomplex term = mul(a(rows[depth], c), minor);
    acc = sign > 0 ? add(acc, term) : sub(acc, term);
    sign = -sign;
  }
  return acc;
}

}  // namespace detail

/// Laplace expansion along successive rows, division-free (n ≤ 6).
inline Bicomplex det(const TMatrix& a) {
  if (a.n() > kMaxDeterminantDimension) {
    throw Error(ErrorCode::InvalidArgument, "cofactor determinant supports n <= 6");
  }
  std::vector<std::size_t> rows(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) rows[i] = i;
  std::vector<bool> used(a.n(), false);
  return detail::cofactor_det(a, rows, used, 0);
}

}  // namespace bch::oracle
