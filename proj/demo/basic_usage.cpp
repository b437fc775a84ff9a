// Walks through the main pieces of the library on small hand-picked inputs.

#include <iostream>

#include "bch/bch.hpp"
#include "bch/json_io.hpp"

int main() {
  using namespace bch;

  // i₁ + i₂ is a zero divisor: one idempotent channel vanishes.
  const Bicomplex w = Bicomplex::i1() + Bicomplex::i2();
  const auto p = to_idempotent(w);
  std::cout << "i1+i2 channels: " << p.p1 << ", " << p.p2 << "  null-cone: " << std::boolalpha
            << is_null_cone(w) << '\n';

  // The canonical product is hyperbolic positive and its norm reduces to |w|.
  const TVector x{Bicomplex(1.0, 2.0, 3.0, 4.0)};
  std::cout << "(x,x) = " << json::dump(json::to_json(dot(x, x))) << "  ||x|| = " << norm(x)
            << '\n';

  // A self-adjoint operator with a non-real hyperbolic eigenvalue.
  const TMatrix a = TMatrix::diagonal({Bicomplex::one(), Bicomplex::j()});
  for (const auto& pair : bicomplex_eig(a).pairs) {
    std::cout << "lambda = " << json::dump(json::to_json(pair.lambda))
              << "  residual = " << pair.residual << "  hyperbolic: " << pair.lambda_hyperbolic
              << '\n';
  }
  return 0;
}
