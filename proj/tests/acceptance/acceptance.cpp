// Acceptance gate. Runs each criterion on fixed seeds and prints one PASS/FAIL
// line per criterion; exits non-zero if any fails. Tolerances are pinned here.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "bch/bch.hpp"
#include "bch/json_io.hpp"
#include "bch/oracle.hpp"
#include "bch/sampling.hpp"

namespace {

using namespace bch;

constexpr double kAlgebraTol = 1e-12;
constexpr double kModuliTol = 1e-10;
constexpr double kModuleTol = 1e-10;
constexpr double kSplitTol = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kDeterminantTol = 1e-6;
constexpr double kWorkedExampleTol = 1e-12;
constexpr double kHyperbolicTol = 1e-8;
constexpr double kAngleTol = 1e-10;

constexpr std::size_t kScalarSamples = 10000;
constexpr std::size_t kModulePairs = 10000;
constexpr std::size_t kSplitSamples = 1000;
constexpr std::size_t kEigenMatrices = 200;
constexpr std::size_t kAngleSamples = 1000;

/// Largest observed error against a bound, plus any hard failure message.
struct Tally {
  double worst = 0.0;  // error / tolerance, so ≤ 1 passes
  std::string failure;

  void error(double err, double tol, double scale = 1.0) {
    const double ratio = err / (tol * std::max(1.0, scale));
    if (!(ratio <= 1.0) && failure.empty()) failure = "bound exceeded";
    worst = std::max(worst, std::isnan(ratio) ? INFINITY : ratio);
  }
  void check(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool pass() const { return failure.empty(); }
};

double diff(const Bicomplex& a, const Bicomplex& b) { return euclid(a - b); }

double diff(const Hyperbolic& a, const Hyperbolic& b) { return euclid(a - b); }

bool same_bits(const Bicomplex& a, const Bicomplex& b) { return a == b; }

// 1 -------------------------------------------------------------------------------

Tally algebra() {
  Tally t;
  Sampler rng(101);
  const Conjugation all[] = {Conjugation::identity, Conjugation::dag1, Conjugation::dag2,
                             Conjugation::dag3};
  // Klein table: composing the maps equals the tabulated product, bit for bit.
  for (int s = 0; s < 100; ++s) {
    const Bicomplex w = rng.bicomplex();
    for (auto a : all)
      for (auto b : all) t.check(same_bits(conj(conj(w, b), a), conj(w, compose(a, b))), "Klein");
  }
  for (auto a : all) t.check(compose(a, a) == Conjugation::identity, "Klein involution");
  t.check(compose(Conjugation::dag1, Conjugation::dag2) == Conjugation::dag3, "Klein 1∘2");

  for (std::size_t s = 0; s < kScalarSamples; ++s) {
    const Bicomplex x = rng.bicomplex();
    const Bicomplex y = rng.bicomplex();
    const Bicomplex z = rng.bicomplex();
    const double mx = mod3(x), my = mod3(y), mz = mod3(z);
    for (auto k : all) {
      t.error(diff(conj(x + y, k), conj(x, k) + conj(y, k)), kAlgebraTol, mx + my);
      t.error(diff(conj(x * y, k), conj(x, k) * conj(y, k)), kAlgebraTol, mx * my);
      t.check(same_bits(conj(conj(x, k), k), x), "involution");
    }
    t.error(diff(x * y, y * x), kAlgebraTol, mx * my);
    t.error(diff((x * y) * z, x * (y * z)), kAlgebraTol, 2 * mx * my * mz);
    t.error(diff(x * (y + z), x * y + x * z), kAlgebraTol, mx * (my + mz));
    t.error(diff((x + y) + z, x + (y + z)), kAlgebraTol, mx + my + mz);
    t.error(diff(Bicomplex::one() * x, x), kAlgebraTol, mx);
    t.error(diff(x + (-x), Bicomplex::zero()), kAlgebraTol, mx);
    t.error(diff(x * y, oracle::mul(x, y)), kAlgebraTol, mx * my);
  }
  return t;
}

// 2 -------------------------------------------------------------------------------

Tally moduli() {
  Tally t;
  Sampler rng(202);
  for (std::size_t s = 0; s < kScalarSamples; ++s) {
    const Bicomplex x = rng.bicomplex();
    const Bicomplex y = rng.bicomplex();
    const double mx = mod3(x), my = mod3(y);
    t.error(std::abs(mod1(x * y) - mod1(x) * mod1(y)), kModuliTol, mx * my);

    // mod1⁴ is the real product w·w^{†₁}·w^{†₂}·w^{†₃}, formed by the oracle.
    const Bicomplex four =
        oracle::mul(oracle::mul(x, conj(x, Conjugation::dag1)),
                    oracle::mul(conj(x, Conjugation::dag2), conj(x, Conjugation::dag3)));
    t.error(diff(four, Bicomplex{std::pow(mod1(x), 4), 0, 0, 0}), kModuliTol, std::pow(mx, 4));

    t.error(diff(mod_sq_j(x * y), mod_sq_j(x) * mod_sq_j(y)), kModuliTol, mx * mx * my * my);

    t.check(mod3(x + y) <= (mx + my) * (1 + kModuliTol), "mod3 triangle");
    t.check(mod3(x * y) <= std::numbers::sqrt2 * mx * my * (1 + kModuliTol), "mod3 sqrt2");

    const ComplexC1 c = rng.complex();
    t.error(std::abs(mod3(Bicomplex::from_c1(c) * y) - std::abs(c) * my), kModuliTol,
            std::abs(c) * my);
    const ComplexC2 c2 = rng.complex2();
    t.error(std::abs(mod3(Bicomplex::from_c2(c2) * y) - c2.abs() * my), kModuliTol,
            c2.abs() * my);
  }
  // Constructed null-cone members z(i₁ ± i₂), and perturbations off the cone.
  for (std::size_t s = 0; s < 1000; ++s) {
    const Bicomplex z = Bicomplex::from_c1(rng.complex());
    for (double sign : {1.0, -1.0}) {
      const Bicomplex w = z * (Bicomplex::i1() + sign * Bicomplex::i2());
      t.check(is_null_cone(w), "null-cone flag");
      t.check(mod1(w) <= 1e-6 * std::max(1.0, mod3(w)), "mod1 on cone");
      const Bicomplex off = w + Bicomplex{0.5, 0, 0, 0};
      t.check(!is_null_cone(off) && mod1(off) > 0.0, "off cone");
    }
  }
  return t;
}

// 3 -------------------------------------------------------------------------------

TVector c1_vector(Sampler& rng, std::size_t n) {
  TVector v = TVector::zero(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Bicomplex::from_c1(rng.complex());
  return v;
}

Tally module() {
  Tally t;
  Sampler rng(303);
  for (std::size_t s = 0; s < kModulePairs; ++s) {
    const std::size_t n = rng.dimension(1, 8);
    const TVector x = rng.tvector(n);
    const TVector y = rng.tvector(n);
    const TVector z = rng.tvector(n);
    const Bicomplex a = rng.bicomplex();
    const Bicomplex b = rng.bicomplex();
    const double nx = norm(x), ny = norm(y), nz = norm(z);
    const double pxy = 2 * nx * ny;

    // Scalar-product axioms: linear in the second slot, †₃-Hermitian, definite.
    t.error(diff(dot(x, a * y + b * z), a * dot(x, y) + b * dot(x, z)), kModuleTol,
            4 * nx * (mod3(a) * ny + mod3(b) * nz));
    t.error(diff(dot(x, y), conj(dot(y, x), Conjugation::dag3)), kModuleTol, pxy);
    t.check(norm(x) > 0.0 && dot(TVector::zero(n), TVector::zero(n)) == Bicomplex::zero(),
            "definiteness");

    // Channel decomposition.
    const Bicomplex d = dot(x, y);
    for (Channel k : {Channel::one, Channel::two}) {
      const ComplexC1 h = hermitian_dot(project(x, k), project(y, k));
      t.error(std::abs(channel(d, k) - h), kModuleTol, pxy);
    }

    // Hyperbolic positivity and closure on ℂ(i₁) coefficients.
    t.check(is_hyperbolic_positive(dot(x, x), kModuleTol * nx * nx), "positivity");
    const TVector u = c1_vector(rng, n);
    const TVector v = c1_vector(rng, n);
    const Bicomplex cuv = dot(u, v);
    t.error(std::hypot(cuv.w2(), cuv.w3()), kModuleTol, norm(u) * norm(v));

    // Norm and metric axioms.
    const ComplexC1 c = rng.complex();
    t.error(std::abs(norm(Bicomplex::from_c1(c) * x) - std::abs(c) * nx), kModuleTol,
            std::abs(c) * nx);
    const ComplexC2 c2 = rng.complex2();
    t.error(std::abs(norm(Bicomplex::from_c2(c2) * x) - c2.abs() * nx), kModuleTol,
            c2.abs() * nx);
    t.check(norm(a * x) <= std::numbers::sqrt2 * mod3(a) * nx * (1 + 1e-12), "sqrt2 scaling");
    t.check(norm(x + y) <= (nx + ny) * (1 + kModuleTol), "triangle");
    t.check(distance(x, x) == 0.0, "d(x,x)");
    t.check(distance(x, y) == distance(y, x), "symmetry");
    t.check(distance(x, z) <= (distance(x, y) + distance(y, z)) * (1 + kModuleTol), "metric");

    // Projection bound.
    for (Channel k : {Channel::one, Channel::two})
      t.check(norm2(project(x, k)) <= std::numbers::sqrt2 * nx * (1 + 1e-12), "projection");

    const SchwarzWitness w = schwarz_witness(x, y);
    t.check(w.lhs <= w.mid * (1 + kModuleTol) && w.mid <= w.rhs * (1 + kModuleTol), "Schwarz");
  }
  return t;
}

// 4 -------------------------------------------------------------------------------

Tally split_metric() {
  Tally t;
  Sampler rng(404);
  for (std::size_t s = 0; s < kSplitSamples; ++s) {
    const std::size_t n = rng.dimension(1, 8);
    const TVector x = rng.tvector(n);
    const TVector y = rng.tvector(n);
    const SplitMetric m = SplitMetric::identity(n);
    t.error(diff(dot_split(x, y, m), dot(x, y)), kSplitTol, 2 * norm(x) * norm(y));
    const Bicomplex w = rng.bicomplex();
    t.error(std::abs(norm(TVector{w}) - euclid(w)), kSplitTol, euclid(w));
  }
  t.check(is_closed(SplitMetric::identity(2), kSplitTol), "identity metric closed");

  // g1 = 2I, g2 = 3I: the ℂ(i₁) pair ([1], [1]) has dot 2.5 − 0.5j.
  const SplitMetric skew(ComplexMatrix::identity(1) , ComplexMatrix(1, {ComplexC1(3)}));
  const SplitMetric uneven(ComplexMatrix(1, {ComplexC1(2)}), ComplexMatrix(1, {ComplexC1(3)}));
  const Bicomplex v = dot_split(TVector{Bicomplex::one()}, TVector{Bicomplex::one()}, uneven);
  t.check(std::abs(v.w3()) > kSplitTol, "closure violation");
  t.check(!is_closed(uneven, kSplitTol) && !is_closed(skew, kSplitTol), "is_closed");
  return t;
}

// 5 -------------------------------------------------------------------------------

Tally eigen() {
  Tally t;
  Sampler rng(505);
  for (std::size_t s = 0; s < kEigenMatrices; ++s) {
    const std::size_t n = rng.dimension(1, 6);
    const TMatrix a = rng.tmatrix(n);
    const double fro = frobenius(a);
    for (Pairing pairing : {Pairing::diagonal, Pairing::full}) {
      const EigenReport r = bicomplex_eig(a, pairing);
      t.check(!r.pairs.empty(), "no pairs");
      for (const auto& p : r.pairs) {
        t.error(verify_eig(a, p.lambda, p.vector), kResidualTol);
        const Bicomplex d = oracle::det(shift(a, p.lambda));
        const double scale = std::pow(1.0 + fro + mod3(p.lambda), static_cast<double>(n));
        for (Channel k : {Channel::one, Channel::two})
          t.error(std::abs(channel(d, k)), kDeterminantTol, scale);
      }
    }
  }
  const EigenReport r = bicomplex_eig(TMatrix(1, {Bicomplex::j()}));
  t.check(r.pairs.size() == 1, "[[j]] pair count");
  if (!r.pairs.empty()) t.error(diff(r.pairs[0].lambda, Bicomplex::j()), kWorkedExampleTol);
  return t;
}

// 6 -------------------------------------------------------------------------------

Tally selfadjoint() {
  Tally t;
  Sampler rng(606);
  for (std::size_t s = 0; s < kEigenMatrices; ++s) {
    const TMatrix a = rng.self_adjoint(rng.dimension(1, 6));
    t.check(is_self_adjoint(a), "construction");
    for (Pairing pairing : {Pairing::diagonal, Pairing::full})
      for (const auto& p : bicomplex_eig(a, pairing).pairs)
        t.check(is_hyperbolic(p.lambda, kHyperbolicTol), "non-hyperbolic eigenvalue");
  }
  bool non_real = false;
  for (const auto& p : bicomplex_eig(TMatrix::diagonal({Bicomplex::one(), Bicomplex::j()})).pairs)
    non_real = non_real || (is_hyperbolic(p.lambda, kHyperbolicTol) && std::abs(p.lambda.w3()) > 0.5);
  t.check(non_real, "diag(1, j) has no non-real hyperbolic eigenvalue");
  return t;
}

// 7 -------------------------------------------------------------------------------

Tally angle() {
  Tally t;
  Sampler rng(707);
  std::size_t done = 0;
  while (done < kAngleSamples) {
    const std::size_t n = rng.dimension(1, 8);
    const HVector x = rng.hvector(n);
    const HVector y = rng.hvector(n);
    const double x1 = real_norm(hyp_channel(x, Channel::one));
    const double x2 = real_norm(hyp_channel(x, Channel::two));
    const double y1 = real_norm(hyp_channel(y, Channel::one));
    const double y2 = real_norm(hyp_channel(y, Channel::two));
    if (std::min({x1, x2, y1, y2}) <= 1e-6) continue;
    ++done;
    const Hyperbolic c = hyp_cos(hyperbolic_angle(x, y));
    const Hyperbolic h = hyp_dot(x, y);
    t.error(std::abs(c.a() - h.a() / (x1 * y1)), kAngleTol);
    t.error(std::abs(c.b() - h.b() / (x2 * y2)), kAngleTol);
  }
  const HVector e1{Hyperbolic{1, 0}, Hyperbolic{0, 0}};
  const HVector e2{Hyperbolic{0, 0}, Hyperbolic{1, 0}};
  t.error(diff(hyperbolic_angle(e1, e2), Hyperbolic{std::numbers::pi / 2, 0}), kAngleTol);
  return t;
}

// 8 -------------------------------------------------------------------------------

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::pair<int, std::string> run_cli(const std::string& args, const std::string& input) {
  const fs::path file = fs::temp_directory_path() / "bch_acceptance_input.json";
  std::ofstream(file) << input;
  const std::string cmd = "'" BCH_CLI_PATH "' " + args + " < '" + file.string() + "' 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  fs::remove(file);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Tally cli() {
  Tally t;
  const fs::path dir = BCH_GOLDEN_DIR;
  for (const auto& [command, stem] : {std::pair{"eig", "eig_j"}, {"selfadjoint", "selfadjoint_i2"},
                                      {"norm", "norm_zero"}}) {
    const auto [code, out] = run_cli(command, slurp(dir / (std::string(stem) + ".input.json")));
    t.check(code == 0, std::string(stem) + " exit code");
    t.check(out == slurp(dir / (std::string(stem) + ".expected.json")), std::string(stem) + " bytes");
  }
  t.check(run_cli("norm", "[[1,2").first == 2, "ParseError -> 2");
  t.check(run_cli("angle", R"({"x":[[1,1]],"y":[[1,0]]})").first == 1, "ZeroChannel -> 1");
  t.check(run_cli("selfadjoint --strict", R"({"n":1,"entries":[[0,0,1,0]]})").first == 1,
          "NotSelfAdjoint -> 1");
  t.check(run_cli("dot", R"({"x":[[1,0,0,0]],"y":[]})").first == 2, "malformed -> 2");
  t.check(run_cli("eig --pairing sideways", R"({"n":1,"entries":[[1,0,0,0]]})").first == 2,
          "usage -> 2");
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Tally()> run;
  };
  const Criterion criteria[] = {
      {"algebra", algebra},   {"moduli", moduli},           {"module", module},
      {"split metric", split_metric}, {"eigen", eigen},     {"self-adjoint spectrum", selfadjoint},
      {"hyperbolic angle", angle},    {"cli golden", cli},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.failure = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %-22s %s  worst/tol %.3g%s%s\n", index, c.name,
                t.pass() ? "PASS" : "FAIL", t.worst, t.pass() ? "" : "  ", t.failure.c_str());
    failed += t.pass() ? 0 : 1;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - failed, secs);
  return failed == 0 ? 0 : 1;
}
