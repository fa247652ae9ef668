#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "htensor/heig.hpp"

using namespace htensor;
using fixtures::I;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("enumeration recovers the {0, 1, 2} spectrum") {
  ComplexTensor A = fixtures::cps_psd_012();
  SolverConfig cfg;
  cfg.starts = 60;
  auto pairs = enumerate_eigenvalues(A, cfg);
  REQUIRE(pairs.size() == 3);
  CHECK(std::abs(pairs[0].lambda.real() - 0.0) < 1e-8);
  CHECK(std::abs(pairs[1].lambda.real() - 1.0) < 1e-8);
  CHECK(std::abs(pairs[2].lambda.real() - 2.0) < 1e-8);
  for (const auto& p : pairs) CHECK(p.residual <= 1e-8);
}

TEST_CASE("stated eigenvector families have tiny residuals") {
  ComplexTensor A = fixtures::cps_psd_012();
  ComplexVector v0 = {std::polar(1.0, kPi / 4.0), 1.0};
  ComplexVector v2 = {std::polar(1.0, -kPi / 4.0), 1.0};
  CHECK(residual(A, 0.0, v0) <= 1e-10);
  CHECK(residual(A, 2.0, v2) <= 1e-10);
  CHECK(residual(A, 1.0, {1.0, 0.0}) <= 1e-10);
  CHECK(residual(A, 1.0, {0.0, 1.0}) <= 1e-10);

  // Residual is invariant under rescaling by any nonzero complex factor.
  std::mt19937 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    Cplx k(gauss(rng), gauss(rng));
    if (std::abs(k) < 1e-3) continue;
    ComplexVector scaled = {k * v0[0], k * v0[1]};
    CHECK(residual(A, 0.0, scaled) <= 1e-10);
  }
}

TEST_CASE("matrix spectrum 2 +/- sqrt(3) and 2") {
  auto pairs = matrix_eigen(fixtures::herm3_matrix());
  REQUIRE(pairs.size() == 3);
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(pairs[0].lambda.real() - (2.0 - s3)) < 1e-10);
  CHECK(std::abs(pairs[1].lambda.real() - 2.0) < 1e-10);
  CHECK(std::abs(pairs[2].lambda.real() - (2.0 + s3)) < 1e-10);
  for (const auto& p : pairs) CHECK(p.residual < 1e-10);
}

TEST_CASE("enumeration agrees with dense eigendecomposition at m = 1") {
  std::mt19937 rng(19);
  SolverConfig cfg;
  cfg.starts = 150;
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 4;
    ComplexTensor A = fixtures::random_hermitian(1, n, 3 * n, rng);
    auto oracle = matrix_eigen(A);
    auto found = enumerate_eigenvalues(A, cfg);

    std::vector<double> expect;
    for (const auto& p : oracle) {
      if (!expect.empty() && std::abs(p.lambda.real() - expect.back()) <=
                                 cfg.dedup_tol)
        continue;
      expect.push_back(p.lambda.real());
    }
    REQUIRE(found.size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k)
      CHECK(std::abs(found[k].lambda.real() - expect[k]) < 1e-8);
  }
}

TEST_CASE("distinct eigenvalue count stays under the bound") {
  std::mt19937 rng(23);
  SolverConfig cfg;
  cfg.starts = 40;
  for (int trial = 0; trial < 10; ++trial) {
    int m = 1 + trial % 2;
    int n = 2;
    ComplexTensor A = fixtures::random_hermitian(m, n, 8, rng);
    auto pairs = enumerate_eigenvalues(A, cfg);
    double bound = 2.0 * n * std::pow(2.0 * m - 1.0, 2 * n - 1);
    CHECK(static_cast<double>(pairs.size()) <= bound);
  }
}

TEST_CASE("extremal eigenvalues bracket the form on the sphere") {
  ComplexTensor A = fixtures::cps_psd_012();
  SolverConfig cfg;
  cfg.starts = 24;
  auto [mn, mx] = extremal_eigenvalues(A, cfg);
  CHECK(std::abs(mn.lambda.real() - 0.0) < 1e-8);
  CHECK(std::abs(mx.lambda.real() - 2.0) < 1e-8);
  CHECK(mn.residual <= 1e-8);
  CHECK(mx.residual <= 1e-8);

  // Rayleigh identity: lambda equals the form value at the eigenvector.
  CHECK(std::abs(eval_form(A, mn.vector).real() - mn.lambda.real()) < 1e-8);
  CHECK(std::abs(eval_form(A, mx.vector).real() - mx.lambda.real()) < 1e-8);
}

TEST_CASE("eigen certificate distinguishes PSD from indefinite") {
  SolverConfig cfg;
  cfg.starts = 24;

  Certificate psd = certify_pd_by_eigen(fixtures::cps_psd_012(), cfg);
  CHECK(psd.verdict == Verdict::PositiveSemidefinite);
  CHECK(psd.rule == Rule::ExtremalEigenvalue);
  REQUIRE(psd.lambda_min.has_value());
  CHECK(std::abs(*psd.lambda_min) <= cfg.dedup_tol);

  Certificate bad =
      certify_pd_by_eigen(fixtures::real_pd_not_hermitian_pd(), cfg);
  CHECK(bad.verdict == Verdict::IndefiniteOrNegative);
  REQUIRE(bad.witness_vector.has_value());
  CHECK(eval_form(fixtures::real_pd_not_hermitian_pd(), *bad.witness_vector)
            .real() < 0.0);
}

TEST_CASE("solver rejects non-Hermitian input") {
  ComplexTensor bad = build(1, 2, {{{1, 2}, I}, {{2, 1}, I}});
  SolverConfig cfg;
  CHECK_THROWS_AS(enumerate_eigenvalues(bad, cfg), Error);
  CHECK_THROWS_AS(extremal_eigenvalues(bad, cfg), Error);
  CHECK_THROWS_AS(matrix_eigen(bad), Error);
  CHECK_THROWS_AS(matrix_eigen(fixtures::cps_psd_012()), Error);
}
