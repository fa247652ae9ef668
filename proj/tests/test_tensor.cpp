#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "htensor/complex_tensor.hpp"

using namespace htensor;
using fixtures::I;

TEST_CASE("build validates input") {
  SECTION("duplicate tuple") {
    CHECK_THROWS_AS(
        build(1, 2, {{{1, 1}, 1.0}, {{1, 1}, 2.0}}), Error);
  }
  SECTION("index out of range") {
    CHECK_THROWS_AS(build(1, 2, {{{1, 3}, 1.0}}), Error);
    CHECK_THROWS_AS(build(1, 2, {{{0, 1}, 1.0}}), Error);
  }
  SECTION("arity mismatch") {
    CHECK_THROWS_AS(build(2, 2, {{{1, 1}, 1.0}}), Error);
  }
  SECTION("zero values are dropped") {
    ComplexTensor A = build(1, 2, {{{1, 2}, 0.0}, {{1, 1}, 1.0}});
    CHECK(A.nnz() == 1);
  }
}

TEST_CASE("hermitian and CPS predicates") {
  CHECK(is_hermitian(fixtures::cps_psd_012()));
  CHECK(is_cps(fixtures::cps_psd_012()));
  CHECK(is_hermitian(fixtures::real_pd_not_hermitian_pd()));
  CHECK(is_hermitian(fixtures::herm3_matrix()));
  CHECK(is_cps(fixtures::herm3_matrix()));  // trivial for m = 1

  ComplexTensor not_herm = build(1, 2, {{{1, 2}, I}, {{2, 1}, I}});
  CHECK_FALSE(is_hermitian(not_herm));

  // Hermitian but not block-permutation invariant.
  ComplexTensor not_cps =
      build(2, 2, {{{1, 2, 1, 1}, 1.0}, {{1, 1, 1, 2}, 1.0}});
  CHECK(is_hermitian(not_cps));
  CHECK_FALSE(is_cps(not_cps));
}

TEST_CASE("form value -2 at (i, 1) on the real-PD tensor") {
  ComplexTensor A = fixtures::real_pd_not_hermitian_pd();
  Cplx v = eval_form(A, {I, 1.0});
  CHECK(v.real() == -2.0);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("form vanishes at the zero-eigenvalue direction") {
  ComplexTensor A = fixtures::cps_psd_012();
  Cplx root = std::polar(1.0, std::acos(-1.0) / 4.0);
  Cplx v = eval_form(A, {root, 1.0});
  CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("symmetrization properties on random Hermitian tensors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + trial % 2;
    int n = 2 + trial % 3;
    ComplexTensor A = fixtures::random_hermitian(m, n, 12, rng);
    ComplexTensor S = symmetrize(A);

    CHECK(is_cps(S, 1e-10));

    ComplexTensor SS = symmetrize(S);
    for (const auto& [key, value] : S.entries())
      CHECK(std::abs(SS.at(key) - value) < 1e-12);

    for (int v = 0; v < 3; ++v) {
      ComplexVector x = fixtures::random_vector(n, rng);
      Cplx fa = eval_form(A, x);
      Cplx fs = eval_form(S, x);
      CHECK(std::abs(fa - fs) < 1e-9 * (1.0 + std::abs(fa)));
      CHECK(std::abs(fa.imag()) < 1e-9 * (1.0 + std::abs(fa)));

      // The contraction refines the form: sum_i x_i C_i(x) = f(x).
      ComplexVector c = apply_contraction(A, x);
      Cplx total{0.0, 0.0};
      for (int i = 0; i < n; ++i) total += x[i] * c[i];
      CHECK(std::abs(total - fa) < 1e-9 * (1.0 + std::abs(fa)));
    }
  }
}

TEST_CASE("symmetrization matches a dense oracle at m = 2, n = 2") {
  std::mt19937 rng(11);
  ComplexTensor A = fixtures::random_hermitian(2, 2, 10, rng);

  // Dense 4-index average over the two block transpositions.
  Cplx dense[2][2][2][2] = {};
  for (const auto& [key, value] : A.entries())
    dense[key[0]][key[1]][key[2]][key[3]] = value;
  ComplexTensor S = symmetrize(A);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          Cplx expect = 0.25 * (dense[i][j][k][l] + dense[j][i][k][l] +
                                dense[i][j][l][k] + dense[j][i][l][k]);
          CHECK(std::abs(S.at({i, j, k, l}) - expect) < 1e-14);
        }
}

TEST_CASE("dimension checks on evaluation") {
  ComplexTensor A = fixtures::cps_psd_012();
  CHECK_THROWS_AS(eval_form(A, {1.0}), Error);
  CHECK_THROWS_AS(apply_contraction(A, {1.0, 1.0, 1.0}), Error);
}
