#pragma once

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "htensor/complex_tensor.hpp"
#include "htensor/curvature.hpp"

namespace fixtures {

using htensor::ComplexTensor;
using htensor::ComplexVector;
using htensor::Cplx;
using htensor::IndexTuple;

inline const Cplx I{0.0, 1.0};

/// 4th-order 2-dim CPS tensor whose form is positive on real vectors but
/// takes the value -2 at (i, 1).
inline ComplexTensor real_pd_not_hermitian_pd() {
  return htensor::build(2, 2,
                        {{{1, 1, 1, 1}, 1.0},
                         {{2, 2, 2, 2}, 1.0},
                         {{1, 1, 2, 2}, 2.0},
                         {{2, 2, 1, 1}, 2.0}});
}

/// 4th-order 2-dim CPS tensor with eigenvalues {0, 1, 2}.
inline ComplexTensor cps_psd_012() {
  return htensor::build(2, 2,
                        {{{1, 1, 1, 1}, 1.0},
                         {{2, 2, 2, 2}, 1.0},
                         {{1, 1, 2, 2}, I},
                         {{2, 2, 1, 1}, -I}});
}

inline ComplexTensor matrix_tensor(
    const std::vector<std::vector<Cplx>>& rows) {
  std::vector<std::pair<IndexTuple, Cplx>> list;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] != Cplx{0.0, 0.0})
        list.push_back({{i + 1, j + 1}, rows[i][j]});
  return htensor::build(1, n, list);
}

/// Hermitian matrix with spectrum {2 - sqrt(3), 2, 2 + sqrt(3)}.
inline ComplexTensor herm3_matrix() {
  return matrix_tensor({{1.0, I, 0.0}, {-I, 2.0, 1.0}, {0.0, 1.0, 3.0}});
}

/// Strictly diagonally dominated matrix.
inline ComplexTensor classified_A() {
  return matrix_tensor({{3.0, I, 0.0}, {-I, 3.0, 1.0}, {0.0, 1.0, 3.0}});
}

/// Strict LLK but not diagonally dominated.
inline ComplexTensor classified_B() {
  return matrix_tensor({{3.0, I, 0.0}, {-I, 1.5, 1.0}, {0.0, 1.0, 3.0}});
}

/// Strict LL but not LLK.
inline ComplexTensor classified_C() {
  return matrix_tensor({{0.5, I, 0.0}, {-I, 5.0, 1.0}, {0.0, 1.0, 3.0}});
}

/// Random sparse Hermitian tensor: each sampled entry is stored together
/// with its conjugate partner, so the result is Hermitian by construction.
inline ComplexTensor random_hermitian(int m, int n, int entries,
                                      std::mt19937& rng,
                                      double diag_boost = 0.0) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexTensor::EntryMap map;
  for (int e = 0; e < entries; ++e) {
    IndexTuple key(2 * m);
    for (int& k : key) k = idx(rng);
    Cplx v(gauss(rng), gauss(rng));
    IndexTuple partner = htensor::detail::conjugate_partner(key, m);
    if (partner == key) v = Cplx(v.real(), 0.0);
    map[key] += 0.5 * v;
    map[partner] += 0.5 * std::conj(v);
  }
  for (int i = 0; i < n; ++i) {
    IndexTuple d(2 * m, i);
    map[d] += diag_boost;
  }
  return ComplexTensor(m, n, std::move(map));
}

inline ComplexVector random_vector(int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector x(n);
  for (Cplx& c : x) c = Cplx(gauss(rng), gauss(rng));
  return x;
}

/// Kähler curvature data of constant holomorphic sectional curvature c on
/// the flat metric: R(e_i, e_k bar, e_j, e_l bar) = c/2 (d_ik d_jl + d_il
/// d_jk); hsc is identically c.
inline htensor::CurvatureData constant_curvature(int n, double c) {
  htensor::CurvatureData data;
  data.n = n;
  data.g = Eigen::MatrixXcd::Identity(n, n);
  data.R.assign(static_cast<std::size_t>(n) * n * n * n, Cplx{0.0, 0.0});
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          data.R[idx++] =
              0.5 * c * ((i == k && j == l) + (i == l && j == k));
  return data;
}

/// Tensor realizing the worked block-criterion instance: K1 = K = 1,
/// K2 = 5000 >= C = 4096 at s = 1.
inline ComplexTensor block_criterion_instance(double k2 = 5000.0) {
  return htensor::build(2, 2,
                        {{{1, 1, 1, 1}, 1.0},
                         {{2, 2, 2, 2}, k2},
                         {{1, 2, 1, 1}, 1.0},
                         {{1, 1, 1, 2}, 1.0}});
}

}  // namespace fixtures
