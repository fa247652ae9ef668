#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "htensor/certify.hpp"
#include "htensor/complex_tensor.hpp"
#include "htensor/errors.hpp"
#include "htensor/heig.hpp"

namespace htensor {

/// Curvature coefficients R(e_i, ē_k, e_j, ē_l) on a frame together with the
/// metric matrix g_{ij̄}. R is stored flat; coeff(i,k,j,l) indexes it.
struct CurvatureData {
  int n = 0;
  std::vector<Cplx> R;  // n^4 values, layout [i][k][j][l], 0-based
  Eigen::MatrixXcd g;

  Cplx coeff(int i, int k, int j, int l) const {
    return R[((static_cast<std::size_t>(i) * n + k) * n + j) * n + l];
  }

  void validate() const {
    if (n < 1 || R.size() != static_cast<std::size_t>(n) * n * n * n ||
        g.rows() != n || g.cols() != n)
      throw Error(errc::shape_mismatch, "curvature arrays do not match n");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            if (std::abs(std::conj(coeff(i, k, j, l)) - coeff(k, i, l, j)) >
                1e-10)
              throw Error(errc::symmetry_violation,
                          "curvature coefficients violate conjugation "
                          "symmetry");
  }
};

/// The 4th-order coefficient tensor A_R with a_{ij k̄ l̄} = R(e_i,ē_k,e_j,ē_l).
/// Hermitian for every valid input; CPS when the Kähler-like symmetries hold.
inline ComplexTensor curvature_to_tensor(const CurvatureData& data) {
  data.validate();
  const int n = data.n;
  ComplexTensor::EntryMap entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Cplx v = data.coeff(i, k, j, l);
          if (v != Cplx{0.0, 0.0}) entries[{i, j, k, l}] = v;
        }
  return ComplexTensor(2, n, std::move(entries));
}

/// Holomorphic sectional curvature H(v) = R(v,v̄,v,v̄) / |v|_g^4.
inline double hsc(const CurvatureData& data, const ComplexVector& v) {
  data.validate();
  if (static_cast<int>(v.size()) != data.n)
    throw Error(errc::dimension_mismatch, "vector length must equal n");
  double norm2 = 0.0;
  Cplx g_quad{0.0, 0.0};
  for (const Cplx& c : v) norm2 += std::norm(c);
  if (norm2 == 0.0) throw Error(errc::zero_vector, "vector must be nonzero");
  for (int i = 0; i < data.n; ++i)
    for (int j = 0; j < data.n; ++j)
      g_quad += data.g(i, j) * v[i] * std::conj(v[j]);
  ComplexTensor A = curvature_to_tensor(data);
  Cplx numer = eval_form(A, v);
  return numer.real() / std::pow(g_quad.real(), 2);
}

/// Positivity certificate for H via the definiteness of A_R.
inline Certificate check_hsc_positive(const CurvatureData& data,
                                      const SolverConfig& cfg) {
  return certify(curvature_to_tensor(data), cfg);
}

/// Component blocks of the projectivization tensor G. Base indices run over
/// [0, n), fiber indices over [0, r); flattened row-major layouts.
struct AHZComponents {
  int n = 0;
  int r = 0;
  std::vector<Cplx> g4;    // n^4, g_{ij̄,kl̄}, layout [i][j][k][l]
  std::vector<Cplx> h2;    // r^2, h_{αβ̄}
  std::vector<Cplx> hv2;   // n^2, h_{vv̄,ij̄}
  std::vector<Cplx> hv4;   // n^4, h_{vv̄,ij̄kl̄}, layout [i][j][k][l]
  std::vector<Cplx> hv3;   // n^3 * r, h_{vβ̄,ij̄k}, layout [i][j][k][β]
  std::vector<Cplx> hab2;  // r^2 * n^2, h_{αβ̄,ij̄}, layout [α][β][i][j]

  Cplx g4_at(int i, int j, int k, int l) const {
    return g4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
  Cplx hv4_at(int i, int j, int k, int l) const {
    return hv4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  }
  Cplx h2_at(int a, int b) const { return h2[static_cast<std::size_t>(a) * r + b]; }
  Cplx hv2_at(int i, int j) const {
    return hv2[static_cast<std::size_t>(i) * n + j];
  }
  Cplx hv3_at(int i, int j, int k, int b) const {
    return hv3[((static_cast<std::size_t>(i) * n + j) * n + k) * r + b];
  }
  Cplx hab2_at(int a, int b, int i, int j) const {
    return hab2[((static_cast<std::size_t>(a) * r + b) * n + i) * n + j];
  }

  void validate() const {
    const std::size_t n4 = static_cast<std::size_t>(n) * n * n * n;
    if (n < 1 || r < 1 || g4.size() != n4 || hv4.size() != n4 ||
        h2.size() != static_cast<std::size_t>(r) * r ||
        hv2.size() != static_cast<std::size_t>(n) * n ||
        hv3.size() != static_cast<std::size_t>(n) * n * n * r ||
        hab2.size() != static_cast<std::size_t>(r) * r * n * n)
      throw Error(errc::shape_mismatch,
                  "component array sizes do not match n and r");
  }
};

namespace detail {

/// G_{ij̄,kl̄} over the full index range [0, n+r); the two replacement hooks
/// substitute the pure-base metric block and the pure-fiber block.
struct AhzEvaluator {
  const AHZComponents& c;
  double lambda;
  // When set, λ g_{ij̄,kl̄} is replaced by -λ a δ and the pure-fiber block
  // by -b δ (the G' construction).
  bool primed = false;
  double a = 0.0;
  double b = 0.0;

  bool base(int x) const { return x < c.n; }

  Cplx operator()(int i, int j, int k, int l) const {
    const int n = c.n;
    const bool bi = base(i), bj = base(j), bk = base(k), bl = base(l);
    const int fibers = !bi + !bj + !bk + !bl;
    if (fibers == 0) {
      Cplx metric = primed
                        ? Cplx{(i == j && j == k && k == l) ? -lambda * a : 0.0,
                               0.0}
                        : lambda * c.g4_at(i, j, k, l);
      return metric + c.hv4_at(i, j, k, l) -
             c.hv2_at(i, j) * c.hv2_at(k, l) -
             c.hv2_at(i, l) * c.hv2_at(k, j);
    }
    if (fibers == 4) {
      if (primed)
        return Cplx{(i == j && j == k && k == l) ? -b : 0.0, 0.0};
      int A = i - n, B = j - n, G = k - n, D = l - n;
      return -c.h2_at(A, B) * c.h2_at(G, D) - c.h2_at(A, D) * c.h2_at(G, B);
    }
    if (fibers == 1) {
      if (!bl) return c.hv3_at(i, j, k, l - n);
      if (!bj) return c.hv3_at(k, l, i, j - n);          // pair swap
      if (!bi) return std::conj((*this)(j, i, l, k));    // Hermitian partner
      return std::conj((*this)(j, i, l, k));             // fiber at k
    }
    if (fibers == 2) {
      if (bi && bj && !bk && !bl)
        return c.hab2_at(k - n, l - n, i, j) -
               c.h2_at(k - n, l - n) * c.hv2_at(i, j);
      if (!bi && !bj && bk && bl)
        return c.hab2_at(i - n, j - n, k, l) -
               c.h2_at(i - n, j - n) * c.hv2_at(k, l);
      return Cplx{0.0, 0.0};  // mixed base/fiber pairings vanish
    }
    return Cplx{0.0, 0.0};  // three fiber indices
  }
};

inline ComplexTensor assemble_from_evaluator(const AhzEvaluator& eval) {
  const int total = eval.c.n + eval.c.r;
  ComplexTensor::EntryMap entries;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      for (int k = 0; k < total; ++k)
        for (int l = 0; l < total; ++l) {
          Cplx v = eval(i, j, k, l);
          // tensor entry a_{ik j̄l̄} = G_{ij̄,kl̄}
          if (v != Cplx{0.0, 0.0}) entries[{i, k, j, l}] = v;
        }
  return ComplexTensor(2, total, std::move(entries));
}

}  // namespace detail

/// Assembles the (n+r)-dimensional 4th-order tensor G from its component
/// blocks at a given λ. Base indices come first, fiber indices after.
inline ComplexTensor ahz_assemble_G(const AHZComponents& c, double lambda) {
  c.validate();
  ComplexTensor G =
      detail::assemble_from_evaluator(detail::AhzEvaluator{c, lambda});
  if (!is_hermitian(G, 1e-10))
    throw Error(errc::not_hermitian_after_assembly,
                "assembled G is not Hermitian; check component symmetries");
  return G;
}

/// Smallest λ* (up to relative 1e-6) such that -S_{G'(λ*)} is strictly
/// diagonally dominated, where G' replaces the metric block by -a I and the
/// pure-fiber block by -b I. Monotone in λ after the replacement.
inline double ahz_lambda_threshold(const AHZComponents& c, double a,
                                   double b) {
  c.validate();
  if (!(a > 0.0) || !(b > 0.0))
    throw Error(errc::no_threshold_found,
                "threshold exists only for positive bounds a, b");
  auto strictly_dd = [&](double lambda) {
    detail::AhzEvaluator eval{c, lambda, true, a, b};
    ComplexTensor Gp = detail::assemble_from_evaluator(eval);
    ComplexTensor::EntryMap negated;
    for (const auto& [key, value] : Gp.entries()) negated[key] = -value;
    ComplexTensor negGp(2, Gp.dim(), std::move(negated));
    return is_diagonally_dominated(symmetrize(negGp), /*strict=*/true);
  };

  double hi = 1.0;
  const double cap = 1e12;
  while (!strictly_dd(hi)) {
    hi *= 2.0;
    if (hi > cap)
      throw Error(errc::no_threshold_found,
                  "no λ below the search cap makes -S_{G'} strictly "
                  "diagonally dominated");
  }
  double lo = 0.0;
  while (hi - lo > 1e-6 * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (strictly_dd(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// Cheung / Chaturvedi-Heier lemma as a block criterion on A_R with m = 2.
inline Certificate cheung_lemma_check(const CurvatureData& data, int s,
                                      double k1, double k2,
                                      const SolverConfig& cfg = {}) {
  ComplexTensor A = curvature_to_tensor(data);
  return block_criterion(A, s, k1, k2, cfg);
}

}  // namespace htensor
