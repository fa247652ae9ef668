#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "htensor/certificate.hpp"
#include "htensor/complex_tensor.hpp"
#include "htensor/errors.hpp"

namespace htensor {

struct SolverConfig {
  int starts = 200;
  double newton_tol = 1e-10;
  int max_iter = 100;
  double dedup_tol = 1e-6;
  unsigned rng_seed = 0;
};

/// An accepted eigenpair. lambda is real for Hermitian input; the vector is
/// normalized to unit (2m)-norm with the first nonzero component phase-free.
struct EigenPair {
  Cplx lambda{0.0, 0.0};
  ComplexVector vector;
  double residual = 0.0;
};

namespace detail {

inline double norm_2m(const ComplexVector& x, int m) {
  double s = 0.0;
  for (const Cplx& c : x) s += std::pow(std::abs(c), 2 * m);
  return std::pow(s, 1.0 / (2 * m));
}

/// Scales to unit (2m)-norm and rotates the global phase so the first
/// component of nonnegligible modulus is real positive.
inline ComplexVector gauge_normalize(ComplexVector x, int m) {
  double nrm = norm_2m(x, m);
  if (nrm == 0.0) throw Error(errc::zero_vector, "vector must be nonzero");
  for (Cplx& c : x) c /= nrm;
  double maxabs = 0.0;
  for (const Cplx& c : x) maxabs = std::max(maxabs, std::abs(c));
  for (Cplx& c : x) {
    if (std::abs(c) > 1e-8 * maxabs) {
      Cplx phase = c / std::abs(c);
      for (Cplx& d : x) d *= std::conj(phase);
      break;
    }
  }
  return x;
}

inline void require_hermitian(const ComplexTensor& A) {
  if (!is_hermitian(A))
    throw Error(errc::not_hermitian, "operation requires a Hermitian tensor");
}

}  // namespace detail

/// Max-norm defect of the eigen-equations at (lambda, x) after normalizing x
/// to the unit (2m)-norm sphere.
inline double residual(const ComplexTensor& A, Cplx lambda,
                       const ComplexVector& x) {
  const int m = A.order_half();
  ComplexVector y = detail::gauge_normalize(x, m);
  ComplexVector lhs = apply_contraction(A, y);
  double r = 0.0;
  for (int i = 0; i < A.dim(); ++i) {
    Cplx rhs = lambda * std::conj(y[i]) * std::pow(std::abs(y[i]), 2 * m - 2);
    r = std::max(r, std::abs(lhs[i] - rhs));
  }
  return r;
}

namespace detail {

/// Split real residual of the eigen-system plus normalization and phase
/// gauge, as a function of (Re x, Im x, lambda).
struct NewtonSystem {
  const ComplexTensor& A;
  int gauge_index;

  Eigen::VectorXd operator()(const Eigen::VectorXd& v) const {
    const int n = A.dim();
    const int m = A.order_half();
    ComplexVector x(n);
    for (int i = 0; i < n; ++i) x[i] = Cplx(v[2 * i], v[2 * i + 1]);
    const double lambda = v[2 * n];
    ComplexVector lhs = apply_contraction(A, x);
    Eigen::VectorXd F(2 * n + 2);
    double norm_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ax = std::abs(x[i]);
      Cplx fi = lhs[i] - lambda * std::conj(x[i]) * std::pow(ax, 2 * m - 2);
      F[2 * i] = fi.real();
      F[2 * i + 1] = fi.imag();
      norm_sum += std::pow(ax, 2 * m);
    }
    F[2 * n] = norm_sum - 1.0;
    F[2 * n + 1] = x[gauge_index].imag();
    return F;
  }
};

inline Eigen::MatrixXd fd_jacobian(const NewtonSystem& sys,
                                   const Eigen::VectorXd& v) {
  const int nv = static_cast<int>(v.size());
  Eigen::VectorXd f0 = sys(v);
  Eigen::MatrixXd J(f0.size(), nv);
  for (int j = 0; j < nv; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(v[j]));
    Eigen::VectorXd vp = v, vm = v;
    vp[j] += h;
    vm[j] -= h;
    J.col(j) = (sys(vp) - sys(vm)) / (2.0 * h);
  }
  return J;
}

/// Damped Gauss-Newton on the gauge-fixed split system. Returns the refined
/// pair when the residual drops below tol.
inline std::optional<EigenPair> newton_polish(const ComplexTensor& A,
                                              ComplexVector x0, double lambda0,
                                              const SolverConfig& cfg) {
  const int n = A.dim();
  const int m = A.order_half();
  x0 = gauge_normalize(std::move(x0), m);
  int gauge = 0;
  double maxabs = 0.0;
  for (int i = 0; i < n; ++i)
    if (std::abs(x0[i]) > maxabs) {
      maxabs = std::abs(x0[i]);
      gauge = i;
    }
  NewtonSystem sys{A, gauge};
  Eigen::VectorXd v(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    v[2 * i] = x0[i].real();
    v[2 * i + 1] = x0[i].imag();
  }
  v[2 * n] = lambda0;

  Eigen::VectorXd F = sys(v);
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    if (F.lpNorm<Eigen::Infinity>() <= 0.1 * cfg.newton_tol) break;
    Eigen::MatrixXd J = fd_jacobian(sys, v);
    Eigen::VectorXd d = J.colPivHouseholderQr().solve(-F);
    if (!d.allFinite()) return std::nullopt;
    double alpha = 1.0;
    const double f0 = F.norm();
    bool stepped = false;
    while (alpha > 1e-12) {
      Eigen::VectorXd vn = v + alpha * d;
      Eigen::VectorXd Fn = sys(vn);
      if (Fn.norm() <= (1.0 - 1e-4 * alpha) * f0) {
        v = vn;
        F = Fn;
        stepped = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!stepped) break;
  }

  ComplexVector x(n);
  for (int i = 0; i < n; ++i) x[i] = Cplx(v[2 * i], v[2 * i + 1]);
  double xn = norm_2m(x, m);
  if (!(xn > 1e-8)) return std::nullopt;
  x = gauge_normalize(std::move(x), m);
  const double lambda = v[2 * n];
  double res = residual(A, lambda, x);
  if (!(res <= cfg.newton_tol)) return std::nullopt;
  return EigenPair{Cplx(lambda, 0.0), std::move(x), res};
}

inline ComplexVector random_unit_vector(int n, int m, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector x(n);
  for (int i = 0; i < n; ++i) x[i] = Cplx(gauss(rng), gauss(rng));
  return gauge_normalize(std::move(x), m);
}

}  // namespace detail

/// Multi-start Newton enumeration of the real Ĥ-eigenvalues of a Hermitian
/// tensor. Best effort: completeness is probabilistic in the start count.
/// Converged roots are deduplicated by eigenvalue and sorted ascending.
inline std::vector<EigenPair> enumerate_eigenvalues(const ComplexTensor& A,
                                                    const SolverConfig& cfg) {
  detail::require_hermitian(A);
  const int n = A.dim();
  const int m = A.order_half();
  std::mt19937 rng(cfg.rng_seed);
  std::vector<EigenPair> found;
  for (int s = 0; s < cfg.starts; ++s) {
    ComplexVector x0;
    if (s < n) {
      x0.assign(n, Cplx{0.0, 0.0});
      x0[s] = 1.0;  // coordinate starts catch decoupled components
    } else {
      x0 = detail::random_unit_vector(n, m, rng);
    }
    double lambda0 = eval_form(A, x0).real();
    if (auto pair = detail::newton_polish(A, std::move(x0), lambda0, cfg))
      found.push_back(std::move(*pair));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.lambda.real() < b.lambda.real();
  });
  std::vector<EigenPair> dedup;
  for (auto& p : found) {
    if (!dedup.empty() &&
        std::abs(p.lambda.real() - dedup.back().lambda.real()) <=
            cfg.dedup_tol) {
      if (p.residual < dedup.back().residual) dedup.back() = std::move(p);
    } else {
      dedup.push_back(std::move(p));
    }
  }
  return dedup;
}

/// Extremal Ĥ-eigenvalues of S_A via multi-start projected gradient
/// descent/ascent on the unit (2m)-norm sphere, with Newton polishing.
/// The returned pairs are eigenpairs of S_A; lambda_min/lambda_max are the
/// global form extrema over the sphere up to multi-start coverage.
inline std::pair<EigenPair, EigenPair> extremal_eigenvalues(
    const ComplexTensor& A, const SolverConfig& cfg) {
  detail::require_hermitian(A);
  ComplexTensor S = symmetrize(A);
  const int n = S.dim();
  const int m = S.order_half();
  std::mt19937 rng(cfg.rng_seed);

  auto descend = [&](ComplexVector x, double sign) {
    // sign = +1 minimizes f, -1 maximizes.
    double f = eval_form(S, x).real() * sign;
    double step = 1.0;
    for (int iter = 0; iter < 400; ++iter) {
      ComplexVector c = apply_contraction(S, x);
      ComplexVector g(n);
      double gnorm2 = 0.0;
      for (int i = 0; i < n; ++i) {
        g[i] = sign * std::conj(c[i]);
        gnorm2 += std::norm(g[i]);
      }
      if (gnorm2 < 1e-30) break;
      bool moved = false;
      while (step > 1e-14) {
        ComplexVector y(n);
        for (int i = 0; i < n; ++i) y[i] = x[i] - step * g[i];
        double yn = detail::norm_2m(y, m);
        if (yn > 1e-12) {
          for (Cplx& c2 : y) c2 /= yn;
          double fy = eval_form(S, y).real() * sign;
          if (fy <= f - 1e-4 * step * gnorm2) {
            x = std::move(y);
            f = fy;
            step *= 1.5;
            moved = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    return x;
  };

  std::optional<EigenPair> best_min, best_max;
  const int starts = std::max(cfg.starts, 8);
  for (int s = 0; s < starts; ++s) {
    ComplexVector x0 = detail::random_unit_vector(n, m, rng);
    for (double sign : {+1.0, -1.0}) {
      ComplexVector x = descend(x0, sign);
      double lambda0 = eval_form(S, x).real();
      auto pair = detail::newton_polish(S, x, lambda0, cfg);
      if (!pair) continue;
      if (!best_min || pair->lambda.real() < best_min->lambda.real())
        best_min = pair;
      if (!best_max || pair->lambda.real() > best_max->lambda.real())
        best_max = pair;
    }
  }
  if (!best_min || !best_max)
    throw Error(errc::convergence_failure,
                "no multi-start instance converged to an eigenpair");
  return {*best_min, *best_max};
}

/// Classical Hermitian eigendecomposition for order_half == 1 tensors,
/// reported under the m=1 Ĥ-equation (eigenvectors conjugated).
inline std::vector<EigenPair> matrix_eigen(const ComplexTensor& A) {
  if (A.order_half() != 1)
    throw Error(errc::not_matrix, "matrix_eigen requires order_half == 1");
  detail::require_hermitian(A);
  const int n = A.dim();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [key, value] : A.entries()) M(key[0], key[1]) = value;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  if (es.info() != Eigen::Success)
    throw Error(errc::convergence_failure, "dense eigensolver failed");
  std::vector<EigenPair> pairs;
  for (int k = 0; k < n; ++k) {
    ComplexVector x(n);
    for (int i = 0; i < n; ++i) x[i] = std::conj(es.eigenvectors()(i, k));
    x = detail::gauge_normalize(std::move(x), 1);
    double lambda = es.eigenvalues()[k];
    pairs.push_back({Cplx(lambda, 0.0), x, residual(A, lambda, x)});
  }
  return pairs;
}

/// Decides Hermitian definiteness from the minimal Ĥ-eigenvalue of S_A.
/// lambda_min > tol gives PD, |lambda_min| <= tol gives PSD, otherwise the
/// minimizing vector witnesses f(A)(x) < 0.
inline Certificate certify_pd_by_eigen(const ComplexTensor& A,
                                       const SolverConfig& cfg) {
  auto [mn, mx] = extremal_eigenvalues(A, cfg);
  (void)mx;
  const double lambda_min = mn.lambda.real();
  Certificate cert;
  cert.rule = Rule::ExtremalEigenvalue;
  cert.lambda_min = lambda_min;
  cert.slack = lambda_min;
  if (lambda_min > cfg.dedup_tol) {
    cert.verdict = Verdict::PositiveDefinite;
  } else if (lambda_min >= -cfg.dedup_tol) {
    cert.verdict = Verdict::PositiveSemidefinite;
  } else {
    cert.verdict = Verdict::IndefiniteOrNegative;
    cert.witness_vector = mn.vector;
  }
  return cert;
}

}  // namespace htensor
