#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "htensor/certificate.hpp"
#include "htensor/complex_tensor.hpp"
#include "htensor/errors.hpp"
#include "htensor/heig.hpp"
#include "htensor/inclusion.hpp"

namespace htensor {

namespace detail {

struct PredicateResult {
  bool holds = true;
  double slack = std::numeric_limits<double>::infinity();
  std::optional<std::pair<int, int>> failing;  // 1-based
};

inline std::vector<double> real_diagonal(const RowSums& rs) {
  std::vector<double> d(rs.diag.size());
  for (std::size_t i = 0; i < rs.diag.size(); ++i) {
    if (std::abs(rs.diag[i].imag()) > 1e-12 * (1.0 + std::abs(rs.diag[i])))
      throw Error(errc::non_real_diagonal,
                  "diagonal entry " + std::to_string(i + 1) + " is not real");
    d[i] = rs.diag[i].real();
  }
  return d;
}

inline void fold(PredicateResult& acc, double slack, bool strict, int i,
                 int j, double margin) {
  bool ok = strict ? slack > margin : slack >= -margin;
  acc.slack = std::min(acc.slack, slack);
  if (!ok && acc.holds) {
    acc.holds = false;
    acc.failing = std::make_pair(i + 1, j + 1);
  }
}

inline PredicateResult dd_check(const ComplexTensor& A, bool strict,
                                double margin) {
  RowSums rs = row_sums(A);
  auto diag = real_diagonal(rs);
  PredicateResult res;
  for (int i = 0; i < A.dim(); ++i)
    fold(res, diag[i] - rs.r[i], strict, i, i, margin);
  return res;
}

inline PredicateResult llk_check(const ComplexTensor& A, bool strict,
                                 double margin) {
  const int n = A.dim();
  const int m = A.order_half();
  RowSums rs = row_sums(A);
  auto diag = real_diagonal(rs);
  PredicateResult res;
  for (int i = 0; i < n; ++i) fold(res, diag[i], strict, i, i, margin);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IndexTuple t(2 * m, j);
      t[0] = i;
      double lhs = (diag[i] - rs.r_minus_j[i][j]) * diag[j];
      double rhs = rs.r[j] * std::abs(A.at(t));
      fold(res, lhs - rhs, strict, i, j, margin);
    }
  return res;
}

inline PredicateResult ll_check(const ComplexTensor& A, bool strict,
                                double margin) {
  const int n = A.dim();
  RowSums rs = row_sums(A);
  auto diag = real_diagonal(rs);
  PredicateResult res;
  for (int i = 0; i < n; ++i) fold(res, diag[i], strict, i, i, margin);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double lhs = (diag[i] - rs.r_hat[i]) * diag[j];
      double rhs = rs.r_prime[i] * rs.r[j];
      fold(res, lhs - rhs, strict, i, j, margin);
    }
  return res;
}

}  // namespace detail

/// diag_i >= r_i for all i (strict: >). Diagonal entries must be real.
inline bool is_diagonally_dominated(const ComplexTensor& A, bool strict,
                                    double margin = 0.0) {
  return detail::dd_check(A, strict, margin).holds;
}

/// Nonnegative diagonal and (diag_i - r_i^j) diag_j >= r_j |a_{ij..j}| for
/// all ordered pairs i != j (strict variants throughout).
inline bool is_llk_tensor(const ComplexTensor& A, bool strict,
                          double margin = 0.0) {
  return detail::llk_check(A, strict, margin).holds;
}

/// Nonnegative diagonal and (diag_i - r̂_i) diag_j >= r'_i r_j for all
/// ordered pairs i != j (strict variants throughout).
inline bool is_ll_tensor(const ComplexTensor& A, bool strict,
                         double margin = 0.0) {
  return detail::ll_check(A, strict, margin).holds;
}

/// Certifies definiteness of A by applying the predicate ladder to S_A:
/// strict DD/LLK/LL give POSITIVE_DEFINITE, non-strict give
/// POSITIVE_SEMIDEFINITE, and the extremal eigenvalue solver decides the
/// rest. The recorded rule is the first that fires.
inline Certificate certify(const ComplexTensor& A, const SolverConfig& cfg) {
  detail::require_hermitian(A);
  ComplexTensor S = symmetrize(A);

  struct Step {
    Rule rule;
    bool strict;
    detail::PredicateResult (*check)(const ComplexTensor&, bool, double);
  };
  const Step ladder[] = {
      {Rule::StrictDD, true, detail::dd_check},
      {Rule::StrictLLK, true, detail::llk_check},
      {Rule::StrictLL, true, detail::ll_check},
      {Rule::DD, false, detail::dd_check},
      {Rule::LLK, false, detail::llk_check},
      {Rule::LL, false, detail::ll_check},
  };
  for (const Step& step : ladder) {
    detail::PredicateResult res = step.check(S, step.strict, 0.0);
    if (res.holds) {
      Certificate cert;
      cert.verdict = step.strict ? Verdict::PositiveDefinite
                                 : Verdict::PositiveSemidefinite;
      cert.rule = step.rule;
      cert.slack = res.slack;
      return cert;
    }
  }
  return certify_pd_by_eigen(A, cfg);
}

/// Block approximation criterion: splits indices at s (1-based, 1 <= s < n),
/// bounds the leading/trailing sub-tensors below by K1/K2 and the cross
/// entries above by K, and certifies PD when K2/K reaches the threshold
/// C = max{N, N^{2m} (K/K1)^{2m-1}} with N = (2m)^n - (2m)^s - (2m)^{n-s}.
inline Certificate block_criterion(const ComplexTensor& A, int s,
                                   std::optional<double> k1_in = {},
                                   std::optional<double> k2_in = {},
                                   const SolverConfig& cfg = {}) {
  detail::require_hermitian(A);
  const int n = A.dim();
  const int m = A.order_half();
  if (s < 1 || s >= n)
    throw Error(errc::bad_split, "split must satisfy 1 <= s < n");

  // Sub-tensors over indices [0, s) and [s, n) (the latter reindexed).
  ComplexTensor::EntryMap lead, trail;
  double cross_max = 0.0;
  for (const auto& [key, value] : A.entries()) {
    int lo = *std::min_element(key.begin(), key.end());
    int hi = *std::max_element(key.begin(), key.end());
    if (hi < s) {
      lead.emplace(key, value);
    } else if (lo >= s) {
      IndexTuple shifted(key.size());
      for (std::size_t t = 0; t < key.size(); ++t) shifted[t] = key[t] - s;
      trail.emplace(std::move(shifted), value);
    } else {
      cross_max = std::max(cross_max, std::abs(value));
    }
  }
  ComplexTensor B(m, s, std::move(lead));
  ComplexTensor C(m, n - s, std::move(trail));

  auto block_bound = [&](const ComplexTensor& block) {
    double lb = eigen_lower_bound(block);
    if (lb > 0.0) return lb;
    return extremal_eigenvalues(block, cfg).first.lambda.real();
  };
  const double k1 = k1_in ? *k1_in : block_bound(B);
  const double k2 = k2_in ? *k2_in : block_bound(C);
  if (!(k1 > 0.0) || !(k2 > 0.0))
    throw Error(errc::nonpositive_bound, "K1 and K2 must be positive");

  const double two_m = 2.0 * m;
  const double n_tuples = std::pow(two_m, n) - std::pow(two_m, s) -
                          std::pow(two_m, n - s);
  Certificate cert;
  cert.rule = Rule::BlockCriterion;
  BlockData data{s, k1, k2, cross_max, n_tuples, 0.0};
  if (cross_max == 0.0) {
    // Blocks decouple; K1, K2 > 0 certify both halves of the split form.
    data.constant_c = n_tuples;
    cert.verdict = Verdict::PositiveDefinite;
    cert.slack = std::min(k1, k2);
  } else {
    data.constant_c =
        std::max(n_tuples, std::pow(n_tuples, two_m) *
                               std::pow(cross_max / k1, two_m - 1.0));
    const double ratio = k2 / cross_max;
    cert.verdict = ratio >= data.constant_c ? Verdict::PositiveDefinite
                                            : Verdict::Inconclusive;
    cert.slack = ratio - data.constant_c;
  }
  cert.block = data;
  return cert;
}

}  // namespace htensor
