#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "htensor/errors.hpp"

namespace htensor {

using Cplx = std::complex<double>;
using ComplexVector = std::vector<Cplx>;

/// Index tuple of a stored entry: (i_1..i_m, j_1..j_m), 0-based internally.
using IndexTuple = std::vector<int>;

/// Default absolute tolerance for structural predicates on entry values.
inline constexpr double kStructuralTol = 1e-12;

/// Sparse 2m-th order n-dimensional complex tensor. Entries are keyed by the
/// full 2m index tuple; absent tuples are zero and stored values are nonzero.
/// Instances are immutable after construction.
class ComplexTensor {
 public:
  using EntryMap = std::map<IndexTuple, Cplx>;

  ComplexTensor(int order_half, int dim) : m_(order_half), n_(dim) {
    if (order_half < 1 || dim < 1)
      throw Error(errc::arity_mismatch, "order_half and dim must be positive");
  }

  ComplexTensor(int order_half, int dim, EntryMap entries)
      : ComplexTensor(order_half, dim) {
    for (auto it = entries.begin(); it != entries.end();) {
      check_tuple(it->first);
      if (it->second == Cplx{0.0, 0.0})
        it = entries.erase(it);
      else
        ++it;
    }
    entries_ = std::move(entries);
  }

  int order_half() const noexcept { return m_; }
  int dim() const noexcept { return n_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const EntryMap& entries() const noexcept { return entries_; }

  /// Entry at a 0-based tuple; zero when absent.
  Cplx at(const IndexTuple& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Cplx{0.0, 0.0} : it->second;
  }

  double max_abs_entry() const {
    double m = 0.0;
    for (const auto& [k, v] : entries_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void check_tuple(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != 2 * m_)
      throw Error(errc::arity_mismatch,
                  "index tuple must have " + std::to_string(2 * m_) +
                      " components");
    for (int i : t)
      if (i < 0 || i >= n_)
        throw Error(errc::index_out_of_range,
                    "index " + std::to_string(i + 1) + " outside [1, " +
                        std::to_string(n_) + "]");
  }

  int m_;
  int n_;
  EntryMap entries_;
};

/// Builds a canonical sparse tensor from 1-based (tuple, value) pairs.
/// Duplicate tuples are rejected; zero values are dropped.
inline ComplexTensor build(
    int order_half, int dim,
    const std::vector<std::pair<IndexTuple, Cplx>>& entry_list) {
  if (order_half < 1 || dim < 1)
    throw Error(errc::arity_mismatch, "order_half and dim must be positive");
  ComplexTensor::EntryMap map;
  for (const auto& [tuple, value] : entry_list) {
    if (static_cast<int>(tuple.size()) != 2 * order_half)
      throw Error(errc::arity_mismatch,
                  "index tuple must have " + std::to_string(2 * order_half) +
                      " components");
    IndexTuple key(tuple.size());
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (tuple[k] < 1 || tuple[k] > dim)
        throw Error(errc::index_out_of_range,
                    "index " + std::to_string(tuple[k]) + " outside [1, " +
                        std::to_string(dim) + "]");
      key[k] = tuple[k] - 1;
    }
    if (map.count(key))
      throw Error(errc::duplicate_entry, "index tuple supplied twice");
    map.emplace(std::move(key), value);
  }
  return ComplexTensor(order_half, dim, std::move(map));
}

namespace detail {

/// Applies all (sigma, tau) permutation pairs of the i-block and j-block of
/// `key` through `fn(permuted_key)`.
template <typename Fn>
void for_each_block_permutation(const IndexTuple& key, int m, Fn&& fn) {
  std::vector<int> pi(m), pj(m);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::iota(pj.begin(), pj.end(), 0);
    do {
      IndexTuple perm(2 * m);
      for (int t = 0; t < m; ++t) {
        perm[t] = key[pi[t]];
        perm[m + t] = key[m + pj[t]];
      }
      fn(perm);
    } while (std::next_permutation(pj.begin(), pj.end()));
  } while (std::next_permutation(pi.begin(), pi.end()));
}

inline IndexTuple conjugate_partner(const IndexTuple& key, int m) {
  IndexTuple p(2 * m);
  for (int t = 0; t < m; ++t) {
    p[t] = key[m + t];
    p[m + t] = key[t];
  }
  return p;
}

inline double factorial(int m) {
  double f = 1.0;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

}  // namespace detail

/// True iff conj(a_{i-block, j-block}) equals a_{j-block, i-block} for every
/// tuple, absent entries counting as zero.
inline bool is_hermitian(const ComplexTensor& A, double tol = kStructuralTol) {
  const int m = A.order_half();
  for (const auto& [key, value] : A.entries()) {
    Cplx partner = A.at(detail::conjugate_partner(key, m));
    if (std::abs(std::conj(value) - partner) > tol) return false;
  }
  return true;
}

/// True iff A is Hermitian and invariant under independent permutations of
/// the i-block and the j-block.
inline bool is_cps(const ComplexTensor& A, double tol = kStructuralTol) {
  if (!is_hermitian(A, tol)) return false;
  const int m = A.order_half();
  for (const auto& [key, value] : A.entries()) {
    bool ok = true;
    detail::for_each_block_permutation(key, m, [&](const IndexTuple& perm) {
      if (std::abs(A.at(perm) - value) > tol) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

/// Conjugate partial symmetrization S_A: the average of A over all
/// independent permutations of the two index blocks. CPS when A is Hermitian.
inline ComplexTensor symmetrize(const ComplexTensor& A) {
  const int m = A.order_half();
  const double mf = detail::factorial(m);
  const double weight = 1.0 / (mf * mf);
  ComplexTensor::EntryMap out;
  for (const auto& [key, value] : A.entries()) {
    detail::for_each_block_permutation(key, m, [&](const IndexTuple& perm) {
      out[perm] += value * weight;
    });
  }
  return ComplexTensor(m, A.dim(), std::move(out));
}

/// The conjugate form f(A)(x) = sum a * x_{i_1}..x_{i_m} *
/// conj(x_{j_1})..conj(x_{j_m}). Real-valued for Hermitian A.
inline Cplx eval_form(const ComplexTensor& A, const ComplexVector& x) {
  if (static_cast<int>(x.size()) != A.dim())
    throw Error(errc::dimension_mismatch, "vector length must equal dim");
  const int m = A.order_half();
  Cplx sum{0.0, 0.0};
  for (const auto& [key, value] : A.entries()) {
    Cplx term = value;
    for (int t = 0; t < m; ++t) term *= x[key[t]];
    for (int t = 0; t < m; ++t) term *= std::conj(x[key[m + t]]);
    sum += term;
  }
  return sum;
}

/// Component i is the contraction of A against x over all indices but the
/// first: sum over entries a_{i i_2..i_m j-block} of
/// a * x_{i_2}..x_{i_m} * conj(x_{j_1})..conj(x_{j_m}).
inline ComplexVector apply_contraction(const ComplexTensor& A,
                                       const ComplexVector& x) {
  if (static_cast<int>(x.size()) != A.dim())
    throw Error(errc::dimension_mismatch, "vector length must equal dim");
  const int m = A.order_half();
  ComplexVector out(A.dim(), Cplx{0.0, 0.0});
  for (const auto& [key, value] : A.entries()) {
    Cplx term = value;
    for (int t = 1; t < m; ++t) term *= x[key[t]];
    for (int t = 0; t < m; ++t) term *= std::conj(x[key[m + t]]);
    out[key[0]] += term;
  }
  return out;
}

}  // namespace htensor
