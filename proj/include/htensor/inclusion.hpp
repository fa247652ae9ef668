#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <variant>
#include <vector>

#include "htensor/complex_tensor.hpp"
#include "htensor/errors.hpp"

namespace htensor {

/// Off-diagonal absolute row sums used by the inclusion regions and the
/// dominance predicates. All arrays are 0-based over i in [0, n).
struct RowSums {
  std::vector<double> r;        // r_i: off-diagonal absolute row sum
  std::vector<std::vector<double>> r_minus_j;  // r_i^j = r_i - |a_{ij..j}|
  std::vector<double> r_prime;  // over tuples avoiding index i entirely
  std::vector<double> r_hat;    // r_i - r'_i
  std::vector<Cplx> diag;       // a_{i..i, i..i}
};

inline RowSums row_sums(const ComplexTensor& A) {
  const int n = A.dim();
  const int m = A.order_half();
  RowSums rs;
  rs.r.assign(n, 0.0);
  rs.r_prime.assign(n, 0.0);
  rs.r_hat.assign(n, 0.0);
  rs.diag.assign(n, Cplx{0.0, 0.0});
  rs.r_minus_j.assign(n, std::vector<double>(n, 0.0));

  for (const auto& [key, value] : A.entries()) {
    const int i = key[0];
    bool all_i = true;
    bool avoids_i = true;
    for (int t = 1; t < 2 * m; ++t) {
      if (key[t] != i) all_i = false;
      if (key[t] == i) avoids_i = false;
    }
    if (all_i) {
      rs.diag[i] = value;
      continue;
    }
    rs.r[i] += std::abs(value);
    if (avoids_i) rs.r_prime[i] += std::abs(value);
  }
  for (int i = 0; i < n; ++i) {
    rs.r_hat[i] = rs.r[i] - rs.r_prime[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      IndexTuple t(2 * m, j);
      t[0] = i;
      rs.r_minus_j[i][j] = rs.r[i] - std::abs(A.at(t));
    }
  }
  return rs;
}

/// Closed disk |z - center| <= radius.
struct Disk {
  Cplx center;
  double radius;
};

/// Cassini-type set {z : (|z - a| - shift) * |z - b| <= bound}. The
/// inequality holds automatically wherever |z - a| <= shift.
struct ShiftedOval {
  Cplx a;
  Cplx b;
  double shift;
  double bound;
};

struct BoundingBox {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;

  void merge(const BoundingBox& o) {
    re_min = std::min(re_min, o.re_min);
    re_max = std::max(re_max, o.re_max);
    im_min = std::min(im_min, o.im_min);
    im_max = std::max(im_max, o.im_max);
  }
};

/// Membership-testable region of the complex plane: a disk, a shifted
/// Cassini oval, or a finite union.
class Region {
 public:
  Region(Disk d) : node_(d) {}
  Region(ShiftedOval o) : node_(o) {}
  Region(std::vector<Region> parts) : node_(std::move(parts)) {}

  bool is_disk() const { return std::holds_alternative<Disk>(node_); }
  bool is_oval() const { return std::holds_alternative<ShiftedOval>(node_); }
  bool is_union() const {
    return std::holds_alternative<std::vector<Region>>(node_);
  }
  const Disk& disk() const { return std::get<Disk>(node_); }
  const ShiftedOval& oval() const { return std::get<ShiftedOval>(node_); }
  const std::vector<Region>& parts() const {
    return std::get<std::vector<Region>>(node_);
  }

  /// Set when an n=1 tensor forced K_llk/K_ll to fall back to K_ger.
  bool gershgorin_fallback = false;

  /// Membership test; `tol` loosens the defining inequality to absorb
  /// floating-point error for points on the boundary.
  bool contains(Cplx z, double tol = 0.0) const {
    if (is_disk()) return std::abs(z - disk().center) <= disk().radius + tol;
    if (is_oval()) {
      const auto& o = oval();
      return (std::abs(z - o.a) - o.shift) * std::abs(z - o.b) <=
             o.bound + tol;
    }
    for (const Region& p : parts())
      if (p.contains(z, tol)) return true;
    return false;
  }

  BoundingBox bounding_box() const {
    if (is_disk()) {
      const auto& d = disk();
      return {d.center.real() - d.radius, d.center.real() + d.radius,
              d.center.imag() - d.radius, d.center.imag() + d.radius};
    }
    if (is_oval()) {
      const auto& o = oval();
      // The set lies in |z - a| <= shift + |a - b| + sqrt(bound): beyond
      // that distance both oval factors exceed the bound.
      double rad = std::max(o.shift, 0.0) + std::abs(o.a - o.b) +
                   std::sqrt(std::max(o.bound, 0.0)) + 1e-12;
      return {o.a.real() - rad, o.a.real() + rad, o.a.imag() - rad,
              o.a.imag() + rad};
    }
    BoundingBox box;
    bool first = true;
    for (const Region& p : parts()) {
      BoundingBox b = p.bounding_box();
      if (first) {
        box = b;
        first = false;
      } else {
        box.merge(b);
      }
    }
    return box;
  }

 private:
  std::variant<Disk, ShiftedOval, std::vector<Region>> node_;
};

inline bool contains(const Region& R, Cplx z, double tol = 0.0) {
  return R.contains(z, tol);
}

/// Geršgorin-type set: union of n disks centered at the diagonal entries
/// with the off-diagonal row sums as radii.
inline Region gershgorin_set(const ComplexTensor& A) {
  RowSums rs = row_sums(A);
  std::vector<Region> disks;
  for (int i = 0; i < A.dim(); ++i)
    disks.push_back(Disk{rs.diag[i], rs.r[i]});
  return Region(std::move(disks));
}

/// Li-Li-Kong type set: union over ordered pairs i != j of the ovals
/// (|z - diag_i| - r_i^j) |z - diag_j| <= |a_{ij..j}| r_j.
inline Region llk_set(const ComplexTensor& A) {
  const int n = A.dim();
  const int m = A.order_half();
  if (n < 2) {
    Region fallback = gershgorin_set(A);
    fallback.gershgorin_fallback = true;
    return fallback;
  }
  RowSums rs = row_sums(A);
  std::vector<Region> ovals;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      IndexTuple t(2 * m, j);
      t[0] = i;
      ovals.push_back(ShiftedOval{rs.diag[i], rs.diag[j], rs.r_minus_j[i][j],
                                  std::abs(A.at(t)) * rs.r[j]});
    }
  return Region(std::move(ovals));
}

/// Li-Li type set: union over ordered pairs i != j of the ovals
/// (|z - diag_i| - r̂_i) |z - diag_j| <= r'_i r_j.
inline Region ll_set(const ComplexTensor& A) {
  const int n = A.dim();
  if (n < 2) {
    Region fallback = gershgorin_set(A);
    fallback.gershgorin_fallback = true;
    return fallback;
  }
  RowSums rs = row_sums(A);
  std::vector<Region> ovals;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ovals.push_back(ShiftedOval{rs.diag[i], rs.diag[j], rs.r_hat[i],
                                  rs.r_prime[i] * rs.r[j]});
    }
  return Region(std::move(ovals));
}

/// Certified lower bound min_i (diag_i - r_i) for every Ĥ-eigenvalue of the
/// conjugate partial symmetrization S_A.
inline double eigen_lower_bound(const ComplexTensor& A) {
  if (!is_hermitian(A))
    throw Error(errc::not_hermitian, "eigen_lower_bound requires Hermitian");
  ComplexTensor S = symmetrize(A);
  RowSums rs = row_sums(S);
  double bound = std::numeric_limits<double>::infinity();
  for (int i = 0; i < S.dim(); ++i)
    bound = std::min(bound, rs.diag[i].real() - rs.r[i]);
  return bound;
}

}  // namespace htensor
