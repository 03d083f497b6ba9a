// Copyright 2026 The robustcut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBUSTCUT_LINALG_HPP
#define ROBUSTCUT_LINALG_HPP

// Small dense symmetric linear algebra: Cholesky with zero-pivot
// continuation for semidefinite covariances, quadratic forms and the
// affine map a + L z between standard normal space and parameter space.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace robustcut {

class NotPositiveSemidefinite : public std::runtime_error {
 public:
  explicit NotPositiveSemidefinite(const std::string& what)
      : std::runtime_error(what) {}
};

/// Dense square matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0)
      : n_(n), data_(n * n, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw std::invalid_argument("DenseMatrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix diagonal(std::span<const double> d) {
    DenseMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius() const noexcept {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  bool is_symmetric(double rel_tol = 1e-12) const noexcept {
    const double tol = rel_tol * (1.0 + max_abs());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Lower-triangular factor in packed row storage.
class LowerTriangular {
 public:
  LowerTriangular() = default;
  explicit LowerTriangular(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return j > i ? 0.0 : packed_[i * (i + 1) / 2 + j];
  }
  double& at(std::size_t i, std::size_t j) { return packed_[i * (i + 1) / 2 + j]; }

  /// L * L^T as a dense matrix.
  DenseMatrix gram() const {
    DenseMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k <= j; ++k) s += (*this)(i, k) * (*this)(j, k);
        m(i, j) = s;
        m(j, i) = s;
      }
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> packed_;
};

namespace detail {
inline void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}
}  // namespace detail

namespace detail {

/// Plain Cholesky. Pivots below 1e-12 * max diagonal are treated as zero and
/// produce a zero column; the rest of that column must then vanish too,
/// otherwise the matrix is indefinite. A pivot below minus the tolerance throws.
inline LowerTriangular plain_cholesky(const DenseMatrix& sigma, double max_diag) {
  const std::size_t n = sigma.size();
  const double pivot_tol = 1e-12 * max_diag;
  const double offdiag_tol = 1e-8 * (1.0 + max_diag);

  LowerTriangular L(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = sigma(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (d < -pivot_tol)
      throw NotPositiveSemidefinite("cholesky: negative pivot " + std::to_string(d) +
                                    " at column " + std::to_string(j));
    if (d <= pivot_tol) {
      for (std::size_t i = j + 1; i < n; ++i) {
        double v = sigma(i, j);
        for (std::size_t k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
        if (std::abs(v) > offdiag_tol)
          throw NotPositiveSemidefinite("cholesky: zero pivot with nonzero column at " +
                                        std::to_string(j));
      }
      continue;  // zero column
    }
    const double ljj = std::sqrt(d);
    L.at(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = sigma(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
      L.at(i, j) = v / ljj;
    }
  }
  return L;
}

inline double gram_residual(const LowerTriangular& L, const DenseMatrix& sigma) {
  const auto G = L.gram();
  double s = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = 0; j < sigma.size(); ++j) s += std::pow(G(i, j) - sigma(i, j), 2);
  return std::sqrt(s);
}

/// Stable path for semidefinite inputs whose leading minors are nearly
/// singular: diagonal-pivoted Cholesky gives a general factor F (F F^T =
/// Sigma), then a Householder LQ step F = L Q turns it back into a
/// lower-triangular L with the same Gram matrix.
inline LowerTriangular pivoted_cholesky(const DenseMatrix& sigma, double max_diag) {
  const std::size_t n = sigma.size();
  const double pivot_tol = 1e-12 * max_diag;
  const double offdiag_tol = 1e-8 * (1.0 + max_diag);

  DenseMatrix S = sigma;  // Schur complement, updated in place
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // C is n x n in permuted order, row i belongs to variable perm[i].
  std::vector<double> C(n * n, 0.0);
  std::size_t rank = 0;
  for (; rank < n; ++rank) {
    std::size_t p = rank;
    for (std::size_t i = rank + 1; i < n; ++i)
      if (S(perm[i], perm[i]) > S(perm[p], perm[p])) p = i;
    if (S(perm[p], perm[p]) <= pivot_tol) break;
    std::swap(perm[rank], perm[p]);
    for (std::size_t k = 0; k < rank; ++k) std::swap(C[rank * n + k], C[p * n + k]);
    const std::size_t q = perm[rank];
    const double ljj = std::sqrt(S(q, q));
    C[rank * n + rank] = ljj;
    for (std::size_t i = rank + 1; i < n; ++i) C[i * n + rank] = S(perm[i], q) / ljj;
    for (std::size_t i = rank + 1; i < n; ++i)
      for (std::size_t j = rank + 1; j < n; ++j)
        S(perm[i], perm[j]) -= C[i * n + rank] * C[j * n + rank];
  }
  for (std::size_t i = rank; i < n; ++i)
    for (std::size_t j = rank; j < n; ++j)
      if (std::abs(S(perm[i], perm[j])) > offdiag_tol)
        throw NotPositiveSemidefinite("cholesky: matrix is indefinite (Schur entry " +
                                      std::to_string(S(perm[i], perm[j])) + ")");

  // F in original order: F(perm[i], k) = C(i, k). Work on T = F^T (rank x n)
  // and reduce it to upper-trapezoidal R by Householder reflections from the
  // left; then F F^T = R^T R and L = R^T.
  std::vector<double> T(rank * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rank; ++k) T[k * n + perm[i]] = C[i * n + k];
  std::vector<double> v(rank);
  for (std::size_t c = 0; c < rank; ++c) {
    double norm = 0.0;
    for (std::size_t r = c; r < rank; ++r) norm += T[r * n + c] * T[r * n + c];
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = T[c * n + c] > 0 ? -norm : norm;
    for (std::size_t r = c; r < rank; ++r) v[r] = T[r * n + c];
    v[c] -= alpha;
    double vv = 0.0;
    for (std::size_t r = c; r < rank; ++r) vv += v[r] * v[r];
    if (vv == 0.0) continue;
    for (std::size_t col = c; col < n; ++col) {
      double dotv = 0.0;
      for (std::size_t r = c; r < rank; ++r) dotv += v[r] * T[r * n + col];
      const double f = 2.0 * dotv / vv;
      for (std::size_t r = c; r < rank; ++r) T[r * n + col] -= f * v[r];
    }
  }
  LowerTriangular L(n);
  for (std::size_t k = 0; k < rank; ++k) {
    const double sign = T[k * n + k] < 0 ? -1.0 : 1.0;
    for (std::size_t i = k; i < n; ++i) L.at(i, k) = sign * T[k * n + i];
  }
  return L;
}

}  // namespace detail

/// Cholesky factor of a symmetric positive semidefinite matrix.
///
/// Plain Cholesky with zero-pivot continuation is tried first. When it
/// rejects the matrix or its factor misses Sigma by more than
/// 1e-12 * (1 + ||Sigma||_F) (nearly singular leading minors), the factor is
/// recomputed with diagonal pivoting, which also decides definiteness.
inline LowerTriangular cholesky(const DenseMatrix& sigma) {
  if (!sigma.is_symmetric()) throw std::invalid_argument("cholesky: matrix is not symmetric");
  double max_diag = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) max_diag = std::max(max_diag, std::abs(sigma(i, i)));
  const double tol = 1e-12 * (1.0 + sigma.frobenius());
  try {
    auto L = detail::plain_cholesky(sigma, max_diag);
    if (detail::gram_residual(L, sigma) <= tol) return L;
  } catch (const NotPositiveSemidefinite&) {
  }
  return detail::pivoted_cholesky(sigma, max_diag);
}

/// x^T Sigma x, computed from Sigma directly. Round-off below zero is clamped.
inline double quad_form(const DenseMatrix& sigma, std::span<const double> x) {
  detail::require_same(sigma.size(), x.size(), "quad_form");
  double s = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double t = x[i] * sigma(i, j) * x[j];
      s += t;
      scale += std::abs(t);
    }
  }
  if (s < 0.0 && s >= -1e-12 * (1.0 + scale)) return 0.0;
  return s;
}

/// Sigma * x.
inline std::vector<double> mat_vec(const DenseMatrix& sigma, std::span<const double> x) {
  detail::require_same(sigma.size(), x.size(), "mat_vec");
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += sigma(i, j) * x[j];
  return out;
}

/// L^T * x; its squared norm equals x^T (L L^T) x.
inline std::vector<double> transpose_mul(const LowerTriangular& L, std::span<const double> x) {
  detail::require_same(L.size(), x.size(), "transpose_mul");
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t i = k; i < x.size(); ++i) out[k] += L(i, k) * x[i];
  return out;
}

/// center + L z: maps a standard normal point onto parameter space.
inline std::vector<double> affine_map(std::span<const double> center, const LowerTriangular& L,
                                      std::span<const double> z) {
  detail::require_same(center.size(), L.size(), "affine_map");
  detail::require_same(z.size(), L.size(), "affine_map");
  std::vector<double> out(center.begin(), center.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) out[i] += L(i, k) * z[k];
  return out;
}

/// Solves L z = v by forward substitution. Zero pivots give z_j = 0.
inline std::vector<double> solve_lower(const LowerTriangular& L, std::span<const double> v) {
  detail::require_same(L.size(), v.size(), "solve_lower");
  std::vector<double> z(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    double r = v[i];
    for (std::size_t k = 0; k < i; ++k) r -= L(i, k) * z[k];
    z[i] = L(i, i) > 0.0 ? r / L(i, i) : 0.0;
  }
  return z;
}

/// sqrt(v^T Sigma^{-1} v) given the Cholesky factor of a definite Sigma.
inline double mahalanobis_norm(const LowerTriangular& L, std::span<const double> v) {
  const auto z = solve_lower(L, v);
  double s = 0.0;
  for (double t : z) s += t * t;
  return std::sqrt(s);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  detail::require_same(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  detail::require_same(a.size(), b.size(), "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace robustcut

#endif  // ROBUSTCUT_LINALG_HPP
