#ifndef SYMTENSOR_MATRIX_HPP
#define SYMTENSOR_MATRIX_HPP

#include <Eigen/Core>

#include <vector>

#include "symtensor/errors.hpp"
#include "symtensor/index_maps.hpp"
#include "symtensor/scalar.hpp"

namespace symtensor {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using MatrixList = std::vector<MatrixX<Scalar>>;

using ExactMatrix = MatrixX<GaussianRational>;
using ComplexMatrix = MatrixX<std::complex<double>>;

template <typename Derived>
int square_order(const Eigen::MatrixBase<Derived>& A) {
  if (A.rows() != A.cols()) throw DimensionError("matrix must be square");
  return static_cast<int>(A.rows());
}

inline void check_index_range(const IndexMap& alpha, int n, const char* what) {
  for (int v : alpha.images)
    if (v < 0 || v >= n) throw DimensionError(std::string(what) + ": index out of range");
}

inline void check_strictly_increasing(const IndexMap& alpha, int n, const char* what) {
  check_index_range(alpha, n, what);
  if (!is_strictly_increasing(alpha.images))
    throw DimensionError(std::string(what) + ": index map must be strictly increasing");
}

// A(i|j): row i and column j zeroed, except entry (i,j) set to 1.
template <typename Derived>
MatrixX<typename Derived::Scalar> single_entry_matrix(const Eigen::MatrixBase<Derived>& A,
                                                      int i, int j) {
  using Scalar = typename Derived::Scalar;
  const int n = square_order(A);
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw DimensionError("single_entry_matrix: index out of range");
  MatrixX<Scalar> M = A;
  M.row(i).setZero();
  M.col(j).setZero();
  M(i, j) = Scalar(1);
  return M;
}

// X[alpha|beta]: rows alpha, columns beta. Both strictly increasing.
template <typename Derived>
MatrixX<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& X,
                                            const IndexMap& alpha, const IndexMap& beta) {
  const int n = square_order(X);
  check_strictly_increasing(alpha, n, "submatrix");
  check_strictly_increasing(beta, n, "submatrix");
  if (alpha.length() != beta.length())
    throw DimensionError("submatrix: alpha and beta must have equal length");
  const int k = alpha.length();
  MatrixX<typename Derived::Scalar> M(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) M(i, j) = X(alpha(i), beta(j));
  return M;
}

// Entrywise x_{gamma(i) delta(j)} with repeats allowed (Gamma indices); the
// generalized minors behind the chi-symmetric tensor power.
template <typename Derived>
MatrixX<typename Derived::Scalar> multi_submatrix(const Eigen::MatrixBase<Derived>& X,
                                                  const IndexMap& gamma, const IndexMap& delta) {
  const int n = square_order(X);
  check_index_range(gamma, n, "multi_submatrix");
  check_index_range(delta, n, "multi_submatrix");
  if (gamma.length() != delta.length())
    throw DimensionError("multi_submatrix: index maps must have equal length");
  const int m = gamma.length();
  MatrixX<typename Derived::Scalar> M(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M(i, j) = X(gamma(i), delta(j));
  return M;
}

// X(alpha|beta): rows alpha and columns beta deleted; equals
// X[complement(alpha)|complement(beta)].
template <typename Derived>
MatrixX<typename Derived::Scalar> deleted_submatrix(const Eigen::MatrixBase<Derived>& X,
                                                    const IndexMap& alpha, const IndexMap& beta) {
  const int n = square_order(X);
  check_strictly_increasing(alpha, n, "deleted_submatrix");
  check_strictly_increasing(beta, n, "deleted_submatrix");
  return submatrix(X, complement(alpha, n), complement(beta, n));
}

// A (+)_{alpha|beta} B: order-n matrix carrying A on (Im alpha) x (Im beta),
// B on the complementary block, zeros on the two mixed blocks.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> embedded_direct_sum(const Eigen::MatrixBase<DerivedA>& A,
                                                       const Eigen::MatrixBase<DerivedB>& B,
                                                       const IndexMap& alpha,
                                                       const IndexMap& beta) {
  using Scalar = typename DerivedA::Scalar;
  const int k = square_order(A);
  const int nk = square_order(B);
  const int n = k + nk;
  check_strictly_increasing(alpha, n, "embedded_direct_sum");
  check_strictly_increasing(beta, n, "embedded_direct_sum");
  if (alpha.length() != k || beta.length() != k)
    throw DimensionError("embedded_direct_sum: index length differs from first summand order");

  // position of each row/col in alpha (resp. complement), -1 elsewhere
  std::vector<int> row_in_a(static_cast<size_t>(n), -1), col_in_b_rows(static_cast<size_t>(n), -1);
  std::vector<int> col_in_a(static_cast<size_t>(n), -1), col_in_b_cols(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) row_in_a[static_cast<size_t>(alpha(i))] = i;
  for (int j = 0; j < k; ++j) col_in_a[static_cast<size_t>(beta(j))] = j;
  const IndexMap alpha_bar = complement(alpha, n);
  const IndexMap beta_bar = complement(beta, n);
  for (int i = 0; i < nk; ++i) col_in_b_rows[static_cast<size_t>(alpha_bar(i))] = i;
  for (int j = 0; j < nk; ++j) col_in_b_cols[static_cast<size_t>(beta_bar(j))] = j;

  MatrixX<Scalar> M = MatrixX<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int ia = row_in_a[static_cast<size_t>(i)];
      const int ja = col_in_a[static_cast<size_t>(j)];
      if (ia >= 0 && ja >= 0)
        M(i, j) = A(ia, ja);
      else if (ia < 0 && ja < 0)
        M(i, j) = B(col_in_b_rows[static_cast<size_t>(i)], col_in_b_cols[static_cast<size_t>(j)]);
    }
  return M;
}

// X{alpha|beta} = X[alpha|beta] (+)_{alpha|beta} X(alpha|beta).
template <typename Derived>
MatrixX<typename Derived::Scalar> brace(const Eigen::MatrixBase<Derived>& X,
                                        const IndexMap& alpha, const IndexMap& beta) {
  return embedded_direct_sum(submatrix(X, alpha, beta), deleted_submatrix(X, alpha, beta),
                             alpha, beta);
}

// A(alpha; X^1,...,X^k): column alpha(j) of A replaced by column alpha(j)
// of X^j.
template <typename Scalar>
MatrixX<Scalar> column_splice(const MatrixX<Scalar>& A, const IndexMap& alpha,
                              const MatrixList<Scalar>& sources) {
  const int n = square_order(A);
  check_strictly_increasing(alpha, n, "column_splice");
  if (static_cast<int>(sources.size()) != alpha.length())
    throw DimensionError("column_splice: one source matrix required per position");
  MatrixX<Scalar> M = A;
  for (int j = 0; j < alpha.length(); ++j) {
    const MatrixX<Scalar>& X = sources[static_cast<size_t>(j)];
    if (square_order(X) != n) throw DimensionError("column_splice: order mismatch");
    M.col(alpha(j)) = X.col(alpha(j));
  }
  return M;
}

// A(j; X): the k = 1 case.
template <typename Scalar>
MatrixX<Scalar> column_splice(const MatrixX<Scalar>& A, int j, const MatrixX<Scalar>& X) {
  return column_splice(A, IndexMap{{j}, IndexFamily::StrictlyIncreasing}, MatrixList<Scalar>{X});
}

// X^sigma_beta = 0(beta; X^{sigma(1)},...,X^{sigma(k)}): column beta(p) is
// column beta(p) of X^{sigma(p)}, all other columns zero.
template <typename Scalar>
MatrixX<Scalar> spliced_zero_matrix(int n, const IndexMap& beta, const Permutation& sigma,
                                    const MatrixList<Scalar>& directions) {
  if (sigma.degree() != beta.length())
    throw DimensionError("spliced_zero_matrix: permutation degree differs from |beta|");
  MatrixList<Scalar> permuted;
  permuted.reserve(directions.size());
  for (int p = 0; p < sigma.degree(); ++p)
    permuted.push_back(directions.at(static_cast<size_t>(sigma(p))));
  return column_splice(MatrixX<Scalar>::Zero(n, n).eval(), beta, permuted);
}

} // namespace symtensor

#endif
