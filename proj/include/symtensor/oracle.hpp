#ifndef SYMTENSOR_ORACLE_HPP
#define SYMTENSOR_ORACLE_HPP

#include <Eigen/Dense>

#include "symtensor/basis.hpp"
#include "symtensor/matrix.hpp"

namespace symtensor {
namespace oracle {

// Cofactor-expansion determinant: deliberately independent of the
// character-sum immanant path.
template <typename Scalar>
Scalar det_bruteforce(const MatrixX<Scalar>& A) {
  const int n = square_order(A);
  if (n > 7) throw SizeCapError("det_bruteforce: order capped at 7");
  if (n == 0) return Scalar(1);
  if (n == 1) return A(0, 0);
  Scalar acc = Scalar(0);
  MatrixX<Scalar> minor(n - 1, n - 1);
  for (int j = 0; j < n; ++j) {
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = A(r, c);
    const Scalar term = A(0, j) * det_bruteforce(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Ryser inclusion-exclusion permanent over column subsets.
template <typename Scalar>
Scalar perm_ryser(const MatrixX<Scalar>& A) {
  const int n = square_order(A);
  if (n > 12) throw SizeCapError("perm_ryser: order capped at 12");
  if (n == 0) return Scalar(1);
  Scalar total = Scalar(0);
  const unsigned full = 1u << n;
  for (unsigned mask = 1; mask < full; ++mask) {
    Scalar prod = Scalar(1);
    for (int i = 0; i < n; ++i) {
      Scalar row_sum = Scalar(0);
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) row_sum += A(i, j);
      prod *= row_sum;
    }
    const int complement_size = n - __builtin_popcount(mask);
    if (complement_size % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

// Mixed discriminant Delta(B^1,...,B^n) =
// (1/n!) sum_sigma det(column j taken from B^{sigma(j)}).
// Normalized so Delta(A,...,A) = det(A).
template <typename Scalar>
Scalar mixed_discriminant(const MatrixList<Scalar>& matrices) {
  if (matrices.empty()) throw DimensionError("mixed_discriminant: no matrices");
  const int n = square_order(matrices.front());
  if (static_cast<int>(matrices.size()) != n)
    throw DimensionError("mixed_discriminant: needs n matrices of order n");
  for (const auto& M : matrices)
    if (square_order(M) != n) throw DimensionError("mixed_discriminant: order mismatch");
  Scalar acc = Scalar(0);
  MatrixX<Scalar> spliced(n, n);
  for_each_permutation(n, [&](const std::vector<int>& sig) {
    for (int j = 0; j < n; ++j)
      spliced.col(j) = matrices[static_cast<size_t>(sig[static_cast<size_t>(j)])].col(j);
    acc += det_bruteforce(spliced);
  });
  return acc * scalar_traits<Scalar>::from_ratio(1, factorial(n));
}

// Coefficient of t in the Lagrange basis polynomial L_i over nodes 0..d:
// the weights w with sum_i w_i p(i) = [t^1] p for every p of degree <= d.
std::vector<Rational> coefficient_extraction_weights(int degree);

// Exact coefficient of t_1*t_2*...*t_k in f(A + sum t_i X^i), extracted by
// tensor-product Lagrange interpolation on the integer grid {0..d}^k,
// where d bounds the degree of f in each variable. This is the defining
// derivative, independent of every expansion formula.
template <typename F, typename Scalar>
Scalar poly_coefficient_derivative(F&& f, const MatrixX<Scalar>& A,
                                   const MatrixList<Scalar>& directions, int degree_bound) {
  const int k = static_cast<int>(directions.size());
  if (k == 0) throw DimensionError("poly_coefficient_derivative: no directions");
  const std::vector<Rational> w = coefficient_extraction_weights(degree_bound);

  std::vector<int> node(static_cast<size_t>(k), 0);
  Scalar acc = Scalar(0);
  while (true) {
    MatrixX<Scalar> point = A;
    Rational weight(1);
    for (int i = 0; i < k; ++i) {
      const int ji = node[static_cast<size_t>(i)];
      if (ji != 0)
        point += scalar_traits<Scalar>::from_int(ji) * directions[static_cast<size_t>(i)];
      weight *= w[static_cast<size_t>(ji)];
    }
    if (weight != 0) acc += scalar_traits<Scalar>::from_rational(weight) * f(point);

    int pos = 0;
    while (pos < k && node[static_cast<size_t>(pos)] == degree_bound) {
      node[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++node[static_cast<size_t>(pos)];
  }
  return acc;
}

// Nested central differences in the k directions with one Richardson
// extrapolation level; truncation error O(step^4) on smooth inputs.
template <typename F, typename Matrix>
auto finite_difference_derivative(F&& f, const Matrix& A, const std::vector<Matrix>& directions,
                                  double step) -> std::decay_t<decltype(f(A))> {
  using Ret = std::decay_t<decltype(f(A))>;
  if (directions.empty()) throw DimensionError("finite_difference_derivative: no directions");
  if (step <= 0) throw DimensionError("finite_difference_derivative: step must be positive");

  auto nested = [&](auto&& self, const Matrix& base, int k, double h) -> Ret {
    if (k == 0) return f(base);
    const Matrix& X = directions[static_cast<size_t>(k - 1)];
    const Matrix up = base + h * X;
    const Matrix down = base - h * X;
    Ret plus = self(self, up, k - 1, h);
    Ret minus = self(self, down, k - 1, h);
    return (plus - minus) / (2.0 * h);
  };
  const int k = static_cast<int>(directions.size());
  Ret coarse = nested(nested, A, k, step);
  Ret fine = nested(nested, A, k, step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

// Kronecker power of A: m-fold tensor product, first factor most
// significant, matching the lexicographic index of Gamma_{m,n}.
Eigen::MatrixXcd kronecker_power(const Eigen::MatrixXcd& A, int m);

// Explicit model of the symmetry class inside the full tensor power:
// the n^m-dimensional space, the symmetriser projector
// K = (chi(id)/m!) sum_sigma chi(sigma) P(sigma), and the symmetrized
// basis tensors as concrete coordinate vectors.
class TensorSpaceModel {
public:
  TensorSpaceModel(const IrreducibleCharacter& chi, int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  long long dimension() const { return dim_; }
  const Eigen::MatrixXd& projector() const { return projector_; }

  long long index_of(const IndexMap& gamma) const;
  Eigen::VectorXd symmetrized_tensor(const IndexMap& alpha) const; // e*_alpha
  double norm2(const IndexMap& alpha) const;

  double idempotence_residual() const;  // ||K^2 - K||_max
  double hermiticity_residual() const;  // ||K - K^T||_max

private:
  int m_;
  int n_;
  long long dim_;
  Eigen::MatrixXd projector_;
};

// Ground truth for k_chi: restrict the explicit m-fold Kronecker power of
// A to the symmetry class, in the basis obtained by Gram-Schmidt over the
// explicit symmetrized tensors of delta_hat (lexicographic order, same
// convention as the Gram-side change of basis).
struct ProjectorPower {
  BasisIndexSet basis;
  Eigen::MatrixXcd matrix;
};
ProjectorPower projector_oracle_k_chi(const Eigen::MatrixXcd& A, const IrreducibleCharacter& chi,
                                      int m);

// The (alpha,beta) entry of the k-th derivative of the m-th compound:
// k! sum_{rho,tau in Q_{k,m}} (-1)^{|rho|+|tau|} det(A[alpha|beta](rho|tau))
//    * Delta(X^1[alpha|beta][rho|tau], ..., X^k[alpha|beta][rho|tau]),
// built from the brute-force determinant and mixed discriminant only.
template <typename Scalar>
Scalar compound_derivative_entry(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                                 const IndexMap& alpha, const IndexMap& beta) {
  const int n = square_order(A);
  check_strictly_increasing(alpha, n, "compound_derivative_entry");
  check_strictly_increasing(beta, n, "compound_derivative_entry");
  const int m = alpha.length();
  const int k = static_cast<int>(directions.size());
  if (k > m) return Scalar(0);

  const MatrixX<Scalar> Asub = submatrix(A, alpha, beta);
  MatrixList<Scalar> Xsub;
  Xsub.reserve(directions.size());
  for (const auto& X : directions) Xsub.push_back(submatrix(X, alpha, beta));

  const auto qkm = enumerate_index_maps(k, m, IndexFamily::StrictlyIncreasing);
  Scalar acc = Scalar(0);
  for (const IndexMap& rho : qkm)
    for (const IndexMap& tau : qkm) {
      const Scalar det_part = det_bruteforce(deleted_submatrix(Asub, rho, tau));
      MatrixList<Scalar> slices;
      slices.reserve(Xsub.size());
      for (const auto& X : Xsub) slices.push_back(submatrix(X, rho, tau));
      const Scalar mix = mixed_discriminant(slices);
      const int sign = (one_based_image_sum(rho) + one_based_image_sum(tau)) % 2 == 0 ? 1 : -1;
      acc += scalar_traits<Scalar>::from_int(sign) * det_part * mix;
    }
  return scalar_traits<Scalar>::from_int(factorial(k)) * acc;
}

} // namespace oracle
} // namespace symtensor

#endif
