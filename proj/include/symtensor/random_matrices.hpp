#ifndef SYMTENSOR_RANDOM_MATRICES_HPP
#define SYMTENSOR_RANDOM_MATRICES_HPP

#include <random>

#include "symtensor/matrix.hpp"

namespace symtensor {

// Gaussian-integer matrix with entries a+bi, a,b uniform in [-bound, bound].
inline ExactMatrix random_gaussian_integer_matrix(int n, std::mt19937& rng, int bound = 4) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M(i, j) = GaussianRational(Rational(dist(rng)), Rational(dist(rng)));
  return M;
}

inline ComplexMatrix random_complex_matrix(int n, std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  ComplexMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = std::complex<double>(dist(rng), dist(rng));
  return M;
}

inline ComplexMatrix to_complex(const ExactMatrix& M) {
  ComplexMatrix out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out(i, j) = M(i, j).to_complex();
  return out;
}

} // namespace symtensor

#endif
