#include "symtensor/oracle.hpp"

#include "symtensor/errors.hpp"

namespace symtensor {
namespace oracle {

std::vector<Rational> coefficient_extraction_weights(int degree) {
  if (degree < 1) throw DimensionError("coefficient_extraction_weights: degree must be >= 1");
  const int d = degree;
  std::vector<Rational> weights(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    // L_i(t) = prod_{j != i} (t - j)/(i - j); track the full coefficient
    // vector and read off the linear coefficient.
    std::vector<Rational> poly{Rational(1)};
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(poly.size() + 1);
      const Rational denom(static_cast<long>(i - j));
      for (size_t c = 0; c < poly.size(); ++c) {
        next[c] += poly[c] * Rational(static_cast<long>(-j)) / denom;
        next[c + 1] += poly[c] / denom;
      }
      poly = std::move(next);
    }
    weights[static_cast<size_t>(i)] = poly.size() > 1 ? poly[1] : Rational(0);
  }
  return weights;
}

Eigen::MatrixXcd kronecker_power(const Eigen::MatrixXcd& A, int m) {
  if (m < 1) throw DimensionError("kronecker_power: m must be >= 1");
  Eigen::MatrixXcd out = A;
  for (int step = 1; step < m; ++step) {
    const Eigen::Index p = out.rows(), q = out.cols();
    Eigen::MatrixXcd next(p * A.rows(), q * A.cols());
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = 0; j < q; ++j)
        next.block(i * A.rows(), j * A.cols(), A.rows(), A.cols()) = out(i, j) * A;
    out = std::move(next);
  }
  return out;
}

TensorSpaceModel::TensorSpaceModel(const IrreducibleCharacter& chi, int m, int n)
    : m_(m), n_(n) {
  if (chi.group_degree() != m)
    throw DimensionError("TensorSpaceModel: m differs from character weight");
  if (m < 1 || n < 1) throw DimensionError("TensorSpaceModel: m, n must be >= 1");
  dim_ = 1;
  for (int i = 0; i < m; ++i) {
    dim_ *= n;
    if (dim_ > 4096) throw SizeCapError("TensorSpaceModel: n^m capped at 4096");
  }

  projector_ = Eigen::MatrixXd::Zero(dim_, dim_);
  const double norm = static_cast<double>(chi.degree()) / static_cast<double>(factorial(m));
  std::vector<int> gamma(static_cast<size_t>(m), 0);
  for_each_permutation(m, [&](const std::vector<int>& sig) {
    const Permutation sigma(sig);
    const Permutation sigma_inv = sigma.inverse();
    const double coeff = norm * static_cast<double>(chi(sigma));
    if (coeff == 0.0) return;
    // P(sigma) e_gamma = e_{gamma o sigma^{-1}}
    std::fill(gamma.begin(), gamma.end(), 0);
    for (long long col = 0; col < dim_; ++col) {
      long long row = 0;
      for (int t = 0; t < m_; ++t)
        row = row * n_ + gamma[static_cast<size_t>(sigma_inv(t))];
      projector_(row, col) += coeff;
      int pos = m_ - 1;
      while (pos >= 0 && gamma[static_cast<size_t>(pos)] == n_ - 1) gamma[static_cast<size_t>(pos--)] = 0;
      if (pos >= 0) ++gamma[static_cast<size_t>(pos)];
    }
  });
}

long long TensorSpaceModel::index_of(const IndexMap& gamma) const {
  if (gamma.length() != m_) throw DimensionError("TensorSpaceModel: index map length differs from m");
  long long idx = 0;
  for (int t = 0; t < m_; ++t) {
    const int v = gamma(t);
    if (v < 0 || v >= n_) throw DimensionError("TensorSpaceModel: index out of range");
    idx = idx * n_ + v;
  }
  return idx;
}

Eigen::VectorXd TensorSpaceModel::symmetrized_tensor(const IndexMap& alpha) const {
  return projector_.col(index_of(alpha));
}

double TensorSpaceModel::norm2(const IndexMap& alpha) const {
  return symmetrized_tensor(alpha).squaredNorm();
}

double TensorSpaceModel::idempotence_residual() const {
  return (projector_ * projector_ - projector_).cwiseAbs().maxCoeff();
}

double TensorSpaceModel::hermiticity_residual() const {
  return (projector_ - projector_.transpose()).cwiseAbs().maxCoeff();
}

ProjectorPower projector_oracle_k_chi(const Eigen::MatrixXcd& A, const IrreducibleCharacter& chi,
                                      int m) {
  const int n = square_order(A);
  BasisIndexSet basis = build_basis_index_set(chi, m, n);
  const TensorSpaceModel model(chi, m, n);
  const Eigen::MatrixXcd power = kronecker_power(A, m);

  const int t = static_cast<int>(basis.delta_hat.size());
  Eigen::MatrixXcd Q(model.dimension(), t);
  for (int a = 0; a < t; ++a) {
    Eigen::VectorXcd v =
        model.symmetrized_tensor(basis.delta_hat[static_cast<size_t>(a)]).cast<std::complex<double>>();
    for (int b = 0; b < a; ++b) v -= (Q.col(b).adjoint() * v).value() * Q.col(b);
    const double norm = v.norm();
    if (norm < 1e-9)
      throw VerificationError("projector_oracle_k_chi: delta_hat tensors not independent "
                              "in the explicit model");
    Q.col(a) = v / norm;
  }
  return {std::move(basis), Q.adjoint() * power * Q};
}

} // namespace oracle
} // namespace symtensor
