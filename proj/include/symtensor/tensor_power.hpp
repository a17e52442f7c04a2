#ifndef SYMTENSOR_TENSOR_POWER_HPP
#define SYMTENSOR_TENSOR_POWER_HPP

#include <Eigen/Cholesky>

#include <cmath>

#include "symtensor/basis.hpp"
#include "symtensor/derivatives.hpp"

namespace symtensor {

// Exact Gram matrix <e*_i, e*_j> on an index list (real: S_m characters
// are integer-valued).
inline MatrixX<Rational> gram_matrix(const std::vector<IndexMap>& maps,
                                     const IrreducibleCharacter& chi) {
  const int t = static_cast<int>(maps.size());
  MatrixX<Rational> G(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j <= i; ++j) {
      G(i, j) = gram_entry(maps[static_cast<size_t>(i)], maps[static_cast<size_t>(j)], chi);
      G(j, i) = G(i, j);
    }
  return G;
}

// Change-of-basis matrix B from the orthonormalized basis to the
// symmetrized tensors over delta_hat: upper triangular, positive diagonal,
// B^T G B = I. Column alpha holds the Gram-Schmidt coefficients of
// v_alpha, processed in lexicographic order.
inline Eigen::MatrixXd gram_schmidt_change_of_basis(const std::vector<IndexMap>& delta_hat,
                                                    const IrreducibleCharacter& chi) {
  const int t = static_cast<int>(delta_hat.size());
  if (t == 0) return Eigen::MatrixXd(0, 0); // zero-dimensional symmetry class
  const MatrixX<Rational> G_exact = gram_matrix(delta_hat, chi);
  Eigen::MatrixXd G(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) G(i, j) = G_exact(i, j).convert_to<double>();

  Eigen::LLT<Eigen::MatrixXd> llt(G);
  if (llt.info() != Eigen::Success)
    throw VerificationError("gram_schmidt_change_of_basis: Gram block not positive definite "
                            "(delta_hat construction bug)");
  const Eigen::MatrixXd B = llt.matrixU().solve(Eigen::MatrixXd::Identity(t, t));
  const double residual = (B.transpose() * G * B - Eigen::MatrixXd::Identity(t, t))
                              .cwiseAbs()
                              .maxCoeff();
  if (residual > 1e-10)
    throw VerificationError("gram_schmidt_change_of_basis: orthonormality residual too large");
  return B;
}

// imm_chi(A): entry (i,j) is d_chi(A[delta_hat_i | delta_hat_j]), the
// immanantal minors with repeated row/column indices allowed.
template <typename Derived>
MatrixX<typename Derived::Scalar> imm_matrix(const Eigen::MatrixBase<Derived>& A,
                                             const IrreducibleCharacter& chi,
                                             const std::vector<IndexMap>& delta_hat) {
  using Scalar = typename Derived::Scalar;
  const int t = static_cast<int>(delta_hat.size());
  MatrixX<Scalar> M(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      M(i, j) = immanant(
          multi_submatrix(A, delta_hat[static_cast<size_t>(i)], delta_hat[static_cast<size_t>(j)]),
          chi);
  return M;
}

// miximm_chi(M^1..M^m): entry (i,j) is
// Delta_chi(M^1[delta_i|delta_j],...,M^m[delta_i|delta_j]).
template <typename Scalar>
MatrixX<Scalar> miximm_matrix(const MatrixList<Scalar>& matrices, const IrreducibleCharacter& chi,
                              const std::vector<IndexMap>& delta_hat) {
  const int m = chi.group_degree();
  if (static_cast<int>(matrices.size()) != m)
    throw DimensionError("miximm_matrix: needs exactly m matrices");
  const int t = static_cast<int>(delta_hat.size());
  MatrixX<Scalar> M(t, t);
  MatrixList<Scalar> slices(static_cast<size_t>(m));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      for (int a = 0; a < m; ++a)
        slices[static_cast<size_t>(a)] =
            multi_submatrix(matrices[static_cast<size_t>(a)], delta_hat[static_cast<size_t>(i)],
                            delta_hat[static_cast<size_t>(j)]);
      M(i, j) = mixed_immanant(slices, chi);
    }
  return M;
}

// miximm_chi(A; X^1..X^k): m-k leading slots filled with A.
template <typename Scalar>
MatrixX<Scalar> miximm_matrix_with_base(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                                        const IrreducibleCharacter& chi,
                                        const std::vector<IndexMap>& delta_hat) {
  const int m = chi.group_degree();
  const int k = static_cast<int>(directions.size());
  if (k > m) throw DimensionError("miximm_matrix_with_base: more directions than slots");
  MatrixList<Scalar> padded(static_cast<size_t>(m - k), A);
  padded.insert(padded.end(), directions.begin(), directions.end());
  return miximm_matrix(padded, chi, delta_hat);
}

template <typename Scalar>
struct SymmetricPower {
  BasisIndexSet basis;
  MatrixX<Scalar> matrix; // t x t, rows/columns indexed by delta_hat
};

template <typename Scalar>
struct SymmetricPowerDerivative {
  BasisIndexSet basis;
  MatrixX<Scalar> matrix;
  bool degenerate_order = false;
};

namespace detail {

inline void check_tensor_power_caps(int n, int m) {
  if (m < 1 || n < 1) throw DimensionError("tensor power: m, n must be >= 1");
  if (n > 5 || m > 4) throw SizeCapError("tensor power: desk-scale caps are n <= 5, m <= 4");
}

inline std::int64_t integer_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// For a linear character the symmetrized tensors over delta_hat are
// orthogonal and B is diagonal with entries sqrt(m!/s_alpha), where
// s_alpha is the stabilizer character sum. Products b_i b_j are rational
// exactly when s_i s_j is a perfect square (always for the alternating
// character, where every s is 1); in that case conjugation by B reduces
// to an exact entrywise scale: (chi(id)/m!) b_i b_j = 1/sqrt(s_i s_j).
inline MatrixX<Rational> exact_b_conjugation_scale(const std::vector<IndexMap>& delta_hat,
                                                   const IrreducibleCharacter& chi) {
  if (chi.degree() != 1)
    throw DimensionError("exact tensor power mode requires a linear character "
                         "(the change of basis is irrational otherwise); use float mode");
  const int t = static_cast<int>(delta_hat.size());
  std::vector<std::int64_t> s(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) {
    s[static_cast<size_t>(i)] = gram_character_sum(delta_hat[static_cast<size_t>(i)],
                                                   delta_hat[static_cast<size_t>(i)], chi);
    if (s[static_cast<size_t>(i)] <= 0)
      throw VerificationError("exact tensor power: nonpositive squared norm on delta_hat");
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (gram_character_sum(delta_hat[static_cast<size_t>(i)], delta_hat[static_cast<size_t>(j)],
                             chi) != 0)
        throw VerificationError("exact tensor power: Gram block unexpectedly non-diagonal");

  MatrixX<Rational> scale(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const std::int64_t prod = s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
      const std::int64_t root = integer_sqrt(prod);
      if (root * root != prod)
        throw DimensionError("exact tensor power mode: irrational change-of-basis product; "
                             "use float mode");
      scale(i, j) = Rational(1, static_cast<long>(root));
    }
  return scale;
}

template <typename Scalar>
MatrixX<Scalar> conjugate_by_b(const MatrixX<Scalar>& inner, const std::vector<IndexMap>& delta_hat,
                               const IrreducibleCharacter& chi, std::int64_t numerator_factorial) {
  const int t = static_cast<int>(delta_hat.size());
  if constexpr (scalar_traits<Scalar>::is_exact) {
    // (chi(id)/q!) B^* inner B with diagonal rational-product B:
    // entry (i,j) = (m!/q!) * inner(i,j) / sqrt(s_i s_j)
    const MatrixX<Rational> scale = exact_b_conjugation_scale(delta_hat, chi);
    const std::int64_t m_fact = factorial(chi.group_degree());
    MatrixX<Scalar> out(t, t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        out(i, j) = inner(i, j) * scalar_traits<Scalar>::from_rational(
                                      scale(i, j) * Rational(static_cast<long>(m_fact),
                                                             static_cast<long>(numerator_factorial)));
    return out;
  } else {
    const Eigen::MatrixXd B = gram_schmidt_change_of_basis(delta_hat, chi);
    const MatrixX<Scalar> Bc = B.cast<Scalar>();
    const Scalar factor = scalar_traits<Scalar>::from_ratio(chi.degree(), numerator_factorial);
    return factor * (Bc.adjoint() * inner * Bc).eval();
  }
}

} // namespace detail

// K_chi(A) = (chi(id)/m!) B^* imm_chibar(A) B: the matrix of the m-th
// chi-symmetric tensor power of A on the orthonormalized basis over
// delta_hat. Exact mode is available for linear characters with rational
// B products (the alternating character in particular, where the result
// is the m-th compound).
template <typename Scalar>
SymmetricPower<Scalar> k_chi(const MatrixX<Scalar>& A, const IrreducibleCharacter& chi, int m) {
  const int n = square_order(A);
  if (chi.group_degree() != m) throw DimensionError("k_chi: m differs from character weight");
  detail::check_tensor_power_caps(n, m);

  BasisIndexSet basis = build_basis_index_set(chi, m, n);
  if (basis.delta_hat.size() > 64) throw SizeCapError("k_chi: basis dimension capped at 64");

  const IrreducibleCharacter chibar = conjugate_character(chi);
  const MatrixX<Scalar> M = imm_matrix(A, chibar, basis.delta_hat);
  MatrixX<Scalar> K = detail::conjugate_by_b(M, basis.delta_hat, chi, factorial(m));
  return {std::move(basis), std::move(K)};
}

// Expanded entry route for D^k K_chi(A): conjugation by B of the
// Laplace-separated second expression applied to every minor pair,
//   (chi(id)/m!) sum_{gamma,delta} b b^* sum_{sigma,rho,tau}
//     d_chibar(X[delta|gamma]^sigma_tau[rho|tau] (+) A[delta|gamma](rho|tau)).
template <typename Scalar>
MatrixX<Scalar> k_chi_derivative_expanded(const MatrixX<Scalar>& A,
                                          const MatrixList<Scalar>& directions,
                                          const IrreducibleCharacter& chi,
                                          const BasisIndexSet& basis) {
  const int t = static_cast<int>(basis.delta_hat.size());
  const int m = chi.group_degree();
  const IrreducibleCharacter chibar = conjugate_character(chi);
  const int k = static_cast<int>(directions.size());

  MatrixX<Scalar> inner(t, t);
  MatrixList<Scalar> slices(static_cast<size_t>(k));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      const IndexMap& delta = basis.delta_hat[static_cast<size_t>(i)];
      const IndexMap& gamma = basis.delta_hat[static_cast<size_t>(j)];
      const MatrixX<Scalar> C = multi_submatrix(A, delta, gamma);
      for (int a = 0; a < k; ++a)
        slices[static_cast<size_t>(a)] = multi_submatrix(directions[static_cast<size_t>(a)], delta, gamma);
      inner(i, j) = derivative_k_second_expression(C, slices, chibar).value;
    }
  return detail::conjugate_by_b(inner, basis.delta_hat, chi, factorial(m));
}

// D^k K_chi(A)(X^1..X^k) = (chi(id)/(m-k)!) B^* miximm_chibar(A;X^1..X^k) B.
// Both this closed form and the expanded entry route are evaluated and
// checked against each other (exact equality in exact mode, 1e-10
// entrywise in float mode). Orders k > m yield the flagged zero matrix.
template <typename Scalar>
SymmetricPowerDerivative<Scalar> k_chi_derivative(const MatrixX<Scalar>& A,
                                                  const MatrixList<Scalar>& directions,
                                                  const IrreducibleCharacter& chi, int m) {
  const int n = square_order(A);
  if (chi.group_degree() != m) throw DimensionError("k_chi_derivative: m differs from character weight");
  detail::check_tensor_power_caps(n, m);
  const int k = static_cast<int>(directions.size());
  if (k < 1) throw DimensionError("k_chi_derivative: no directions given");
  for (const auto& X : directions)
    if (square_order(X) != n) throw DimensionError("k_chi_derivative: direction order mismatch");

  BasisIndexSet basis = build_basis_index_set(chi, m, n);
  const int t = static_cast<int>(basis.delta_hat.size());
  if (t > 64) throw SizeCapError("k_chi_derivative: basis dimension capped at 64");
  if (k > m)
    return {std::move(basis), MatrixX<Scalar>::Zero(t, t).eval(), true};

  const IrreducibleCharacter chibar = conjugate_character(chi);
  const MatrixX<Scalar> mix = miximm_matrix_with_base(A, directions, chibar, basis.delta_hat);
  const MatrixX<Scalar> closed = detail::conjugate_by_b(mix, basis.delta_hat, chi, factorial(m - k));
  const MatrixX<Scalar> expanded = k_chi_derivative_expanded(A, directions, chi, basis);

  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (!values_agree(closed(i, j), expanded(i, j), 1e-10))
        throw VerificationError("k_chi_derivative: closed form and expanded entry formula disagree");
  return {std::move(basis), closed, false};
}

} // namespace symtensor

#endif
