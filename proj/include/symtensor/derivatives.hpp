#ifndef SYMTENSOR_DERIVATIVES_HPP
#define SYMTENSOR_DERIVATIVES_HPP

#include "symtensor/immanant.hpp"

namespace symtensor {

// Result of a k-th order directional derivative. degenerate_order marks
// k beyond the polynomial degree: the value is a genuine zero (the
// immanant has degree n, each tensor-power entry degree m), flagged so
// callers can tell it apart from an interior zero.
template <typename Scalar>
struct Derivative {
  Scalar value;
  bool degenerate_order = false;
};

enum class DerivativeMethod { First, Mixed, Second, All };

template <typename Scalar>
bool values_agree(const Scalar& a, const Scalar& b, double rel_tol = 1e-9) {
  if constexpr (scalar_traits<Scalar>::is_exact) {
    (void)rel_tol;
    return a == b;
  } else {
    const double scale = std::max({1.0, scalar_traits<Scalar>::abs_approx(a),
                                   scalar_traits<Scalar>::abs_approx(b)});
    return scalar_traits<Scalar>::abs_approx(a - b) <= rel_tol * scale;
  }
}

namespace detail {

template <typename Scalar>
void check_directions(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                      const IrreducibleCharacter& chi, const char* what) {
  const int n = square_order(A);
  if (chi.group_degree() != n)
    throw DimensionError(std::string(what) + ": character weight differs from matrix order");
  if (directions.empty()) throw DimensionError(std::string(what) + ": no directions given");
  for (const auto& X : directions)
    if (square_order(X) != n) throw DimensionError(std::string(what) + ": direction order mismatch");
}

template <typename Scalar>
MatrixList<Scalar> permuted(const MatrixList<Scalar>& directions, const Permutation& sigma) {
  MatrixList<Scalar> out;
  out.reserve(directions.size());
  for (int p = 0; p < sigma.degree(); ++p)
    out.push_back(directions[static_cast<size_t>(sigma(p))]);
  return out;
}

} // namespace detail

// D d_chi(A)(X) = tr(adj_chi(A)^T X). Evaluates the trace form, the
// column-splice form sum_j d_chi(A(j;X)) and the entrywise form
// sum_{ij} x_ij d_chi(A(i|j)), checks pairwise agreement (exact equality
// in exact mode), and returns the column-splice value.
template <typename Scalar>
Scalar derivative_first(const MatrixX<Scalar>& A, const MatrixX<Scalar>& X,
                        const IrreducibleCharacter& chi) {
  detail::check_directions(A, MatrixList<Scalar>{X}, chi, "derivative_first");
  const int n = square_order(A);

  Scalar splice_form = Scalar(0);
  for (int j = 0; j < n; ++j) splice_form += immanant(column_splice(A, j, X), chi);

  const MatrixX<Scalar> adj = immanantal_adjoint(A, chi);
  const Scalar trace_form = (adj.transpose() * X).trace();

  Scalar entry_form = Scalar(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entry_form += X(i, j) * immanant(single_entry_matrix(A, i, j), chi);

  if (!values_agree(splice_form, trace_form) || !values_agree(splice_form, entry_form))
    throw VerificationError("derivative_first: the three first-derivative forms disagree");
  return splice_form;
}

// D^k d_chi(A)(X^1..X^k) = sum_{sigma in S_k} sum_{alpha in Q_{k,n}}
// d_chi(A(alpha; X^{sigma(1)},...,X^{sigma(k)})).
template <typename Scalar>
Derivative<Scalar> derivative_k_first_expression(const MatrixX<Scalar>& A,
                                                 const MatrixList<Scalar>& directions,
                                                 const IrreducibleCharacter& chi) {
  detail::check_directions(A, directions, chi, "derivative_k_first_expression");
  const int n = square_order(A);
  const int k = static_cast<int>(directions.size());
  if (k > n) return {Scalar(0), true};

  Scalar acc = Scalar(0);
  const auto alphas = enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing);
  for_each_permutation(k, [&](const std::vector<int>& sig) {
    const MatrixList<Scalar> ordered = detail::permuted(directions, Permutation(sig));
    for (const IndexMap& alpha : alphas) acc += immanant(column_splice(A, alpha, ordered), chi);
  });
  return {acc, false};
}

// Mixed immanant: Delta_chi(M^1,...,M^n) = (1/n!) sum_{sigma in S_n}
// d_chi(matrix whose column j is column j of M^{sigma(j)}). Symmetric in
// its arguments; Delta_chi(A,...,A) = d_chi(A).
template <typename Scalar>
Scalar mixed_immanant(const MatrixList<Scalar>& matrices, const IrreducibleCharacter& chi) {
  if (matrices.empty()) throw DimensionError("mixed_immanant: no matrices given");
  const int n = square_order(matrices.front());
  if (static_cast<int>(matrices.size()) != n)
    throw DimensionError("mixed_immanant: needs exactly n matrices of order n");
  for (const auto& M : matrices)
    if (square_order(M) != n) throw DimensionError("mixed_immanant: order mismatch");
  if (chi.group_degree() != n)
    throw DimensionError("mixed_immanant: character weight differs from matrix order");

  Scalar acc = Scalar(0);
  MatrixX<Scalar> spliced(n, n);
  for_each_permutation(n, [&](const std::vector<int>& sig) {
    for (int j = 0; j < n; ++j) spliced.col(j) = matrices[static_cast<size_t>(sig[static_cast<size_t>(j)])].col(j);
    acc += immanant(spliced, chi);
  });
  return acc * scalar_traits<Scalar>::from_ratio(1, factorial(n));
}

// Delta_chi(A; X^1..X^k): n-k leading slots filled with A.
template <typename Scalar>
Scalar mixed_immanant_with_base(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                                const IrreducibleCharacter& chi) {
  const int n = square_order(A);
  const int k = static_cast<int>(directions.size());
  if (k > n) throw DimensionError("mixed_immanant_with_base: more directions than slots");
  MatrixList<Scalar> padded(static_cast<size_t>(n - k), A);
  padded.insert(padded.end(), directions.begin(), directions.end());
  return mixed_immanant(padded, chi);
}

// D^k d_chi(A)(X^1..X^k) = n!/(n-k)! * Delta_chi(A; X^1..X^k).
template <typename Scalar>
Derivative<Scalar> derivative_k_via_mixed(const MatrixX<Scalar>& A,
                                          const MatrixList<Scalar>& directions,
                                          const IrreducibleCharacter& chi) {
  detail::check_directions(A, directions, chi, "derivative_k_via_mixed");
  const int n = square_order(A);
  const int k = static_cast<int>(directions.size());
  if (k > n) return {Scalar(0), true};
  const std::int64_t falling = factorial(n) / factorial(n - k);
  return {scalar_traits<Scalar>::from_int(falling) *
              mixed_immanant_with_base(A, directions, chi),
          false};
}

// D^k d_chi(A)(X^1..X^k) = sum_{sigma in S_k} sum_{alpha,beta in Q_{k,n}}
// d_chi(X^sigma_beta[alpha|beta] (+)_{alpha|beta} A(alpha|beta)): every
// summand separates the direction entries from the entries of A.
template <typename Scalar>
Derivative<Scalar> derivative_k_second_expression(const MatrixX<Scalar>& A,
                                                  const MatrixList<Scalar>& directions,
                                                  const IrreducibleCharacter& chi) {
  detail::check_directions(A, directions, chi, "derivative_k_second_expression");
  const int n = square_order(A);
  const int k = static_cast<int>(directions.size());
  if (k > n) return {Scalar(0), true};

  const auto qkn = enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing);
  Scalar acc = Scalar(0);
  for_each_permutation(k, [&](const std::vector<int>& sig) {
    const Permutation sigma(sig);
    for (const IndexMap& beta : qkn) {
      const MatrixX<Scalar> x_sigma_beta = spliced_zero_matrix(n, beta, sigma, directions);
      for (const IndexMap& alpha : qkn)
        acc += immanant(embedded_direct_sum(submatrix(x_sigma_beta, alpha, beta),
                                            deleted_submatrix(A, alpha, beta), alpha, beta),
                        chi);
    }
  });
  return {acc, false};
}

// Dispatcher used by the CLI. Method::All evaluates every route, checks
// pairwise agreement and returns the first-expression result.
template <typename Scalar>
Derivative<Scalar> evaluate_derivative(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                                       const IrreducibleCharacter& chi, DerivativeMethod method) {
  switch (method) {
    case DerivativeMethod::First:
      return derivative_k_first_expression(A, directions, chi);
    case DerivativeMethod::Mixed:
      return derivative_k_via_mixed(A, directions, chi);
    case DerivativeMethod::Second:
      return derivative_k_second_expression(A, directions, chi);
    case DerivativeMethod::All: {
      const Derivative<Scalar> first = derivative_k_first_expression(A, directions, chi);
      const Derivative<Scalar> mixed = derivative_k_via_mixed(A, directions, chi);
      const Derivative<Scalar> second = derivative_k_second_expression(A, directions, chi);
      if (!values_agree(first.value, mixed.value) || !values_agree(first.value, second.value))
        throw VerificationError("derivative: first/mixed/second expressions disagree");
      return first;
    }
  }
  throw DimensionError("evaluate_derivative: unknown method");
}

} // namespace symtensor

#endif
