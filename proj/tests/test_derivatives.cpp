#include <doctest.h>

#include <random>

#include "symtensor/derivatives.hpp"
#include "symtensor/oracle.hpp"
#include "symtensor/random_matrices.hpp"

using namespace symtensor;

namespace {

const IrreducibleCharacter kSign3(Partition({1, 1, 1}));

MatrixList<GaussianRational> random_directions(int k, int n, std::mt19937& rng) {
  MatrixList<GaussianRational> out;
  for (int i = 0; i < k; ++i) out.push_back(random_gaussian_integer_matrix(n, rng));
  return out;
}

} // namespace

TEST_CASE("first derivative at the identity") {
  std::mt19937 rng(43u);
  const int n = 3;
  const ExactMatrix I = ExactMatrix::Identity(n, n);
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
  const GaussianRational trace = X.trace();

  CHECK(derivative_first(I, X, kSign3) == trace); // Jacobi formula
  for (const Partition& lambda : partitions_of(n)) {
    const IrreducibleCharacter chi(lambda);
    CHECK(derivative_first(I, X, chi) == GaussianRational(chi.degree()) * trace);
  }
}

TEST_CASE("first derivative equals the coefficient of t") {
  std::mt19937 rng(47u);
  const int n = 4;
  const IrreducibleCharacter chi(Partition({2, 1, 1}));
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
  const GaussianRational expected = oracle::poly_coefficient_derivative(
      [&chi](const ExactMatrix& M) { return immanant(M, chi); }, A,
      MatrixList<GaussianRational>{X}, n);
  CHECK(derivative_first(A, X, chi) == expected);
  CHECK(derivative_k_first_expression(A, {X}, chi).value == expected);
}

TEST_CASE("homogeneity: D^n det(A)(X,...,X) = n! det X") {
  std::mt19937 rng(53u);
  const int n = 3;
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
  const MatrixList<GaussianRational> dirs(static_cast<size_t>(n), X);
  const GaussianRational expected =
      GaussianRational(factorial(n)) * oracle::det_bruteforce(X);
  CHECK(derivative_k_first_expression(A, dirs, kSign3).value == expected);
  CHECK(derivative_k_via_mixed(A, dirs, kSign3).value == expected);
  CHECK(derivative_k_second_expression(A, dirs, kSign3).value == expected);
}

TEST_CASE("equal directions collapse to k! times the diagonal splice sum") {
  std::mt19937 rng(59u);
  const int n = 4, k = 2;
  const IrreducibleCharacter chi(Partition({2, 2}));
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);

  GaussianRational splice_sum(0);
  for (const IndexMap& alpha : enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing))
    splice_sum += immanant(column_splice(A, alpha, MatrixList<GaussianRational>{X, X}), chi);
  CHECK(derivative_k_first_expression(A, MatrixList<GaussianRational>(k, X), chi).value ==
        GaussianRational(factorial(k)) * splice_sum);
}

TEST_CASE("mixed immanant properties") {
  std::mt19937 rng(61u);
  const int n = 3;
  for (const Partition& lambda : partitions_of(n)) {
    const IrreducibleCharacter chi(lambda);
    const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
    CHECK(mixed_immanant(MatrixList<GaussianRational>(n, A), chi) == immanant(A, chi));
  }

  // explicit 2x2 formula for the mixed discriminant
  const IrreducibleCharacter sign2(Partition({1, 1}));
  const ExactMatrix X = random_gaussian_integer_matrix(2, rng);
  const ExactMatrix Y = random_gaussian_integer_matrix(2, rng);
  const GaussianRational expected =
      (X(0, 0) * Y(1, 1) + Y(0, 0) * X(1, 1) - X(0, 1) * Y(1, 0) - Y(0, 1) * X(1, 0)) *
      GaussianRational(Rational(1, 2));
  CHECK(mixed_immanant(MatrixList<GaussianRational>{X, Y}, sign2) == expected);

  // sign character specializes to the mixed discriminant oracle
  MatrixList<GaussianRational> Bs = random_directions(3, 3, rng);
  CHECK(mixed_immanant(Bs, kSign3) == oracle::mixed_discriminant(Bs));

  // symmetry in the arguments
  const IrreducibleCharacter chi21(Partition({2, 1}));
  MatrixList<GaussianRational> swapped = {Bs[1], Bs[2], Bs[0]};
  CHECK(mixed_immanant(Bs, chi21) == mixed_immanant(swapped, chi21));

  CHECK_THROWS_AS(mixed_immanant(MatrixList<GaussianRational>{X, Y}, kSign3), DimensionError);
}

TEST_CASE("rewritten first expression") {
  std::mt19937 rng(67u);
  const int n = 3;
  const IrreducibleCharacter chi(Partition({2, 1}));
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);

  // k = 1: n * Delta_chi(A; X) equals the Jacobi-form first derivative
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
  CHECK(derivative_k_via_mixed(A, {X}, chi).value == derivative_first(A, X, chi));

  // k = n: n! * Delta_chi(X^1,...,X^n)
  const MatrixList<GaussianRational> dirs = random_directions(n, n, rng);
  CHECK(derivative_k_via_mixed(A, dirs, chi).value ==
        GaussianRational(factorial(n)) * mixed_immanant(dirs, chi));

  // all directions equal to A: Euler-type homogeneity
  for (int k = 1; k <= n; ++k) {
    const MatrixList<GaussianRational> repeats(static_cast<size_t>(k), A);
    CHECK(derivative_k_via_mixed(A, repeats, chi).value ==
          GaussianRational(factorial(n) / factorial(n - k)) * immanant(A, chi));
  }
}

TEST_CASE("three expressions agree on random instances") {
  std::mt19937 rng(71u);
  const int n = 4;
  for (const Partition& lambda : {Partition({2, 2}), Partition({3, 1})}) {
    const IrreducibleCharacter chi(lambda);
    for (int k = 1; k <= n; ++k) {
      const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
      const MatrixList<GaussianRational> dirs = random_directions(k, n, rng);
      const GaussianRational first = derivative_k_first_expression(A, dirs, chi).value;
      CHECK(first == derivative_k_via_mixed(A, dirs, chi).value);
      CHECK(first == derivative_k_second_expression(A, dirs, chi).value);
      CHECK(first == evaluate_derivative(A, dirs, chi, DerivativeMethod::All).value);
    }
  }
}

TEST_CASE("second expression collapses at k = n") {
  std::mt19937 rng(73u);
  const int n = 3;
  const IrreducibleCharacter chi(Partition({2, 1}));
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
  const MatrixList<GaussianRational> dirs = random_directions(n, n, rng);
  CHECK(derivative_k_second_expression(A, dirs, chi).value ==
        GaussianRational(factorial(n)) * mixed_immanant(dirs, chi));
}

TEST_CASE("degenerate order k > n") {
  std::mt19937 rng(79u);
  const int n = 2;
  const IrreducibleCharacter chi(Partition({2}));
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
  const MatrixList<GaussianRational> dirs = random_directions(n + 1, n, rng);

  for (const auto method :
       {DerivativeMethod::First, DerivativeMethod::Mixed, DerivativeMethod::Second}) {
    const Derivative<GaussianRational> d = evaluate_derivative(A, dirs, chi, method);
    CHECK(d.degenerate_order);
    CHECK(d.value.is_zero());
  }
  // the defining coefficient vanishes too
  CHECK(oracle::poly_coefficient_derivative(
            [&chi](const ExactMatrix& M) { return immanant(M, chi); }, A, dirs, n)
            .is_zero());
}

TEST_CASE("agreement predicate") {
  CHECK(values_agree(GaussianRational(1), GaussianRational(1)));
  CHECK_FALSE(values_agree(GaussianRational(1), GaussianRational(Rational(1), Rational(1, 1000000))));
  CHECK(values_agree(std::complex<double>(1.0, 0.0), std::complex<double>(1.0 + 1e-12, 0.0)));
  CHECK_FALSE(values_agree(std::complex<double>(1.0, 0.0), std::complex<double>(1.001, 0.0)));
}

TEST_CASE("float-mode derivative matches finite differences") {
  std::mt19937 rng(83u);
  const int n = 4;
  const IrreducibleCharacter chi(Partition({3, 1}));
  for (int k = 1; k <= 2; ++k) {
    const ComplexMatrix A = random_complex_matrix(n, rng);
    MatrixList<std::complex<double>> dirs;
    for (int i = 0; i < k; ++i) dirs.push_back(random_complex_matrix(n, rng));
    const std::complex<double> value = derivative_k_first_expression(A, dirs, chi).value;
    const std::complex<double> fd = oracle::finite_difference_derivative(
        [&chi](const ComplexMatrix& M) { return immanant(M, chi); }, A, dirs, 1e-3);
    CHECK(std::abs(value - fd) <= 1e-6 * std::max(1.0, std::abs(value)));
  }
}

TEST_CASE("derivative argument checks") {
  const ExactMatrix A = ExactMatrix::Identity(3, 3);
  const ExactMatrix bad = ExactMatrix::Identity(2, 2);
  CHECK_THROWS_AS(derivative_k_first_expression(A, {bad}, kSign3), DimensionError);
  CHECK_THROWS_AS(derivative_k_first_expression(A, {}, kSign3), DimensionError);
  CHECK_THROWS_AS(derivative_first(A, A, IrreducibleCharacter(Partition({2}))), DimensionError);
}
