#include <doctest.h>

#include <cstdlib>
#include <random>

#include "symtensor/immanant.hpp"
#include "symtensor/oracle.hpp"
#include "symtensor/random_matrices.hpp"

using namespace symtensor;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<long>>& rows) {
  const int n = static_cast<int>(rows.size());
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = GaussianRational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return M;
}

// Distinct entries a_{ij} = 10(i+1) + (j+1): symbol placement is readable
// off the value.
ExactMatrix symbol_matrix(int n) {
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = GaussianRational(10 * (i + 1) + (j + 1));
  return M;
}

IndexMap q_map(std::vector<int> images) {
  return IndexMap{std::move(images), IndexFamily::StrictlyIncreasing};
}

const IrreducibleCharacter kSign2(Partition({1, 1}));
const IrreducibleCharacter kSign3(Partition({1, 1, 1}));
const IrreducibleCharacter kPerm2(Partition({2}));
const IrreducibleCharacter kPerm3(Partition({3}));
const IrreducibleCharacter kStandard3(Partition({2, 1}));

} // namespace

TEST_CASE("immanant of the identity is the character degree") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const IrreducibleCharacter chi(lambda);
      const ExactMatrix I = ExactMatrix::Identity(n, n);
      CHECK(immanant(I, chi) == GaussianRational(chi.degree()));
    }
}

TEST_CASE("immanants of all-ones matrices") {
  CHECK(immanant(from_ints({{1, 1}, {1, 1}}), kPerm2) == GaussianRational(2));
  CHECK(immanant(from_ints({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), kStandard3) == GaussianRational(0));
  // the zero is the orthogonality sum: d_chi(J_n) = sum_sigma chi(sigma)
  std::int64_t chi_sum = 0;
  for (const Permutation& sigma : all_permutations(3)) chi_sum += kStandard3(sigma);
  CHECK(chi_sum == 0);
}

TEST_CASE("immanant argument checks and empty convention") {
  CHECK(immanant(ExactMatrix(0, 0), IrreducibleCharacter(Partition(std::vector<int>{}))) == GaussianRational(1));
  CHECK_THROWS_AS(immanant(ExactMatrix::Identity(3, 3), kPerm2), DimensionError);
  CHECK_THROWS_AS(immanant(ExactMatrix::Identity(11, 11),
                           IrreducibleCharacter(Partition({11}))),
                  SizeCapError);
}

TEST_CASE("exact immanant is identical across thread counts") {
  std::mt19937 rng(11u);
  const int n = 9; // large enough to take the blocked parallel path
  const ExactMatrix A = random_gaussian_integer_matrix(n, rng, 2);
  const IrreducibleCharacter sign(Partition(std::vector<int>(n, 1)));

  setenv("SYMTENSOR_THREADS", "4", 1);
  const GaussianRational parallel = immanant(A, sign);
  setenv("SYMTENSOR_THREADS", "1", 1);
  const GaussianRational sequential = immanant(A, sign);
  unsetenv("SYMTENSOR_THREADS");
  CHECK(parallel == sequential);

  // the sign immanant is the determinant: cross-check against an LU route
  const std::complex<double> lu_det = to_complex(A).determinant();
  CHECK(std::abs(parallel.to_complex() - lu_det) <= 1e-8 * std::max(1.0, std::abs(lu_det)));
}

TEST_CASE("single entry matrix") {
  const ExactMatrix I3 = ExactMatrix::Identity(3, 3);
  CHECK(single_entry_matrix(I3, 0, 0) == I3);
  CHECK(single_entry_matrix(ExactMatrix::Identity(2, 2), 0, 1) == from_ints({{0, 1}, {0, 0}}));
  const ExactMatrix A = symbol_matrix(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const ExactMatrix M = single_entry_matrix(A, i, j);
      CHECK(M(i, j) == GaussianRational(1));
      for (int c = 0; c < 3; ++c) {
        CHECK((M(i, c) == (c == j ? GaussianRational(1) : GaussianRational(0))));
        CHECK((M(c, j) == (c == i ? GaussianRational(1) : GaussianRational(0))));
      }
    }
  CHECK_THROWS_AS(single_entry_matrix(A, 3, 0), DimensionError);
}

TEST_CASE("immanantal adjoint") {
  // adj of the identity is chi(id) I: off-diagonal A(i|j) has a zero row
  for (const auto* chi : {&kSign3, &kPerm3, &kStandard3}) {
    const ExactMatrix I = ExactMatrix::Identity(3, 3);
    const ExactMatrix expected = GaussianRational(chi->degree()) * I;
    CHECK(immanantal_adjoint(I, *chi) == expected);
  }

  // adjugate pattern for the sign character on [[a,b],[c,d]]
  const GaussianRational a(2), b(3), c(5), d(7);
  ExactMatrix M(2, 2);
  M << a, b, c, d;
  ExactMatrix expected(2, 2);
  expected << d, -c, -b, a;
  CHECK(immanantal_adjoint(M, kSign2) == expected);

  // permanental adjoint of the all-ones matrix
  CHECK(immanantal_adjoint(from_ints({{1, 1}, {1, 1}}), kPerm2) == from_ints({{1, 1}, {1, 1}}));
}

TEST_CASE("submatrix and deleted submatrix") {
  const ExactMatrix X = symbol_matrix(3);
  CHECK(submatrix(X, q_map({0, 1, 2}), q_map({0, 1, 2})) == X);
  // rows {1,3}, columns {2,3} in 1-based labels
  ExactMatrix expected(2, 2);
  expected << GaussianRational(12), GaussianRational(13), GaussianRational(32), GaussianRational(33);
  CHECK(submatrix(X, q_map({0, 2}), q_map({1, 2})) == expected);

  CHECK(deleted_submatrix(X, q_map({0}), q_map({0})) ==
        from_ints({{22, 23}, {32, 33}}));
  const ExactMatrix empty = deleted_submatrix(X, q_map({0, 1, 2}), q_map({0, 1, 2}));
  CHECK(empty.rows() == 0);
  CHECK(immanant(empty, IrreducibleCharacter(Partition(std::vector<int>{}))) == GaussianRational(1));

  // deletion equals the complementary selection
  const int n = 4;
  const ExactMatrix Y = symbol_matrix(n);
  for (const IndexMap& alpha : enumerate_index_maps(2, n, IndexFamily::StrictlyIncreasing))
    for (const IndexMap& beta : enumerate_index_maps(2, n, IndexFamily::StrictlyIncreasing))
      CHECK(deleted_submatrix(Y, alpha, beta) ==
            submatrix(Y, complement(alpha, n), complement(beta, n)));

  CHECK_THROWS_AS(submatrix(X, IndexMap{{1, 0}, IndexFamily::Arbitrary}, q_map({0, 1})),
                  DimensionError);
}

TEST_CASE("embedded direct sum") {
  const ExactMatrix A = from_ints({{1, 2}, {3, 4}});
  const ExactMatrix B = from_ints({{5, 6}, {7, 8}});

  // alpha = beta = (1,2): the ordinary block-diagonal direct sum
  const ExactMatrix usual = embedded_direct_sum(A, B, q_map({0, 1}), q_map({0, 1}));
  CHECK(usual == from_ints({{1, 2, 0, 0}, {3, 4, 0, 0}, {0, 0, 5, 6}, {0, 0, 7, 8}}));

  for (const IndexMap& alpha : enumerate_index_maps(2, 4, IndexFamily::StrictlyIncreasing))
    for (const IndexMap& beta : enumerate_index_maps(2, 4, IndexFamily::StrictlyIncreasing)) {
      const ExactMatrix S = embedded_direct_sum(A, B, alpha, beta);
      CHECK(submatrix(S, alpha, beta) == A);
      CHECK(deleted_submatrix(S, alpha, beta) == B);
      // mismatched column selections hit a zero column
      for (const IndexMap& gamma : enumerate_index_maps(2, 4, IndexFamily::StrictlyIncreasing)) {
        if (gamma == beta) continue;
        const ExactMatrix picked = submatrix(S, alpha, gamma);
        bool has_zero_column = false;
        for (int j = 0; j < picked.cols(); ++j) {
          bool all_zero = true;
          for (int i = 0; i < picked.rows(); ++i)
            if (!picked(i, j).is_zero()) all_zero = false;
          has_zero_column = has_zero_column || all_zero;
        }
        CHECK(has_zero_column);
      }
    }

  CHECK_THROWS_AS(embedded_direct_sum(A, B, q_map({0, 1, 2}), q_map({0, 1})), DimensionError);
}

TEST_CASE("braced matrix keeps exactly the two diagonal blocks") {
  const ExactMatrix X = symbol_matrix(4);
  CHECK(brace(X, q_map({0, 1, 2, 3}), q_map({0, 1, 2, 3})) == X);

  const IndexMap alpha = q_map({0, 1});
  for (const IndexMap& beta : enumerate_index_maps(2, 4, IndexFamily::StrictlyIncreasing)) {
    const ExactMatrix braced = brace(X, alpha, beta);
    const IndexMap alpha_bar = complement(alpha, 4);
    const IndexMap beta_bar = complement(beta, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(braced(alpha(i), beta(j)) == X(alpha(i), beta(j)));
        CHECK(braced(alpha_bar(i), beta_bar(j)) == X(alpha_bar(i), beta_bar(j)));
        CHECK(braced(alpha(i), beta_bar(j)) == GaussianRational(0));
        CHECK(braced(alpha_bar(i), beta(j)) == GaussianRational(0));
      }
  }
}

TEST_CASE("column splice") {
  std::mt19937 rng(23u);
  const ExactMatrix A = random_gaussian_integer_matrix(4, rng);
  const ExactMatrix X = random_gaussian_integer_matrix(4, rng);
  const ExactMatrix Y = random_gaussian_integer_matrix(4, rng);

  CHECK(column_splice(A, q_map({0, 1, 2, 3}), MatrixList<GaussianRational>{A, A, A, A}) == A);

  const ExactMatrix single = column_splice(A, 2, X);
  for (int i = 0; i < 4; ++i) {
    CHECK(single(i, 2) == X(i, 2));
    CHECK(single(i, 0) == A(i, 0));
  }

  // splice then take [alpha|beta]: only direction columns survive
  const IndexMap beta = q_map({1, 3});
  const ExactMatrix spliced = column_splice(A, beta, MatrixList<GaussianRational>{X, Y});
  const ExactMatrix block = submatrix(spliced, q_map({0, 2}), beta);
  CHECK(block(0, 0) == X(0, 1));
  CHECK(block(1, 0) == X(2, 1));
  CHECK(block(0, 1) == Y(0, 3));
  CHECK(block(1, 1) == Y(2, 3));

  CHECK_THROWS_AS(column_splice(A, beta, MatrixList<GaussianRational>{X}), DimensionError);
}

TEST_CASE("laplace expansion totals and boundary cases") {
  std::mt19937 rng(29u);
  const int n = 3;
  const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
  for (const Partition& lambda : partitions_of(n)) {
    const IrreducibleCharacter chi(lambda);
    const GaussianRational expected = immanant(X, chi);
    for (int k = 1; k <= n; ++k)
      for (const IndexMap& alpha : enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing)) {
        const auto expansion = laplace_expansion(X, chi, alpha);
        CHECK(expansion.total == expected);
        CHECK(expansion.terms.size() ==
              enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing).size());
      }
    // k = n: a single summand, the immanant itself
    const auto full = laplace_expansion(X, chi, q_map({0, 1, 2}));
    REQUIRE(full.terms.size() == 1);
    CHECK(full.terms[0].value == expected);
    CHECK(full.terms[0].braced == X);
  }
  CHECK_THROWS_AS(laplace_expansion(X, kStandard3, IndexMap{{}, IndexFamily::StrictlyIncreasing}),
                  DimensionError);
}

TEST_CASE("determinant Laplace specialization with signs") {
  std::mt19937 rng(31u);
  for (int n = 2; n <= 5; ++n) {
    const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
    const GaussianRational det = oracle::det_bruteforce(X);
    for (int k = 1; k <= n - 1; ++k)
      for (const IndexMap& alpha : enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing)) {
        GaussianRational sum(0);
        for (const IndexMap& beta : enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing)) {
          const int exponent = one_based_image_sum(beta);
          const GaussianRational sign((exponent % 2 == 0) ? 1 : -1);
          sum += sign * oracle::det_bruteforce(submatrix(X, alpha, beta)) *
                 oracle::det_bruteforce(deleted_submatrix(X, alpha, beta));
        }
        const GaussianRational alpha_sign((one_based_image_sum(alpha) % 2 == 0) ? 1 : -1);
        CHECK(alpha_sign * sum == det);
      }
  }
}

TEST_CASE("multilinearity in a column") {
  std::mt19937 rng(37u);
  for (int n = 2; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const IrreducibleCharacter chi(lambda);
      const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
      const ExactMatrix U = random_gaussian_integer_matrix(n, rng);
      const ExactMatrix V = random_gaussian_integer_matrix(n, rng);
      const GaussianRational lam(Rational(-5, 2), Rational(1, 3));
      for (int j = 0; j < n; ++j) {
        ExactMatrix Mu = A, Mv = A, Muv = A;
        Mu.col(j) = U.col(j);
        Mv.col(j) = V.col(j);
        Muv.col(j) = U.col(j) + lam * V.col(j);
        CHECK(immanant(Muv, chi) == immanant(Mu, chi) + lam * immanant(Mv, chi));
      }
    }
}

TEST_CASE("float immanant matches the exact value") {
  std::mt19937 rng(41u);
  for (int n = 2; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const IrreducibleCharacter chi(lambda);
      const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
      const std::complex<double> exact_value = immanant(A, chi).to_complex();
      const std::complex<double> float_value = immanant(to_complex(A), chi);
      CHECK(std::abs(exact_value - float_value) <= 1e-9 * std::max(1.0, std::abs(exact_value)));
    }
}
