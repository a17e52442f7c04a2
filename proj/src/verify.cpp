#include "symtensor/verify.hpp"

#include <random>
#include <sstream>

#include "symtensor/oracle.hpp"
#include "symtensor/random_matrices.hpp"
#include "symtensor/tensor_power.hpp"

namespace symtensor {

namespace {

template <typename F>
void run_check(std::vector<CheckResult>& out, const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::int64_t hook_length_degree(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const int rows = lambda.length();
  std::vector<int> col_heights(parts.empty() ? 0 : static_cast<size_t>(parts[0]), 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j) ++col_heights[static_cast<size_t>(j)];
  std::int64_t hooks = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j)
      hooks *= (parts[static_cast<size_t>(i)] - j) + (col_heights[static_cast<size_t>(j)] - i) - 1;
  return factorial(lambda.weight()) / hooks;
}

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

} // namespace

std::vector<CheckResult> verify_characters() {
  std::vector<CheckResult> out;

  run_check(out, "characters: row orthogonality, m <= 6", [](std::string& detail) {
    for (int m = 1; m <= 6; ++m) {
      const CharacterTable t = CharacterTable::build(m);
      const auto& cols = t.column_labels();
      std::vector<std::int64_t> class_sizes;
      class_sizes.reserve(cols.size());
      for (const Partition& mu : cols) class_sizes.push_back(conjugacy_class_size(mu));
      const std::int64_t order = factorial(m);
      for (size_t a = 0; a < t.row_labels().size(); ++a)
        for (size_t b = 0; b <= a; ++b) {
          std::int64_t sum = 0;
          for (size_t c = 0; c < cols.size(); ++c)
            sum += class_sizes[c] * t.value(static_cast<int>(a), static_cast<int>(c)) *
                   t.value(static_cast<int>(b), static_cast<int>(c));
          const std::int64_t expected = (a == b) ? order : 0;
          if (sum != expected) {
            detail = "m=" + std::to_string(m) + " rows " + std::to_string(a) + "," + std::to_string(b);
            return false;
          }
        }
    }
    return true;
  });

  run_check(out, "characters: sum of squared degrees equals m!, m <= 6", [](std::string& detail) {
    for (int m = 1; m <= 6; ++m) {
      std::int64_t sum = 0;
      for (const Partition& lambda : partitions_of(m)) {
        const IrreducibleCharacter chi(lambda);
        sum += chi.degree() * chi.degree();
      }
      if (sum != factorial(m)) {
        detail = "m=" + std::to_string(m);
        return false;
      }
    }
    return true;
  });

  run_check(out, "characters: column orthogonality, m <= 5", [](std::string& detail) {
    for (int m = 1; m <= 5; ++m) {
      const CharacterTable t = CharacterTable::build(m);
      const auto& cols = t.column_labels();
      for (size_t c1 = 0; c1 < cols.size(); ++c1)
        for (size_t c2 = 0; c2 <= c1; ++c2) {
          std::int64_t sum = 0;
          for (size_t r = 0; r < t.row_labels().size(); ++r)
            sum += t.value(static_cast<int>(r), static_cast<int>(c1)) *
                   t.value(static_cast<int>(r), static_cast<int>(c2));
          const std::int64_t expected =
              (c1 == c2) ? factorial(m) / conjugacy_class_size(cols[c1]) : 0;
          if (sum != expected) {
            detail = "m=" + std::to_string(m) + " columns " + cols[c1].to_string() + " | " +
                     cols[c2].to_string();
            return false;
          }
        }
    }
    return true;
  });

  run_check(out, "characters: degrees match the hook length formula, m <= 6",
            [](std::string& detail) {
              for (int m = 1; m <= 6; ++m)
                for (const Partition& lambda : partitions_of(m)) {
                  const IrreducibleCharacter chi(lambda);
                  if (chi.degree() != hook_length_degree(lambda)) {
                    detail = "lambda=" + lambda.to_string();
                    return false;
                  }
                }
              return true;
            });

  return out;
}

std::vector<CheckResult> verify_immanant() {
  std::vector<CheckResult> out;
  std::mt19937 rng(20240901u);

  run_check(out, "immanant: sign character reproduces brute-force determinant",
            [&rng](std::string& detail) {
              for (int n = 2; n <= 6; ++n) {
                const IrreducibleCharacter eps(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
                for (int rep = 0; rep < 10; ++rep) {
                  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                  if (immanant(A, eps) != oracle::det_bruteforce(A)) {
                    detail = "n=" + std::to_string(n);
                    return false;
                  }
                }
              }
              return true;
            });

  run_check(out, "immanant: principal character reproduces Ryser permanent",
            [&rng](std::string& detail) {
              for (int n = 2; n <= 6; ++n) {
                const IrreducibleCharacter principal(Partition({n}));
                for (int rep = 0; rep < 10; ++rep) {
                  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                  if (immanant(A, principal) != oracle::perm_ryser(A)) {
                    detail = "n=" + std::to_string(n);
                    return false;
                  }
                }
              }
              return true;
            });

  run_check(out, "immanant: multilinearity in a column", [&rng](std::string& detail) {
    for (int n = 2; n <= 5; ++n)
      for (const Partition& lambda : partitions_of(n)) {
        const IrreducibleCharacter chi(lambda);
        const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
        const ExactMatrix U = random_gaussian_integer_matrix(n, rng);
        const ExactMatrix V = random_gaussian_integer_matrix(n, rng);
        const GaussianRational lam(Rational(7, 3));
        const int j = n / 2;
        ExactMatrix Au = A, Av = A, Auv = A;
        Au.col(j) = U.col(j);
        Av.col(j) = V.col(j);
        Auv.col(j) = U.col(j) + lam * V.col(j);
        if (immanant(Auv, chi) != immanant(Au, chi) + lam * immanant(Av, chi)) {
          detail = "n=" + std::to_string(n) + " lambda=" + lambda.to_string();
          return false;
        }
      }
    return true;
  });

  run_check(out, "immanant: Laplace expansion sums to the immanant", [&rng](std::string& detail) {
    for (int n = 2; n <= 4; ++n) {
      const ExactMatrix X = random_gaussian_integer_matrix(n, rng);
      for (const Partition& lambda : partitions_of(n)) {
        const IrreducibleCharacter chi(lambda);
        const GaussianRational expected = immanant(X, chi);
        for (int k = 1; k <= n; ++k)
          for (const IndexMap& alpha :
               enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing))
            if (laplace_expansion(X, chi, alpha).total != expected) {
              detail = "n=" + std::to_string(n) + " lambda=" + lambda.to_string();
              return false;
            }
      }
    }
    return true;
  });

  run_check(out, "immanant: transpose identity d_chi(A^T) = d_chibar(A)",
            [&rng](std::string& detail) {
              for (int n = 2; n <= 5; ++n)
                for (const Partition& lambda : partitions_of(n)) {
                  const IrreducibleCharacter chi(lambda);
                  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                  if (immanant(A.transpose(), chi) != immanant(A, conjugate_character(chi))) {
                    detail = "lambda=" + lambda.to_string();
                    return false;
                  }
                }
              return true;
            });

  run_check(out, "immanant: det(X (+)_{a|b} Y) = (-1)^{|a|+|b|} det X det Y",
            [&rng](std::string& detail) {
              for (int n = 3; n <= 6; ++n)
                for (int k = 1; k < n; ++k) {
                  const auto qkn = enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing);
                  std::uniform_int_distribution<size_t> pick(0, qkn.size() - 1);
                  const IndexMap alpha = qkn[pick(rng)];
                  const IndexMap beta = qkn[pick(rng)];
                  const ExactMatrix X = random_gaussian_integer_matrix(k, rng);
                  const ExactMatrix Y = random_gaussian_integer_matrix(n - k, rng);
                  const int sign_exp = one_based_image_sum(alpha) + one_based_image_sum(beta);
                  const GaussianRational expected =
                      scalar_traits<GaussianRational>::from_int(sign_exp % 2 == 0 ? 1 : -1) *
                      oracle::det_bruteforce(X) * oracle::det_bruteforce(Y);
                  if (oracle::det_bruteforce(embedded_direct_sum(X, Y, alpha, beta)) != expected) {
                    detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                  }
                }
              return true;
            });

  return out;
}

std::vector<CheckResult> verify_derivatives() {
  std::vector<CheckResult> out;
  std::mt19937 rng(20240902u);

  run_check(out, "derivatives: first/mixed/second expressions agree exactly",
            [&rng](std::string& detail) {
              for (int n = 2; n <= 3; ++n)
                for (const Partition& lambda : partitions_of(n)) {
                  const IrreducibleCharacter chi(lambda);
                  for (int k = 1; k <= n; ++k)
                    for (int rep = 0; rep < 3; ++rep) {
                      const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                      MatrixList<GaussianRational> dirs;
                      for (int i = 0; i < k; ++i)
                        dirs.push_back(random_gaussian_integer_matrix(n, rng));
                      const auto first = derivative_k_first_expression(A, dirs, chi);
                      const auto mixed = derivative_k_via_mixed(A, dirs, chi);
                      const auto second = derivative_k_second_expression(A, dirs, chi);
                      if (first.value != mixed.value || first.value != second.value) {
                        detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                 " lambda=" + lambda.to_string();
                        return false;
                      }
                    }
                }
              return true;
            });

  run_check(out, "derivatives: agreement with the interpolation coefficient oracle",
            [&rng](std::string& detail) {
              const int n = 3;
              for (const Partition& lambda : partitions_of(n)) {
                const IrreducibleCharacter chi(lambda);
                for (int k = 1; k <= n; ++k) {
                  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                  MatrixList<GaussianRational> dirs;
                  for (int i = 0; i < k; ++i) dirs.push_back(random_gaussian_integer_matrix(n, rng));
                  const GaussianRational expected = oracle::poly_coefficient_derivative(
                      [&chi](const ExactMatrix& M) { return immanant(M, chi); }, A, dirs, n);
                  if (derivative_k_first_expression(A, dirs, chi).value != expected) {
                    detail = "k=" + std::to_string(k) + " lambda=" + lambda.to_string();
                    return false;
                  }
                }
              }
              return true;
            });

  run_check(out, "derivatives: symmetric under permuting the directions",
            [&rng](std::string& detail) {
              const int n = 3, k = 3;
              const IrreducibleCharacter chi(Partition({2, 1}));
              const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
              MatrixList<GaussianRational> dirs;
              for (int i = 0; i < k; ++i) dirs.push_back(random_gaussian_integer_matrix(n, rng));
              const GaussianRational base = derivative_k_first_expression(A, dirs, chi).value;
              bool ok = true;
              for_each_permutation(k, [&](const std::vector<int>& sig) {
                MatrixList<GaussianRational> permuted;
                for (int p = 0; p < k; ++p) permuted.push_back(dirs[static_cast<size_t>(sig[static_cast<size_t>(p)])]);
                if (derivative_k_first_expression(A, permuted, chi).value != base) ok = false;
              });
              if (!ok) detail = "permutation changed the value";
              return ok;
            });

  run_check(out, "derivatives: degenerate order k > n is a flagged zero, matching the oracle",
            [&rng](std::string& detail) {
              for (int n = 2; n <= 3; ++n) {
                const IrreducibleCharacter chi(Partition({n}));
                const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                MatrixList<GaussianRational> dirs;
                for (int i = 0; i < n + 1; ++i) dirs.push_back(random_gaussian_integer_matrix(n, rng));
                const auto first = derivative_k_first_expression(A, dirs, chi);
                const auto mixed = derivative_k_via_mixed(A, dirs, chi);
                const auto second = derivative_k_second_expression(A, dirs, chi);
                const GaussianRational oracle_value = oracle::poly_coefficient_derivative(
                    [&chi](const ExactMatrix& M) { return immanant(M, chi); }, A, dirs, n);
                const bool flagged = first.degenerate_order && mixed.degenerate_order &&
                                     second.degenerate_order;
                const bool zero = first.value.is_zero() && mixed.value.is_zero() &&
                                  second.value.is_zero() && oracle_value.is_zero();
                if (!flagged || !zero) {
                  detail = "n=" + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  run_check(out, "derivatives: finite differences agree in float mode", [&rng](std::string& detail) {
    for (int n = 3; n <= 4; ++n)
      for (int k = 1; k <= 2; ++k) {
        const IrreducibleCharacter chi(Partition({n - 1, 1}));
        const ComplexMatrix A = random_complex_matrix(n, rng);
        MatrixList<std::complex<double>> dirs;
        for (int i = 0; i < k; ++i) dirs.push_back(random_complex_matrix(n, rng));
        const std::complex<double> exact_route =
            derivative_k_first_expression(A, dirs, chi).value;
        const std::complex<double> fd = oracle::finite_difference_derivative(
            [&chi](const ComplexMatrix& M) { return immanant(M, chi); }, A, dirs, 1e-3);
        const double scale = std::max(1.0, std::abs(exact_route));
        if (std::abs(fd - exact_route) > 1e-6 * scale) {
          detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " err=" + std::to_string(std::abs(fd - exact_route));
          return false;
        }
      }
    return true;
  });

  return out;
}

std::vector<CheckResult> verify_tensorpower() {
  std::vector<CheckResult> out;
  std::mt19937 rng(20240903u);

  run_check(out, "tensorpower: projector is a Hermitian idempotent of rank |delta_hat|",
            [](std::string& detail) {
              for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n)
                  for (const Partition& lambda : partitions_of(m)) {
                    const IrreducibleCharacter chi(lambda);
                    const oracle::TensorSpaceModel model(chi, m, n);
                    const BasisIndexSet basis = build_basis_index_set(chi, m, n);
                    const double trace = model.projector().trace();
                    if (model.idempotence_residual() > 1e-12 ||
                        model.hermiticity_residual() > 1e-12 ||
                        std::abs(trace - static_cast<double>(basis.delta_hat.size())) > 1e-8) {
                      detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                               ") lambda=" + lambda.to_string();
                      return false;
                    }
                  }
              return true;
            });

  run_check(out, "tensorpower: explicit norms match the stabilizer-sum formula",
            [](std::string& detail) {
              for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n)
                  for (const Partition& lambda : partitions_of(m)) {
                    const IrreducibleCharacter chi(lambda);
                    const oracle::TensorSpaceModel model(chi, m, n);
                    for (const IndexMap& alpha :
                         enumerate_index_maps(m, n, IndexFamily::Arbitrary)) {
                      const double expected =
                          gram_entry(alpha, alpha, chi).convert_to<double>();
                      if (std::abs(model.norm2(alpha) - expected) > 1e-12) {
                        detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
                        return false;
                      }
                    }
                  }
              return true;
            });

  run_check(out, "tensorpower: Gram entries match the explicit model (basis independence)",
            [](std::string& detail) {
              for (int m = 2; m <= 3; ++m)
                for (int n = 2; n <= 3; ++n)
                  for (const Partition& lambda : partitions_of(m)) {
                    const IrreducibleCharacter chi(lambda);
                    const oracle::TensorSpaceModel model(chi, m, n);
                    const auto gamma = enumerate_index_maps(m, n, IndexFamily::Arbitrary);
                    for (const IndexMap& a : gamma)
                      for (const IndexMap& b : gamma) {
                        const double explicit_entry =
                            model.symmetrized_tensor(b).dot(model.symmetrized_tensor(a));
                        const double formula = gram_entry(a, b, chi).convert_to<double>();
                        if (std::abs(explicit_entry - formula) > 1e-12) {
                          detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
                          return false;
                        }
                      }
                  }
              return true;
            });

  run_check(out, "tensorpower: k_chi matches the projector oracle", [&rng](std::string& detail) {
    struct Case {
      int n, m;
      std::vector<int> lambda;
    };
    const std::vector<Case> cases = {{2, 2, {2}},    {2, 2, {1, 1}}, {3, 2, {2}},
                                     {3, 2, {1, 1}}, {3, 3, {3}},    {3, 3, {1, 1, 1}},
                                     {3, 3, {2, 1}}, {4, 2, {2}},    {4, 2, {1, 1}}};
    for (const Case& c : cases) {
      const IrreducibleCharacter chi((Partition(c.lambda)));
      const ComplexMatrix A = random_complex_matrix(c.n, rng);
      const auto power = k_chi(A, chi, c.m);
      const auto reference = oracle::projector_oracle_k_chi(A, chi, c.m);
      const double err = max_abs(power.matrix - reference.matrix);
      if (err > 1e-10) {
        detail = "(n,m)=(" + std::to_string(c.n) + "," + std::to_string(c.m) + ") lambda=" +
                 Partition(c.lambda).to_string() + " err=" + std::to_string(err);
        return false;
      }
    }
    return true;
  });

  run_check(out, "tensorpower: K_chi(I) = I and K_chi(AB) = K_chi(A) K_chi(B)",
            [&rng](std::string& detail) {
              const std::vector<std::pair<int, int>> grid = {{2, 2}, {3, 2}, {3, 3}, {4, 2}};
              for (auto [n, m] : grid)
                for (const Partition& lambda : partitions_of(m)) {
                  const IrreducibleCharacter chi(lambda);
                  const ComplexMatrix A = random_complex_matrix(n, rng);
                  const ComplexMatrix B = random_complex_matrix(n, rng);
                  const ComplexMatrix I = ComplexMatrix::Identity(n, n);
                  const auto KI = k_chi(I, chi, m);
                  const auto KA = k_chi(A, chi, m);
                  const auto KB = k_chi(B, chi, m);
                  const auto KAB = k_chi((A * B).eval(), chi, m);
                  const Eigen::Index t = KA.matrix.rows();
                  if (max_abs(KI.matrix - Eigen::MatrixXcd::Identity(t, t)) > 1e-10 ||
                      max_abs(KAB.matrix - KA.matrix * KB.matrix) > 1e-10) {
                    detail = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ") lambda=" +
                             lambda.to_string();
                    return false;
                  }
                }
              return true;
            });

  run_check(out, "tensorpower: derivative matches entrywise finite differences",
            [&rng](std::string& detail) {
              const int n = 3, m = 2;
              for (const Partition& lambda : partitions_of(m)) {
                const IrreducibleCharacter chi(lambda);
                for (int k = 1; k <= 2; ++k) {
                  const ComplexMatrix A = random_complex_matrix(n, rng);
                  MatrixList<std::complex<double>> dirs;
                  for (int i = 0; i < k; ++i) dirs.push_back(random_complex_matrix(n, rng));
                  const auto deriv = k_chi_derivative(A, dirs, chi, m);
                  const Eigen::MatrixXcd fd = oracle::finite_difference_derivative(
                      [&chi, m](const ComplexMatrix& M) { return k_chi(M, chi, m).matrix; }, A,
                      dirs, 1e-3);
                  double worst = 0;
                  for (Eigen::Index i = 0; i < fd.rows(); ++i)
                    for (Eigen::Index j = 0; j < fd.cols(); ++j) {
                      const double scale = std::max(1.0, std::abs(deriv.matrix(i, j)));
                      worst = std::max(worst, std::abs(fd(i, j) - deriv.matrix(i, j)) / scale);
                    }
                  if (worst > 1e-5) {
                    detail = "lambda=" + lambda.to_string() + " k=" + std::to_string(k) +
                             " err=" + std::to_string(worst);
                    return false;
                  }
                }
              }
              return true;
            });

  run_check(out, "tensorpower: column-splice determinant sums equal mixed discriminants",
            [&rng](std::string& detail) {
              const int n = 4, m = 3;
              const auto qmn = enumerate_index_maps(m, n, IndexFamily::StrictlyIncreasing);
              std::uniform_int_distribution<size_t> pick(0, qmn.size() - 1);
              for (int k = 1; k <= 3; ++k) {
                MatrixList<GaussianRational> dirs;
                for (int i = 0; i < k; ++i) dirs.push_back(random_gaussian_integer_matrix(n, rng));
                const IndexMap alpha = qmn[pick(rng)];
                const IndexMap beta = qmn[pick(rng)];
                MatrixList<GaussianRational> sliced;
                for (const auto& X : dirs) sliced.push_back(submatrix(X, alpha, beta));
                for (const IndexMap& rho : enumerate_index_maps(k, m, IndexFamily::StrictlyIncreasing))
                  for (const IndexMap& tau :
                       enumerate_index_maps(k, m, IndexFamily::StrictlyIncreasing)) {
                    GaussianRational lhs(0);
                    for_each_permutation(k, [&](const std::vector<int>& sig) {
                      lhs += oracle::det_bruteforce(
                          submatrix(spliced_zero_matrix(m, tau, Permutation(sig), sliced), rho, tau));
                    });
                    MatrixList<GaussianRational> minors;
                    for (const auto& Z : sliced) minors.push_back(submatrix(Z, rho, tau));
                    const GaussianRational rhs =
                        scalar_traits<GaussianRational>::from_int(factorial(k)) *
                        oracle::mixed_discriminant(minors);
                    if (lhs != rhs) {
                      detail = "k=" + std::to_string(k);
                      return false;
                    }
                  }
              }
              return true;
            });

  run_check(out, "tensorpower: alternating-character derivative recovers the compound formula",
            [&rng](std::string& detail) {
              const std::vector<std::pair<int, int>> grid = {{3, 2}, {4, 2}, {4, 3}};
              for (auto [n, m] : grid) {
                const IrreducibleCharacter eps(
                    Partition(std::vector<int>(static_cast<size_t>(m), 1)));
                for (int k = 1; k <= std::min(2, m); ++k) {
                  const ExactMatrix A = random_gaussian_integer_matrix(n, rng);
                  MatrixList<GaussianRational> dirs;
                  for (int i = 0; i < k; ++i) dirs.push_back(random_gaussian_integer_matrix(n, rng));
                  const auto deriv = k_chi_derivative(A, dirs, eps, m);
                  const auto& delta_hat = deriv.basis.delta_hat;
                  for (size_t a = 0; a < delta_hat.size(); ++a)
                    for (size_t b = 0; b < delta_hat.size(); ++b) {
                      const GaussianRational expected = oracle::compound_derivative_entry(
                          A, dirs, delta_hat[a], delta_hat[b]);
                      if (deriv.matrix(static_cast<Eigen::Index>(a),
                                       static_cast<Eigen::Index>(b)) != expected) {
                        detail = "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) +
                                 ") k=" + std::to_string(k);
                        return false;
                      }
                    }
                }
              }
              return true;
            });

  run_check(out, "tensorpower: m = 1 power is the identity map", [&rng](std::string& detail) {
    const IrreducibleCharacter chi(Partition({1}));
    const ComplexMatrix A = random_complex_matrix(3, rng);
    const ComplexMatrix X = random_complex_matrix(3, rng);
    const auto power = k_chi(A, chi, 1);
    const auto deriv = k_chi_derivative(A, {X}, chi, 1);
    if (max_abs(power.matrix - A) > 1e-12 || max_abs(deriv.matrix - X) > 1e-12) {
      detail = "m=1 tensor power is not the identity map";
      return false;
    }
    return true;
  });

  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out = verify_characters();
  for (auto&& suite : {&verify_immanant, &verify_derivatives, &verify_tensorpower}) {
    auto results = (*suite)();
    out.insert(out.end(), std::make_move_iterator(results.begin()),
               std::make_move_iterator(results.end()));
  }
  return out;
}

} // namespace symtensor
