#ifndef SYMTENSOR_IMMANANT_HPP
#define SYMTENSOR_IMMANANT_HPP

#include <atomic>
#include <map>
#include <thread>
#include <vector>

#include "symtensor/matrix.hpp"
#include "symtensor/threads.hpp"

namespace symtensor {

namespace detail {

// Cycle type of an image list, parts sorted decreasingly, written to `out`.
inline void cycle_type_of(const std::vector<int>& img, std::vector<char>& seen,
                          std::vector<int>& out) {
  const int n = static_cast<int>(img.size());
  std::fill(seen.begin(), seen.end(), 0);
  out.clear();
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0;
    int cur = start;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = 1;
      cur = img[static_cast<size_t>(cur)];
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
}

using CycleValueMap = std::map<std::vector<int>, std::int64_t>;

inline CycleValueMap cycle_value_map(const IrreducibleCharacter& chi) {
  CycleValueMap map;
  const auto& types = chi.cycle_types();
  const auto& values = chi.values();
  for (size_t i = 0; i < types.size(); ++i) map[types[i].parts()] = values[i];
  return map;
}

// Character-weighted sum over a contiguous lexicographic block of S_n,
// starting at `first_rank`, `count` permutations long.
template <typename Scalar, typename Mat>
Scalar immanant_block_sum(const Mat& A, const CycleValueMap& values, int n,
                          std::int64_t first_rank, std::int64_t count) {
  std::vector<int> img = permutation_at_rank(n, first_rank).images();
  std::vector<char> seen(static_cast<size_t>(n));
  std::vector<int> cycles;
  cycles.reserve(static_cast<size_t>(n));
  Scalar acc = Scalar(0);
  for (std::int64_t t = 0; t < count; ++t) {
    cycle_type_of(img, seen, cycles);
    const std::int64_t v = values.at(cycles);
    if (v != 0) {
      Scalar prod = A(0, img[0]);
      for (int i = 1; i < n; ++i) prod *= A(i, img[static_cast<size_t>(i)]);
      acc += scalar_traits<Scalar>::from_int(v) * prod;
    }
    std::next_permutation(img.begin(), img.end());
  }
  return acc;
}

} // namespace detail

// d_chi(A) = sum over S_n of chi(sigma) prod_i a_{i sigma(i)}.
// Float mode accumulates strictly in lexicographic sigma order. Exact mode
// may split the sum into 64 fixed lexicographic blocks reduced in block
// order (worker count capped by SYMTENSOR_THREADS); rational addition is
// associative, so the result is identical to the sequential sum.
template <typename Derived>
typename Derived::Scalar immanant(const Eigen::MatrixBase<Derived>& A_expr,
                                  const IrreducibleCharacter& chi) {
  using Scalar = typename Derived::Scalar;
  const typename Derived::PlainObject A = A_expr.derived();
  const int n = square_order(A);
  if (chi.group_degree() != n)
    throw DimensionError("immanant: character weight differs from matrix order");
  if (n > 10) throw SizeCapError("immanant: order capped at 10 (factorial sum)");
  if (n == 0) return Scalar(1); // empty product convention

  const detail::CycleValueMap values = detail::cycle_value_map(chi);
  const std::int64_t total = factorial(n);

  if constexpr (scalar_traits<Scalar>::is_exact) {
    const int workers = std::min(thread_count(), 64);
    if (n >= 9 && workers > 1) {
      constexpr int kBlocks = 64;
      const std::int64_t per_block = total / kBlocks; // 64 divides n! for n >= 8
      std::vector<Scalar> partial(kBlocks, Scalar(0));
      std::atomic<int> next{0};
      auto drain = [&]() {
        for (int b = next.fetch_add(1); b < kBlocks; b = next.fetch_add(1))
          partial[static_cast<size_t>(b)] = detail::immanant_block_sum<Scalar>(
              A, values, n, per_block * b, per_block);
      };
      std::vector<std::thread> pool;
      for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
      drain();
      for (auto& th : pool) th.join();
      Scalar acc = Scalar(0);
      for (const Scalar& p : partial) acc += p;
      return acc;
    }
  }
  return detail::immanant_block_sum<Scalar>(A, values, n, 0, total);
}

// adj_chi(A): entry (i,j) is d_chi(A(i|j)).
template <typename Derived>
MatrixX<typename Derived::Scalar> immanantal_adjoint(const Eigen::MatrixBase<Derived>& A,
                                                     const IrreducibleCharacter& chi) {
  using Scalar = typename Derived::Scalar;
  const int n = square_order(A);
  MatrixX<Scalar> adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj(i, j) = immanant(single_entry_matrix(A, i, j), chi);
  return adj;
}

template <typename Scalar>
struct LaplaceTerm {
  IndexMap beta;
  MatrixX<Scalar> braced; // X{alpha|beta}
  Scalar value;           // d_chi(X{alpha|beta})
};

template <typename Scalar>
struct LaplaceExpansion {
  Scalar total; // equals d_chi(X)
  std::vector<LaplaceTerm<Scalar>> terms;
};

// d_chi(X) = sum over beta in Q_{k,n} of d_chi(X{alpha|beta}), for any
// fixed alpha in Q_{k,n}.
template <typename Derived>
LaplaceExpansion<typename Derived::Scalar> laplace_expansion(const Eigen::MatrixBase<Derived>& X,
                                                             const IrreducibleCharacter& chi,
                                                             const IndexMap& alpha) {
  using Scalar = typename Derived::Scalar;
  const int n = square_order(X);
  const int k = alpha.length();
  if (k < 1 || k > n) throw DimensionError("laplace_expansion: need 1 <= |alpha| <= n");
  check_strictly_increasing(alpha, n, "laplace_expansion");

  LaplaceExpansion<Scalar> out;
  out.total = Scalar(0);
  for (const IndexMap& beta : enumerate_index_maps(k, n, IndexFamily::StrictlyIncreasing)) {
    LaplaceTerm<Scalar> term;
    term.beta = beta;
    term.braced = brace(X, alpha, beta);
    term.value = immanant(term.braced, chi);
    out.total += term.value;
    out.terms.push_back(std::move(term));
  }
  return out;
}

} // namespace symtensor

#endif
