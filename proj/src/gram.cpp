#include "symtensor/gram.hpp"

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

// Backtracking over sigma(i) in beta^{-1}(alpha(i)); visits exactly the
// permutations with beta o sigma = alpha instead of filtering all of S_m.
void sum_over_transporters(const IndexMap& alpha, const IndexMap& beta,
                           const IrreducibleCharacter& chi, int pos, std::vector<int>& sigma,
                           unsigned used_mask, std::int64_t& sum) {
  const int m = alpha.length();
  if (pos == m) {
    sum += chi(Permutation(sigma));
    return;
  }
  for (int j = 0; j < m; ++j) {
    if (used_mask & (1u << j)) continue;
    if (beta(j) != alpha(pos)) continue;
    sigma[static_cast<size_t>(pos)] = j;
    sum_over_transporters(alpha, beta, chi, pos + 1, sigma, used_mask | (1u << j), sum);
  }
}

} // namespace

std::int64_t gram_character_sum(const IndexMap& alpha, const IndexMap& beta,
                                const IrreducibleCharacter& chi) {
  const int m = chi.group_degree();
  if (alpha.length() != m || beta.length() != m)
    throw DimensionError("gram_character_sum: index map length differs from group degree");
  std::int64_t sum = 0;
  std::vector<int> sigma(static_cast<size_t>(m));
  sum_over_transporters(alpha, beta, chi, 0, sigma, 0u, sum);
  return sum;
}

Rational gram_entry(const IndexMap& alpha, const IndexMap& beta,
                    const IrreducibleCharacter& chi) {
  const std::int64_t sum = gram_character_sum(alpha, beta, chi);
  return Rational(static_cast<long>(chi.degree() * sum), static_cast<long>(factorial(chi.group_degree())));
}

} // namespace symtensor
