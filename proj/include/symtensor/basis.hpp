#ifndef SYMTENSOR_BASIS_HPP
#define SYMTENSOR_BASIS_HPP

#include <vector>

#include "symtensor/gram.hpp"
#include "symtensor/index_maps.hpp"

namespace symtensor {

// The index sets of a symmetry class, all in lexicographic order:
//   omega:     alpha in Gamma_{m,n} with nonzero stabilizer character sum
//              (the indices whose symmetrized tensors e*_alpha are nonzero),
//   delta:     orbit representatives of Gamma_{m,n}/S_m (equals G_{m,n}),
//   delta_bar: delta intersect omega,
//   delta_hat: greedy extension of delta_bar over omega to a basis of the
//              symmetry class, decided by exact Gram-rank tests.
struct BasisIndexSet {
  int m = 0;
  int n = 0;
  Partition character;
  std::vector<IndexMap> omega;
  std::vector<IndexMap> delta;
  std::vector<IndexMap> delta_bar;
  std::vector<IndexMap> delta_hat;
};

// m, n <= 6 (|Gamma_{m,n}| = n^m). Deterministic: scanning omega
// lexicographically, an index is kept iff it enlarges the span of the
// symmetrized tensors selected so far; rank tests run in exact rational
// arithmetic on the Gram matrix, which is block-diagonal across orbits.
BasisIndexSet build_basis_index_set(const IrreducibleCharacter& chi, int m, int n);

// Rank of the exact Gram matrix of an arbitrary index list; the
// independent check that greedy selection found a maximal independent set.
int gram_rank(const std::vector<IndexMap>& maps, const IrreducibleCharacter& chi);

} // namespace symtensor

#endif
