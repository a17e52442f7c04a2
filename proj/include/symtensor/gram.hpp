#ifndef SYMTENSOR_GRAM_HPP
#define SYMTENSOR_GRAM_HPP

#include "symtensor/index_maps.hpp"
#include "symtensor/scalar.hpp"

namespace symtensor {

// Sum of chi over {sigma in S_m : beta o sigma = alpha}. Zero unless alpha
// and beta lie in the same S_m orbit (equal image multisets).
std::int64_t gram_character_sum(const IndexMap& alpha, const IndexMap& beta,
                                const IrreducibleCharacter& chi);

// <e*_alpha, e*_beta> = (chi(id)/m!) * gram_character_sum(alpha, beta, chi).
// Exact; the Gram data every change-of-basis computation reduces to.
Rational gram_entry(const IndexMap& alpha, const IndexMap& beta,
                    const IrreducibleCharacter& chi);

} // namespace symtensor

#endif
