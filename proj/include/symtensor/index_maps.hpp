#ifndef SYMTENSOR_INDEX_MAPS_HPP
#define SYMTENSOR_INDEX_MAPS_HPP

#include <vector>

#include "symtensor/characters.hpp"
#include "symtensor/permutation.hpp"

namespace symtensor {

// The three index-map families: strictly increasing (Q_{k,n}), weakly
// increasing (G_{k,n}), arbitrary (Gamma_{k,n}).
enum class IndexFamily { StrictlyIncreasing, WeaklyIncreasing, Arbitrary };

// A map {1..k} -> {1..n} stored 0-based. CLI/JSON surfaces print 1-based.
struct IndexMap {
  std::vector<int> images;
  IndexFamily family = IndexFamily::Arbitrary;

  int length() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<size_t>(i)]; }

  friend bool operator==(const IndexMap& a, const IndexMap& b) { return a.images == b.images; }
  friend bool operator!=(const IndexMap& a, const IndexMap& b) { return a.images != b.images; }
  friend bool operator<(const IndexMap& a, const IndexMap& b) { return a.images < b.images; }
};

bool is_strictly_increasing(const std::vector<int>& images);
bool is_weakly_increasing(const std::vector<int>& images);

// Validates images (0-based, range 0..n-1) against the family constraint.
IndexMap make_index_map(std::vector<int> images, int n, IndexFamily family);

// Full enumeration of the family in lexicographic order.
// |Q_{k,n}| = C(n,k), |G_{k,n}| = C(n+k-1,k), |Gamma_{k,n}| = n^k.
std::vector<IndexMap> enumerate_index_maps(int k, int n, IndexFamily family);

// All sigma in S_m with alpha o sigma = alpha.
std::vector<Permutation> stabilizer(const IndexMap& alpha);

// Sum of chi over the stabilizer of alpha; decides membership in Omega.
std::int64_t stabilizer_character_sum(const IndexMap& alpha, const IrreducibleCharacter& chi);

// Lexicographically first element of the orbit {alpha o sigma}: the sorted
// image list. The orbit representative set Delta is exactly G_{m,n}.
IndexMap orbit_representative(const IndexMap& alpha);

// The orbit of alpha under S_m, sorted lexicographically, without repeats.
std::vector<IndexMap> orbit(const IndexMap& alpha);

// Complementary strictly increasing map: images {0..n-1} \ Im(alpha).
IndexMap complement(const IndexMap& alpha, int n);

// |alpha| = alpha(1)+...+alpha(k) in 1-based values; the sign exponent of
// the generalized Laplace expansion.
int one_based_image_sum(const IndexMap& alpha);

} // namespace symtensor

#endif
