#ifndef SYMTENSOR_PERMUTATION_HPP
#define SYMTENSOR_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symtensor/partition.hpp"

namespace symtensor {

// Bijection on {0,...,n-1}, stored as the image list. External interfaces
// print images 1-based; everything internal is 0-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // (a.then(b))(i) = b(a(i))
  Permutation then(const Permutation& b) const;

  Partition cycle_type() const;
  int sign() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

// S_n in lexicographic order of image lists. n <= 10 (factorial growth).
std::vector<Permutation> all_permutations(int n);

// Visits S_n in lexicographic order without materializing the list.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  if (n == 0) {
    visit(img);
    return;
  }
  do {
    visit(const_cast<const std::vector<int>&>(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

// The permutation at a given lexicographic rank (factorial number system).
Permutation permutation_at_rank(int n, std::int64_t rank);

} // namespace symtensor

#endif
