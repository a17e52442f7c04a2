#include "symtensor/permutation.hpp"

#include <numeric>

#include "symtensor/errors.hpp"

namespace symtensor {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
      throw DimensionError("permutation images must be a bijection on {0..n-1}");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& b) const {
  if (degree() != b.degree()) throw DimensionError("permutation composition: degree mismatch");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = b.img_[static_cast<size_t>(img_[i])];
  return Permutation(std::move(img));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> lengths;
  for (size_t start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = static_cast<size_t>(img_[cur]);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

int Permutation::sign() const {
  const Partition type = cycle_type();
  int transpositions = 0;
  for (int len : type.parts()) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
  if (n > 10) throw SizeCapError("all_permutations: n > 10");
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  for_each_permutation(n, [&](const std::vector<int>& img) { out.emplace_back(img); });
  return out;
}

Permutation permutation_at_rank(int n, std::int64_t rank) {
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img;
  img.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    std::int64_t f = factorial(i);
    auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(img));
}

} // namespace symtensor
