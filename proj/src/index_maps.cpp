#include "symtensor/index_maps.hpp"

#include <algorithm>
#include <set>

#include "symtensor/errors.hpp"

namespace symtensor {

bool is_strictly_increasing(const std::vector<int>& images) {
  for (size_t i = 1; i < images.size(); ++i)
    if (images[i] <= images[i - 1]) return false;
  return true;
}

bool is_weakly_increasing(const std::vector<int>& images) {
  for (size_t i = 1; i < images.size(); ++i)
    if (images[i] < images[i - 1]) return false;
  return true;
}

IndexMap make_index_map(std::vector<int> images, int n, IndexFamily family) {
  for (int v : images)
    if (v < 0 || v >= n) throw DimensionError("index map image out of range");
  switch (family) {
    case IndexFamily::StrictlyIncreasing:
      if (!is_strictly_increasing(images))
        throw DimensionError("index map violates strictly increasing constraint");
      break;
    case IndexFamily::WeaklyIncreasing:
      if (!is_weakly_increasing(images))
        throw DimensionError("index map violates weakly increasing constraint");
      break;
    case IndexFamily::Arbitrary:
      break;
    default:
      throw DimensionError("invalid index map family");
  }
  return IndexMap{std::move(images), family};
}

namespace {

// Odometer over image tuples with a per-position lower bound rule, yielding
// lexicographic order for all three families.
void enumerate_recurse(int k, int n, IndexFamily family, std::vector<int>& acc,
                       std::vector<IndexMap>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.push_back(IndexMap{acc, family});
    return;
  }
  int lo = 0;
  if (!acc.empty()) {
    if (family == IndexFamily::StrictlyIncreasing)
      lo = acc.back() + 1;
    else if (family == IndexFamily::WeaklyIncreasing)
      lo = acc.back();
  }
  for (int v = lo; v < n; ++v) {
    acc.push_back(v);
    enumerate_recurse(k, n, family, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<IndexMap> enumerate_index_maps(int k, int n, IndexFamily family) {
  if (k < 1 || n < 1) throw DimensionError("enumerate_index_maps: k and n must be >= 1");
  if (family == IndexFamily::StrictlyIncreasing && k > n)
    throw DimensionError("enumerate_index_maps: Q family requires k <= n");
  if (family != IndexFamily::StrictlyIncreasing && family != IndexFamily::WeaklyIncreasing &&
      family != IndexFamily::Arbitrary)
    throw DimensionError("enumerate_index_maps: invalid family");
  std::vector<IndexMap> out;
  std::vector<int> acc;
  acc.reserve(static_cast<size_t>(k));
  enumerate_recurse(k, n, family, acc, out);
  return out;
}

std::vector<Permutation> stabilizer(const IndexMap& alpha) {
  const int m = alpha.length();
  std::vector<Permutation> out;
  for_each_permutation(m, [&](const std::vector<int>& img) {
    for (int i = 0; i < m; ++i)
      if (alpha(img[static_cast<size_t>(i)]) != alpha(i)) return;
    out.emplace_back(img);
  });
  return out;
}

std::int64_t stabilizer_character_sum(const IndexMap& alpha, const IrreducibleCharacter& chi) {
  const int m = alpha.length();
  if (m != chi.group_degree())
    throw DimensionError("stabilizer_character_sum: map length differs from group degree");
  std::int64_t sum = 0;
  for_each_permutation(m, [&](const std::vector<int>& img) {
    for (int i = 0; i < m; ++i)
      if (alpha(img[static_cast<size_t>(i)]) != alpha(i)) return;
    sum += chi(Permutation(img));
  });
  return sum;
}

IndexMap orbit_representative(const IndexMap& alpha) {
  std::vector<int> sorted = alpha.images;
  std::sort(sorted.begin(), sorted.end());
  return IndexMap{std::move(sorted), IndexFamily::WeaklyIncreasing};
}

std::vector<IndexMap> orbit(const IndexMap& alpha) {
  const int m = alpha.length();
  std::set<std::vector<int>> seen;
  for_each_permutation(m, [&](const std::vector<int>& img) {
    std::vector<int> composed(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) composed[static_cast<size_t>(i)] = alpha(img[static_cast<size_t>(i)]);
    seen.insert(std::move(composed));
  });
  std::vector<IndexMap> out;
  out.reserve(seen.size());
  for (auto& images : seen) out.push_back(IndexMap{images, IndexFamily::Arbitrary});
  return out;
}

IndexMap complement(const IndexMap& alpha, int n) {
  if (!is_strictly_increasing(alpha.images))
    throw DimensionError("complement: alpha must be strictly increasing");
  std::vector<bool> in_image(static_cast<size_t>(n), false);
  for (int v : alpha.images) {
    if (v < 0 || v >= n) throw DimensionError("complement: image out of range");
    in_image[static_cast<size_t>(v)] = true;
  }
  std::vector<int> images;
  images.reserve(static_cast<size_t>(n) - alpha.images.size());
  for (int v = 0; v < n; ++v)
    if (!in_image[static_cast<size_t>(v)]) images.push_back(v);
  return IndexMap{std::move(images), IndexFamily::StrictlyIncreasing};
}

int one_based_image_sum(const IndexMap& alpha) {
  int sum = 0;
  for (int v : alpha.images) sum += v + 1;
  return sum;
}

} // namespace symtensor
