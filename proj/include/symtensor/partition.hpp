#ifndef SYMTENSOR_PARTITION_HPP
#define SYMTENSOR_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace symtensor {

// Integer partition with weakly decreasing positive parts. The empty
// partition (weight 0) is allowed; it labels the character of S_0 used by
// the 0x0 immanant convention.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition from_string(const std::string& comma_list); // "2,1,1"

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  std::string to_string() const; // "2,1,1"; "" for the empty partition

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of m in reverse-lexicographic order: (m) first, (1^m) last.
// Table layouts and JSON output rely on this order being stable.
std::vector<Partition> partitions_of(int m);

// m! / (prod_j j^{a_j} a_j!) where a_j is the multiplicity of j in mu.
std::int64_t conjugacy_class_size(const Partition& mu);

std::int64_t factorial(int n);

} // namespace symtensor

#endif
