#include "symtensor/partition.hpp"

#include <map>
#include <sstream>

#include "symtensor/errors.hpp"

namespace symtensor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  int prev = 1 << 30;
  for (int p : parts_) {
    if (p <= 0) throw ParseError("partition parts must be positive");
    if (p > prev) throw ParseError("partition parts must be weakly decreasing");
    prev = p;
    weight_ += p;
  }
}

Partition Partition::from_string(const std::string& comma_list) {
  std::vector<int> parts;
  std::stringstream ss(comma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad partition entry: '" + tok + "'");
      parts.push_back(v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad partition entry: '" + tok + "'");
    }
  }
  if (parts.empty() && !comma_list.empty())
    throw ParseError("bad partition: '" + comma_list + "'");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw DimensionError("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(m, m == 0 ? 1 : m, acc, out);
  return out;
}

std::int64_t factorial(int n) {
  if (n < 0) throw DimensionError("factorial of negative number");
  if (n > 20) throw SizeCapError("factorial overflow beyond 20!");
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::int64_t conjugacy_class_size(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  std::int64_t z = 1;
  for (auto [part, count] : mult) {
    for (int c = 0; c < count; ++c) z *= part;
    z *= factorial(count);
  }
  return factorial(mu.weight()) / z;
}

} // namespace symtensor
