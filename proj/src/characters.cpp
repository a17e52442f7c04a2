#include "symtensor/characters.hpp"

#include <algorithm>
#include <map>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

constexpr int kMaxInternalDegree = 12;

using Memo = std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

// Border-strip recursion on the beta-set (first-column hook lengths).
// Removing a rim hook of length l corresponds to replacing a beta number b
// with b-l when b-l is absent; the strip height is the number of beta
// numbers strictly between b-l and b.
std::int64_t mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, Memo& memo) {
  if (lambda.empty()) return 1; // weights stay equal, so mu is empty too
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int l = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int r = static_cast<int>(lambda.size());

  std::vector<int> beta(lambda.size());
  for (int i = 0; i < r; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (r - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < r; ++i) {
    const int b = beta[static_cast<size_t>(i)];
    const int nb = b - l;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;

    int height = 0;
    for (int v : beta)
      if (nb < v && v < b) ++height;

    std::vector<int> new_beta = beta;
    new_beta[static_cast<size_t>(i)] = nb;
    std::sort(new_beta.begin(), new_beta.end(), std::greater<int>());

    std::vector<int> new_lambda;
    new_lambda.reserve(new_beta.size());
    for (int j = 0; j < r; ++j) {
      int part = new_beta[static_cast<size_t>(j)] - (r - 1 - j);
      if (part > 0) new_lambda.push_back(part);
    }

    const std::int64_t sub = mn_recurse(new_lambda, rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }

  memo[std::move(key)] = total;
  return total;
}

} // namespace

std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw DimensionError("murnaghan_nakayama: partition weights differ");
  Memo memo;
  return mn_recurse(lambda.parts(), mu.parts(), memo);
}

IrreducibleCharacter::IrreducibleCharacter(Partition label) : label_(std::move(label)) {
  const int m = label_.weight();
  if (m > kMaxInternalDegree)
    throw SizeCapError("IrreducibleCharacter: group degree exceeds internal cap");
  cycle_types_ = partitions_of(m);
  values_.reserve(cycle_types_.size());
  Memo memo;
  for (const Partition& mu : cycle_types_)
    values_.push_back(mn_recurse(label_.parts(), mu.parts(), memo));
}

std::int64_t IrreducibleCharacter::degree() const {
  return values_.empty() ? 1 : values_.back(); // (1^m) is last in revlex order
}

std::int64_t IrreducibleCharacter::value_on_cycle_type(const Partition& mu) const {
  if (mu.weight() != label_.weight())
    throw DimensionError("character value: cycle type weight differs from group degree");
  // cycle_types_ is sorted descending lexicographically
  auto it = std::lower_bound(cycle_types_.begin(), cycle_types_.end(), mu,
                             [](const Partition& a, const Partition& b) { return b < a; });
  return values_[static_cast<size_t>(it - cycle_types_.begin())];
}

std::int64_t IrreducibleCharacter::operator()(const Permutation& sigma) const {
  if (sigma.degree() != label_.weight())
    throw DimensionError("character value: permutation degree differs from group degree");
  return value_on_cycle_type(sigma.cycle_type());
}

IrreducibleCharacter conjugate_character(const IrreducibleCharacter& chi) {
  return chi; // integer-valued, hence self-conjugate
}

CharacterTable CharacterTable::build(int m) {
  if (m < 1) throw DimensionError("character table: m must be positive");
  if (m > 8) throw SizeCapError("character table: m > 8 unsupported");
  CharacterTable t;
  t.m_ = m;
  t.rows_ = partitions_of(m);
  t.cols_ = t.rows_;
  t.values_.reserve(t.rows_.size());
  Memo memo;
  for (const Partition& lambda : t.rows_) {
    std::vector<std::int64_t> row;
    row.reserve(t.cols_.size());
    for (const Partition& mu : t.cols_) row.push_back(mn_recurse(lambda.parts(), mu.parts(), memo));
    t.values_.push_back(std::move(row));
  }
  return t;
}

} // namespace symtensor
