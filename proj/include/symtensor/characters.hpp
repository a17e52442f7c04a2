#ifndef SYMTENSOR_CHARACTERS_HPP
#define SYMTENSOR_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "symtensor/partition.hpp"
#include "symtensor/permutation.hpp"

namespace symtensor {

// Irreducible character of S_m labelled by a partition of m, with values
// tabulated on all cycle types via the Murnaghan-Nakayama rule. Values are
// exact integers; construction is the only nontrivial cost.
class IrreducibleCharacter {
public:
  explicit IrreducibleCharacter(Partition label);

  const Partition& label() const { return label_; }
  int group_degree() const { return label_.weight(); } // m of S_m
  std::int64_t degree() const;                         // chi(id)

  std::int64_t value_on_cycle_type(const Partition& mu) const;
  std::int64_t operator()(const Permutation& sigma) const;

  const std::vector<Partition>& cycle_types() const { return cycle_types_; } // revlex
  const std::vector<std::int64_t>& values() const { return values_; }

private:
  Partition label_;
  std::vector<Partition> cycle_types_;
  std::vector<std::int64_t> values_;
};

// chi_bar(sigma) := conj(chi(sigma)). S_m characters are integer-valued, so
// this returns an equal character; it exists because the tensor-power
// formulas name chi_bar explicitly.
IrreducibleCharacter conjugate_character(const IrreducibleCharacter& chi);

// Full character table of S_m. Rows are characters, columns cycle types,
// both in reverse-lexicographic partition order.
class CharacterTable {
public:
  static CharacterTable build(int m); // 1 <= m <= 8

  int m() const { return m_; }
  const std::vector<Partition>& row_labels() const { return rows_; }
  const std::vector<Partition>& column_labels() const { return cols_; }
  std::int64_t value(int row, int col) const {
    return values_[static_cast<size_t>(row)][static_cast<size_t>(col)];
  }

private:
  CharacterTable() = default;
  int m_ = 0;
  std::vector<Partition> rows_;
  std::vector<Partition> cols_;
  std::vector<std::vector<std::int64_t>> values_;
};

// Murnaghan-Nakayama evaluation of chi_lambda on cycle type mu.
std::int64_t murnaghan_nakayama(const Partition& lambda, const Partition& mu);

} // namespace symtensor

#endif
