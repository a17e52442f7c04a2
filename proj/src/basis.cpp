#include "symtensor/basis.hpp"

#include <map>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

int rational_matrix_rank(std::vector<std::vector<Rational>> a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();
  int rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[pivot_row][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> gram_block(const std::vector<IndexMap>& maps,
                                              const IrreducibleCharacter& chi) {
  const size_t s = maps.size();
  std::vector<std::vector<Rational>> g(s, std::vector<Rational>(s));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j <= i; ++j) {
      g[i][j] = gram_entry(maps[i], maps[j], chi);
      g[j][i] = g[i][j]; // integer character: Gram is real symmetric
    }
  return g;
}

} // namespace

int gram_rank(const std::vector<IndexMap>& maps, const IrreducibleCharacter& chi) {
  return rational_matrix_rank(gram_block(maps, chi));
}

BasisIndexSet build_basis_index_set(const IrreducibleCharacter& chi, int m, int n) {
  if (chi.group_degree() != m)
    throw DimensionError("build_basis_index_set: m differs from character weight");
  if (m < 1 || n < 1) throw DimensionError("build_basis_index_set: m, n must be >= 1");
  if (m > 6 || n > 6) throw SizeCapError("build_basis_index_set: m, n <= 6 supported");

  BasisIndexSet out;
  out.m = m;
  out.n = n;
  out.character = chi.label();
  out.delta = enumerate_index_maps(m, n, IndexFamily::WeaklyIncreasing);

  // The stabilizer character sum is constant on orbits (conjugate
  // stabilizers), so one evaluation per orbit decides omega membership.
  std::map<std::vector<int>, std::int64_t> orbit_sum;
  for (const IndexMap& rep : out.delta)
    orbit_sum[rep.images] = stabilizer_character_sum(rep, chi);

  for (const IndexMap& rep : out.delta)
    if (orbit_sum[rep.images] != 0) out.delta_bar.push_back(rep);

  // Per-orbit selected lists: the Gram matrix is block-diagonal across
  // orbits (disjoint tensor supports), so rank tests stay within an orbit.
  std::map<std::vector<int>, std::vector<IndexMap>> selected_in_orbit;

  for (const IndexMap& alpha : enumerate_index_maps(m, n, IndexFamily::Arbitrary)) {
    const IndexMap rep = orbit_representative(alpha);
    if (orbit_sum[rep.images] == 0) continue;
    out.omega.push_back(alpha);

    std::vector<IndexMap>& chosen = selected_in_orbit[rep.images];
    std::vector<IndexMap> candidate = chosen;
    candidate.push_back(alpha);
    if (rational_matrix_rank(gram_block(candidate, chi)) ==
        static_cast<int>(candidate.size())) {
      chosen = std::move(candidate);
      out.delta_hat.push_back(alpha);
    }
  }
  return out;
}

} // namespace symtensor
