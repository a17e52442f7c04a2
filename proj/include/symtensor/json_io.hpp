#ifndef SYMTENSOR_JSON_IO_HPP
#define SYMTENSOR_JSON_IO_HPP

#include <json.hpp>

#include "symtensor/basis.hpp"
#include "symtensor/matrix.hpp"

namespace symtensor {

// Matrix JSON schema: {"n": n, "entries": [[entry, ...], ...]} with one row
// array per matrix row. Entry forms:
//   float mode:  number (real), [re, im], or a rational string
//   exact mode:  integer number or rational string "p/q" / "p/q+r/si"
// Serialization emits [re, im] pairs in float mode and canonical rational
// strings in exact mode, so every emitted matrix re-parses identically.
ComplexMatrix parse_matrix_float(const nlohmann::json& j);
ExactMatrix parse_matrix_exact(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& M);
nlohmann::json matrix_to_json(const ExactMatrix& M);

nlohmann::json scalar_to_json(const std::complex<double>& v); // [re, im]
nlohmann::json scalar_to_json(const GaussianRational& v);     // "p/q+r/si"

// Index maps cross the CLI boundary 1-based.
nlohmann::json index_map_to_json(const IndexMap& map);
nlohmann::json index_maps_to_json(const std::vector<IndexMap>& maps);
IndexMap parse_one_based_index_map(const std::string& comma_list, int n, IndexFamily family);

nlohmann::json basis_index_set_to_json(const BasisIndexSet& basis);

} // namespace symtensor

#endif
