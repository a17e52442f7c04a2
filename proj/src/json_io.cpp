#include "symtensor/json_io.hpp"

#include <cmath>
#include <sstream>

namespace symtensor {

namespace {

using nlohmann::json;

void check_matrix_shape(const json& j, const char* mode) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries") ||
      !j["n"].is_number_integer() || !j["entries"].is_array())
    throw ParseError(std::string("matrix JSON must be {\"n\": int, \"entries\": [[...]]} (") +
                     mode + " mode)");
  const int n = j["n"].get<int>();
  if (n < 0) throw ParseError("matrix JSON: n must be nonnegative");
  if (static_cast<int>(j["entries"].size()) != n)
    throw ParseError("matrix JSON: entries row count differs from n");
  for (const auto& row : j["entries"])
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("matrix JSON: entries must be an n x n array");
}

std::complex<double> parse_entry_float(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_string()) return parse_gaussian_rational(e.get<std::string>()).to_complex();
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("matrix entry must be a number, [re, im], or a rational string");
}

GaussianRational parse_entry_exact(const json& e) {
  if (e.is_number_integer()) return GaussianRational(e.get<long long>());
  if (e.is_string()) return parse_gaussian_rational(e.get<std::string>());
  throw ParseError("exact-mode matrix entry must be an integer or a rational string "
                   "like \"p/q\" or \"p/q+r/si\"");
}

} // namespace

ComplexMatrix parse_matrix_float(const json& j) {
  check_matrix_shape(j, "float");
  const int n = j["n"].get<int>();
  ComplexMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c)
      M(i, c) = parse_entry_float(j["entries"][static_cast<size_t>(i)][static_cast<size_t>(c)]);
  return M;
}

ExactMatrix parse_matrix_exact(const json& j) {
  check_matrix_shape(j, "exact");
  const int n = j["n"].get<int>();
  ExactMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c)
      M(i, c) = parse_entry_exact(j["entries"][static_cast<size_t>(i)][static_cast<size_t>(c)]);
  return M;
}

json scalar_to_json(const std::complex<double>& v) { return json::array({v.real(), v.imag()}); }

json scalar_to_json(const GaussianRational& v) { return format(v); }

json matrix_to_json(const ComplexMatrix& M) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(scalar_to_json(M(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"n", M.rows()}, {"entries", std::move(entries)}};
}

json matrix_to_json(const ExactMatrix& M) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(scalar_to_json(M(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"n", M.rows()}, {"entries", std::move(entries)}};
}

json index_map_to_json(const IndexMap& map) {
  json arr = json::array();
  for (int v : map.images) arr.push_back(v + 1);
  return arr;
}

json index_maps_to_json(const std::vector<IndexMap>& maps) {
  json arr = json::array();
  for (const IndexMap& m : maps) arr.push_back(index_map_to_json(m));
  return arr;
}

IndexMap parse_one_based_index_map(const std::string& comma_list, int n, IndexFamily family) {
  std::vector<int> images;
  std::stringstream ss(comma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad index entry: '" + tok + "'");
      images.push_back(v - 1);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad index entry: '" + tok + "'");
    }
  }
  if (images.empty()) throw ParseError("empty index map: '" + comma_list + "'");
  return make_index_map(std::move(images), n, family);
}

json basis_index_set_to_json(const BasisIndexSet& basis) {
  return {{"m", basis.m},
          {"n", basis.n},
          {"partition", basis.character.parts()},
          {"omega", index_maps_to_json(basis.omega)},
          {"delta", index_maps_to_json(basis.delta)},
          {"delta_bar", index_maps_to_json(basis.delta_bar)},
          {"delta_hat", index_maps_to_json(basis.delta_hat)}};
}

} // namespace symtensor
