// Command-line front end: immanants, immanantal adjoints, Laplace
// expansions, directional derivatives of all orders, chi-symmetric tensor
// powers and their derivatives, plus the oracle verification suites.
// All I/O is JSON; see README for the matrix schema.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "symtensor/derivatives.hpp"
#include "symtensor/json_io.hpp"
#include "symtensor/tensor_power.hpp"
#include "symtensor/verify.hpp"

namespace {

using nlohmann::json;
using namespace symtensor;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void emit(const json& value, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << value.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot open output file: " + output_path);
  out << value.dump(2) << "\n";
}

struct ModeOptions {
  std::string mode = "float";
  bool exact() const { return mode == "exact"; }
};

void add_mode_option(CLI::App* cmd, ModeOptions& opts) {
  cmd->add_option("--mode", opts.mode, "scalar mode")
      ->check(CLI::IsMember({"float", "exact"}))
      ->capture_default_str();
}

DerivativeMethod parse_method(const std::string& name) {
  if (name == "first") return DerivativeMethod::First;
  if (name == "mixed") return DerivativeMethod::Mixed;
  if (name == "second") return DerivativeMethod::Second;
  return DerivativeMethod::All;
}

json char_table_json(const CharacterTable& table) {
  json rows = json::array();
  for (size_t r = 0; r < table.row_labels().size(); ++r) {
    json values;
    for (size_t c = 0; c < table.column_labels().size(); ++c)
      values[table.column_labels()[c].to_string()] =
          table.value(static_cast<int>(r), static_cast<int>(c));
    rows.push_back({{"partition", table.row_labels()[r].parts()}, {"values", values}});
  }
  return {{"m", table.m()}, {"rows", rows}};
}

std::string char_table_csv(const CharacterTable& table) {
  std::string out = "partition";
  for (const Partition& mu : table.column_labels()) out += ",\"" + mu.to_string() + "\"";
  out += "\n";
  for (size_t r = 0; r < table.row_labels().size(); ++r) {
    out += "\"" + table.row_labels()[r].to_string() + "\"";
    for (size_t c = 0; c < table.column_labels().size(); ++c)
      out += "," + std::to_string(table.value(static_cast<int>(r), static_cast<int>(c)));
    out += "\n";
  }
  return out;
}

template <typename Scalar>
json laplace_json(const MatrixX<Scalar>& X, const IrreducibleCharacter& chi,
                  const IndexMap& alpha) {
  const LaplaceExpansion<Scalar> expansion = laplace_expansion(X, chi, alpha);
  json summands = json::array();
  for (const auto& term : expansion.terms)
    summands.push_back({{"beta", index_map_to_json(term.beta)},
                        {"matrix", matrix_to_json(term.braced)},
                        {"value", scalar_to_json(term.value)}});
  return {{"alpha", index_map_to_json(alpha)},
          {"value", scalar_to_json(expansion.total)},
          {"summands", summands}};
}

template <typename Scalar>
json derivative_json(const MatrixX<Scalar>& A, const MatrixList<Scalar>& directions,
                     const IrreducibleCharacter& chi, const std::string& method) {
  if (method != "all") {
    const Derivative<Scalar> d = evaluate_derivative(A, directions, chi, parse_method(method));
    return {{"value", scalar_to_json(d.value)}, {"degenerate_order", d.degenerate_order}};
  }
  const Derivative<Scalar> first = derivative_k_first_expression(A, directions, chi);
  const Derivative<Scalar> mixed = derivative_k_via_mixed(A, directions, chi);
  const Derivative<Scalar> second = derivative_k_second_expression(A, directions, chi);
  if (!values_agree(first.value, mixed.value) || !values_agree(first.value, second.value))
    throw VerificationError("derivative methods disagree: first=" +
                            json(scalar_to_json(first.value)).dump() + " mixed=" +
                            json(scalar_to_json(mixed.value)).dump() + " second=" +
                            json(scalar_to_json(second.value)).dump());
  return {{"value", scalar_to_json(first.value)},
          {"methods", {{"first", scalar_to_json(first.value)},
                       {"mixed", scalar_to_json(mixed.value)},
                       {"second", scalar_to_json(second.value)}}},
          {"methods_agree", true},
          {"degenerate_order", first.degenerate_order}};
}

template <typename Scalar>
json tensor_power_json(const SymmetricPower<Scalar>& power) {
  return {{"delta_hat", index_maps_to_json(power.basis.delta_hat)},
          {"matrix", matrix_to_json(power.matrix)["entries"]}};
}

template <typename Scalar>
json tensor_power_derivative_json(const SymmetricPowerDerivative<Scalar>& deriv) {
  return {{"delta_hat", index_maps_to_json(deriv.basis.delta_hat)},
          {"matrix", matrix_to_json(deriv.matrix)["entries"]},
          {"degenerate_order", deriv.degenerate_order}};
}

int run(int argc, char** argv) {
  CLI::App app{"immanants, their higher directional derivatives, and chi-symmetric "
               "tensor powers of matrices"};
  app.require_subcommand(1);

  // char-table
  auto* char_table_cmd = app.add_subcommand("char-table", "character table of S_m");
  int ct_m = 0;
  std::string ct_format = "json";
  std::string ct_output;
  char_table_cmd->add_option("--m", ct_m, "group degree")->required();
  char_table_cmd->add_option("--format", ct_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  char_table_cmd->add_option("--output", ct_output, "output path (default stdout)");

  // index-sets
  auto* index_sets_cmd = app.add_subcommand("index-sets", "Omega/Delta index sets of a symmetry class");
  int is_m = 0, is_n = 0;
  std::string is_partition, is_output;
  index_sets_cmd->add_option("--m", is_m)->required();
  index_sets_cmd->add_option("--n", is_n)->required();
  index_sets_cmd->add_option("--partition", is_partition, "character partition, e.g. 2,1")->required();
  index_sets_cmd->add_option("--output", is_output);

  // immanant
  auto* immanant_cmd = app.add_subcommand("immanant", "immanant of a matrix");
  std::string imm_matrix_path, imm_partition, imm_output;
  ModeOptions imm_mode;
  immanant_cmd->add_option("--matrix", imm_matrix_path, "matrix JSON file")->required();
  immanant_cmd->add_option("--partition", imm_partition, "character partition")->required();
  immanant_cmd->add_option("--output", imm_output);
  add_mode_option(immanant_cmd, imm_mode);

  // adjoint
  auto* adjoint_cmd = app.add_subcommand("adjoint", "immanantal adjoint");
  std::string adj_matrix_path, adj_partition, adj_output;
  ModeOptions adj_mode;
  adjoint_cmd->add_option("--matrix", adj_matrix_path)->required();
  adjoint_cmd->add_option("--partition", adj_partition)->required();
  adjoint_cmd->add_option("--output", adj_output);
  add_mode_option(adjoint_cmd, adj_mode);

  // laplace
  auto* laplace_cmd = app.add_subcommand("laplace", "Laplace expansion along rows alpha");
  std::string lap_matrix_path, lap_partition, lap_alpha, lap_output;
  int lap_k = 0;
  ModeOptions lap_mode;
  laplace_cmd->add_option("--matrix", lap_matrix_path)->required();
  laplace_cmd->add_option("--partition", lap_partition)->required();
  laplace_cmd->add_option("--alpha", lap_alpha, "1-based strictly increasing rows, e.g. 1,2")->required();
  laplace_cmd->add_option("--k", lap_k, "expansion order; must equal |alpha|");
  laplace_cmd->add_option("--output", lap_output);
  add_mode_option(laplace_cmd, lap_mode);

  // derivative
  auto* derivative_cmd = app.add_subcommand("derivative", "k-th directional derivative of the immanant");
  std::string der_matrix_path, der_partition, der_method = "all", der_output;
  std::vector<std::string> der_direction_paths;
  int der_order = 0;
  ModeOptions der_mode;
  derivative_cmd->add_option("--order", der_order, "derivative order k")->required();
  derivative_cmd->add_option("--matrix", der_matrix_path)->required();
  derivative_cmd->add_option("--directions", der_direction_paths, "direction matrix files")
      ->required()
      ->delimiter(',');
  derivative_cmd->add_option("--partition", der_partition)->required();
  derivative_cmd->add_option("--method", der_method)
      ->check(CLI::IsMember({"first", "mixed", "second", "all"}))
      ->capture_default_str();
  derivative_cmd->add_option("--output", der_output);
  add_mode_option(derivative_cmd, der_mode);

  // tensor-power
  auto* power_cmd = app.add_subcommand("tensor-power", "m-th chi-symmetric tensor power");
  std::string pow_matrix_path, pow_partition, pow_output;
  int pow_m = 0;
  ModeOptions pow_mode;
  power_cmd->add_option("--m", pow_m)->required();
  power_cmd->add_option("--partition", pow_partition)->required();
  power_cmd->add_option("--matrix", pow_matrix_path)->required();
  power_cmd->add_option("--output", pow_output);
  add_mode_option(power_cmd, pow_mode);

  // tensor-power-derivative
  auto* power_deriv_cmd =
      app.add_subcommand("tensor-power-derivative", "k-th derivative of the tensor power");
  std::string pd_matrix_path, pd_partition, pd_output;
  std::vector<std::string> pd_direction_paths;
  int pd_m = 0, pd_order = 0;
  ModeOptions pd_mode;
  power_deriv_cmd->add_option("--m", pd_m)->required();
  power_deriv_cmd->add_option("--order", pd_order)->required();
  power_deriv_cmd->add_option("--matrix", pd_matrix_path)->required();
  power_deriv_cmd->add_option("--directions", pd_direction_paths)->required()->delimiter(',');
  power_deriv_cmd->add_option("--partition", pd_partition)->required();
  power_deriv_cmd->add_option("--output", pd_output);
  add_mode_option(power_deriv_cmd, pd_mode);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run oracle comparison suites");
  std::string verify_suite = "all";
  verify_cmd->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"characters", "immanant", "derivatives", "tensorpower", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e); // prints help text or the flag error
    return rc == 0 ? 0 : 2;
  }

  if (char_table_cmd->parsed()) {
    const CharacterTable table = CharacterTable::build(ct_m);
    if (ct_format == "csv") {
      if (ct_output.empty()) {
        std::cout << char_table_csv(table);
      } else {
        std::ofstream out(ct_output);
        if (!out) throw ParseError("cannot open output file: " + ct_output);
        out << char_table_csv(table);
      }
    } else {
      emit(char_table_json(table), ct_output);
    }
    return 0;
  }

  if (index_sets_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(is_partition));
    const BasisIndexSet basis = build_basis_index_set(chi, is_m, is_n);
    emit(basis_index_set_to_json(basis), is_output);
    return 0;
  }

  if (immanant_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(imm_partition));
    const json j = load_json(imm_matrix_path);
    const json value = imm_mode.exact() ? scalar_to_json(immanant(parse_matrix_exact(j), chi))
                                        : scalar_to_json(immanant(parse_matrix_float(j), chi));
    emit({{"value", value}}, imm_output);
    return 0;
  }

  if (adjoint_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(adj_partition));
    const json j = load_json(adj_matrix_path);
    const json matrix = adj_mode.exact()
                            ? matrix_to_json(immanantal_adjoint(parse_matrix_exact(j), chi))
                            : matrix_to_json(immanantal_adjoint(parse_matrix_float(j), chi));
    emit(matrix, adj_output);
    return 0;
  }

  if (laplace_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(lap_partition));
    const json j = load_json(lap_matrix_path);
    const int n = j.contains("n") && j["n"].is_number_integer() ? j["n"].get<int>() : 0;
    const IndexMap alpha =
        parse_one_based_index_map(lap_alpha, n, IndexFamily::StrictlyIncreasing);
    if (laplace_cmd->count("--k") > 0 && lap_k != alpha.length())
      throw DimensionError("laplace: --k differs from |alpha|");
    emit(lap_mode.exact() ? laplace_json(parse_matrix_exact(j), chi, alpha)
                          : laplace_json(parse_matrix_float(j), chi, alpha),
         lap_output);
    return 0;
  }

  if (derivative_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(der_partition));
    const json aj = load_json(der_matrix_path);
    if (static_cast<int>(der_direction_paths.size()) != der_order)
      throw DimensionError("derivative: --order differs from the number of --directions files");
    if (der_mode.exact()) {
      MatrixList<GaussianRational> dirs;
      for (const auto& p : der_direction_paths) dirs.push_back(parse_matrix_exact(load_json(p)));
      emit(derivative_json(parse_matrix_exact(aj), dirs, chi, der_method), der_output);
    } else {
      MatrixList<std::complex<double>> dirs;
      for (const auto& p : der_direction_paths) dirs.push_back(parse_matrix_float(load_json(p)));
      emit(derivative_json(parse_matrix_float(aj), dirs, chi, der_method), der_output);
    }
    return 0;
  }

  if (power_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(pow_partition));
    const json j = load_json(pow_matrix_path);
    emit(pow_mode.exact() ? tensor_power_json(k_chi(parse_matrix_exact(j), chi, pow_m))
                          : tensor_power_json(k_chi(parse_matrix_float(j), chi, pow_m)),
         pow_output);
    return 0;
  }

  if (power_deriv_cmd->parsed()) {
    const IrreducibleCharacter chi(Partition::from_string(pd_partition));
    const json aj = load_json(pd_matrix_path);
    if (static_cast<int>(pd_direction_paths.size()) != pd_order)
      throw DimensionError("tensor-power-derivative: --order differs from --directions count");
    if (pd_mode.exact()) {
      MatrixList<GaussianRational> dirs;
      for (const auto& p : pd_direction_paths) dirs.push_back(parse_matrix_exact(load_json(p)));
      emit(tensor_power_derivative_json(k_chi_derivative(parse_matrix_exact(aj), dirs, chi, pd_m)),
           pd_output);
    } else {
      MatrixList<std::complex<double>> dirs;
      for (const auto& p : pd_direction_paths) dirs.push_back(parse_matrix_float(load_json(p)));
      emit(tensor_power_derivative_json(k_chi_derivative(parse_matrix_float(aj), dirs, chi, pd_m)),
           pd_output);
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    std::vector<CheckResult> results;
    if (verify_suite == "characters")
      results = verify_characters();
    else if (verify_suite == "immanant")
      results = verify_immanant();
    else if (verify_suite == "derivatives")
      results = verify_derivatives();
    else if (verify_suite == "tensorpower")
      results = verify_tensorpower();
    else
      results = verify_all();

    bool all_pass = true;
    for (const CheckResult& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    if (!all_pass) throw VerificationError("verification suite reported failures");
    return 0;
  }

  return 0;
}

void emit_error(int code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const symtensor::ParseError& e) {
    emit_error(2, e.what());
    return 2;
  } catch (const symtensor::DimensionError& e) {
    emit_error(3, e.what());
    return 3;
  } catch (const symtensor::SizeCapError& e) {
    emit_error(4, e.what());
    return 4;
  } catch (const symtensor::VerificationError& e) {
    emit_error(5, e.what());
    return 5;
  } catch (const std::exception& e) {
    emit_error(1, e.what());
    return 1;
  }
}
