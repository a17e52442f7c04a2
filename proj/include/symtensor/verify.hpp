#ifndef SYMTENSOR_VERIFY_HPP
#define SYMTENSOR_VERIFY_HPP

#include <string>
#include <vector>

namespace symtensor {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail; // failure context or measured residual
};

// Oracle comparison suites behind `verify --suite ...`. Each check pits an
// implementation path against an independent route (brute force,
// interpolation, finite differences, or the explicit tensor-space model).
std::vector<CheckResult> verify_characters();
std::vector<CheckResult> verify_immanant();
std::vector<CheckResult> verify_derivatives();
std::vector<CheckResult> verify_tensorpower();
std::vector<CheckResult> verify_all();

} // namespace symtensor

#endif
