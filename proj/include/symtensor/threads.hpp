#ifndef SYMTENSOR_THREADS_HPP
#define SYMTENSOR_THREADS_HPP

#include <cstdlib>
#include <string>
#include <thread>

namespace symtensor {

// Worker cap for internally parallelized sums. SYMTENSOR_THREADS overrides
// the hardware count; values < 1 are clamped to 1.
inline int thread_count() {
  if (const char* env = std::getenv("SYMTENSOR_THREADS")) {
    try {
      int v = std::stoi(env);
      return v < 1 ? 1 : v;
    } catch (const std::exception&) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace symtensor

#endif
