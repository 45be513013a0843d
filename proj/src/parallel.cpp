#include "kgl/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace kgl {

namespace {

unsigned hardware_default() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

std::atomic<unsigned> g_cap{0};  // 0 means hardware default

}  // namespace

void set_max_threads(unsigned n) { g_cap.store(n); }

unsigned max_threads() {
  unsigned cap = g_cap.load();
  return cap ? cap : hardware_default();
}

}  // namespace kgl
