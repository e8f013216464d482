#include "ellm/parallel.hpp"

#include <atomic>

namespace ellm {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned t) { g_max_threads.store(t); }

unsigned effective_threads() {
  unsigned cap = g_max_threads.load();
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (cap == 0) return hw;
  return cap < hw ? cap : hw;
}

}  // namespace ellm
