#include "jetres/parallel.hpp"

#include <cstdlib>
#include <string>

namespace jetres {

namespace {

unsigned from_environment() {
  if (const char* v = std::getenv("JETRES_THREADS")) {
    try {
      long n = std::stol(v);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::atomic<unsigned>& setting() {
  static std::atomic<unsigned> n{from_environment()};
  return n;
}

}  // namespace

unsigned max_threads() { return setting().load(); }

void set_max_threads(unsigned n) { setting().store(n ? n : from_environment()); }

}  // namespace jetres
