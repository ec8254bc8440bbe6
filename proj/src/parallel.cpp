#include "firerisk/parallel.hpp"

#include <atomic>

namespace firerisk {

namespace {

int hardware_default() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

std::atomic<int> g_max_threads{0};  // 0 = hardware default

}  // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
    const int n = g_max_threads.load();
    return n == 0 ? hardware_default() : n;
}

}  // namespace firerisk
