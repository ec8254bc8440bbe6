#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace firerisk {

// Worker cap for row-parallel map operations. 0 restores the hardware default.
void set_max_threads(int n);
int max_threads();

// Runs fn(row_begin, row_end) over contiguous row bands, one band per worker.
// Every cell is written by exactly one band, so results are bitwise
// independent of the partitioning.
template <typename Fn>
void parallel_for_rows(int n_rows, Fn&& fn) {
    int workers = max_threads();
    if (workers > n_rows) workers = n_rows;
    if (workers <= 1 || n_rows <= 1) {
        fn(0, n_rows);
        return;
    }

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;

    const int base = n_rows / workers;
    const int extra = n_rows % workers;
    int row = 0;
    for (int w = 0; w < workers; ++w) {
        const int count = base + (w < extra ? 1 : 0);
        const int begin = row;
        const int end = row + count;
        row = end;
        threads.emplace_back([&, begin, end]() {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace firerisk
