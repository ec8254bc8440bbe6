#pragma once

#include <cstddef>
#include <span>

namespace firerisk {

// Pairwise (tree) summation. The reduction tree depends only on the element
// count, so the result is a pure function of the input sequence; rounding
// error grows as O(log n) instead of O(n).
inline double pairwise_sum(std::span<const double> xs) {
    constexpr std::size_t kBlock = 32;
    if (xs.size() <= kBlock) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace firerisk
