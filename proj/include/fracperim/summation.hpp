#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

namespace fracperim {

// Neumaier variant of compensated summation. The compensation term absorbs the
// rounding error of each add, so totals over terms of mixed magnitude are
// accurate to ~1 ulp independent of ordering within a block.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline double compensated_total(const std::vector<double>& xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// Worker count for blocked evaluation. Results never depend on this value:
// callers must sum fixed blocks independently and combine them in block order.
inline int worker_count() {
    if (const char* env = std::getenv("FRACPERIM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1 && n <= 256) return n;
    }
    return 1;
}

}  // namespace fracperim
