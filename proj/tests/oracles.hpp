#pragma once

// Test-only oracles. These stay deliberately naive and independent of the
// library code paths they cross-check.

#include <cstdint>
#include <numeric>
#include <vector>

namespace test_oracles {

// Definition-based Jacobsthal scan: for every window start x in one period,
// walk forward to the first integer coprime to n; g is the largest walk.
// Pure gcd, no prime marking, no segmentation.
inline uint64_t naive_g_by_window_scan(uint64_t n) {
    if (n == 1) return 1;
    uint64_t g = 0;
    for (uint64_t x = 1; x <= n; ++x) {
        uint64_t m = 1;
        while (std::gcd(x + m - 1, n) != 1) ++m;
        if (m > g) g = m;
    }
    return g;
}

// As above but also reports the earliest start of a maximal non-coprime run.
struct NaiveRun {
    uint64_t g;
    uint64_t start;
    uint64_t length;
};

inline NaiveRun naive_longest_run(uint64_t n) {
    if (n == 1) return {1, 1, 0};
    uint64_t best_len = 0, best_start = 1;
    uint64_t run_len = 0, run_start = 1;
    for (uint64_t x = 1; x < 2 * n; ++x) {
        if (std::gcd(x, n) != 1) {
            if (run_len == 0) run_start = x;
            ++run_len;
        } else {
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
            run_len = 0;
        }
    }
    if (run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
    }
    return {best_len + 1, best_start, best_len};
}

// Deterministic xorshift for reproducible property tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace test_oracles
