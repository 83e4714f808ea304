#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domlab/products.hpp"

namespace domlab {

enum class GammaVerdictKind {
    exact,       // a theorem pins gamma to `value`
    at_least,    // gamma >= value; the exact value is open to search
    small_t,     // t <= 3 exact value
    reduced_k2,  // gamma = multiplier * gamma(inner)
};

struct GammaClass {
    GammaVerdictKind kind = GammaVerdictKind::at_least;
    int64_t value = 0;  // meaning depends on kind; unused for reduced_k2
    std::vector<std::string> matched_rules;
    std::optional<uint64_t> multiplier;          // reduced_k2 only
    std::optional<std::vector<int>> inner_sizes;  // reduced_k2 only
};

// Complete decision procedure: exact value for t <= 3, the t+1 / t+2 /
// at-least-t+3 trichotomy for t >= 4 with n_2 >= 3, and the K_2 reduction
// when n_2 = 2. Always returns a verdict.
GammaClass classify_gamma(const ProductGraph& g);

struct K2Reduction {
    uint64_t multiplier;  // 2^(s-1) for s factors of size 2
    ProductGraph inner;   // one K_2 kept, gamma(G) = multiplier * gamma(inner)
};

// Requires at least one K_2 factor and at least one larger factor.
K2Reduction k2_reduce(const ProductGraph& g);

struct ReductionReport {
    std::string branch;  // which classification branch covers the instance
    GammaClass verdict;
};

// Diagnostic for t >= 4, n_2 >= 3: names the theorem branch that settles
// whether gamma = t+2 (n_3 >= t+1 partial classification, or the
// n_1=n_2=n_3=t funnel).
ReductionReport check_reduction_hypotheses(const ProductGraph& g);

}  // namespace domlab
