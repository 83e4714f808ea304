#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/bigint.hpp"
#include "domlab/products.hpp"

namespace domlab {

enum class BoundKind { lower, upper };

struct BoundReport {
    std::string name;
    BoundKind kind = BoundKind::lower;
    bool applicable = false;
    bool certified = false;  // theorem valid at this instance size (not asymptotic-only)
    bool exact = false;      // theorem pins the domination number itself
    std::optional<int64_t> value;
    std::optional<std::pair<Bigint, Bigint>> rational;  // exact num/den, asymptotic bound only
    std::string hypothesis_note;
};

// t=2 and t=3 exact values; t >= 4 gives the t+1 lower bound, exact when the
// smallest factor is at least t+1.
BoundReport mekis_bound(const ProductGraph& g);

// t+1+floor((t-1)/(n_1-1)) for t >= 4, n_2 >= 3.
BoundReport di_bound(const ProductGraph& g);

// (t-k) * prod_{i<=k} (1 + 1/(n_i-1)) in exact rational arithmetic; only
// applicable for k strictly below (1 - 2/log_{2e} t) * t, and never certified
// since the theorem holds for unquantified "sufficiently large" t.
BoundReport asymptotic_bound(const ProductGraph& g, int k);

// ceil(|V| / (1 + min_degree)); plain counting, always certified.
BoundReport naive_lower(const ProductGraph& g);

// ceil(|V| (1 + ln(1 + min_degree)) / (1 + min_degree)).
BoundReport alon_spencer_upper(const ProductGraph& g);

// ceil((1 + sum ln n_i) * prod (1 + 1/(n_i-1))).
BoundReport product_upper(const ProductGraph& g);

struct BoundSummary {
    int64_t lower = 1;
    int64_t upper = 0;
    std::vector<BoundReport> reports;
};

// Best certified interval; non-certified bounds are listed but excluded.
//
// For n the product of the first t primes these evaluators bracket gamma(X_n)
// between C1*t*log t and C2*t*log^2 t for some absolute constants, but the
// constants are unquantified, so that statement stays documentation rather
// than an operation.
BoundSummary best_bounds(const ProductGraph& g);

}  // namespace domlab
