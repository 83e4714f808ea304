#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace domlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    int threads = 2;
    std::vector<int> only;  // empty = all criteria
    std::ostream* progress = nullptr;
};

// Runs the full reproduction suite: solver-vs-oracle equivalence, the
// published small-t and t=4 classifications, construction verification, the
// K_2 reduction, gamma_t monotonicity, the Jacobsthal engine against a
// definition-based scan, pool-bounded maxima, the CRT lift, certification
// tamper resistance, and the bound sandwich.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// All sorted factor multisets with entries in [min_size, max_size] and vertex
// count at most max_product.
std::vector<std::vector<int>> size_multisets(int min_size, int max_size, uint64_t max_product);

std::string acceptance_markdown(const std::vector<CriterionResult>& results);

}  // namespace domlab
