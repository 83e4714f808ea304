#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "domlab/bigint.hpp"
#include "domlab/products.hpp"

namespace domlab {

// A run of consecutive integers start, start+1, ..., start+length-1, each
// sharing a prime factor with the modulus. length may be 0 (empty run).
struct GapWitness {
    SquarefreeModulus modulus;
    Bigint start;
    uint64_t length = 0;
};

struct JacobsthalResult {
    SquarefreeModulus modulus;
    uint64_t g_value = 0;
    GapWitness witness;  // length == g_value - 1, earliest maximal run
    bool exhaustive = false;
};

struct SieveOptions {
    uint64_t sieve_cap = 250'000'000;  // largest modulus scanned in full
    uint64_t segment_size = 1u << 22;
};

// Jacobsthal's function g(n): least m such that any m consecutive integers
// contain one coprime to n. Exact, with the earliest maximal run as witness.
JacobsthalResult g_of(const SquarefreeModulus& m, const SieveOptions& options = {});

// g of the product of the first n primes.
JacobsthalResult h_of(int n, const SieveOptions& options = {});

struct PoolMaxResult {
    uint64_t value = 0;
    std::vector<uint64_t> argmax_primes;
    size_t subsets_scanned = 0;
};

// Max of g over all n-element subsets of the given prime pool. This is a
// pool-bounded surrogate: the true max over all primes needs a cutoff
// argument this toolkit does not attempt.
PoolMaxResult H_bounded(int n, std::span<const uint64_t> pool, const SieveOptions& options = {},
                        uint64_t max_subsets = 1'000'000);

bool verify_run(const GapWitness& w);

// Incremental CRT over pairwise coprime word-sized moduli; result is the
// unique residue mod the product.
Bigint crt_combine(std::span<const std::pair<uint64_t, uint64_t>> congruences);

// Radical of a factored integer; validates that every claimed prime is prime
// and distinct. g(n) = g(rad n), and X_rad(n) is the domination-relevant graph.
SquarefreeModulus radical_reduce(std::span<const std::pair<uint64_t, int>> factorization);

// Published values beyond desk scale. Documented references only; nothing in
// this toolkit recomputes or asserts them.
struct ReferenceConstant {
    int n;
    uint64_t h;
    uint64_t H;
    const char* source;
};
std::span<const ReferenceConstant> reference_constants();

}  // namespace domlab
