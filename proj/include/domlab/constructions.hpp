#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domlab/exact.hpp"
#include "domlab/jacobsthal.hpp"
#include "domlab/products.hpp"

namespace domlab {

struct ConstructionResult {
    Certificate certificate;
    bool verified = false;
    // the t+2 construction happens to totally dominate as well on some
    // instances; recorded as an observation, never asserted
    std::optional<bool> also_total_dominating;
};

// {0, 1, ..., g(n)-1} as a total dominating set of X_n; verified before return.
Certificate prefix_total_dominating(const SquarefreeModulus& m, const SieveOptions& sieve = {},
                                    const VerifyLimits& limits = {});

// The four vertices dominating any product of three complete graphs.
std::vector<Vertex> mekis_triple();

// {(i,...,i) : 0 <= i <= t}, dominating whenever n_1 >= t+1.
ConstructionResult diagonal_tplus1(const ProductGraph& g, int verify_threads = 1);

// The explicit t+2 dominating set for n_1 = n_2 = n_3 = t, n_4 >= t+2.
ConstructionResult tplus2_construction(const ProductGraph& g, int verify_threads = 1);

struct LiftRecipe {
    SquarefreeModulus s_modulus;
    int k = 1;
    std::vector<uint64_t> r_primes;                 // k * phi(s) primes, each > k*s + g(s)
    std::vector<uint64_t> base_total_dominating;    // residues mod s; empty = prefix set
};

struct GapCertification {
    SquarefreeModulus modulus;     // the combined n
    Certificate total_dominating;  // D' over X_n
    GapWitness run_witness;
    int64_t certified_gap = 0;  // (run length + 1) - |D'|
    bool verified = false;      // false above the direct-verification cap
};

struct LiftOptions {
    SieveOptions sieve;
    uint64_t direct_verification_cap = 10'000'000;
    int verify_threads = 1;
};

// CRT lifting: from a total dominating set of X_s and k*phi(s) primes beyond
// k*s + g(s), build X_n with a size-(ks+|base|) total dominating set and a
// non-coprime run of length ks+g(s)-1, so the g-vs-gamma_t gap never shrinks.
GapCertification lift_total_dominating(const LiftRecipe& recipe, const LiftOptions& options = {});

// Check both certificates and compute the membership gap j: gamma_t(X_n) <=
// |D| and g(n) >= run length + 1 prove gamma_t(X_n) <= g(n) - j.
GapCertification certify_mj_membership(const SquarefreeModulus& n, const Certificate& d,
                                       const GapWitness& w, const VerifyLimits& limits = {});

// Attach construction-backed incumbents (and optionally certified lower
// bounds) to solver options when the instance matches a theorem hypothesis.
SolveOptions seeded_options(const ProductGraph& g, DominationKind kind, SolveOptions base = {},
                            bool seed_lower = true);

}  // namespace domlab
