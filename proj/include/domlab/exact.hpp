#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domlab/bigint.hpp"
#include "domlab/products.hpp"

namespace domlab {

enum class DominationKind { dominating, total_dominating };
enum class CertificateKind { dominating, total_dominating, noncoprime_run };

// Serializable witness: a claimed (total) dominating set over a tuple graph
// or over X_n, or a non-coprime run. Exactly one instance form is set.
struct Certificate {
    CertificateKind kind = CertificateKind::dominating;
    std::optional<std::vector<int>> sizes;          // product-of-complete-graphs instance
    std::optional<SquarefreeModulus> prime_instance;  // X_n with known factorization
    std::optional<Bigint> modulus_instance;           // X_n by modulus only
    std::vector<Vertex> vertices;
    std::vector<Bigint> residues;
    std::optional<Bigint> run_start;
    std::optional<uint64_t> run_length;
    std::optional<int64_t> claimed_value;
};

struct VerifyLimits {
    uint64_t residue_enumeration_cap = 10'000'000;  // largest n checked vertex-by-vertex
    int threads = 1;
};

struct VerifyReport {
    bool ok = false;
    std::string detail;  // names the failing vertex / residue / position
};

// Tuple-side domination checks. Stream over all vertices; no materialized
// adjacency, so these work at tens of millions of vertices.
bool is_dominating(const ProductGraph& g, std::span<const Vertex> d, int threads = 1);
bool is_total_dominating(const ProductGraph& g, std::span<const Vertex> d, int threads = 1);
VerifyReport check_domination(const ProductGraph& g, std::span<const Vertex> d,
                              DominationKind kind, int threads = 1);

// Residue-side check for X_n: every residue needs a D-element at coprime
// difference (total) or equal-or-coprime (plain).
VerifyReport check_residue_domination(const SquarefreeModulus& m, std::span<const Bigint> d,
                                      DominationKind kind, const VerifyLimits& limits = {});

VerifyReport verify_certificate_detailed(const Certificate& c, const VerifyLimits& limits = {});
bool verify_certificate(const Certificate& c, const VerifyLimits& limits = {});

// F_v(l): members of D whose l-th coordinate (1-indexed) equals v.
struct Fiber {
    int index = 0;  // l, 1-indexed
    int value = 0;  // v
    std::vector<Vertex> members;
};
std::vector<Fiber> fibers(const ProductGraph& g, std::span<const Vertex> d, int ell);

// ---- exact solving ----

enum class OptimalitySource { exhausted_search, seeded_bound, not_proven };

struct SolveOptions {
    std::optional<int> upper_hint;       // trusted bound, no witness attached
    std::vector<Vertex> seed_witness;    // verified set used as the incumbent
    std::optional<int> lower_seed;       // certified lower bound (e.g. from bounds)
    bool normalize_first_vertex = true;  // fix the all-zeros vertex into D
    bool orbit_dedup = true;             // candidate dedup at depth <= 2
    bool packing_bound = true;           // greedy disjoint-coverage lower bound
    int threads = 1;
    uint64_t node_budget = 0;  // 0 = unlimited
    uint64_t dense_cap = kDefaultDenseCap;
    uint64_t mask_bytes_cap = 256ull << 20;
};

struct SolveResult {
    int value = 0;
    Certificate witness;
    uint64_t nodes_explored = 0;
    bool proven_optimal = false;
    int proven_lower = 0;  // equals value when proven_optimal
    OptimalitySource source = OptimalitySource::not_proven;
};

SolveResult gamma_exact(const ProductGraph& g, const SolveOptions& options = {});
SolveResult gamma_t_exact(const ProductGraph& g, const SolveOptions& options = {});

// ---- independent oracle ----

struct OracleOptions {
    uint64_t vertex_cap = 60;
    uint64_t combination_budget = 2'000'000;  // plain subset enumeration up to here
    uint64_t node_budget = 400'000'000;       // expansion cap for the cover search
};

// Smallest k <= max_k admitting a set of the given kind, by exhaustive
// enumeration (per connected component: plain subset combinations when cheap,
// otherwise first-uncovered cover search with only the degree-counting cut).
// Deliberately shares nothing with the branch-and-bound path.
std::optional<int> brute_force_value(const ProductGraph& g, DominationKind kind, int max_k,
                                     const OracleOptions& options = {});

}  // namespace domlab
