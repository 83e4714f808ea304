#include "domlab/jacobsthal.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "domlab/errors.hpp"
#include "domlab/primes.hpp"

namespace domlab {

namespace {

// Longest run of marked positions in [1, 2n), where position x is marked iff
// x shares a prime factor with n. Runs can never reach n (x = 1 mod n is
// always coprime), so two periods catch every run including those straddling
// a period boundary. Returns (best_length, earliest_start).
std::pair<uint64_t, uint64_t> longest_noncoprime_run(const SquarefreeModulus& m,
                                                     const SieveOptions& options) {
    const uint64_t n = m.modulus_u64();
    const uint64_t end = 2 * n;  // exclusive
    const uint64_t seg = std::max<uint64_t>(options.segment_size, 64);

    std::vector<uint8_t> marked;
    uint64_t best_len = 0, best_start = 1;
    uint64_t run_len = 0, run_start = 1;

    for (uint64_t lo = 1; lo < end; lo += seg) {
        const uint64_t hi = std::min(lo + seg, end);
        marked.assign(hi - lo, 0);
        for (uint64_t p : m.primes()) {
            uint64_t first = ((lo + p - 1) / p) * p;
            for (uint64_t x = first; x < hi; x += p) marked[x - lo] = 1;
        }
        for (uint64_t x = lo; x < hi; ++x) {
            if (marked[x - lo]) {
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
    }
    if (run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
    }
    return {best_len, best_start};
}

}  // namespace

JacobsthalResult g_of(const SquarefreeModulus& m, const SieveOptions& options) {
    JacobsthalResult result;
    result.modulus = m;
    if (m.prime_count() == 0) {
        // n = 1: every integer is coprime
        result.g_value = 1;
        result.witness = GapWitness{m, Bigint(1), 0};
        result.exhaustive = true;
        return result;
    }
    if (!m.modulus_fits_u64() || m.modulus_u64() > options.sieve_cap)
        throw capacity_error("modulus exceeds sieve cap of " + std::to_string(options.sieve_cap));

    auto [len, start] = longest_noncoprime_run(m, options);
    result.g_value = len + 1;
    result.witness = GapWitness{m, Bigint(start), len};
    result.exhaustive = true;
    return result;
}

JacobsthalResult h_of(int n, const SieveOptions& options) {
    if (n < 0) throw invalid_argument_error("h(n) needs n >= 0");
    auto primes = first_primes(static_cast<size_t>(n));
    return g_of(SquarefreeModulus::from_primes(std::move(primes)), options);
}

PoolMaxResult H_bounded(int n, std::span<const uint64_t> pool, const SieveOptions& options,
                        uint64_t max_subsets) {
    if (n < 1) throw invalid_argument_error("H_bounded needs n >= 1");
    if (static_cast<size_t>(n) > pool.size())
        throw invalid_argument_error("pool smaller than requested subset size");
    PoolMaxResult out;
    const size_t k = static_cast<size_t>(n);
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<uint64_t> subset(k);
    while (true) {
        if (++out.subsets_scanned > max_subsets) throw capacity_error("subset budget exceeded");
        for (size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        auto g = g_of(SquarefreeModulus::from_primes(subset), options);
        if (g.g_value > out.value) {  // strict: first maximizer in lex order wins
            out.value = g.g_value;
            out.argmax_primes = subset;
        }
        size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (idx[i] != pool.size() - k + i) {
                done = false;
                break;
            }
        }
        if (done) return out;
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool verify_run(const GapWitness& w) {
    Bigint x = w.start;
    for (uint64_t i = 0; i < w.length; ++i) {
        if (!w.modulus.shares_factor(x)) return false;
        x.add_u64(1);
    }
    return true;
}

Bigint crt_combine(std::span<const std::pair<uint64_t, uint64_t>> congruences) {
    Bigint x(0);
    Bigint mod_so_far(1);
    for (const auto& [residue, modulus] : congruences) {
        if (modulus == 0) throw invalid_argument_error("crt_combine: zero modulus");
        const uint64_t a = residue % modulus;
        const uint64_t m_mod = mod_so_far.mod_u64(modulus);
        uint64_t inv;
        try {
            inv = modinv_u64(m_mod, modulus);
        } catch (const invalid_argument_error&) {
            throw invalid_argument_error("crt_combine: moduli not pairwise coprime");
        }
        const uint64_t cur = x.mod_u64(modulus);
        const uint64_t diff = (a + modulus - cur) % modulus;
        const uint64_t step = mulmod_u64(diff, inv, modulus);
        Bigint add = mod_so_far;
        add.mul_u64(step);
        x += add;
        mod_so_far.mul_u64(modulus);
    }
    return x;
}

SquarefreeModulus radical_reduce(std::span<const std::pair<uint64_t, int>> factorization) {
    std::vector<uint64_t> primes;
    primes.reserve(factorization.size());
    for (const auto& [p, exponent] : factorization) {
        if (exponent < 1)
            throw invalid_argument_error("radical_reduce: exponent below 1");
        primes.push_back(p);  // primality and distinctness checked by from_primes
    }
    try {
        return SquarefreeModulus::from_primes(std::move(primes));
    } catch (const invalid_instance_error& e) {
        throw invalid_argument_error(std::string("radical_reduce: ") + e.what());
    }
}

std::span<const ReferenceConstant> reference_constants() {
    static constexpr std::array<ReferenceConstant, 2> kTable = {{
        {24, 234, 236, "Hajdu-Saradha (2012)"},
        {41, 550, 566, "Ziller (2019)"},
    }};
    return kTable;
}

}  // namespace domlab
