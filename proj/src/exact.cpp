#include "domlab/exact.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "domlab/errors.hpp"
#include "domlab/jacobsthal.hpp"

namespace domlab {

namespace {

// d covers x: adjacency for total domination, adjacency-or-equality otherwise.
// Adjacent means differing in every coordinate, so a mixed match/mismatch
// pattern never covers.
bool covers(const Vertex& d, const Vertex& x, DominationKind kind) {
    bool saw_match = false, saw_diff = false;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == x[i]) {
            if (kind == DominationKind::total_dominating) return false;
            saw_match = true;
            if (saw_diff) return false;
        } else {
            saw_diff = true;
            if (saw_match) return false;
        }
    }
    return true;  // all coordinates equal (x == d) or all differ (adjacent)
}

}  // namespace

VerifyReport check_domination(const ProductGraph& g, std::span<const Vertex> d,
                              DominationKind kind, int threads) {
    if (!g.counts_fit_u64())
        throw capacity_error("instance too large to verify vertex by vertex");
    for (const auto& v : d) g.require_vertex(v);
    if (kind != DominationKind::dominating && d.empty())
        return {false, "empty set cannot totally dominate"};

    const uint64_t n = g.vertex_count();
    const int workers = std::max(1, std::min<int>(threads, 16));

    std::atomic<bool> failed{false};
    std::vector<std::string> fail_detail(static_cast<size_t>(workers));

    auto scan = [&](int w) {
        const uint64_t chunk = (n + workers - 1) / workers;
        const uint64_t lo = chunk * static_cast<uint64_t>(w);
        const uint64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) return;
        Vertex x = g.vertex_at(lo);
        for (uint64_t idx = lo; idx < hi && !failed.load(std::memory_order_relaxed); ++idx) {
            bool ok = false;
            for (const auto& dv : d) {
                if (covers(dv, x, kind)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                std::string s = "undominated vertex (";
                for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
                s += ")";
                fail_detail[static_cast<size_t>(w)] = s;
                failed.store(true, std::memory_order_relaxed);
                return;
            }
            g.next_vertex(x);
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) {
        for (const auto& s : fail_detail) {
            if (!s.empty()) return {false, s};
        }
        return {false, "undominated vertex"};
    }
    return {true, {}};
}

bool is_dominating(const ProductGraph& g, std::span<const Vertex> d, int threads) {
    return check_domination(g, d, DominationKind::dominating, threads).ok;
}

bool is_total_dominating(const ProductGraph& g, std::span<const Vertex> d, int threads) {
    return check_domination(g, d, DominationKind::total_dominating, threads).ok;
}

VerifyReport check_residue_domination(const SquarefreeModulus& m, std::span<const Bigint> d,
                                      DominationKind kind, const VerifyLimits& limits) {
    if (!m.modulus_fits_u64() || m.modulus_u64() > limits.residue_enumeration_cap)
        throw capacity_error("modulus too large for vertex-by-vertex verification");
    const uint64_t n = m.modulus_u64();
    if (d.empty() && kind == DominationKind::total_dominating)
        return {false, "empty set cannot totally dominate"};

    std::vector<uint64_t> dd;
    dd.reserve(d.size());
    for (const auto& r : d) {
        if (r >= m.modulus()) return {false, "residue " + r.to_decimal() + " not reduced mod n"};
        dd.push_back(r.mod_u64(n));
    }

    // coprime[r] = 1 iff gcd(r, n) = 1, built by marking prime multiples
    std::vector<uint8_t> coprime(n, 1);
    coprime[0] = 0;
    for (uint64_t p : m.primes()) {
        for (uint64_t x = 0; x < n; x += p) coprime[x] = 0;
    }
    std::vector<uint8_t> in_d;
    if (kind == DominationKind::dominating) {
        in_d.assign(n, 0);
        for (uint64_t v : dd) in_d[v] = 1;
    }

    const int workers = std::max(1, std::min(limits.threads, 16));
    std::atomic<uint64_t> first_bad{n};
    auto scan = [&](int w) {
        const uint64_t chunk = (n + workers - 1) / workers;
        const uint64_t lo = chunk * static_cast<uint64_t>(w);
        const uint64_t hi = std::min(n, lo + chunk);
        for (uint64_t y = lo; y < hi; ++y) {
            if (kind == DominationKind::dominating && in_d[y]) continue;
            bool ok = false;
            for (uint64_t v : dd) {
                uint64_t diff = y >= v ? y - v : v - y;
                if (coprime[diff]) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                uint64_t cur = first_bad.load();
                while (y < cur && !first_bad.compare_exchange_weak(cur, y)) {
                }
                return;
            }
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }
    if (first_bad.load() != n)
        return {false, "undominated residue " + std::to_string(first_bad.load())};
    return {true, {}};
}

namespace {

VerifyReport check_claimed_value(const Certificate& c, size_t actual) {
    if (c.claimed_value && *c.claimed_value != static_cast<int64_t>(actual))
        return {false, "claimed_value " + std::to_string(*c.claimed_value) + " != set size " +
                           std::to_string(actual)};
    return {true, {}};
}

}  // namespace

VerifyReport verify_certificate_detailed(const Certificate& c, const VerifyLimits& limits) {
    if (c.kind == CertificateKind::noncoprime_run) {
        if (!c.run_start || !c.run_length) return {false, "noncoprime_run without run data"};
        SquarefreeModulus m;
        if (c.prime_instance) {
            m = *c.prime_instance;
        } else if (c.modulus_instance) {
            // no factorization: fall back to bigint gcd per position
            const Bigint& n = *c.modulus_instance;
            if (n <= Bigint(1)) return {false, "run modulus must exceed 1"};
            Bigint x = *c.run_start;
            for (uint64_t i = 0; i < *c.run_length; ++i) {
                if (Bigint::gcd(x, n) == Bigint(1))
                    return {false, "position " + x.to_decimal() + " is coprime to the modulus"};
                x.add_u64(1);
            }
            return {true, {}};
        } else {
            return {false, "noncoprime_run needs a modulus or prime instance"};
        }
        GapWitness w{m, *c.run_start, *c.run_length};
        if (!verify_run(w)) return {false, "run contains a coprime position"};
        return {true, {}};
    }

    const DominationKind kind = c.kind == CertificateKind::dominating
                                    ? DominationKind::dominating
                                    : DominationKind::total_dominating;
    if (c.sizes) {
        if (c.vertices.empty()) return {false, "domination certificate without vertices"};
        if (auto r = check_claimed_value(c, c.vertices.size()); !r.ok) return r;
        ProductGraph g = ProductGraph::make(*c.sizes);
        for (const auto& v : c.vertices) {
            if (!g.contains(v)) return {false, "vertex outside the instance"};
        }
        return check_domination(g, c.vertices, kind, limits.threads);
    }
    if (c.prime_instance) {
        if (c.residues.empty()) return {false, "domination certificate without residues"};
        if (auto r = check_claimed_value(c, c.residues.size()); !r.ok) return r;
        return check_residue_domination(*c.prime_instance, c.residues, kind, limits);
    }
    if (c.modulus_instance)
        return {false, "domination over a bare modulus needs its prime factorization"};
    return {false, "certificate carries no instance"};
}

bool verify_certificate(const Certificate& c, const VerifyLimits& limits) {
    return verify_certificate_detailed(c, limits).ok;
}

std::vector<Fiber> fibers(const ProductGraph& g, std::span<const Vertex> d, int ell) {
    if (ell < 1 || ell > g.factor_count())
        throw invalid_argument_error("fiber index out of range");
    const size_t coord = static_cast<size_t>(ell - 1);
    std::vector<Fiber> out;
    for (const auto& v : d) {
        g.require_vertex(v);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Fiber& f) { return f.value == v[coord]; });
        if (it == out.end()) {
            out.push_back(Fiber{ell, v[coord], {v}});
        } else {
            it->members.push_back(v);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Fiber& a, const Fiber& b) { return a.value < b.value; });
    return out;
}

}  // namespace domlab
