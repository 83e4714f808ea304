#include "domlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "domlab/bounds.hpp"
#include "domlab/classify.hpp"
#include "domlab/constructions.hpp"
#include "domlab/errors.hpp"
#include "domlab/exact.hpp"
#include "domlab/jacobsthal.hpp"
#include "domlab/primes.hpp"

namespace domlab {

std::vector<std::vector<int>> size_multisets(int min_size, int max_size, uint64_t max_product) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from, uint64_t product) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int s = from; s <= max_size; ++s) {
            if (product > max_product / static_cast<uint64_t>(s)) break;
            cur.push_back(s);
            self(self, s, product * static_cast<uint64_t>(s));
            cur.pop_back();
        }
    };
    rec(rec, min_size, 1);
    return out;
}

namespace {

struct Failure {
    std::string detail;
};

using Check = void (*)(const AcceptanceOptions&, std::string&);

void fail(const std::string& detail) { throw Failure{detail}; }

std::string join_sizes(const std::vector<int>& sizes) {
    std::string s = "[";
    for (size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s + "]";
}

// bound sandwich check shared by criteria 1-3 (criterion 11)
void check_sandwich(const ProductGraph& g, int gamma, std::string& note) {
    const auto summary = best_bounds(g);
    for (const auto& r : summary.reports) {
        if (!r.applicable || !r.certified || !r.value) continue;
        const bool lower_ok = r.kind != BoundKind::lower || *r.value <= gamma;
        const bool upper_ok = r.kind != BoundKind::upper || *r.value >= gamma;
        const bool exact_ok = !r.exact || *r.value == gamma;
        if (!lower_ok || !upper_ok || !exact_ok)
            fail("bound " + r.name + "=" + std::to_string(*r.value) + " violates gamma=" +
                 std::to_string(gamma) + " on " + join_sizes(g.sizes()));
    }
    (void)note;
}

uint64_t g_sandwich_checks = 0;

void criterion1_oracle_equivalence(const AcceptanceOptions& options, std::string& detail) {
    const auto universe = size_multisets(2, 6, 60);
    size_t solved = 0;
    for (const auto& sizes : universe) {
        auto g = make_product(sizes);
        for (auto kind : {DominationKind::dominating, DominationKind::total_dominating}) {
            SolveOptions solver_options;
            solver_options.threads = options.threads;
            const auto result = kind == DominationKind::dominating
                                    ? gamma_exact(g, solver_options)
                                    : gamma_t_exact(g, solver_options);
            const auto oracle =
                brute_force_value(g, kind, static_cast<int>(g.vertex_count()));
            if (!oracle)
                fail("oracle found no set at all on " + join_sizes(sizes));
            if (!result.proven_optimal)
                fail("solver failed to prove optimality on " + join_sizes(sizes));
            if (result.value != *oracle)
                fail("solver " + std::to_string(result.value) + " != oracle " +
                     std::to_string(*oracle) + " on " + join_sizes(sizes) +
                     (kind == DominationKind::dominating ? " (gamma)" : " (gamma_t)"));
            if (kind == DominationKind::dominating) {
                check_sandwich(g, result.value, detail);
                ++g_sandwich_checks;
            }
        }
        ++solved;
    }
    detail = std::to_string(solved) + " instances, gamma and gamma_t both match the oracle";
}

void criterion2_small_t_tables(const AcceptanceOptions& options, std::string& detail) {
    size_t solved = 0;
    SolveOptions solver_options;
    solver_options.threads = options.threads;
    for (int n1 = 2; n1 <= 12; ++n1) {
        for (int n2 = n1; n2 <= 12; ++n2) {
            auto g = make_product({n1, n2});
            const auto result = gamma_exact(g, solver_options);
            const int expected = n1 == 2 ? 2 : 3;
            if (!result.proven_optimal || result.value != expected)
                fail("two factors " + join_sizes({n1, n2}) + ": got " +
                     std::to_string(result.value) + ", expected " + std::to_string(expected));
            check_sandwich(g, result.value, detail);
            ++g_sandwich_checks;
            ++solved;
        }
    }
    for (const auto& sizes : size_multisets(2, 500, 500)) {
        if (sizes.size() != 3) continue;
        auto g = make_product(sizes);
        const auto result = gamma_exact(g, solver_options);
        if (!result.proven_optimal || result.value != 4)
            fail("three factors " + join_sizes(sizes) + ": got " +
                 std::to_string(result.value) + ", expected 4");
        check_sandwich(g, result.value, detail);
        ++g_sandwich_checks;
        ++solved;
    }
    detail = std::to_string(solved) + " instances match the exact t=2 and t=3 values";
}

void criterion3_t4_spot_suite(const AcceptanceOptions& options, std::string& detail) {
    struct Spot {
        std::vector<int> sizes;
        std::optional<int> exact;  // nullopt = prove nothing of size <= t+2
    };
    const std::vector<Spot> spots = {
        {{5, 5, 5, 5}, 5}, {{4, 4, 4, 6}, 6},          {{4, 6, 6, 6}, 6},
        {{3, 6, 6, 6}, 6}, {{4, 4, 4, 5}, std::nullopt}, {{3, 5, 6, 6}, std::nullopt},
    };
    for (const auto& spot : spots) {
        auto g = make_product(spot.sizes);
        const auto verdict = classify_gamma(g);
        // construction incumbents are fine (they are verified certificates);
        // theorem lower bounds stay off so the exhaustion is genuine
        SolveOptions solver_options =
            seeded_options(g, DominationKind::dominating, {}, /*seed_lower=*/false);
        solver_options.threads = options.threads;
        if (spot.exact) {
            if (verdict.kind != GammaVerdictKind::exact || verdict.value != *spot.exact)
                fail("classifier disagrees on " + join_sizes(spot.sizes));
            const auto result = gamma_exact(g, solver_options);
            if (!result.proven_optimal || result.source != OptimalitySource::exhausted_search)
                fail("no exhausted-search proof on " + join_sizes(spot.sizes));
            if (result.value != *spot.exact)
                fail("solver got " + std::to_string(result.value) + " on " +
                     join_sizes(spot.sizes));
            check_sandwich(g, result.value, detail);
            ++g_sandwich_checks;
        } else {
            const int t = g.factor_count();
            if (verdict.kind != GammaVerdictKind::at_least || verdict.value != t + 3)
                fail("classifier should say at-least-" + std::to_string(t + 3) + " on " +
                     join_sizes(spot.sizes));
            solver_options.upper_hint = t + 2;  // exhaust everything up to t+2
            const auto result = gamma_exact(g, solver_options);
            if (result.proven_lower < t + 3)
                fail("exhaustion only proved gamma >= " + std::to_string(result.proven_lower) +
                     " on " + join_sizes(spot.sizes));
            check_sandwich(g, result.proven_lower, detail);
        }
    }
    detail = "all six published t=4 cases confirmed by exhausted search";
}

void criterion4_constructions(const AcceptanceOptions& options, std::string& detail) {
    size_t verified = 0;
    for (int t = 4; t <= 8; ++t) {
        std::vector<int> sizes = {t, t, t};
        for (int i = 3; i < t; ++i) sizes.push_back(t + 2);
        auto r = tplus2_construction(make_product(sizes), options.threads);
        if (!r.verified || r.certificate.vertices.size() != static_cast<size_t>(t) + 2)
            fail("t+2 construction failed at t=" + std::to_string(t));
        ++verified;
    }
    for (int t = 2; t <= 6; ++t) {
        auto r = diagonal_tplus1(make_product(std::vector<int>(static_cast<size_t>(t), t + 1)),
                                 options.threads);
        if (!r.verified || r.certificate.vertices.size() != static_cast<size_t>(t) + 1)
            fail("diagonal construction failed at t=" + std::to_string(t));
        ++verified;
    }
    for (int a = 2; a <= 6; ++a) {
        for (int b = a; b <= 6; ++b) {
            for (int c = b; c <= 6; ++c) {
                if (!is_dominating(make_product({a, b, c}), mekis_triple()))
                    fail("four-vertex triple set fails on " + join_sizes({a, b, c}));
                ++verified;
            }
        }
    }
    detail = std::to_string(verified) + " construction certificates verified";
}

void criterion5_k2_reduction(const AcceptanceOptions& options, std::string& detail) {
    size_t checked = 0;
    SolveOptions solver_options;
    solver_options.threads = options.threads;
    for (const auto& sizes : size_multisets(2, 6, 60)) {
        if (sizes.front() != 2) continue;
        if (sizes.back() == 2) continue;  // reduction needs a larger factor
        auto g = make_product(sizes);
        const auto red = k2_reduce(g);
        const auto whole = gamma_exact(g, solver_options);
        const auto inner = gamma_exact(red.inner, solver_options);
        if (!whole.proven_optimal || !inner.proven_optimal)
            fail("optimality missing on " + join_sizes(sizes));
        if (static_cast<uint64_t>(whole.value) !=
            red.multiplier * static_cast<uint64_t>(inner.value))
            fail(join_sizes(sizes) + ": gamma=" + std::to_string(whole.value) + " but " +
                 std::to_string(red.multiplier) + " * gamma(inner)=" +
                 std::to_string(red.multiplier * static_cast<uint64_t>(inner.value)));
        ++checked;
    }
    detail = std::to_string(checked) + " instances satisfy gamma = 2^(s-1) * gamma(K_2 x H)";
}

void criterion6_monotonicity(const AcceptanceOptions& options, std::string& detail) {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    SolveOptions solver_options;
    solver_options.threads = options.threads;
    int done = 0;
    while (done < 200) {
        const int t = 1 + static_cast<int>(next() % 4);
        std::vector<int> larger, smaller;
        uint64_t product = 1;
        for (int i = 0; i < t; ++i) {
            const uint64_t room = 60 / product;
            if (room < 2) break;
            const int hi = static_cast<int>(std::min<uint64_t>(6, room));
            const int m = 2 + static_cast<int>(next() % static_cast<uint64_t>(hi - 1));
            larger.push_back(m);
            product *= static_cast<uint64_t>(m);
            smaller.push_back(2 + static_cast<int>(next() % static_cast<uint64_t>(m - 1)));
        }
        if (larger.empty()) continue;
        const int small_gt = gamma_t_exact(make_product(smaller), solver_options).value;
        const int large_gt = gamma_t_exact(make_product(larger), solver_options).value;
        if (small_gt < large_gt)
            fail("gamma_t(" + join_sizes(smaller) + ")=" + std::to_string(small_gt) +
                 " < gamma_t(" + join_sizes(larger) + ")=" + std::to_string(large_gt));
        ++done;
    }
    detail = "200 random component-wise pairs preserve the inequality";
}

void criterion7_jacobsthal_engine(const AcceptanceOptions& options, std::string& detail) {
    // h(1..8) against an independent definition-based scan
    const std::vector<uint64_t> primorials = {2, 6, 30, 210, 2310, 30030, 510510, 9699690};
    for (int n = 1; n <= 8; ++n) {
        const auto sieved = h_of(n);
        const uint64_t modulus = primorials[static_cast<size_t>(n) - 1];
        // window scan: earliest maximal run and the resulting g, by raw gcd
        uint64_t best_len = 0, best_start = 1, run_len = 0, run_start = 1;
        for (uint64_t x = 1; x < 2 * modulus; ++x) {
            if (std::gcd(x, modulus) != 1) {
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
        if (sieved.g_value != best_len + 1 || !(sieved.witness.start == Bigint(best_start)))
            fail("h(" + std::to_string(n) + "): sieve says " + std::to_string(sieved.g_value) +
                 " at " + sieved.witness.start.to_decimal() + ", scan says " +
                 std::to_string(best_len + 1) + " at " + std::to_string(best_start));
        if (!sieved.exhaustive || !verify_run(sieved.witness))
            fail("witness bookkeeping broken at h(" + std::to_string(n) + ")");
    }

    // prefix property over every squarefree n <= 10^5, split across threads
    const uint32_t limit = 100'000;
    const auto spf = smallest_prime_factor_table(limit);
    std::vector<uint32_t> squarefree;
    for (uint32_t n = 2; n <= limit; ++n) {
        uint32_t m = n;
        bool ok = true;
        while (m > 1 && ok) {
            const uint32_t p = spf[m];
            m /= p;
            if (m % p == 0) ok = false;
        }
        if (ok) squarefree.push_back(n);
    }
    std::atomic<size_t> cursor{0};
    std::atomic<bool> bad{false};
    std::string bad_detail;
    std::mutex mu;
    auto work = [&]() {
        while (!bad.load(std::memory_order_relaxed)) {
            const size_t i = cursor.fetch_add(1);
            if (i >= squarefree.size()) return;
            const uint32_t n = squarefree[i];
            std::vector<uint64_t> primes;
            uint32_t m = n;
            while (m > 1) {
                primes.push_back(spf[m]);
                m /= spf[m];
            }
            const auto mod = SquarefreeModulus::from_primes(primes);
            const auto g = g_of(mod);
            std::vector<Bigint> prefix;
            prefix.reserve(g.g_value);
            for (uint64_t v = 0; v < g.g_value; ++v) prefix.emplace_back(v);
            const auto rep =
                check_residue_domination(mod, prefix, DominationKind::total_dominating, {});
            if (!rep.ok) {
                std::lock_guard<std::mutex> lock(mu);
                bad.store(true);
                bad_detail = "prefix set fails on n=" + std::to_string(n) + ": " + rep.detail;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < std::max(1, options.threads); ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (bad.load()) fail(bad_detail);
    detail = "h(1..8) matches the naive scan; prefix sets totally dominate all " +
             std::to_string(squarefree.size()) + " squarefree n <= 100000";
}

void criterion8_pool_bounded_maxima(const AcceptanceOptions&, std::string& detail) {
    const auto pool = first_primes(10);
    for (int n = 1; n <= 3; ++n) {
        const auto pooled = H_bounded(n, pool);
        const auto primorial = h_of(n);
        if (pooled.value != primorial.g_value)
            fail("pool max " + std::to_string(pooled.value) + " != h(" + std::to_string(n) +
                 ")=" + std::to_string(primorial.g_value));
    }
    detail = "H over the first-10-primes pool equals h(n) for n=1,2,3";
}

void criterion9_lift_end_to_end(const AcceptanceOptions&, std::string& detail) {
    LiftRecipe recipe;
    recipe.s_modulus = SquarefreeModulus::from_primes({2, 3});
    recipe.k = 1;
    recipe.r_primes = {11, 13};
    const auto lift = lift_total_dominating(recipe);
    if (!(lift.modulus.modulus() == Bigint(858))) fail("lift modulus is not 858");
    if (lift.total_dominating.residues.size() != 10) fail("lifted set size is not 10");
    if (lift.run_witness.length != 9) fail("lifted run length is not 9");
    if (!lift.verified) fail("lift was not directly verified");
    if (lift.certified_gap < 0) fail("negative certified gap");
    if (!verify_run(lift.run_witness)) fail("run witness fails gcd verification");

    // sieve independently: g(858) = 10, consistent with gamma_t(X_858) <= 10
    const auto g858 = g_of(SquarefreeModulus::from_primes({2, 3, 11, 13}));
    if (g858.g_value != 10) fail("sieve disagrees: g(858) = " + std::to_string(g858.g_value));
    if (lift.total_dominating.residues.size() > g858.g_value)
        fail("total dominating set exceeds g(858)");
    detail = "n=858: verified 10-element total dominating set, run of length 9, g(858)=10";
}

void criterion10_references_and_tampering(const AcceptanceOptions&, std::string& detail) {
    // beyond desk scale: shipped as references, never recomputed
    const auto refs = reference_constants();
    if (refs.size() != 2 || refs[0].h != 234 || refs[0].H != 236 || refs[1].h != 550 ||
        refs[1].H != 566)
        fail("reference constant table is wrong");

    LiftRecipe recipe;
    recipe.s_modulus = SquarefreeModulus::from_primes({2, 3});
    recipe.k = 1;
    recipe.r_primes = {11, 13};
    const auto lift = lift_total_dominating(recipe);

    uint64_t state = 12345;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const uint64_t n = lift.modulus.modulus_u64();
    int invalidating = 0, rejected = 0, harmless = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Certificate d = lift.total_dominating;
        GapWitness w = lift.run_witness;
        switch (next() % 5) {
            case 0:  // shift the run start
                w.start = Bigint(next() % n);
                break;
            case 1:  // stretch the run
                w.length += 1 + next() % 3;
                break;
            case 2:  // drop a residue
                d.residues.erase(d.residues.begin() +
                                 static_cast<int>(next() % d.residues.size()));
                d.claimed_value = static_cast<int64_t>(d.residues.size());
                break;
            case 3:  // replace a residue
                d.residues[next() % d.residues.size()] = Bigint(next() % n);
                break;
            case 4:  // lie about the size
                d.claimed_value = static_cast<int64_t>(next() % 9);
                break;
        }
        // ground truth by direct primitive checks
        const bool run_ok = verify_run(w);
        const bool set_ok =
            check_residue_domination(lift.modulus, d.residues,
                                     DominationKind::total_dominating, {})
                .ok;
        const bool claimed_ok =
            !d.claimed_value || *d.claimed_value == static_cast<int64_t>(d.residues.size());
        const bool gap_ok =
            static_cast<int64_t>(w.length + 1) >= static_cast<int64_t>(d.residues.size());
        const bool valid = run_ok && set_ok && claimed_ok && gap_ok;

        bool accepted = true;
        try {
            certify_mj_membership(lift.modulus, d, w);
        } catch (const verification_error&) {
            accepted = false;
        }
        if (!valid) {
            ++invalidating;
            if (!accepted) ++rejected;
        } else {
            ++harmless;
            if (!accepted) fail("certifier rejected a still-valid mutation");
        }
    }
    if (invalidating == 0) fail("mutation generator produced no invalidating cases");
    if (rejected != invalidating)
        fail("certifier accepted " + std::to_string(invalidating - rejected) +
             " invalidating mutations");
    detail = std::to_string(invalidating) + " invalidating mutations all rejected, " +
             std::to_string(harmless) + " harmless ones accepted; h(24)/H(24)/h(41)/H(41) stay "
             "documentation-only";
}

void criterion11_sandwich(const AcceptanceOptions&, std::string& detail) {
    // enforced inline while criteria 1-3 solve; this reports the tally
    if (g_sandwich_checks == 0) fail("no sandwich checks ran (criteria 1-3 skipped?)");
    detail = std::to_string(g_sandwich_checks) +
             " solved instances kept every certified bound on the correct side";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    struct Entry {
        int id;
        const char* name;
        Check check;
    };
    const std::vector<Entry> entries = {
        {1, "oracle equivalence (gamma and gamma_t, all products up to 60 vertices)",
         &criterion1_oracle_equivalence},
        {2, "exact small-t tables (t=2 up to 12x12, t=3 up to 500 vertices)",
         &criterion2_small_t_tables},
        {3, "t=4 classification spot suite by exhausted search", &criterion3_t4_spot_suite},
        {4, "construction certificates (t+2 family, diagonals, triple set)",
         &criterion4_constructions},
        {5, "K_2 reduction identity on every qualifying instance up to 60 vertices",
         &criterion5_k2_reduction},
        {6, "gamma_t monotonicity on 200 random component-wise pairs",
         &criterion6_monotonicity},
        {7, "Jacobsthal engine vs definition scan; prefix sets up to 10^5",
         &criterion7_jacobsthal_engine},
        {8, "pool-bounded maxima agree with primorial values for n=1,2,3",
         &criterion8_pool_bounded_maxima},
        {9, "CRT lift end to end at n=858", &criterion9_lift_end_to_end},
        {10, "reference constants stay documentation-only; tamper rejection",
         &criterion10_references_and_tampering},
        {11, "certified bound sandwich across all solved instances", &criterion11_sandwich},
    };

    g_sandwich_checks = 0;
    std::vector<CriterionResult> results;
    for (const auto& entry : entries) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), entry.id) == options.only.end())
            continue;
        CriterionResult r;
        r.id = entry.id;
        r.name = entry.name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            entry.check(options, r.detail);
            r.pass = true;
        } catch (const Failure& f) {
            r.pass = false;
            r.detail = f.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count() /
                    1000.0;
        if (options.progress) {
            (*options.progress) << "criterion " << r.id << (r.pass ? " PASS  " : " FAIL  ")
                                << r.name << " (" << r.seconds << "s) " << r.detail << "\n"
                                << std::flush;
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string acceptance_markdown(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    out << "| # | criterion | status | time (s) | detail |\n";
    out << "|---|-----------|--------|----------|--------|\n";
    for (const auto& r : results) {
        out << "| " << r.id << " | " << r.name << " | " << (r.pass ? "pass" : "FAIL") << " | "
            << r.seconds << " | " << r.detail << " |\n";
    }
    return out.str();
}

}  // namespace domlab
