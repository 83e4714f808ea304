#include "domlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "domlab/bounds.hpp"
#include "domlab/errors.hpp"
#include "domlab/primes.hpp"

namespace domlab {

Certificate prefix_total_dominating(const SquarefreeModulus& m, const SieveOptions& sieve,
                                    const VerifyLimits& limits) {
    if (m.prime_count() == 0)
        throw invalid_instance_error("X_1 has no edges; no total dominating set exists");
    const auto g = g_of(m, sieve);
    Certificate cert;
    cert.kind = CertificateKind::total_dominating;
    cert.prime_instance = m;
    for (uint64_t i = 0; i < g.g_value; ++i) cert.residues.emplace_back(i);
    cert.claimed_value = static_cast<int64_t>(g.g_value);
    auto rep = check_residue_domination(m, cert.residues, DominationKind::total_dominating, limits);
    if (!rep.ok)
        throw verification_error("prefix set failed verification: " + rep.detail);
    return cert;
}

std::vector<Vertex> mekis_triple() {
    return {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
}

ConstructionResult diagonal_tplus1(const ProductGraph& g, int verify_threads) {
    const int t = g.factor_count();
    if (g.sizes()[0] < t + 1)
        throw invalid_argument_error("diagonal construction needs n_1 >= t+1");
    ConstructionResult out;
    out.certificate.kind = CertificateKind::dominating;
    out.certificate.sizes = g.sizes();
    for (int i = 0; i <= t; ++i)
        out.certificate.vertices.push_back(Vertex(static_cast<size_t>(t), i));
    out.certificate.claimed_value = t + 1;
    auto rep = check_domination(g, out.certificate.vertices, DominationKind::dominating,
                                verify_threads);
    if (!rep.ok) throw verification_error("diagonal set failed verification: " + rep.detail);
    out.verified = true;
    return out;
}

ConstructionResult tplus2_construction(const ProductGraph& g, int verify_threads) {
    const int t = g.factor_count();
    const auto& n = g.sizes();
    if (t < 4) throw invalid_argument_error("t+2 construction needs t >= 4");
    if (!(n[0] == t && n[1] == t && n[2] == t))
        throw invalid_argument_error("t+2 construction needs n_1 = n_2 = n_3 = t");
    if (n[3] < t + 2) throw invalid_argument_error("t+2 construction needs n_4 >= t+2");

    ConstructionResult out;
    out.certificate.kind = CertificateKind::dominating;
    out.certificate.sizes = n;
    auto& d = out.certificate.vertices;
    d.push_back(Vertex(static_cast<size_t>(t), 0));
    Vertex v(static_cast<size_t>(t), 1);
    v[0] = 0;
    d.push_back(v);  // (0,1,1,...,1)
    v.assign(static_cast<size_t>(t), 2);
    v[0] = 1;
    v[1] = 0;
    v[2] = 1;
    d.push_back(v);  // (1,0,1,2,...,2)
    v.assign(static_cast<size_t>(t), 3);
    v[0] = 1;
    v[1] = 1;
    v[2] = 0;
    d.push_back(v);  // (1,1,0,3,...,3)
    for (int i = 4; i <= t + 1; ++i) {
        v.assign(static_cast<size_t>(t), i);
        v[0] = v[1] = v[2] = i - 2;
        d.push_back(v);  // (i-2,i-2,i-2,i,...,i)
    }
    out.certificate.claimed_value = t + 2;

    auto rep = check_domination(g, d, DominationKind::dominating, verify_threads);
    if (!rep.ok) throw verification_error("t+2 set failed verification: " + rep.detail);
    out.verified = true;
    out.also_total_dominating =
        check_domination(g, d, DominationKind::total_dominating, verify_threads).ok;
    return out;
}

GapCertification lift_total_dominating(const LiftRecipe& recipe, const LiftOptions& options) {
    const SquarefreeModulus& sm = recipe.s_modulus;
    if (sm.prime_count() == 0) throw invalid_argument_error("lift needs s > 1");
    if (recipe.k < 1) throw invalid_argument_error("lift needs k >= 1");
    if (!sm.modulus_fits_u64())
        throw capacity_error("lift base modulus must fit a machine word");
    const uint64_t s = sm.modulus_u64();
    const uint64_t k = static_cast<uint64_t>(recipe.k);

    const auto gs = g_of(sm, options.sieve);
    const uint64_t g_s = gs.g_value;
    const uint64_t threshold = k * s + g_s;

    if (!sm.totient().fits_u64())
        throw capacity_error("phi(s) exceeds a machine word");
    const uint64_t ell = k * sm.totient().to_u64();
    if (recipe.r_primes.size() != ell)
        throw invalid_argument_error("lift needs exactly k*phi(s) = " + std::to_string(ell) +
                                     " primes, got " + std::to_string(recipe.r_primes.size()));
    std::vector<uint64_t> r = recipe.r_primes;
    std::sort(r.begin(), r.end());
    for (size_t i = 0; i < r.size(); ++i) {
        if (!is_prime_u64(r[i]))
            throw invalid_argument_error(std::to_string(r[i]) + " is not prime");
        if (i > 0 && r[i] == r[i - 1])
            throw invalid_argument_error("duplicate lift prime " + std::to_string(r[i]));
        if (r[i] <= threshold)
            throw invalid_argument_error("lift prime " + std::to_string(r[i]) +
                                         " must exceed k*s + g(s) = " + std::to_string(threshold));
    }

    // base total dominating set of X_s
    std::vector<uint64_t> base = recipe.base_total_dominating;
    if (base.empty()) {
        for (uint64_t i = 0; i < g_s; ++i) base.push_back(i);
    }
    {
        std::vector<Bigint> base_big(base.begin(), base.end());
        auto rep = check_residue_domination(sm, base_big, DominationKind::total_dominating, {});
        if (!rep.ok)
            throw invalid_argument_error("base set is not total dominating in X_s: " + rep.detail);
    }

    // smallest x in [1, s] whose following g(s)-1 integers all share a factor with s
    uint64_t x = 0;
    for (uint64_t cand = 1; cand <= s; ++cand) {
        bool ok = true;
        for (uint64_t j = 0; ok && j + 1 < g_s; ++j) ok = sm.shares_factor(cand + j);
        if (ok) {
            x = cand;
            break;
        }
    }
    if (x == 0) throw verification_error("no qualifying run start in [1, s]");

    // S = {x, ..., x + ks + g(s) - 2}; R = its elements coprime to s
    const uint64_t run_len = k * s + g_s - 1;
    std::vector<uint64_t> coprime_offsets;  // z - x for z in R, ascending
    for (uint64_t j = 0; j < run_len; ++j) {
        if (!sm.shares_factor(x + j)) coprime_offsets.push_back(j);
    }
    if (coprime_offsets.size() != ell)
        throw verification_error("expected |R| = k*phi(s) = " + std::to_string(ell) + ", got " +
                                 std::to_string(coprime_offsets.size()));

    // n = s * prod r_i
    SquarefreeModulus nm;
    {
        std::vector<uint64_t> all = sm.primes();
        all.insert(all.end(), r.begin(), r.end());
        nm = SquarefreeModulus::from_primes(std::move(all));
    }

    GapCertification out;
    out.modulus = nm;

    // D' = {0, ..., ks-1} plus one CRT image per base element, each fixed to
    // -1 mod every r_j so the two parts cannot collide
    out.total_dominating.kind = CertificateKind::total_dominating;
    out.total_dominating.prime_instance = nm;
    auto& dprime = out.total_dominating.residues;
    for (uint64_t i = 0; i < k * s; ++i) dprime.emplace_back(i);
    for (uint64_t d : base) {
        std::vector<std::pair<uint64_t, uint64_t>> congruences;
        congruences.emplace_back(d % s, s);
        for (uint64_t rp : r) congruences.emplace_back(rp - 1, rp);
        dprime.push_back(crt_combine(congruences));
    }
    out.total_dominating.claimed_value = static_cast<int64_t>(k * s + base.size());
    {
        // size identity |D'| = ks + |base|: the CRT images sit at -1 mod every
        // r_j, far above ks-1, so nothing can collide; checked anyway
        auto sorted = dprime;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw verification_error("lift produced a colliding residue");
    }

    // run start h == x (mod s), h == x - z_i (mod r_i) with R paired to the
    // sorted r ascending; position z_i - x of the run then lands on 0 mod r_i
    {
        std::vector<std::pair<uint64_t, uint64_t>> congruences;
        congruences.emplace_back(x % s, s);
        for (size_t i = 0; i < ell; ++i) {
            const uint64_t ri = r[i];
            const uint64_t z = (x + coprime_offsets[i]) % ri;
            congruences.emplace_back((x % ri + ri - z) % ri, ri);
        }
        out.run_witness.modulus = nm;
        out.run_witness.start = crt_combine(congruences);
        out.run_witness.length = run_len;
    }

    out.certified_gap = static_cast<int64_t>(run_len + 1) -
                        static_cast<int64_t>(k * s + base.size());
    if (out.certified_gap < 0)
        throw verification_error("lift produced a negative gap");

    if (!verify_run(out.run_witness))
        throw verification_error("lifted run witness failed gcd verification");

    if (nm.modulus_fits_u64() && nm.modulus_u64() <= options.direct_verification_cap) {
        VerifyLimits limits;
        limits.residue_enumeration_cap = options.direct_verification_cap;
        limits.threads = options.verify_threads;
        auto rep = check_residue_domination(nm, dprime, DominationKind::total_dominating, limits);
        if (!rep.ok)
            throw verification_error("lifted total dominating set failed: " + rep.detail);
        out.verified = true;
    } else {
        out.verified = false;  // trusted by the lifting argument, flagged unverified
    }
    return out;
}

GapCertification certify_mj_membership(const SquarefreeModulus& n, const Certificate& d,
                                       const GapWitness& w, const VerifyLimits& limits) {
    if (d.kind != CertificateKind::total_dominating)
        throw verification_error("membership needs a total_dominating certificate");
    if (!d.prime_instance || !(*d.prime_instance == n))
        throw verification_error("certificate instance does not match the modulus");
    if (!(w.modulus == n))
        throw verification_error("run witness modulus does not match");
    if (d.claimed_value &&
        *d.claimed_value != static_cast<int64_t>(d.residues.size()))
        throw verification_error("claimed_value does not match the set size");

    const int64_t gap = static_cast<int64_t>(w.length + 1) -
                        static_cast<int64_t>(d.residues.size());
    if (gap < 0)
        throw verification_error("negative gap: set larger than the run proves");
    if (!verify_run(w)) throw verification_error("run witness failed gcd verification");
    auto rep = check_residue_domination(n, d.residues, DominationKind::total_dominating, limits);
    if (!rep.ok) throw verification_error("total dominating certificate failed: " + rep.detail);

    GapCertification out;
    out.modulus = n;
    out.total_dominating = d;
    out.run_witness = w;
    out.certified_gap = gap;
    out.verified = true;
    return out;
}

SolveOptions seeded_options(const ProductGraph& g, DominationKind kind, SolveOptions base,
                            bool seed_lower) {
    const int t = g.factor_count();
    const auto& n = g.sizes();
    if (kind == DominationKind::dominating && base.seed_witness.empty()) {
        if (n[0] >= t + 1) {
            base.seed_witness = diagonal_tplus1(g).certificate.vertices;
        } else if (t == 3) {
            auto triple = mekis_triple();
            if (is_dominating(g, triple)) base.seed_witness = std::move(triple);
        } else if (t >= 4 && n[0] == t && n[1] == t && n[2] == t && n[3] >= t + 2) {
            base.seed_witness = tplus2_construction(g).certificate.vertices;
        }
    }
    if (seed_lower && kind == DominationKind::dominating && !base.lower_seed) {
        const auto summary = best_bounds(g);
        base.lower_seed = static_cast<int>(summary.lower);
    }
    return base;
}

}  // namespace domlab
