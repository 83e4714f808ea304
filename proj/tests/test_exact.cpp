#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domlab/errors.hpp"
#include "domlab/exact.hpp"
#include "oracles.hpp"

using namespace domlab;

namespace {

// All sorted factor multisets over {2..6} with vertex count <= cap.
std::vector<std::vector<int>> small_universe(uint64_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_size, uint64_t product) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int s = min_size; s <= 6; ++s) {
            if (product * static_cast<uint64_t>(s) > cap) break;
            cur.push_back(s);
            self(self, s, product * static_cast<uint64_t>(s));
            cur.pop_back();
        }
    };
    rec(rec, 2, 1);
    return out;
}

}  // namespace

TEST_CASE("is_dominating examples") {
    auto g = make_product({3, 3});
    std::vector<Vertex> diag = {{0, 0}, {1, 1}, {2, 2}};
    CHECK(is_dominating(g, diag));
    std::vector<Vertex> all;
    Vertex v(2, 0);
    do { all.push_back(v); } while (g.next_vertex(v));
    CHECK(is_dominating(g, all));
    std::vector<Vertex> one = {{0, 0}};
    CHECK_FALSE(is_dominating(g, one));
    auto rep = check_domination(g, one, DominationKind::dominating);
    CHECK(rep.detail == "undominated vertex (0,1)");
}

TEST_CASE("is_total_dominating examples") {
    auto g23 = make_product({2, 3});
    // image of the residue prefix {0,1,2,3} of X_6 under CRT
    std::vector<Vertex> prefix = {{0, 0}, {1, 1}, {0, 2}, {1, 0}};
    CHECK(is_total_dominating(g23, prefix));

    auto g33 = make_product({3, 3});
    std::vector<Vertex> one = {{0, 0}};
    CHECK_FALSE(is_total_dominating(g33, one));

    // K_2 x K_2 is two disjoint edges: a diagonal pair leaves the other edge
    // without any dominated endpoint
    auto g22 = make_product({2, 2});
    std::vector<Vertex> pair = {{0, 0}, {1, 1}};
    CHECK_FALSE(is_total_dominating(g22, pair));
    std::vector<Vertex> everything = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    CHECK(is_total_dominating(g22, everything));
}

TEST_CASE("gamma_exact theorem values") {
    CHECK(gamma_exact(make_product({2, 5})).value == 2);
    CHECK(gamma_exact(make_product({3, 4})).value == 3);
    CHECK(gamma_exact(make_product({3, 3, 3})).value == 4);
    auto r = gamma_exact(make_product({3, 3, 3}));
    CHECK(r.proven_optimal);
    CHECK(r.proven_lower == 4);
    CHECK(verify_certificate(r.witness));
}

TEST_CASE("gamma_t_exact values") {
    CHECK(gamma_t_exact(make_product({2, 3})).value == 4);  // X_6 is the 6-cycle
    CHECK(gamma_t_exact(make_product({3, 3})).value == 3);
    CHECK(gamma_t_exact(make_product({2, 2})).value == 4);  // two disjoint edges
    CHECK(gamma_t_exact(make_product({5})).value == 2);
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_value(make_product({2, 3}), DominationKind::total_dominating, 4) == 4);
    CHECK(brute_force_value(make_product({3, 3}), DominationKind::dominating, 3) == 3);
    CHECK(brute_force_value(make_product({2, 2}), DominationKind::dominating, 1) ==
          std::nullopt);
    CHECK_THROWS_AS(
        brute_force_value(make_product({5, 5, 5}), DominationKind::dominating, 4),
        capacity_error);
}

TEST_CASE("oracle cover search agrees with plain subset enumeration") {
    OracleOptions forced;
    forced.combination_budget = 0;  // always take the first-uncovered search
    for (auto sizes : {std::vector<int>{2, 3}, {3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3},
                       {2, 2, 2, 2}}) {
        auto g = make_product(sizes);
        const int cap = static_cast<int>(g.vertex_count());
        for (auto kind : {DominationKind::dominating, DominationKind::total_dominating}) {
            CHECK(brute_force_value(g, kind, cap, forced) == brute_force_value(g, kind, cap));
        }
    }
}

TEST_CASE("oracle equivalence on a small slice of the universe") {
    for (auto sizes : {std::vector<int>{2, 2}, {2, 4}, {3, 3}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3},
                       {2, 2, 2, 2}, {2, 2, 2, 3}}) {
        auto g = make_product(sizes);
        for (auto kind : {DominationKind::dominating, DominationKind::total_dominating}) {
            auto solved = kind == DominationKind::dominating ? gamma_exact(g) : gamma_t_exact(g);
            auto oracle = brute_force_value(g, kind, static_cast<int>(g.vertex_count()));
            REQUIRE(oracle.has_value());
            CHECK(solved.value == *oracle);
            CHECK(solved.proven_optimal);
        }
    }
}

TEST_CASE("transitivity normalization is value-preserving across the oracle universe") {
    SolveOptions plain;  // same bounds, no symmetry assumptions at all
    plain.normalize_first_vertex = false;
    plain.orbit_dedup = false;
    for (const auto& sizes : small_universe(40)) {
        auto g = make_product(sizes);
        for (auto kind : {DominationKind::dominating, DominationKind::total_dominating}) {
            auto full = kind == DominationKind::dominating ? gamma_exact(g) : gamma_t_exact(g);
            auto bare = kind == DominationKind::dominating ? gamma_exact(g, plain)
                                                           : gamma_t_exact(g, plain);
            CHECK(full.value == bare.value);
            CHECK(full.proven_optimal);
            CHECK(bare.proven_optimal);
        }
    }
}

TEST_CASE("gamma never exceeds gamma_t") {
    for (const auto& sizes : small_universe(40)) {
        auto g = make_product(sizes);
        CHECK(gamma_exact(g).value <= gamma_t_exact(g).value);
    }
}

TEST_CASE("single-threaded runs are fully reproducible") {
    SolveOptions opts;  // deterministic tie-breaking by flat index
    auto first = gamma_exact(make_product({3, 4, 5}), opts);
    auto second = gamma_exact(make_product({3, 4, 5}), opts);
    CHECK(first.value == second.value);
    CHECK(first.nodes_explored == second.nodes_explored);
    CHECK(first.witness.vertices == second.witness.vertices);
}

TEST_CASE("thread count does not change the value") {
    SolveOptions two;
    two.threads = 2;
    for (auto sizes : {std::vector<int>{3, 3, 3}, {2, 3, 5}, {4, 4, 4}}) {
        auto g = make_product(sizes);
        CHECK(gamma_exact(g, two).value == gamma_exact(g).value);
        CHECK(gamma_exact(g, two).proven_optimal);
    }
}

TEST_CASE("node budget returns an honest interval") {
    SolveOptions strangled;
    strangled.node_budget = 2;
    auto r = gamma_exact(make_product({4, 4, 4, 4}), strangled);
    CHECK_FALSE(r.proven_optimal);
    CHECK(r.proven_lower <= r.value);
    CHECK(r.proven_lower >= 1);
    CHECK(verify_certificate(r.witness));  // incumbent still valid
}

TEST_CASE("upper hints prune but cannot fabricate optima") {
    SolveOptions hinted;
    hinted.upper_hint = 4;
    auto r = gamma_exact(make_product({3, 3, 3}), hinted);
    CHECK(r.value == 4);
    CHECK(r.proven_optimal);
}

TEST_CASE("seeded lower bound short-circuits and reports its source") {
    SolveOptions seeded;
    seeded.lower_seed = 4;
    seeded.seed_witness = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    auto r = gamma_exact(make_product({3, 3, 3}), seeded);
    CHECK(r.value == 4);
    CHECK(r.proven_optimal);
    CHECK(r.source == OptimalitySource::seeded_bound);
    CHECK(r.nodes_explored == 0);
}

TEST_CASE("fiber partitions") {
    auto g = make_product({3, 3});
    std::vector<Vertex> d = {{0, 0}, {0, 1}, {1, 2}};
    auto f1 = fibers(g, d, 1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].value == 0);
    CHECK(f1[0].members.size() == 2);
    CHECK(f1[1].value == 1);
    CHECK(f1[1].members.size() == 1);
    CHECK(fibers(g, {}, 1).empty());
    std::vector<Vertex> single = {{0, 0}};
    CHECK(fibers(g, single, 2).size() == 1);
    CHECK_THROWS_AS(fibers(g, d, 3), invalid_argument_error);
}

TEST_CASE("certificate verification dispatch") {
    Certificate bad;
    bad.kind = CertificateKind::dominating;
    bad.sizes = std::vector<int>{3, 3};
    bad.vertices = {{0, 0}, {1, 1}, {2, 2}};
    bad.claimed_value = 5;  // wrong on purpose
    CHECK_FALSE(verify_certificate(bad));
    bad.claimed_value = 3;
    CHECK(verify_certificate(bad));

    Certificate run;
    run.kind = CertificateKind::noncoprime_run;
    run.prime_instance = SquarefreeModulus::from_primes({2, 3});
    run.run_start = Bigint(2);
    run.run_length = 3;
    CHECK(verify_certificate(run));
    run.run_length = 4;  // 5 is coprime to 6
    CHECK_FALSE(verify_certificate(run));

    // bare modulus route falls back to bigint gcd
    Certificate bare;
    bare.kind = CertificateKind::noncoprime_run;
    bare.modulus_instance = Bigint(858);
    bare.run_start = Bigint(8);
    bare.run_length = 9;
    CHECK(verify_certificate(bare));
    bare.run_length = 10;  // 17 is coprime to 858
    CHECK_FALSE(verify_certificate(bare));
}

TEST_CASE("monotone size vectors never raise gamma_t") {
    test_oracles::Rng rng(2024);
    int done = 0;
    while (done < 25) {
        const int t = 1 + static_cast<int>(rng.below(3));
        std::vector<int> larger, smaller;
        uint64_t product = 1;
        for (int i = 0; i < t; ++i) {
            const uint64_t room = 48 / product;
            if (room < 2) break;
            const int hi = static_cast<int>(std::min<uint64_t>(6, room));
            const int m = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(hi - 1)));
            larger.push_back(m);
            product *= static_cast<uint64_t>(m);
            smaller.push_back(2 + static_cast<int>(rng.below(static_cast<uint64_t>(m - 1))));
        }
        if (larger.empty()) continue;
        auto gt_small = gamma_t_exact(make_product(smaller)).value;
        auto gt_large = gamma_t_exact(make_product(larger)).value;
        CHECK(gt_small >= gt_large);
        ++done;
    }
}
