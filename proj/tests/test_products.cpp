#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domlab/errors.hpp"
#include "domlab/primes.hpp"
#include "domlab/products.hpp"
#include "oracles.hpp"

using namespace domlab;

TEST_CASE("make_product sorts and derives counts") {
    auto g = make_product({4, 6, 4, 4});
    CHECK(g.sizes() == std::vector<int>{4, 4, 4, 6});
    CHECK(g.vertex_count() == 384);
    CHECK(g.min_degree() == 3 * 3 * 3 * 5);

    auto k2 = make_product({2});
    CHECK(k2.vertex_count() == 2);

    CHECK_THROWS_AS(make_product({1, 3}), invalid_instance_error);
    CHECK_THROWS_AS(make_product({}), invalid_instance_error);
    CHECK_THROWS_AS(make_product({100, 100, 100}, 1000), capacity_error);
}

TEST_CASE("adjacency is differ-everywhere") {
    auto g = make_product({3, 3});
    CHECK(g.adjacent({0, 0}, {1, 2}));
    CHECK_FALSE(g.adjacent({0, 0}, {0, 1}));
    auto g4 = make_product({2, 3, 3, 3});
    CHECK(g4.adjacent({0, 0, 0, 0}, {1, 1, 1, 1}));
    CHECK_THROWS_AS(g.adjacent({0, 0, 0}, {1, 1}), invalid_argument_error);
}

TEST_CASE("closed neighborhood size") {
    CHECK(make_product({3, 3}).closed_neighborhood_size() == 5);
    CHECK(make_product({2, 3, 5}).closed_neighborhood_size() == 9);
    CHECK(make_product({5, 5, 5, 5}).closed_neighborhood_size() == 257);
}

TEST_CASE("flat index round trip") {
    auto g = make_product({3, 4, 5});
    Vertex v(3, 0);
    uint64_t idx = 0;
    do {
        CHECK(g.flat_index(v) == idx);
        CHECK(g.vertex_at(idx) == v);
        ++idx;
    } while (g.next_vertex(v));
    CHECK(idx == g.vertex_count());
}

TEST_CASE("squarefree modulus validation") {
    auto m = SquarefreeModulus::from_primes({3, 2});
    CHECK(m.primes() == std::vector<uint64_t>{2, 3});
    CHECK(m.modulus_u64() == 6);
    CHECK(m.totient() == Bigint(2));
    CHECK_THROWS_AS(SquarefreeModulus::from_primes({4}), invalid_instance_error);
    CHECK_THROWS_AS(SquarefreeModulus::from_primes({3, 3}), invalid_instance_error);
    CHECK(SquarefreeModulus().modulus() == Bigint(1));
}

TEST_CASE("ucg graph factors") {
    CHECK(ucg_graph(SquarefreeModulus::from_primes({2, 3})).sizes() == std::vector<int>{2, 3});
    CHECK(ucg_graph(SquarefreeModulus::from_primes({2, 3, 11, 13})).sizes() ==
          std::vector<int>{2, 3, 11, 13});
    CHECK(ucg_graph(SquarefreeModulus::from_primes({7})).sizes() == std::vector<int>{7});
}

TEST_CASE("vertex residue examples") {
    auto m23 = SquarefreeModulus::from_primes({2, 3});
    CHECK(vertex_to_residue(m23, {1, 2}) == Bigint(5));  // 5 mod 2 = 1, 5 mod 3 = 2
    CHECK(vertex_to_residue(m23, {0, 0}) == Bigint(0));
    auto m235 = SquarefreeModulus::from_primes({2, 3, 5});
    CHECK(vertex_to_residue(m235, {1, 1, 1}) == Bigint(1));
}

TEST_CASE("residue adjacency examples") {
    auto m23 = SquarefreeModulus::from_primes({2, 3});
    CHECK(residue_adjacent(m23, Bigint(0), Bigint(1)));
    CHECK_FALSE(residue_adjacent(m23, Bigint(0), Bigint(3)));
    auto big = SquarefreeModulus::from_primes({2, 3, 11, 13});
    CHECK_FALSE(residue_adjacent(big, Bigint(0), Bigint(429)));  // gcd(429, 858) = 429
    CHECK_FALSE(residue_adjacent(big, Bigint(5), Bigint(5)));    // no self loops
}

namespace {

// distinct prime factors when n is squarefree, empty otherwise
std::vector<uint64_t> squarefree_factors(uint32_t n, const std::vector<uint32_t>& spf) {
    std::vector<uint64_t> primes;
    uint32_t m = n;
    while (m > 1) {
        const uint32_t p = spf[m];
        m /= p;
        if (m % p == 0) return {};
        primes.push_back(p);
    }
    return primes;
}

}  // namespace

TEST_CASE("CRT round trip, exhaustive for every squarefree n up to 2000") {
    auto spf = smallest_prime_factor_table(2000);
    size_t moduli = 0;
    for (uint32_t n = 2; n <= 2000; ++n) {
        auto primes = squarefree_factors(n, spf);
        if (primes.empty()) continue;
        auto m = SquarefreeModulus::from_primes(primes);
        REQUIRE(m.modulus_u64() == n);
        for (uint64_t r = 0; r < n; ++r) {
            if (vertex_to_residue(m, residue_to_vertex(m, Bigint(r))) != Bigint(r)) {
                FAIL("round trip broke at n=", n, ", r=", r);
            }
        }
        ++moduli;
    }
    CHECK(moduli > 1200);
    // larger spot checks
    for (auto primes : {std::vector<uint64_t>{2, 3, 5, 7, 11}, {89, 97}, {3, 5, 7, 11}}) {
        auto m = SquarefreeModulus::from_primes(primes);
        REQUIRE(m.modulus_u64() <= 10'000);
        for (uint64_t r = 0; r < m.modulus_u64(); ++r) {
            CHECK(vertex_to_residue(m, residue_to_vertex(m, Bigint(r))) == Bigint(r));
        }
    }
}

TEST_CASE("CRT round trip on random residues of a large modulus") {
    // product of the three largest primes below 2^31 (and 3) exceeds 64 bits
    auto m = SquarefreeModulus::from_primes({3, 2147483587ull, 2147483629ull, 2147483647ull});
    CHECK_FALSE(m.modulus_fits_u64());
    test_oracles::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Bigint r(rng.next());  // any 64-bit value is already reduced mod n
        CHECK(vertex_to_residue(m, residue_to_vertex(m, r)) == r);
    }
}

TEST_CASE("adjacency transport between residues and tuples") {
    // every pair of residues, for all squarefree n up to 120, plus spot
    // checks near the 10^3 mark
    auto spf = smallest_prime_factor_table(120);
    for (uint32_t n = 2; n <= 120; ++n) {
        auto primes = squarefree_factors(n, spf);
        if (primes.empty()) continue;
        auto m = SquarefreeModulus::from_primes(primes);
        auto g = ucg_graph(m);
        for (uint64_t a = 0; a < n; ++a) {
            const Vertex va = residue_to_vertex(m, Bigint(a));
            for (uint64_t b = a + 1; b < n; ++b) {
                const Vertex vb = residue_to_vertex(m, Bigint(b));
                if (residue_adjacent(m, Bigint(a), Bigint(b)) != g.adjacent(va, vb)) {
                    FAIL("transport broke at n=", n, " between ", a, " and ", b);
                }
            }
        }
    }
    for (auto primes : {std::vector<uint64_t>{2, 3, 5, 7}, {5, 7, 11}, {3, 5, 61}}) {
        auto m = SquarefreeModulus::from_primes(primes);
        const uint64_t n = m.modulus_u64();
        REQUIRE(n <= 1000);
        auto g = ucg_graph(m);
        for (uint64_t a = 0; a < n; ++a) {
            const Vertex va = residue_to_vertex(m, Bigint(a));
            for (uint64_t b = a + 1; b < n; ++b) {
                const Vertex vb = residue_to_vertex(m, Bigint(b));
                if (residue_adjacent(m, Bigint(a), Bigint(b)) != g.adjacent(va, vb)) {
                    FAIL("transport broke at n=", n, " between ", a, " and ", b);
                }
            }
        }
    }
}

TEST_CASE("regularity: every residue has phi(n) neighbors") {
    auto spf = smallest_prime_factor_table(150);
    for (uint32_t n = 2; n <= 150; ++n) {
        auto primes = squarefree_factors(n, spf);
        if (primes.empty()) continue;
        auto m = SquarefreeModulus::from_primes(primes);
        const uint64_t phi = m.totient().to_u64();
        for (uint64_t a = 0; a < n; ++a) {
            uint64_t degree = 0;
            for (uint64_t b = 0; b < n; ++b) {
                if (b != a && residue_adjacent(m, Bigint(a), Bigint(b))) ++degree;
            }
            if (degree != phi) FAIL("degree ", degree, " != phi ", phi, " at n=", n);
        }
    }
    // one larger modulus
    auto m = SquarefreeModulus::from_primes({2, 3, 5, 7});
    for (uint64_t a = 0; a < 210; ++a) {
        uint64_t degree = 0;
        for (uint64_t b = 0; b < 210; ++b) {
            if (b != a && residue_adjacent(m, Bigint(a), Bigint(b))) ++degree;
        }
        CHECK(degree == 48);
    }
}

TEST_CASE("regularity: tuple degree equals product of (n_i - 1)") {
    for (auto sizes : {std::vector<int>{2, 3, 4}, {3, 3, 3}, {2, 2, 2, 2}, {4, 5}}) {
        auto g = make_product(sizes);
        Vertex v(sizes.size(), 0);
        do {
            uint64_t degree = 0;
            Vertex u(sizes.size(), 0);
            do {
                if (u != v && g.adjacent(u, v)) ++degree;
            } while (g.next_vertex(u));
            CHECK(degree == g.min_degree());
        } while (g.next_vertex(v));
    }
    // spot-check a 10^4-vertex graph on sampled vertices
    auto big = make_product({10, 10, 10, 10});
    test_oracles::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Vertex v = big.vertex_at(rng.below(big.vertex_count()));
        uint64_t degree = 0;
        Vertex u(4, 0);
        do {
            if (u != v && big.adjacent(u, v)) ++degree;
        } while (big.next_vertex(u));
        CHECK(degree == big.min_degree());  // 9^4
    }
}

TEST_CASE("primality helper is deterministic for 64-bit") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(4294967311ull));
    CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    auto fp = first_primes(10);
    CHECK(fp == std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
