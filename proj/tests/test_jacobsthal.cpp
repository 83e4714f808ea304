#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domlab/errors.hpp"
#include "domlab/exact.hpp"
#include "domlab/jacobsthal.hpp"
#include "domlab/primes.hpp"
#include "oracles.hpp"

using namespace domlab;

namespace {
SquarefreeModulus mod(std::vector<uint64_t> primes) {
    return SquarefreeModulus::from_primes(std::move(primes));
}
}  // namespace

TEST_CASE("g on small moduli with witnesses") {
    auto unit = g_of(SquarefreeModulus{});
    CHECK(unit.g_value == 1);
    CHECK(unit.witness.length == 0);
    CHECK(unit.exhaustive);

    auto g6 = g_of(mod({2, 3}));
    CHECK(g6.g_value == 4);
    CHECK(g6.witness.start == Bigint(2));
    CHECK(g6.witness.length == 3);
    CHECK(verify_run(g6.witness));

    auto g15 = g_of(mod({3, 5}));
    CHECK(g15.g_value == 3);
    CHECK(g15.witness.start == Bigint(5));  // earliest maximal run is {5,6}
    CHECK(g15.witness.length == 2);

    auto g210 = g_of(mod({2, 3, 5, 7}));
    CHECK(g210.g_value == 10);
    CHECK(g210.witness.start == Bigint(2));
    CHECK(g210.witness.length == 9);
}

TEST_CASE("h of primorials") {
    CHECK(h_of(1).g_value == 2);
    CHECK(h_of(3).g_value == 6);
    auto h3 = h_of(3);
    CHECK(h3.witness.start == Bigint(2));
    CHECK(h3.witness.length == 5);
    auto h5 = h_of(5);
    CHECK(h5.g_value == 14);
    CHECK(h5.witness.start == Bigint(114));
    CHECK(h5.witness.length == 13);
}

TEST_CASE("segmented sieve agrees with the definition-based window scan") {
    // small moduli exhaustively
    for (uint64_t n = 2; n <= 200; ++n) {
        // build the radical's prime set by trial division
        std::vector<uint64_t> primes;
        uint64_t m = n;
        for (uint64_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) primes.push_back(m);
        auto result = g_of(mod(primes));
        auto naive = test_oracles::naive_longest_run(n);
        CHECK(result.g_value == naive.g);
        CHECK(result.witness.start == Bigint(naive.start));
        CHECK(result.witness.length == naive.length);
    }
    // h(1..5) against the window scan
    const std::vector<uint64_t> primorials = {2, 6, 30, 210, 2310};
    for (size_t i = 0; i < primorials.size(); ++i) {
        CHECK(h_of(static_cast<int>(i + 1)).g_value ==
              test_oracles::naive_g_by_window_scan(primorials[i]));
    }
}

TEST_CASE("sieve cap raises capacity errors") {
    SieveOptions tiny;
    tiny.sieve_cap = 100;
    CHECK_THROWS_AS(g_of(mod({2, 3, 5, 7}), tiny), capacity_error);
}

TEST_CASE("runs straddling segment boundaries are spliced correctly") {
    // force many tiny segments so maximal runs cross them
    SieveOptions tiny_segments;
    tiny_segments.segment_size = 64;
    for (auto primes : {std::vector<uint64_t>{2, 3}, {2, 3, 5}, {3, 5, 7}, {2, 3, 5, 7},
                        {2, 3, 5, 7, 11}}) {
        auto whole = g_of(mod(primes));
        auto segmented = g_of(mod(primes), tiny_segments);
        CHECK(segmented.g_value == whole.g_value);
        CHECK(segmented.witness.start == whole.witness.start);
        CHECK(segmented.witness.length == whole.witness.length);
    }
}

TEST_CASE("subset budget raises capacity errors") {
    auto pool = first_primes(10);
    CHECK_THROWS_AS(H_bounded(3, pool, {}, 10), capacity_error);
}

TEST_CASE("pool-bounded maxima") {
    auto pool = first_primes(10);
    auto h1 = H_bounded(1, pool);
    CHECK(h1.value == 2);
    CHECK(h1.argmax_primes == std::vector<uint64_t>{2});
    auto h2 = H_bounded(2, pool);
    CHECK(h2.value == 4);
    CHECK(h2.argmax_primes == std::vector<uint64_t>{2, 3});
    auto h3 = H_bounded(3, pool);
    CHECK(h3.value == 6);
    CHECK(h3.subsets_scanned == 120);
}

TEST_CASE("pool-bounded maxima are monotone in the pool") {
    auto pool10 = first_primes(10);
    auto pool6 = first_primes(6);
    for (int n = 1; n <= 3; ++n) {
        CHECK(H_bounded(n, pool10).value >=
              H_bounded(n, std::span<const uint64_t>(pool6)).value);
    }
}

TEST_CASE("verify_run") {
    CHECK(verify_run({mod({2, 3}), Bigint(2), 3}));
    CHECK_FALSE(verify_run({mod({2, 3}), Bigint(1), 1}));
    CHECK(verify_run({mod({2, 3}), Bigint(100), 0}));  // empty run is vacuously fine
}

TEST_CASE("crt_combine") {
    std::vector<std::pair<uint64_t, uint64_t>> c1 = {{1, 2}, {2, 3}};
    CHECK(crt_combine(c1) == Bigint(5));
    std::vector<std::pair<uint64_t, uint64_t>> c2 = {{0, 97}};
    CHECK(crt_combine(c2) == Bigint(0));
    // h == 2 (mod 6), h == -5 (mod 11), h == -7 (mod 13)
    std::vector<std::pair<uint64_t, uint64_t>> c3 = {{2, 6}, {6, 11}, {6, 13}};
    CHECK(crt_combine(c3) == Bigint(578));
    std::vector<std::pair<uint64_t, uint64_t>> bad = {{1, 6}, {2, 4}};
    CHECK_THROWS_AS(crt_combine(bad), invalid_argument_error);
}

TEST_CASE("radical reduction") {
    std::vector<std::pair<uint64_t, int>> f12 = {{2, 2}, {3, 1}};
    CHECK(radical_reduce(f12).primes() == std::vector<uint64_t>{2, 3});
    std::vector<std::pair<uint64_t, int>> f30 = {{2, 1}, {3, 1}, {5, 1}};
    CHECK(radical_reduce(f30).modulus_u64() == 30);
    std::vector<std::pair<uint64_t, int>> f8 = {{2, 3}};
    CHECK(radical_reduce(f8).primes() == std::vector<uint64_t>{2});
    std::vector<std::pair<uint64_t, int>> bad = {{4, 1}};
    CHECK_THROWS_AS(radical_reduce(bad), invalid_argument_error);
    std::vector<std::pair<uint64_t, int>> bad2 = {{2, 0}};
    CHECK_THROWS_AS(radical_reduce(bad2), invalid_argument_error);
}

TEST_CASE("g depends only on the radical") {
    // definition-based scan on n vs sieve on rad(n), n <= 2000
    auto spf = smallest_prime_factor_table(2000);
    for (uint32_t n = 2; n <= 2000; n += 7) {
        std::vector<uint64_t> primes;
        uint32_t m = n;
        while (m > 1) {
            uint32_t p = spf[m];
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
        CHECK(g_of(mod(primes)).g_value == test_oracles::naive_g_by_window_scan(n));
    }
}

TEST_CASE("runs never reach the radical") {
    for (auto primes : {std::vector<uint64_t>{2, 3}, {2, 3, 5}, {2, 3, 5, 7}, {3, 5, 7}}) {
        auto m = mod(primes);
        auto result = g_of(m);
        CHECK(result.g_value <= m.modulus_u64());
        CHECK(result.witness.length < m.modulus_u64());
    }
}

TEST_CASE("reference constants are documentation only") {
    auto refs = reference_constants();
    REQUIRE(refs.size() == 2);
    CHECK(refs[0].n == 24);
    CHECK(refs[0].h == 234);
    CHECK(refs[0].H == 236);
    CHECK(refs[1].n == 41);
    CHECK(refs[1].h == 550);
    CHECK(refs[1].H == 566);
}
