#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domlab/bounds.hpp"
#include "domlab/errors.hpp"
#include "domlab/exact.hpp"

using namespace domlab;

TEST_CASE("mekis bound cases") {
    auto r1 = mekis_bound(make_product({2, 7}));
    CHECK(r1.value == 2);
    CHECK(r1.exact);
    CHECK(r1.certified);

    auto r2 = mekis_bound(make_product({4, 4, 4}));
    CHECK(r2.value == 4);
    CHECK(r2.exact);

    auto r3 = mekis_bound(make_product({6, 6, 6, 6, 6}));
    CHECK(r3.value == 6);
    CHECK(r3.exact);  // n_1 = 6 >= t+1 = 6

    auto r4 = mekis_bound(make_product({4, 4, 4, 4}));
    CHECK(r4.value == 5);
    CHECK_FALSE(r4.exact);

    CHECK_FALSE(mekis_bound(make_product({9})).applicable);
}

TEST_CASE("defant-iyer bound") {
    CHECK(di_bound(make_product({4, 4, 4, 6})).value == 6);
    CHECK(di_bound(make_product({2, 3, 3, 3})).value == 8);
    CHECK_FALSE(di_bound(make_product({2, 2, 3, 3})).applicable);
    CHECK_FALSE(di_bound(make_product({3, 3, 3})).applicable);
}

TEST_CASE("asymptotic bound arithmetic and applicability") {
    auto g100 = make_product(std::vector<int>(100, 3));
    auto r = asymptotic_bound(g100, 10);
    CHECK(r.applicable);
    CHECK_FALSE(r.certified);
    CHECK(r.value == 5189);  // floor of 90 * (3/2)^10
    REQUIRE(r.rational.has_value());
    // rational equals (t-k) * prod n_i / prod (n_i - 1) computed independently
    Bigint num(90);
    for (int i = 0; i < 10; ++i) num.mul_u64(3);
    Bigint den(1);
    for (int i = 0; i < 10; ++i) den.mul_u64(2);
    CHECK(r.rational->first * den == num * r.rational->second);

    auto g5 = make_product({3, 3, 3, 3, 3});
    CHECK_FALSE(asymptotic_bound(g5, 4).applicable);
    CHECK_FALSE(asymptotic_bound(g100, 100).applicable);  // k = t never qualifies
    CHECK_THROWS_AS(asymptotic_bound(g5, 0), invalid_argument_error);
    CHECK_THROWS_AS(asymptotic_bound(g5, 6), invalid_argument_error);
}

TEST_CASE("naive counting lower bound") {
    CHECK(naive_lower(make_product({2, 3, 5})).value == 4);
    CHECK(naive_lower(make_product({3, 3})).value == 2);
    CHECK(naive_lower(make_product({2, 2})).value == 2);
}

TEST_CASE("alon-spencer upper bound") {
    CHECK(alon_spencer_upper(make_product({3, 3})).value == 5);
    CHECK(alon_spencer_upper(make_product({2, 2})).value == 4);
    CHECK(alon_spencer_upper(make_product({5, 5, 5, 5})).value == 16);
}

TEST_CASE("product-form upper bound") {
    CHECK(product_upper(make_product({3, 3})).value == 8);
    CHECK(product_upper(make_product({2, 2})).value == 10);
    CHECK(product_upper(make_product({5, 5, 5, 5})).value == 19);
}

TEST_CASE("best bounds aggregation") {
    auto s = best_bounds(make_product({4, 4, 4, 6}));
    CHECK(s.lower >= 6);  // defant-iyer
    CHECK(s.upper >= s.lower);

    auto s2 = best_bounds(make_product({2, 5}));
    CHECK(s2.lower == 2);
    CHECK(s2.upper >= 2);  // interval contains gamma = 2

    auto s3 = best_bounds(make_product({3, 3}));
    CHECK(s3.lower <= 3);
    CHECK(s3.upper >= 3);  // gamma([3,3]) = 3 sits inside
    CHECK(s3.lower >= 2);
    CHECK(s3.upper <= 5);
}

TEST_CASE("defant-iyer dominates mekis when n_1 <= t") {
    for (int n1 = 3; n1 <= 6; ++n1) {
        for (int t = 4; t <= 7; ++t) {
            std::vector<int> sizes(static_cast<size_t>(t), 7);
            sizes[0] = n1;
            auto g = make_product(sizes);
            if (n1 > t) continue;
            auto di = di_bound(g);
            auto mekis = mekis_bound(g);
            REQUIRE(di.applicable);
            CHECK(*di.value >= *mekis.value);
        }
    }
}

TEST_CASE("sandwich on solver-verified instances") {
    for (auto sizes : {std::vector<int>{2, 2}, {2, 5}, {3, 3}, {2, 3, 3}, {3, 3, 3}, {2, 2, 2, 3}}) {
        auto g = make_product(sizes);
        const int gamma = gamma_exact(g).value;
        auto s = best_bounds(g);
        CHECK(s.lower <= gamma);
        CHECK(gamma <= s.upper);
        for (const auto& r : s.reports) {
            if (!r.applicable || !r.certified || !r.value) continue;
            if (r.kind == BoundKind::lower) CHECK(*r.value <= gamma);
            if (r.kind == BoundKind::upper) CHECK(*r.value >= gamma);
            if (r.exact) CHECK(*r.value == gamma);
        }
    }
}
