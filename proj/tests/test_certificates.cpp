#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "domlab/certificates.hpp"
#include "domlab/errors.hpp"

using namespace domlab;
using nlohmann::json;

TEST_CASE("tuple certificate round trip") {
    Certificate c;
    c.kind = CertificateKind::dominating;
    c.sizes = std::vector<int>{3, 3};
    c.vertices = {{0, 0}, {1, 1}, {2, 2}};
    c.claimed_value = 3;
    json j = certificate_to_json(c);
    validate_certificate_json(j);
    Certificate back = certificate_from_json(j);
    CHECK(back.kind == c.kind);
    CHECK(*back.sizes == *c.sizes);
    CHECK(back.vertices == c.vertices);
    CHECK(*back.claimed_value == 3);
    CHECK(certificate_to_json(back) == j);  // byte-stable re-serialization
}

TEST_CASE("residue and run certificates round trip") {
    Certificate c;
    c.kind = CertificateKind::total_dominating;
    c.prime_instance = SquarefreeModulus::from_primes({2, 3, 11, 13});
    for (uint64_t i = 0; i < 4; ++i) c.residues.emplace_back(i);
    json j = certificate_to_json(c);
    validate_certificate_json(j);
    auto back = certificate_from_json(j);
    CHECK(back.prime_instance->modulus_u64() == 858);
    CHECK(back.residues.size() == 4);

    Certificate run;
    run.kind = CertificateKind::noncoprime_run;
    run.modulus_instance = Bigint::from_decimal("123456789012345678901234567890");
    run.run_start = Bigint::from_decimal("99999999999999999999");
    run.run_length = 7;
    json jr = certificate_to_json(run);
    validate_certificate_json(jr);
    auto back_run = certificate_from_json(jr);
    CHECK(back_run.modulus_instance->to_decimal() == "123456789012345678901234567890");
    CHECK(back_run.run_start->to_decimal() == "99999999999999999999");
    CHECK(*back_run.run_length == 7);
}

TEST_CASE("schema violations are rejected") {
    json ok = {
        {"kind", "dominating"},
        {"instance", {{"sizes", {3, 3}}}},
        {"vertices", {{0, 0}, {1, 1}, {2, 2}}},
    };
    CHECK_NOTHROW(validate_certificate_json(ok));

    json two_instances = ok;
    two_instances["instance"]["primes"] = {2, 3};
    CHECK_THROWS_AS(validate_certificate_json(two_instances), schema_error);

    json bad_kind = ok;
    bad_kind["kind"] = "covering";
    CHECK_THROWS_AS(validate_certificate_json(bad_kind), schema_error);

    json no_vertices = ok;
    no_vertices.erase("vertices");
    CHECK_THROWS_AS(validate_certificate_json(no_vertices), schema_error);

    json residues_on_tuple = ok;
    residues_on_tuple["residues"] = {"0"};
    CHECK_THROWS_AS(validate_certificate_json(residues_on_tuple), schema_error);

    json bad_modulus = {
        {"kind", "noncoprime_run"},
        {"instance", {{"modulus", "12x"}}},
        {"run", {{"start", "2"}, {"length", 3}}},
    };
    CHECK_THROWS_AS(validate_certificate_json(bad_modulus), schema_error);

    json run_missing = {
        {"kind", "noncoprime_run"},
        {"instance", {{"modulus", "12"}}},
    };
    CHECK_THROWS_AS(validate_certificate_json(run_missing), schema_error);
}

TEST_CASE("verification through the JSON layer") {
    json j = {
        {"kind", "noncoprime_run"},
        {"instance", {{"primes", {2, 3}}}},
        {"run", {{"start", "2"}, {"length", 3}}},
    };
    CHECK(verify_certificate(certificate_from_json(j)));
    j["run"]["length"] = 4;
    CHECK_FALSE(verify_certificate(certificate_from_json(j)));
}

TEST_CASE("gap certification round trip") {
    LiftRecipe recipe;
    recipe.s_modulus = SquarefreeModulus::from_primes({2, 3});
    recipe.k = 1;
    recipe.r_primes = {11, 13};
    auto lift = lift_total_dominating(recipe);
    json j = gap_certification_to_json(lift);
    CHECK(is_gap_certification_json(j));
    CHECK_FALSE(is_gap_certification_json(certificate_to_json(lift.total_dominating)));
    auto back = gap_certification_from_json(j);
    CHECK(back.modulus.modulus_u64() == 858);
    CHECK(back.certified_gap == lift.certified_gap);
    CHECK(back.run_witness.start == lift.run_witness.start);
    CHECK(back.verified == lift.verified);
    // and it still certifies after the round trip
    auto again = certify_mj_membership(back.modulus, back.total_dominating, back.run_witness);
    CHECK(again.certified_gap == 0);
}

TEST_CASE("file io") {
    const std::string path = "test_cert_tmp.json";
    Certificate c;
    c.kind = CertificateKind::dominating;
    c.sizes = std::vector<int>{3, 3};
    c.vertices = {{0, 0}, {1, 1}, {2, 2}};
    write_json_file(path, certificate_to_json(c));
    auto loaded = load_json_file(path);
    CHECK(certificate_from_json(loaded).vertices.size() == 3);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), invalid_argument_error);
}
