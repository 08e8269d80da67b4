#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "galois/errors.hpp"
#include "galois/finite_field.hpp"

using namespace galois;

TEST_CASE("prime and prime power recognition") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));  // 7 * 13

    int p = 0, n = 0;
    CHECK(is_prime_power(8, p, n));
    CHECK(p == 2);
    CHECK(n == 3);
    CHECK(is_prime_power(49, p, n));
    CHECK(p == 7);
    CHECK(n == 2);
    CHECK(is_prime_power(5, p, n));
    CHECK(n == 1);
    CHECK(!is_prime_power(1, p, n));
    CHECK(!is_prime_power(12, p, n));
}

TEST_CASE("field construction picks the first irreducible modulus in code order") {
    Fq f4 = build_fq(2, 2);
    CHECK(f4.q == 4);
    CHECK(f4.modulus == std::vector<int>{1, 1});  // x^2 + x + 1

    Fq f8 = build_fq(2, 3);
    CHECK(f8.modulus == std::vector<int>{1, 1, 0});  // x^3 + x + 1

    Fq f9 = build_fq(3, 2);
    CHECK(f9.modulus == std::vector<int>{1, 0});  // x^2 + 1

    Fq f64 = build_fq(2, 6);
    CHECK(f64.modulus == std::vector<int>{1, 1, 0, 0, 0, 0});  // x^6 + x + 1

    CHECK_THROWS_AS(build_fq(2, 13), CapacityError);  // 8192 past the cap
}

TEST_CASE("arithmetic in F4 matches the hand table") {
    Fq f = build_fq(2, 2);
    // codes: 0, 1, 2 = x, 3 = x + 1
    CHECK(fq_add(f, 2, 3) == 1);
    CHECK(fq_add(f, 2, 2) == 0);
    CHECK(fq_mul(f, 2, 2) == 3);  // x^2 = x + 1
    CHECK(fq_mul(f, 2, 3) == 1);  // x(x+1) = 1
    CHECK(fq_inverse(f, 2) == 3);
    CHECK(fq_inverse(f, 3) == 2);
    CHECK(fq_pow(f, 2, 3) == 1);
    CHECK(fq_sub(f, 1, 3) == 2);
}

TEST_CASE("the certified generator has full multiplicative order") {
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 6}, {7, 2}}) {
        Fq f = build_fq(p, n);
        int seen = f.generator;
        int count = 1;
        while (seen != 1) {
            seen = fq_mul(f, seen, f.generator);
            ++count;
        }
        CHECK(count == f.q - 1);
    }
    CHECK(build_fq(3, 2).generator == 4);  // 1 + x has order 8 in F9
}

TEST_CASE("inverses and the power map behave over several fields") {
    for (auto [p, n] : {std::pair{2, 4}, {3, 3}, {5, 2}}) {
        Fq f = build_fq(p, n);
        for (int a = 1; a < f.q; ++a) {
            int inv = fq_inverse(f, a);
            CHECK(fq_mul(f, a, inv) == 1);
            CHECK(fq_pow(f, a, f.q - 1) == 1);
        }
    }
}

TEST_CASE("frobenius iterates form n distinct automorphisms") {
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 6}}) {
        Fq f = build_fq(p, n);
        auto frob = frobenius_group(f);
        REQUIRE(static_cast<int>(frob.size()) == n);
        // k = 0 is the identity map.
        for (int a = 0; a < f.q; ++a) CHECK(frob[0][static_cast<size_t>(a)] == a);
        // Each map is x -> x^(p^k).
        for (int k = 0; k < n; ++k) {
            long e = 1;
            for (int i = 0; i < k; ++i) e *= p;
            for (int a = 0; a < f.q; ++a)
                CHECK(frob[static_cast<size_t>(k)][static_cast<size_t>(a)] == fq_pow(f, a, e));
        }
    }
}

TEST_CASE("fixed subfields have size p^gcd(d, n)") {
    Fq f = build_fq(2, 6);
    CHECK(fixed_subfield(f, 1).members.size() == 2);
    CHECK(fixed_subfield(f, 2).members.size() == 4);
    CHECK(fixed_subfield(f, 3).members.size() == 8);
    CHECK(fixed_subfield(f, 6).members.size() == 64);
    CHECK(fixed_subfield(f, 4).members.size() == 4);  // gcd(4, 6) = 2
    CHECK(fixed_subfield(f, 1).d == 1);
}

TEST_CASE("the correspondence for Frobenius passes with one subgroup per divisor") {
    auto r4 = verify_correspondence_fq(build_fq(2, 2));
    CHECK(r4.pass);
    CHECK(r4.subgroup_count == 2);

    auto r16 = verify_correspondence_fq(build_fq(2, 4));
    CHECK(r16.pass);
    CHECK(r16.subgroup_count == 3);

    auto r64 = verify_correspondence_fq(build_fq(2, 6));
    CHECK(r64.pass);
    CHECK(r64.subgroup_count == 4);

    auto r27 = verify_correspondence_fq(build_fq(3, 3));
    CHECK(r27.pass);
    CHECK(r27.subgroup_count == 2);

    auto r5 = verify_correspondence_fq(build_fq(5, 1));
    CHECK(r5.pass);
    CHECK(r5.subgroup_count == 1);
}

TEST_CASE("proper subfields never cover the whole field") {
    int us = 0;
    CHECK(union_check_subfields(build_fq(2, 2), &us));
    CHECK(us == 2);  // F2 is the only proper subfield

    CHECK(union_check_subfields(build_fq(2, 6), &us));
    CHECK(us == 10);  // F2, F4, F8 overlap in F2

    CHECK(union_check_subfields(build_fq(3, 2), &us));
    CHECK(us == 3);

    CHECK(union_check_subfields(build_fq(5, 1), &us));
    CHECK(us == 0);  // a prime field has no proper subfield at all
}

TEST_CASE("minimum subspace covers of the plane need q + 1 lines") {
    CHECK(union_check_subspaces(2, 2) == 3);
    CHECK(union_check_subspaces(3, 2) == 4);
    CHECK(union_check_subspaces(4, 2) == 5);
    CHECK(union_check_subspaces(5, 2) == 6);
    CHECK(!union_check_subspaces(2, 1).has_value());
    CHECK(!union_check_subspaces(7, 1).has_value());
}

TEST_CASE("subspace covers in dimension 3 still need q + 1 subspaces") {
    CHECK(union_check_subspaces(2, 3) == 3);
}
