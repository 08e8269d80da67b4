#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "galois/errors.hpp"
#include "galois/homs.hpp"
#include "galois/number_field.hpp"

using namespace galois;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QPoly(std::move(cs));
}

}  // namespace

TEST_CASE("a hom is pinned by its generator image and checked on construction") {
    FieldPtr k = NumberField::create(qp({-2, 0, 1}));
    FieldHom conj(k, k, -k->generator());
    CHECK(conj.apply(k->generator()) == -k->generator());
    CHECK(conj.apply(k->one() + k->generator()) == k->one() - k->generator());
    CHECK(conj.apply(k->from_rational(Rational(7, 3))) == k->from_rational(Rational(7, 3)));
    CHECK(!conj.is_identity());
    CHECK(identity_hom(k).is_identity());
    CHECK(compose(conj, conj).is_identity());
    CHECK_THROWS_AS(FieldHom(k, k, k->one()), std::invalid_argument);
}

TEST_CASE("Q(sqrt2) has two endomorphisms, Q(cbrt2) only one") {
    FieldPtr sqrt2 = NumberField::create(qp({-2, 0, 1}));
    auto homs2 = enumerate_endomorphisms(sqrt2);
    REQUIRE(homs2.size() == 2);
    CHECK(homs2[0].is_identity());
    CHECK(homs2[1].gen_image() == -sqrt2->generator());

    FieldPtr cbrt2 = NumberField::create(qp({-2, 0, 0, 1}));
    auto homs3 = enumerate_endomorphisms(cbrt2);
    REQUIRE(homs3.size() == 1);
    CHECK(homs3[0].is_identity());
}

TEST_CASE("the splitting field of x^3 - 2 carries six automorphisms") {
    SplitField sf = splitting_field(qp({-2, 0, 0, 1}));
    PrecisionPolicy policy;
    auto by_search = enumerate_endomorphisms(sf.tower, policy);
    CHECK(by_search.size() == 6);
    auto by_pool = enumerate_endomorphisms(sf.tower, policy, sf.roots);
    REQUIRE(by_pool.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(by_search[i] == by_pool[i]);

    // Every automorphism permutes the recorded roots.
    for (const auto& h : by_pool)
        for (const auto& r : sf.roots) {
            NfElem img = h.apply(r);
            CHECK(std::find(sf.roots.begin(), sf.roots.end(), img) != sf.roots.end());
        }
}

TEST_CASE("certify_automorphisms passes a genuine group and flags a broken set") {
    SplitField sf = splitting_field(qp({-2, 0, 1}));
    PrecisionPolicy policy;
    auto autos = enumerate_endomorphisms(sf.tower, policy, sf.roots);
    REQUIRE(autos.size() == 2);
    auto again = certify_automorphisms(autos);
    CHECK(again.size() == 2);
    CHECK(again[0].is_identity());

    // A single non-identity element is not closed under composition.
    std::vector<FieldHom> broken = {autos[1]};
    CHECK_THROWS_AS(certify_automorphisms(broken), InvariantViolation);

    // Duplicates are rejected.
    std::vector<FieldHom> dup = {autos[0], autos[0]};
    CHECK_THROWS_AS(certify_automorphisms(dup), InvariantViolation);
}

TEST_CASE("normality by root count and by endomorphism count agree") {
    FieldPtr sqrt2 = NumberField::create(qp({-2, 0, 1}));
    CHECK(is_normal_field(sqrt2));
    FieldPtr cbrt2 = NumberField::create(qp({-2, 0, 0, 1}));
    CHECK(!is_normal_field(cbrt2));

    SplitField s3 = splitting_field(qp({-2, 0, 0, 1}));
    CHECK(is_normal_field(s3.tower));
    CHECK(is_normal_field(s3.field()));

    FieldTower t = FieldTower::rationals();
    PrecisionPolicy policy;
    t = t.adjoined(lift_poly(qp({-2, 0, 0, 1}), t.field()), "c", policy);
    CHECK(!is_normal_field(t));
}

TEST_CASE("separability check accepts squarefree and rejects repeated factors") {
    CHECK(separability_check(qp({-2, 0, 1})));
    CHECK(separability_check(qp({3, 1})));
    CHECK(!separability_check(qp({-1, 1}) * qp({-1, 1})));
    CHECK_THROWS_AS(separability_check(QPoly()), std::invalid_argument);
}

TEST_CASE("an element is fixed by every automorphism exactly when rational") {
    SplitField sf = splitting_field(qp({-2, 0, 1}));
    PrecisionPolicy policy;
    auto autos = enumerate_endomorphisms(sf.tower, policy, sf.roots);
    CHECK(verify_ground_element(autos, sf.field()->from_rational(Rational(5, 2))));
    CHECK(!verify_ground_element(autos, sf.field()->generator()));
    NfElem squared = sf.field()->generator() * sf.field()->generator();
    CHECK(verify_ground_element(autos, squared));
}
