#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "galois/correspondence.hpp"
#include "galois/homs.hpp"
#include "galois/number_field.hpp"

using namespace galois;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QPoly(std::move(cs));
}

const std::vector<std::string> kVerdictNames = {
    "order",           "correspondence_bijective",    "inclusion_reversing",
    "degree_index",    "lattice_identities",          "normal_subgroups",
    "normal_restriction_bijective", "proof_polynomials"};

}  // namespace

TEST_CASE("full verification of the quadratic splitting field") {
    SplitField sf = splitting_field(qp({-2, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    CHECK(rep.all_pass);
    REQUIRE(rep.verdicts.size() == kVerdictNames.size());
    for (size_t i = 0; i < rep.verdicts.size(); ++i) {
        CHECK(rep.verdicts[i].name == kVerdictNames[i]);
        CHECK(rep.verdicts[i].pass);
    }
    CHECK(rep.group.order() == 2);
    REQUIRE(rep.lattice.size() == 2);
    CHECK(rep.lattice[0].subgroup.order() == 1);
    CHECK(rep.lattice[0].fixed.degree() == 2);
    CHECK(rep.lattice[1].subgroup.order() == 2);
    CHECK(rep.lattice[1].fixed.degree() == 1);
    CHECK(rep.lattice[1].fixed.primitive.is_rational());
    for (const auto& d : rep.lattice) {
        CHECK(d.subgroup_normal);
        CHECK(d.field_normal);
    }
}

TEST_CASE("full verification of the x^3 - 2 splitting field") {
    SplitField sf = splitting_field(qp({-2, 0, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    CHECK(rep.all_pass);
    CHECK(rep.group.order() == 6);
    REQUIRE(rep.lattice.size() == 6);

    // Exactly one proper intermediate field is normal: the quadratic one.
    int proper_normal = 0;
    for (const auto& d : rep.lattice) {
        int deg = d.fixed.degree();
        CHECK(deg * d.subgroup.order() == 6);
        if (deg > 1 && deg < 6 && d.field_normal) {
            ++proper_normal;
            CHECK(deg == 2);
            CHECK(d.subgroup.order() == 3);
        }
        CHECK(d.subgroup_normal == d.field_normal);
    }
    CHECK(proper_normal == 1);
}

TEST_CASE("fixed field of the full group is Q, of the trivial group the whole field") {
    SplitField sf = splitting_field(qp({-2, 0, 0, 1}));
    PrecisionPolicy policy;
    auto autos = enumerate_endomorphisms(sf.tower, policy, sf.roots);
    REQUIRE(autos.size() == 6);

    IntermediateField bottom = fixed_field(autos, sf.field());
    CHECK(bottom.degree() == 1);
    CHECK(bottom.primitive.is_rational());
    CHECK(bottom.min_poly.degree() == 1);

    std::vector<FieldHom> only_id = {identity_hom(sf.field())};
    IntermediateField top = fixed_field(only_id, sf.field());
    CHECK(top.degree() == 6);
    CHECK(top.min_poly.degree() == 6);
    CHECK(top.contains_element(sf.field()->generator()));

    CHECK(top.contains_subfield(bottom));
    CHECK(!bottom.contains_subfield(top));
    CHECK(stabilizer(bottom, autos).size() == 6);
    CHECK(stabilizer(top, autos).size() == 1);
}

TEST_CASE("compositum and intersection of the quadratic subfields of Q(sqrt2, sqrt3)") {
    SplitField sf = splitting_field(qp({1, 0, -10, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    REQUIRE(rep.all_pass);
    REQUIRE(rep.lattice.size() == 5);

    std::vector<const IntermediateField*> quads;
    const IntermediateField* whole = nullptr;
    const IntermediateField* ground = nullptr;
    for (const auto& d : rep.lattice) {
        if (d.fixed.degree() == 2) quads.push_back(&d.fixed);
        if (d.fixed.degree() == 4) whole = &d.fixed;
        if (d.fixed.degree() == 1) ground = &d.fixed;
    }
    REQUIRE(quads.size() == 3);
    REQUIRE(whole != nullptr);
    REQUIRE(ground != nullptr);

    IntermediateField comp = compositum(*quads[0], *quads[1]);
    CHECK(comp == *whole);
    IntermediateField meet = intersect_fields(*quads[0], *quads[1]);
    CHECK(meet == *ground);
    CHECK(compositum(*quads[0], *ground) == *quads[0]);
    CHECK(intersect_fields(*quads[0], *whole) == *quads[0]);
}

TEST_CASE("restricting automorphisms to a stable and an unstable subfield") {
    SplitField sf = splitting_field(qp({-2, 0, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    REQUIRE(rep.all_pass);

    const SubgroupData* cubic = nullptr;    // a non-normal degree-3 field
    const SubgroupData* quadratic = nullptr;
    for (const auto& d : rep.lattice) {
        if (d.fixed.degree() == 3 && cubic == nullptr) cubic = &d;
        if (d.fixed.degree() == 2) quadratic = &d;
    }
    REQUIRE(cubic != nullptr);
    REQUIRE(quadratic != nullptr);

    // The quadratic field is normal: every automorphism stabilizes it.
    for (const auto& h : rep.autos) CHECK(restrict_hom(h, quadratic->fixed).stabilizes);

    // The cubic field is not: some automorphism moves it off itself.
    int moved = 0;
    for (const auto& h : rep.autos)
        if (!restrict_hom(h, cubic->fixed).stabilizes) ++moved;
    CHECK(moved == 4);

    // Members of the stabilizing subgroup restrict to the identity map on
    // the cubic field (it has no other automorphisms).
    for (int m : cubic->subgroup.members) {
        Restriction r = restrict_hom(rep.autos[static_cast<size_t>(m)], cubic->fixed);
        CHECK(r.stabilizes);
        CHECK(r.primitive_image == cubic->fixed.primitive);
    }
}

TEST_CASE("proof polynomials vanish at their sample and live over the fixed field") {
    SplitField sf = splitting_field(qp({-2, 0, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    REQUIRE(rep.all_pass);
    for (const auto& d : rep.lattice) {
        std::vector<FieldHom> hs;
        for (int m : d.subgroup.members) hs.push_back(rep.autos[static_cast<size_t>(m)]);
        NfElem theta = sf.field()->generator();
        for (const NfElem& a : {theta, theta * theta, theta + theta * theta}) {
            NfPoly pp = proof_polynomial(hs, a, d.fixed);
            CHECK(pp.degree() == d.subgroup.order());
            CHECK(pp.is_monic());
            CHECK(pp.eval(a).is_zero());
        }
    }
}

TEST_CASE("the lattice respects inclusion reversal pairwise") {
    SplitField sf = splitting_field(qp({1, 0, -10, 0, 1}));
    auto rep = verify_fundamental_theorem(sf);
    REQUIRE(rep.all_pass);
    for (const auto& a : rep.lattice)
        for (const auto& b : rep.lattice) {
            bool sub_le = b.subgroup.contains_all(a.subgroup);
            bool field_ge = a.fixed.contains_subfield(b.fixed);
            CHECK(sub_le == field_ge);
        }
}
