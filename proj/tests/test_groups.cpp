#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "galois/errors.hpp"
#include "galois/perm_group.hpp"

using namespace galois;

namespace {

PermGroup make_s3() {
    std::vector<Permutation> els = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                    {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    return PermGroup::from_elements(3, els);
}

PermGroup make_v4() {
    std::vector<Permutation> els = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return PermGroup::from_elements(4, els);
}

// Exhaustive reference: every subset containing the identity that is
// closed under the Cayley table.
std::vector<std::vector<int>> brute_force_subgroups(const PermGroup& g) {
    const int n = g.order();
    std::vector<std::vector<int>> found;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << g.identity_index()))) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i);
        bool closed = true;
        for (int a : members)
            for (int b : members)
                if (!(mask & (1u << g.compose(a, b)))) { closed = false; break; }
        if (closed) found.push_back(members);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

}  // namespace

TEST_CASE("permutation primitives compose and invert") {
    Permutation p = {1, 2, 0};
    Permutation q = {1, 0, 2};
    CHECK(is_valid_perm(p));
    CHECK(!is_valid_perm({0, 0, 1}));
    CHECK(compose_perms(p, q) == Permutation{2, 1, 0});
    CHECK(compose_perms(q, p) == Permutation{0, 2, 1});
    CHECK(invert_perm(p) == Permutation{2, 0, 1});
    CHECK(compose_perms(p, invert_perm(p)) == Permutation{0, 1, 2});
}

TEST_CASE("group construction validates closure and finds the identity") {
    PermGroup s3 = make_s3();
    CHECK(s3.order() == 6);
    CHECK(s3.degree() == 3);
    CHECK(s3.element(s3.identity_index()) == Permutation{0, 1, 2});
    for (int i = 0; i < 6; ++i) {
        CHECK(s3.compose(i, s3.inverse(i)) == s3.identity_index());
        CHECK(s3.index_of(s3.element(i)) == i);
    }
    CHECK(s3.index_of({0, 1, 2, 3}) == -1);

    std::vector<Permutation> not_closed = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}};
    CHECK_THROWS_AS(PermGroup::from_elements(3, not_closed), std::invalid_argument);
}

TEST_CASE("all subgroups of S3: orders 1, 2, 2, 2, 3, 6") {
    PermGroup s3 = make_s3();
    auto subs = all_subgroups(s3);
    REQUIRE(subs.size() == 6);
    std::vector<int> orders;
    for (const auto& h : subs) orders.push_back(h.order());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("all subgroups of V4: five of them") {
    PermGroup v4 = make_v4();
    auto subs = all_subgroups(v4);
    REQUIRE(subs.size() == 5);
    std::vector<int> orders;
    for (const auto& h : subs) orders.push_back(h.order());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 4});
    for (const auto& h : subs) CHECK(is_normal_subgroup(v4, h));
}

TEST_CASE("subgroup search agrees with exhaustive subset enumeration") {
    for (const PermGroup& g : {make_s3(), make_v4()}) {
        auto fast = all_subgroups(g);
        auto slow = brute_force_subgroups(g);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].members == slow[i]);
    }
}

TEST_CASE("normality in S3: only the trivial, cyclic-3 and full subgroups") {
    PermGroup s3 = make_s3();
    auto subs = all_subgroups(s3);
    int normal_count = 0;
    for (const auto& h : subs)
        if (is_normal_subgroup(s3, h)) ++normal_count;
    CHECK(normal_count == 3);
    for (const auto& h : subs)
        if (h.order() == 2) CHECK(!is_normal_subgroup(s3, h));
}

TEST_CASE("closure_subgroup generates the expected cyclic subgroups") {
    PermGroup s3 = make_s3();
    int transposition = s3.index_of({1, 0, 2});
    int three_cycle = s3.index_of({1, 2, 0});
    REQUIRE(transposition >= 0);
    REQUIRE(three_cycle >= 0);
    CHECK(closure_subgroup(s3, {transposition}).order() == 2);
    CHECK(closure_subgroup(s3, {three_cycle}).order() == 3);
    CHECK(closure_subgroup(s3, {transposition, three_cycle}).order() == 6);
    CHECK(closure_subgroup(s3, {}).order() == 1);
}

TEST_CASE("cosets and quotient by the cyclic-3 subgroup of S3") {
    PermGroup s3 = make_s3();
    auto subs = all_subgroups(s3);
    const Subgroup* a3 = nullptr;
    for (const auto& h : subs)
        if (h.order() == 3) a3 = &h;
    REQUIRE(a3 != nullptr);

    auto cosets = left_cosets(s3, *a3);
    CHECK(cosets.index == 2);
    REQUIRE(cosets.cosets.size() == 2);
    for (const auto& c : cosets.cosets) CHECK(c.size() == 3);
    for (int i = 0; i < 6; ++i) {
        const auto& c = cosets.cosets[static_cast<size_t>(cosets.coset_of[static_cast<size_t>(i)])];
        CHECK(std::find(c.begin(), c.end(), i) != c.end());
    }

    auto quot = quotient_group(s3, *a3);
    CHECK(quot.group.order() == 2);
    for (int i = 0; i < 6; ++i)
        CHECK(quot.projection[static_cast<size_t>(i)] ==
              cosets.coset_of[static_cast<size_t>(i)]);
}

TEST_CASE("check_epimorphism recognizes the sign map S3 -> C2") {
    PermGroup s3 = make_s3();
    PermGroup c2 = PermGroup::from_elements(2, {{0, 1}, {1, 0}});

    auto parity = [](const Permutation& p) {
        int inv = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2;
    };
    std::vector<int> sign_map;
    for (int i = 0; i < 6; ++i) sign_map.push_back(parity(s3.element(i)));

    auto res = check_epimorphism(s3, c2, sign_map);
    CHECK(res.is_hom);
    CHECK(res.surjective);
    CHECK(res.kernel.size() == 3);
    for (int k : res.kernel) CHECK(parity(s3.element(k)) == 0);

    // A map that is not a homomorphism is flagged.
    std::vector<int> bad = sign_map;
    bad[static_cast<size_t>(s3.identity_index())] = 1;
    CHECK(!check_epimorphism(s3, c2, bad).is_hom);
}

TEST_CASE("the subgroup order cap raises a capacity error") {
    PermGroup s3 = make_s3();
    CHECK_THROWS_AS(all_subgroups(s3, 4), CapacityError);
}
