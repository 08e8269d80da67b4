#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "galois/correspondence.hpp"
#include "galois/homs.hpp"
#include "galois/number_field.hpp"
#include "galois/perm_group.hpp"
#include "galois/poly.hpp"

using namespace galois;

namespace {

const char* const kStandardPolys[] = {
    "x^2-2",
    "x^4-10*x^2+1",
    "x^3-2",
    "x^4+1",
    "x^6+x^5+x^4+x^3+x^2+x+1",
};

struct CliRun {
    int exit_code = -1;
    std::string out;
    double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + GALOIS_CLI_PATH + "\" " + args + " 2>/dev/null";
    auto t0 = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[8192];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CliRun r;
    r.out = std::move(out);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Reports for the standard polynomials are shared across criteria so each
// is built exactly once per process.
const CorrespondenceReport& report_for(const std::string& poly_text) {
    static std::map<std::string, CorrespondenceReport> cache;
    auto it = cache.find(poly_text);
    if (it == cache.end()) {
        SplitField sf = splitting_field(parse_poly(poly_text));
        it = cache.emplace(poly_text, verify_fundamental_theorem(sf)).first;
    }
    return it->second;
}

int element_order(const PermGroup& g, int i) {
    int ord = 1;
    int cur = i;
    while (cur != g.identity_index()) {
        cur = g.compose(cur, i);
        ++ord;
    }
    return ord;
}

std::vector<std::vector<int>> brute_force_subgroups(const PermGroup& g) {
    const int n = g.order();
    REQUIRE(n <= 20);
    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << g.identity_index()))) continue;
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i);
        bool closed = true;
        for (int a : members) {
            if (!(mask & (1u << g.inverse(a)))) closed = false;
            for (int b : members)
                if (!(mask & (1u << g.compose(a, b)))) closed = false;
        }
        if (closed) found.push_back(std::move(members));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

template <typename Body>
void run_criterion(int num, const char* label, Body body) {
    bool ok = false;
    std::string err;
    try {
        body();
        ok = true;
    } catch (const std::exception& e) {
        err = e.what();
    } catch (...) {
    }
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, label);
    std::fflush(stdout);
    if (!err.empty()) MESSAGE("unexpected exception: " << err);
    CHECK(ok);
}

}  // namespace

TEST_CASE("criterion 1") {
    run_criterion(1, "x^2 - 2 fully analyzed with every check passing in under a second", [] {
        CliRun r = run_cli("analyze 'x^2-2' --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 1.0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["field"]["degree"] == 2);
        REQUIRE(j["group"]["order"] == 2);
        REQUIRE(!j["verdicts"].empty());
        for (const auto& v : j["verdicts"]) REQUIRE(v["pass"] == true);
    });
}

TEST_CASE("criterion 2") {
    run_criterion(2, "x^4 - 10x^2 + 1: Klein four-group, five subgroups, quadratic subfields "
                     "Q(sqrt 2), Q(sqrt 3), Q(sqrt 6) found by exact root containment", [] {
        CliRun r = run_cli("analyze 'x^4-10*x^2+1' --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 5.0);
        auto j = nlohmann::json::parse(r.out);
        for (const auto& v : j["verdicts"]) REQUIRE(v["pass"] == true);

        const CorrespondenceReport& rep = report_for("x^4-10*x^2+1");
        REQUIRE(rep.group.order() == 4);
        for (int i = 0; i < 4; ++i)
            if (i != rep.group.identity_index()) REQUIRE(element_order(rep.group, i) == 2);
        REQUIRE(rep.lattice.size() == 5);

        const FieldPtr& L = rep.split.field();
        std::vector<const IntermediateField*> quads;
        for (const SubgroupData& d : rep.lattice)
            if (d.fixed.degree() == 2) quads.push_back(&d.fixed);
        REQUIRE(quads.size() == 3);

        // Each of x^2-2, x^2-3, x^2-6 must have its roots inside exactly
        // one of the three quadratic subfields, and the matching must be
        // a bijection. This identifies the subfields without relying on
        // which primitive element the lattice construction happened to
        // pick.
        std::vector<int> matched;
        for (long d : {2L, 3L, 6L}) {
            QPoly target = parse_poly("x^2-" + std::to_string(d));
            std::vector<NfElem> roots = roots_in_field(target, L);
            REQUIRE(roots.size() == 2);
            int hits = 0;
            int where = -1;
            for (int qi = 0; qi < 3; ++qi) {
                bool contains_all = true;
                for (const NfElem& root : roots)
                    contains_all = contains_all && quads[static_cast<size_t>(qi)]->contains_element(root);
                if (contains_all) {
                    ++hits;
                    where = qi;
                }
            }
            REQUIRE(hits == 1);
            matched.push_back(where);
        }
        std::sort(matched.begin(), matched.end());
        REQUIRE(matched == std::vector<int>({0, 1, 2}));

        bool pair_count_seen = false;
        for (const Verdict& v : rep.verdicts)
            if (v.name == "inclusion_reversing")
                pair_count_seen = v.detail.find("25 ordered pairs") != std::string::npos;
        REQUIRE(pair_count_seen);
    });
}

TEST_CASE("criterion 3") {
    run_criterion(3, "x^3 - 2: degree 6, nonabelian group of order 6, six subgroups, one proper "
                     "normal subfield with index-2 quotient", [] {
        CliRun r = run_cli("analyze 'x^3-2' --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 30.0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["field"]["degree"] == 6);
        for (const auto& v : j["verdicts"]) REQUIRE(v["pass"] == true);

        const CorrespondenceReport& rep = report_for("x^3-2");
        REQUIRE(rep.split.degree() == 6);
        REQUIRE(rep.group.order() == 6);
        bool abelian = true;
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k)
                if (rep.group.compose(i, k) != rep.group.compose(k, i)) abelian = false;
        REQUIRE(!abelian);
        REQUIRE(rep.lattice.size() == 6);

        int proper_normal = 0;
        const SubgroupData* entry = nullptr;
        for (const SubgroupData& d : rep.lattice)
            if (d.fixed.degree() > 1 && d.fixed.degree() < 6 && d.field_normal) {
                ++proper_normal;
                entry = &d;
            }
        REQUIRE(proper_normal == 1);
        REQUIRE(entry->subgroup.order() == 3);
        REQUIRE(entry->subgroup_normal);
        QuotientGroup q = quotient_group(rep.group, entry->subgroup);
        REQUIRE(q.group.order() == 2);
    });
}

TEST_CASE("criterion 4") {
    run_criterion(4, "x^4 + 1: a single adjunction already splits it, and all five subfields "
                     "are normal", [] {
        CliRun r = run_cli("analyze 'x^4+1' --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 5.0);

        const CorrespondenceReport& rep = report_for("x^4+1");
        REQUIRE(rep.split.tower.levels() == 1);
        REQUIRE(rep.split.degree() == 4);
        REQUIRE(rep.split.roots.size() == 4);
        for (const NfElem& root : rep.split.roots) REQUIRE(root.field() == rep.split.field());
        REQUIRE(rep.lattice.size() == 5);
        for (const SubgroupData& d : rep.lattice) {
            REQUIRE(d.subgroup_normal);
            REQUIRE(d.field_normal);
        }
    });
}

TEST_CASE("criterion 5") {
    run_criterion(5, "seventh cyclotomic polynomial: cyclic group of order 6 with exactly four "
                     "subgroups, all normal", [] {
        CliRun r = run_cli("analyze 'x^6+x^5+x^4+x^3+x^2+x+1' --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 30.0);

        const CorrespondenceReport& rep = report_for("x^6+x^5+x^4+x^3+x^2+x+1");
        REQUIRE(rep.group.order() == 6);
        bool has_order_6 = false;
        for (int i = 0; i < 6; ++i)
            if (element_order(rep.group, i) == 6) has_order_6 = true;
        REQUIRE(has_order_6);
        REQUIRE(rep.lattice.size() == 4);
        for (const SubgroupData& d : rep.lattice) {
            REQUIRE(d.subgroup_normal);
            REQUIRE(d.field_normal);
        }
    });
}

TEST_CASE("criterion 6") {
    run_criterion(6, "20 random adjunction towers: embedding count never exceeds the degree, "
                     "with equality exactly for normal fields", [] {
        std::mt19937 rng(42);
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::uniform_int_distribution<int> deg(2, 3);
        for (int trial = 0; trial < 20; ++trial) {
            FieldTower tower = FieldTower::rationals();
            for (int adjunct = 0; adjunct < 2; ++adjunct) {
                while (true) {
                    int d = deg(rng);
                    std::vector<Rational> cs;
                    for (int k = 0; k < d; ++k) cs.emplace_back(coeff(rng));
                    cs.emplace_back(1);
                    QPoly g(std::move(cs));
                    try {
                        tower = tower.adjoined(lift_poly(g, tower.field()),
                                               "r" + std::to_string(adjunct));
                        break;
                    } catch (const std::invalid_argument&) {
                        // Not irreducible over the current field; redraw.
                    }
                }
            }
            const int n = tower.absolute_degree();
            REQUIRE(n <= 9);
            std::vector<FieldHom> homs = enumerate_endomorphisms(tower);
            REQUIRE(static_cast<int>(homs.size()) <= n);
            // Independent normality check: counts roots of the modulus in
            // the field rather than consulting the embedding list.
            bool normal = is_normal_field(tower.field());
            REQUIRE((static_cast<int>(homs.size()) == n) == normal);
        }
    });
}

TEST_CASE("criterion 7") {
    run_criterion(7, "products of (T - sigma(a)) over every subgroup of the five standard "
                     "examples are monic of degree |H|, vanish at a, and have coefficients in "
                     "the fixed field", [] {
        int samples = 0;
        for (const char* poly : kStandardPolys) {
            const CorrespondenceReport& rep = report_for(poly);
            NfElem g = rep.split.field()->generator();
            const NfElem elems[] = {g, g * g, g + g * g};
            for (const SubgroupData& d : rep.lattice) {
                std::vector<FieldHom> sub;
                for (int m : d.subgroup.members) sub.push_back(rep.autos[static_cast<size_t>(m)]);
                for (const NfElem& a : elems) {
                    NfPoly p = proof_polynomial(sub, a, d.fixed);
                    REQUIRE(p.degree() == d.subgroup.order());
                    REQUIRE(p.is_monic());
                    REQUIRE(p.eval(a).is_zero());
                    for (size_t ci = 0; ci <= static_cast<size_t>(p.degree()); ++ci)
                        REQUIRE(d.fixed.contains_element(p[ci]));
                    ++samples;
                }
            }
        }
        REQUIRE(samples == 66);
    });
}

TEST_CASE("criterion 8") {
    run_criterion(8, "finite-field sweep to 1024 with subspace covers to q = 5 passes in under "
                     "a minute", [] {
        CliRun r = run_cli("verify-lemmas --pmax 1024 --qmax 5 --format json");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.seconds < 60.0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["all_pass"] == true);
        REQUIRE(j["pmax"] == 1024);
        REQUIRE(j["qmax"] == 5);
        REQUIRE(j["fields"].size() == 198);
        REQUIRE(j["subspaces"].size() == 4);
    });
}

TEST_CASE("criterion 9") {
    run_criterion(9, "repeated analysis of the five standard examples is byte-identical", [] {
        for (const char* poly : kStandardPolys) {
            std::string args = std::string("analyze '") + poly + "' --format json";
            CliRun a = run_cli(args);
            CliRun b = run_cli(args);
            REQUIRE(a.exit_code == 0);
            REQUIRE(b.exit_code == 0);
            REQUIRE(!a.out.empty());
            REQUIRE(a.out == b.out);
        }
    });
}

TEST_CASE("criterion 10") {
    run_criterion(10, "subgroup enumeration agrees with exhaustive subset search for every "
                      "group arising from the five standard examples", [] {
        for (const char* poly : kStandardPolys) {
            const CorrespondenceReport& rep = report_for(poly);
            REQUIRE(rep.group.order() <= 12);
            std::vector<std::vector<int>> brute = brute_force_subgroups(rep.group);
            std::vector<Subgroup> fast = all_subgroups(rep.group);
            REQUIRE(fast.size() == brute.size());
            for (size_t i = 0; i < fast.size(); ++i) REQUIRE(fast[i].members == brute[i]);
        }
    });
}
