#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "galois/matrix.hpp"
#include "galois/poly.hpp"
#include "galois/rational.hpp"

using namespace galois;

namespace {

QPoly qp(std::initializer_list<long> coeffs) {
    std::vector<Rational> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QPoly(std::move(cs));
}

QPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-9, 9);
    int d = deg(rng);
    std::vector<Rational> cs;
    for (int i = 0; i < d; ++i) cs.emplace_back(coef(rng));
    cs.emplace_back(1 + std::abs(coef(rng)));
    return QPoly(std::move(cs));
}

}  // namespace

TEST_CASE("polynomial division leaves the expected quotient and remainder") {
    auto [q1, r1] = poly_divrem(qp({-1, 0, 1}), qp({-1, 1}));
    CHECK(q1 == qp({1, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divrem(qp({-2, 0, 0, 1}), qp({1, 0, 1}));
    CHECK(q2 == qp({0, 1}));
    CHECK(r2 == qp({-2, -1}));

    CHECK_THROWS_AS(poly_divrem(qp({1}), QPoly()), std::invalid_argument);
}

TEST_CASE("division identity holds for a deterministic sweep of polynomials") {
    std::mt19937 rng(7u);
    for (int trial = 0; trial < 300; ++trial) {
        QPoly a = random_poly(rng, 12);
        QPoly b = random_poly(rng, 6);
        auto [q, r] = poly_divrem(a, b);
        CHECK(b * q + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd of x^2-1 and x^3-1 is x-1") {
    CHECK(poly_gcd(qp({-1, 0, 1}), qp({-1, 0, 0, 1})) == qp({-1, 1}));
    CHECK(poly_gcd(qp({-2, 0, 1}), qp({1, 0, 1})) == qp({1}));
    CHECK_THROWS_AS(poly_gcd(QPoly(), QPoly()), std::invalid_argument);
}

TEST_CASE("extended gcd returns a Bezout identity") {
    std::mt19937 rng(11u);
    for (int trial = 0; trial < 100; ++trial) {
        QPoly a = random_poly(rng, 8);
        QPoly b = random_poly(rng, 8);
        auto [g, s, t] = poly_xgcd(a, b);
        CHECK(s * a + t * b == g);
        CHECK(g.is_monic());
        CHECK(divides_exactly(g, a));
        CHECK(divides_exactly(g, b));
    }
}

TEST_CASE("squarefree part drops repeated factors") {
    QPoly f = qp({-1, 1}) * qp({-1, 1}) * qp({2, 1});
    CHECK(squarefree_part(f) == qp({-1, 1}) * qp({2, 1}));
    CHECK(squarefree_part(qp({-2, 0, 1})) == qp({-2, 0, 1}));
}

TEST_CASE("derivative and evaluation agree with hand values") {
    QPoly f = qp({5, -1, 0, 2});
    CHECK(f.derivative() == qp({-1, 0, 6}));
    CHECK(f.eval(Rational(2)) == Rational(19));
    CHECK(f.eval(Rational(0)) == Rational(5));
    CHECK(QPoly::linear_root(Rational(3)) == qp({-3, 1}));
}

TEST_CASE("kernel of a rank-one 2x2 matrix") {
    QMatrix m = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                   Rational(0));
    auto kb = kernel_basis(m, Rational(0));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == Rational(-1));
    CHECK(kb[0][1] == Rational(1));
    CHECK(m.rank() == 1);
}

TEST_CASE("rank plus kernel dimension equals the column count") {
    std::mt19937 rng(13u);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        QMatrix m(r, c, Rational(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = Rational(coef(rng));
        auto kb = kernel_basis(m, Rational(0));
        CHECK(m.rank() + static_cast<int>(kb.size()) == c);
        for (const auto& v : kb) {
            auto img = m.apply(v);
            for (const auto& x : img) CHECK(sgn(x) == 0);
        }
    }
}

TEST_CASE("solve_linear finds the exact solution or reports none") {
    QMatrix m = QMatrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}},
                                   Rational(0));
    auto x = solve_linear(m, {Rational(5), Rational(10)}, Rational(0));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));

    QMatrix sing = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                      Rational(0));
    CHECK(!solve_linear(sing, {Rational(1), Rational(3)}, Rational(0)).has_value());
}

TEST_CASE("matrix inverse and determinant") {
    QMatrix m = QMatrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}},
                                   Rational(0));
    CHECK(m.determinant() == Rational(1));
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv * m == QMatrix::identity(2, Rational(0)));

    QMatrix sing = QMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                                      Rational(0));
    CHECK(sing.determinant() == Rational(0));
    CHECK(!sing.inverse().has_value());
}

TEST_CASE("rref is idempotent and deterministic") {
    std::mt19937 rng(17u);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        QMatrix m(4, 5, Rational(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = Rational(coef(rng));
        QMatrix a = m, b = m;
        a.rref();
        QMatrix a2 = a;
        a2.rref();
        CHECK(a == a2);
        b.rref();
        CHECK(a == b);
    }
}

TEST_CASE("rational helpers serialize and parse canonical forms") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    Rational reducible(-6, 3);
    reducible.canonicalize();
    CHECK(to_string(reducible) == "-2");
    Rational whole(8, 2);
    whole.canonicalize();
    CHECK(is_integer(whole));
    CHECK(!is_integer(Rational(1, 3)));
    auto r = parse_rational("22/7");
    REQUIRE(r.has_value());
    CHECK(*r == Rational(22, 7));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
}
