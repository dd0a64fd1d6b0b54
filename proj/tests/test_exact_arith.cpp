#include "chambercoh/cyclotomic.hpp"
#include "chambercoh/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace chambercoh;

namespace {

// Independent oracle: prod_{d | m} Phi_d == x^m - 1.
std::vector<Int> poly_mul_z(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> p(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    return p;
}

Cyclotomic random_cyclo(std::mt19937_64& rng, unsigned m) {
    Cyclotomic zp = Cyclotomic::zeta(m);
    Cyclotomic acc = Cyclotomic::from_rational(m, Rational(0));
    Cyclotomic power = Cyclotomic::from_rational(m, Rational(1));
    unsigned phi = euler_phi(m);
    for (unsigned i = 0; i < phi; ++i) {
        long num = long(rng() % 9) - 4;
        long den = 1 + long(rng() % 3);
        acc += power * Rational(Int(num), Int(den));
        power *= zp;
    }
    return acc;
}

LaurentPoly random_laurent(std::mt19937_64& rng, size_t nvars) {
    LaurentPoly p(nvars);
    int terms = 1 + int(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nvars);
        for (auto& x : e) x = int(rng() % 5) - 2;
        long c = long(rng() % 7) - 3;
        p += LaurentPoly::monomial(LaurentMonomial(e), Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(Int(-6), Int(8)) == Rational(Int(-3), Int(4)));
    CHECK(Rational(Int(-6), Int(8)).den() == 4);
    CHECK(Rational::parse("3/6") == Rational(Int(1), Int(2)));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a"));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(Int(1), Int(-2)) == -Rational(Int(1), Int(2)));
}

TEST_CASE("cyclotomic polynomials match the division route") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});  // x - 1
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});  // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});  // x^2 - x + 1

    for (unsigned m = 1; m <= 30; ++m) {
        std::vector<Int> prod{1};
        for (unsigned d = 1; d <= m; ++d)
            if (m % d == 0) prod = poly_mul_z(prod, cyclotomic_polynomial(d));
        std::vector<Int> target(m + 1, Int(0));
        target[0] = -1;
        target[m] = 1;
        CHECK(prod == target);
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
}

TEST_CASE("Phi_m(zeta_m) = 0 under the representation") {
    for (unsigned m = 1; m <= 12; ++m) {
        auto phi = cyclotomic_polynomial(m);
        Cyclotomic acc(m);
        for (size_t i = 0; i < phi.size(); ++i)
            acc += Cyclotomic::zeta_pow(m, long(i)) * Rational(phi[i]);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyclotomic inverse") {
    Cyclotomic one = Cyclotomic::from_rational(4, Rational(1));
    CHECK(one.inverse() == one);

    Cyclotomic z4 = Cyclotomic::zeta(4);
    CHECK(z4.inverse() == -z4);
    CHECK((z4 * z4.inverse()).is_one());

    Cyclotomic z3 = Cyclotomic::zeta(3);
    Cyclotomic a = Cyclotomic::from_rational(3, Rational(1)) + z3;  // 1 + zeta_3
    CHECK(a.inverse() == -z3);
    CHECK((a * a.inverse()).is_one());

    CHECK_THROWS_AS(Cyclotomic(5).inverse(), std::domain_error);
}

TEST_CASE("field axioms sampled") {
    std::mt19937_64 rng(42);
    for (unsigned m : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 11u, 12u}) {
        for (int rep = 0; rep < 8; ++rep) {
            Cyclotomic a = random_cyclo(rng, m), b = random_cyclo(rng, m);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("laurent ring laws sampled") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        size_t n = 1 + rng() % 3;
        LaurentPoly p = random_laurent(rng, n), q = random_laurent(rng, n),
                    r = random_laurent(rng, n);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("laurent evaluation") {
    // p = t1 - t1^{-1}
    LaurentPoly p = LaurentPoly::monomial(LaurentMonomial({1})) -
                    LaurentPoly::monomial(LaurentMonomial({-1}));

    SUBCASE("at t1 = 1 the standard factor dies") {
        std::vector<Cyclotomic> t{Cyclotomic::from_rational(4, Rational(1))};
        CHECK(p.eval(t).is_zero());
    }
    SUBCASE("at t1 = zeta_4: zeta - zeta^{-1} = 2 zeta") {
        std::vector<Cyclotomic> t{Cyclotomic::zeta(4)};
        CHECK(p.eval(t) == Cyclotomic::zeta(4) * Rational(2));
    }
    SUBCASE("empty polynomial evaluates to zero") {
        LaurentPoly zero(1);
        std::vector<Cyclotomic> t{Cyclotomic::zeta(4)};
        CHECK(zero.eval(t).is_zero());
    }
    SUBCASE("zero substitution is an error") {
        std::vector<Cyclotomic> t{Cyclotomic(4)};
        CHECK_THROWS_AS(p.eval(t), std::domain_error);
    }
}

TEST_CASE("laurent evaluation is a ring homomorphism") {
    std::mt19937_64 rng(99);
    for (unsigned m : {3u, 4u, 5u, 8u, 12u}) {
        for (int rep = 0; rep < 6; ++rep) {
            size_t n = 1 + rng() % 2;
            LaurentPoly p = random_laurent(rng, n), q = random_laurent(rng, n);
            std::vector<Cyclotomic> t;
            for (size_t i = 0; i < n; ++i)
                t.push_back(Cyclotomic::zeta_pow(m, 1 + long(rng() % (m - 1))));
            CHECK((p * q).eval(t) == p.eval(t) * q.eval(t));
            CHECK((p + q).eval(t) == p.eval(t) + q.eval(t));
        }
    }
}

TEST_CASE("laurent exact division") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        size_t n = 1 + rng() % 3;
        LaurentPoly p = random_laurent(rng, n), q = random_laurent(rng, n);
        if (q.is_zero()) continue;
        CHECK(LaurentPoly::exact_div(p * q, q) == p);
    }
    // t1 + 1 does not divide t1^2 + 1
    LaurentPoly num = LaurentPoly::monomial(LaurentMonomial({2})) + LaurentPoly::constant(1, 1);
    LaurentPoly den = LaurentPoly::monomial(LaurentMonomial({1})) + LaurentPoly::constant(1, 1);
    CHECK_THROWS_AS(LaurentPoly::exact_div(num, den), std::domain_error);
    CHECK_THROWS_AS(LaurentPoly::exact_div(num, LaurentPoly(1)), std::domain_error);
}

TEST_CASE("laurent text form") {
    LaurentPoly p = LaurentPoly::monomial(LaurentMonomial({1, 1, 0, 0})) -
                    LaurentPoly::monomial(LaurentMonomial({-1, -1, 0, 0}));
    CHECK(p.str() == "+[1,1,0,0] -[-1,-1,0,0]");
    CHECK(LaurentPoly(4).str() == "0");
    LaurentPoly q = LaurentPoly::monomial(LaurentMonomial({0, 1}), Rational(Int(3), Int(2)));
    CHECK(q.str() == "+3/2*[0,1]");
    CHECK(equal_up_to_sign(p, -p));
    CHECK_FALSE(equal_up_to_sign(p, q));
}
