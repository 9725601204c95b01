#include <doctest.h>

#include <random>

#include "divcancel/parse.hpp"
#include "divcancel/place.hpp"

using namespace divcancel;

namespace {

FieldElement qt(const char* s) { return parse_element(s, FieldKind::function_field); }
FieldElement q(const char* s) { return parse_element(s, FieldKind::rationals); }

ZPoly zp(std::vector<long> c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return ZPoly(std::move(v));
}

ZPoly random_zpoly(std::mt19937_64& rng, int deg, int bits) {
    std::vector<mpz_class> c(static_cast<std::size_t>(deg) + 1);
    gmp_randclass r(gmp_randinit_default);
    r.seed(static_cast<unsigned long>(rng()));
    for (auto& x : c) {
        x = r.get_z_bits(bits);
        if (rng() & 1U) x = -x;
    }
    if (c.back() == 0) c.back() = 1;
    return ZPoly(std::move(c));
}

FieldElement random_qt(std::mt19937_64& rng) {
    const int dn = static_cast<int>(rng() % 4);
    const int dd = static_cast<int>(rng() % 3);
    ZPoly n = random_zpoly(rng, dn, 6);
    ZPoly d = random_zpoly(rng, dd, 6);
    // sprinkle factors of the places under test
    const ZPoly a = zp({-1, 1});
    const ZPoly b = zp({-1, 2, 1});
    for (unsigned k = rng() % 3; k > 0; --k) n = n * a;
    for (unsigned k = rng() % 2; k > 0; --k) d = d * b;
    for (unsigned k = rng() % 2; k > 0; --k) n = n * b;
    return FieldElement(RationalFunction(n, d));
}

}  // namespace

TEST_SUITE("exactfield") {

TEST_CASE("ExtInt arithmetic and ordering") {
    const ExtInt inf = ExtInt::infinity();
    CHECK(inf + 3 == inf);
    CHECK(min(inf, ExtInt(7)) == ExtInt(7));
    CHECK(ExtInt(1'000'000) < inf);
    CHECK(ExtInt(-2) < ExtInt(5));
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS(inf.value());
}

TEST_CASE("Kronecker product agrees with schoolbook") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const ZPoly a = random_zpoly(rng, 5 + static_cast<int>(rng() % 40), 1 + static_cast<int>(rng() % 200));
        const ZPoly b = random_zpoly(rng, 5 + static_cast<int>(rng() % 40), 1 + static_cast<int>(rng() % 200));
        CHECK(a * b == mul_classical(a, b));
    }
}

TEST_CASE("gcd matches sympy") {
    const ZPoly a = zp({-300, 915, -998, 637, -334, -24, 120, -25, -8, 2});
    const ZPoly b = zp({-320, -912, 3044, -1955, 166, 193, -59, 5});
    // (t - 4)(t^3 - 7t + 5)
    CHECK(gcd(a, b) == zp({-20, 33, -7, -4, 1}));
}

TEST_CASE("gcd of random products recovers the planted factor") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const ZPoly g = random_zpoly(rng, 1 + static_cast<int>(rng() % 6), 40).primitive_part();
        const ZPoly a = random_zpoly(rng, 1 + static_cast<int>(rng() % 8), 40);
        const ZPoly b = random_zpoly(rng, 1 + static_cast<int>(rng() % 8), 40);
        const ZPoly h = gcd(g * a, g * b);
        CHECK(divide_exact(h, g).has_value());
        CHECK(divide_exact(g * a, h).has_value());
        CHECK(divide_exact(g * b, h).has_value());
        const ZPoly co = gcd(divexact(g * a, h), divexact(g * b, h));
        CHECK(co.is_constant());
    }
}

TEST_CASE("parse canonical forms") {
    CHECK(q("0").is_zero());
    CHECK(qt("0").is_zero());
    const FieldElement f = qt("(t^2-1)^2");
    CHECK(f.function().is_polynomial());
    CHECK(f.to_string() == "t^4 - 2*t^2 + 1");
    CHECK(qt("-2*t^5 + 2*t").to_string() == "-2*t^5 + 2*t");
    CHECK(q("7/2").rational() == mpq_class(7, 2));
    CHECK(q("-3").rational() == -3);
    CHECK(qt("(2*t+2)/(4*t^2-4)") == qt("1/(2*t-2)"));
}

TEST_CASE("parse-print-parse is the identity") {
    const char* inputs[] = {"(t^2-1)^2", "-2*t^5 + 2*t", "3/(7*t^3 - 2*t + 1)", "(t+1/2)^3/(t-5)^2", "-7/3", "t"};
    for (const char* s : inputs) {
        const FieldElement a = qt(s);
        const std::string p = a.to_string();
        CHECK(qt(p.c_str()) == a);
        CHECK(qt(p.c_str()).to_string() == p);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(qt("2t"), ParseError);
    CHECK_THROWS_AS(qt("t^-1"), ParseError);
    CHECK_THROWS_AS(qt("(t+1"), ParseError);
    CHECK_THROWS_AS(q("t+1"), ParseError);
    CHECK_THROWS_AS(qt("1/(t-t)"), ParseError);
    CHECK_THROWS_AS(qt("3 $ 4"), ParseError);
    try {
        qt("1 + 2t");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("valuations at places") {
    const Place p1 = Place::polynomial(qt("t-1"));
    const Place pa = Place::polynomial(qt("t^2+2*t-1"));
    const Place p5 = Place::rational_prime(5);
    CHECK(p1.valuation(qt("16*(t^2+2*t-1)^2*(t^2-2*t+1)^2")) == 4);
    CHECK(p5.valuation(q("0")).is_infinite());
    CHECK(pa.valuation(qt("256*(t^4+4*t-1)^2*(t^2+2*t-1)^4*(t-1)^8")) == 4);
    CHECK(p5.valuation(q("50/3")) == 2);
    CHECK(p5.valuation(q("3/125")) == -3);
    CHECK(p1.valuation(qt("(t^2-1)/(t-1)^3")) == -2);
    CHECK(p1.uniformizer().to_string() == "t - 1");
    CHECK(p1.valuation(p1.uniformizer()) == 1);
    CHECK(pa.valuation(pa.uniformizer()) == 1);
    CHECK(p5.valuation(p5.uniformizer()) == 1);
    // non-monic input is normalized
    CHECK(Place::polynomial(qt("3*t-3")) == p1);
}

TEST_CASE("place construction rejects bad input") {
    CHECK_THROWS_AS(Place::rational_prime(15), std::invalid_argument);
    CHECK_THROWS_AS(Place::polynomial(qt("t^2-1")), std::invalid_argument);
    CHECK_THROWS_AS(Place::polynomial(qt("(t^2+1)^2")), std::invalid_argument);
    CHECK_THROWS_AS(Place::polynomial(qt("5")), std::invalid_argument);
    CHECK_THROWS_AS(Place::polynomial(qt("1/(t-1)")), std::invalid_argument);
    CHECK_NOTHROW(Place::polynomial(qt("t^3-2")));
    CHECK_NOTHROW(Place::polynomial(qt("t^6+t^3+1")));
}

TEST_CASE("residues") {
    const ResidueField k1(Place::polynomial(qt("t-1")));
    CHECK(k1.to_string(k1.reduce(qt("t^2+2*t"))) == "3");
    const ResidueField f5(Place::rational_prime(5));
    CHECK(f5.reduce(q("7/3")) == f5.from_integer(4));
    const ResidueField ka(Place::polynomial(qt("t^2+2*t-1")));
    CHECK(ka.lift(ka.reduce(qt("t^3"))) == qt("5*t-2"));
    CHECK_THROWS_AS(f5.reduce(q("1/5")), std::domain_error);
    CHECK_THROWS_AS(k1.reduce(qt("1/(t-1)")), std::domain_error);
    // reduction is a ring map
    const FieldElement a = qt("(t^3+7)/(t+3)");
    const FieldElement b = qt("t^5-2*t");
    CHECK(ka.reduce(a * b) == ka.mul(ka.reduce(a), ka.reduce(b)));
    CHECK(ka.reduce(a + b) == ka.add(ka.reduce(a), ka.reduce(b)));
    CHECK(ka.mul(ka.reduce(a), ka.inv(ka.reduce(a))) == ka.from_integer(1));
}

TEST_CASE("square tests in residue fields") {
    const ResidueField f7(Place::rational_prime(7));
    CHECK(f7.is_square(f7.from_integer(2)));
    CHECK_FALSE(f7.is_square(f7.from_integer(3)));
    const ResidueField f2(Place::rational_prime(2));
    CHECK(f2.is_square(f2.from_integer(1)));
    const ResidueField k1(Place::polynomial(qt("t-1")));
    CHECK(k1.is_square(k1.reduce(qt("9/4"))));
    CHECK_FALSE(k1.is_square(k1.reduce(qt("2"))));
    // Q(sqrt 2): 2 is a square, 3 is not, t = -1 + sqrt 2 is not
    const ResidueField ka(Place::polynomial(qt("t^2+2*t-1")));
    CHECK(ka.is_square(ka.from_integer(2)));
    CHECK_FALSE(ka.is_square(ka.from_integer(3)));
    CHECK(ka.is_square(ka.reduce(qt("(3*t+1)^2"))));
    CHECK(ka.quadratic_has_root(ka.from_integer(1), ka.from_integer(0), ka.from_integer(-2)));
    CHECK_FALSE(ka.quadratic_has_root(ka.from_integer(1), ka.from_integer(1), ka.from_integer(1)));
    CHECK(f2.quadratic_has_root(f2.from_integer(1), f2.from_integer(1), f2.from_integer(0)));
    CHECK_FALSE(f2.quadratic_has_root(f2.from_integer(1), f2.from_integer(1), f2.from_integer(1)));
}

TEST_CASE("ultrametric and multiplicative properties") {
    std::mt19937_64 rng(2024);
    const Place p1 = Place::polynomial(qt("t-1"));
    const Place pa = Place::polynomial(qt("t^2+2*t-1"));
    for (int i = 0; i < 200; ++i) {
        const FieldElement x = random_qt(rng);
        const FieldElement y = random_qt(rng);
        for (const Place* pl : {&p1, &pa}) {
            const ExtInt vx = pl->valuation(x);
            const ExtInt vy = pl->valuation(y);
            const ExtInt vs = pl->valuation(x + y);
            CHECK(vs >= min(vx, vy));
            if (vx != vy) CHECK(vs == min(vx, vy));
            CHECK(pl->valuation(x * y) == vx + vy);
        }
    }
    const Place p3 = Place::rational_prime(3);
    for (int i = 0; i < 200; ++i) {
        const long a = static_cast<long>(rng() % 2000) - 1000;
        const long b = static_cast<long>(rng() % 500) + 1;
        const long c = static_cast<long>(rng() % 2000) - 1000;
        const FieldElement x(mpq_class(a * 9, b));
        const FieldElement y(mpq_class(c, b * 27));
        CHECK(p3.valuation(x + y) >= min(p3.valuation(x), p3.valuation(y)));
        CHECK(p3.valuation(x * y) == p3.valuation(x) + p3.valuation(y));
    }
}

TEST_CASE("canonical form uniqueness") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = random_qt(rng);
        const FieldElement y = random_qt(rng);
        const FieldElement z = random_qt(rng);
        const FieldElement l = (x + y) * z;
        const FieldElement r = x * z + y * z;
        CHECK(l == r);
        CHECK(l.to_string() == r.to_string());
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

}  // TEST_SUITE
