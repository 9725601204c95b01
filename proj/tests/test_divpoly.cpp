#include <doctest.h>

#include "divcancel/divpoly.hpp"
#include "divcancel/place.hpp"
#include "support.hpp"

using namespace divcancel;
using namespace testsupport;

TEST_SUITE("divpoly") {

TEST_CASE("example values at t - 1") {
    const WeierstrassModel e = example_curve();
    const CurvePoint p = example_point();
    const Place p1 = Place::polynomial(qt("t-1"));
    const auto ev = divpoly_evals(e, p, 4);
    CHECK(ev[0].psi == qt("1"));
    CHECK(ev[1].psi_sq == qt("16*(t^2+2*t-1)^2*(t^2-2*t+1)^2"));
    CHECK(ev[2].psi_sq == qt("256*(t^4+4*t-1)^2*(t^2+2*t-1)^4*(t-1)^8"));
    CHECK(p1.valuation(ev[1].psi_sq) == 4);
    CHECK(p1.valuation(ev[2].psi_sq) == 8);
    CHECK(p1.valuation(ev[3].psi_sq) == 18);
    CHECK(p1.valuation(ev[1].phi) == 4);
    CHECK(p1.valuation(ev[2].phi) == 10);
    CHECK(phi_value(e, p, 1) == p.x());
    for (const auto& r : ev) CHECK(r.psi * r.psi == r.psi_sq);
}

TEST_CASE("x via division polynomials") {
    const WeierstrassModel e = example_curve();
    const CurvePoint p = example_point();
    CHECK(*x_via_divpoly(e, p, 1) == p.x());
    CHECK(*x_via_divpoly(e, p, 2) == qt("t^4+2*t^2+1"));
    for (int n = 1; n <= 12; ++n) CHECK(*x_via_divpoly(e, p, n) == scalar_mul(e, n, p).x());

    // 2-torsion point (0, 0) on y^2 = x^3 + x
    const WeierstrassModel c = model(FieldKind::rationals, {"0", "0", "0", "1", "0"});
    const CurvePoint t2{q("0"), q("0")};
    CHECK_FALSE(x_via_divpoly(c, t2, 2).has_value());
    CHECK(x_via_divpoly(c, t2, 3).has_value());
    CHECK_THROWS_AS(psi_values(c, CurvePoint::identity(), 3), std::invalid_argument);
}

TEST_CASE("psi values agree with the recurrences in psi") {
    const WeierstrassModel e = example_curve();
    const CurvePoint p = example_point();
    const auto psi = psi_values(e, p, 21);
    for (int m = 2; 2 * m + 1 <= 21; ++m) {
        const auto& a = psi;
        auto i = [](int k) { return static_cast<std::size_t>(k); };
        CHECK(a[i(2 * m + 1)] == a[i(m + 2)] * a[i(m)].pow(3) - a[i(m - 1)] * a[i(m + 1)].pow(3));
        if (m >= 3)
            CHECK(a[2] * a[i(2 * m)] ==
                  a[i(m)] * (a[i(m + 2)] * a[i(m - 1)].pow(2) - a[i(m - 2)] * a[i(m + 1)].pow(2)));
    }
}

TEST_CASE("PARI fixture: psi_n^2 and x(nP) over Q") {
    const auto data = load_fixture("divpoly_q.json");
    int torsion = 0;
    for (const auto& entry : data["entries"]) {
        const WeierstrassModel e = model_from_json(FieldKind::rationals, entry["a"]);
        const CurvePoint p{q(entry["point"][0].get<std::string>()), q(entry["point"][1].get<std::string>())};
        REQUIRE(is_on_curve(e, p));
        const int n_max = static_cast<int>(entry["psi_sq"].size());
        const auto ev = divpoly_evals(e, p, n_max);
        for (int n = 1; n <= n_max; ++n) {
            const auto& r = ev[static_cast<std::size_t>(n - 1)];
            const std::string want = entry["psi_sq"][n - 1].get<std::string>();
            if (want != "none") CHECK(r.psi_sq == q(want));
            const std::string xm = entry["x_mult"][n - 1].get<std::string>();
            const auto x = x_via_divpoly(e, p, n);
            if (xm == "O") {
                CHECK_FALSE(x.has_value());
                ++torsion;
            } else {
                REQUIRE(x.has_value());
                CHECK(*x == q(xm));
                CHECK(scalar_mul(e, n, p).x() == q(xm));
            }
        }
    }
    CHECK(torsion > 0);
}

TEST_CASE("symbolic degrees for a generic x") {
    // constant coefficients, x = t
    const WeierstrassModel e = model(FieldKind::function_field, {"1", "-2", "3", "5", "-7"});
    const DivPolyTable tab(e.invariants(), FieldElement::variable(), 6);
    for (int n = 1; n <= 6; ++n) {
        const FieldElement s = tab.psi_sq(n);
        const FieldElement ph = tab.phi(n);
        REQUIRE(s.function().is_polynomial());
        REQUIRE(ph.function().is_polynomial());
        CHECK(s.function().num().degree() == n * n - 1);
        CHECK(ph.function().num().degree() == n * n);
        CHECK(ph.function().scale() * ph.function().num().leading() == 1);
        CHECK(s.function().scale() * s.function().num().leading() == n * n);
    }
}

}  // TEST_SUITE
