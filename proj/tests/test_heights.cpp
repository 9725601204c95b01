#include <doctest.h>

#include "divcancel/divpoly.hpp"
#include "divcancel/heights.hpp"
#include "support.hpp"

using namespace divcancel;
using namespace testsupport;

namespace {

mpq_class Q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

ReductionData of_type(const char* s) {
    ReductionData rd;
    rd.type = KodairaType::parse(s);
    return rd;
}

struct Case {
    Place place;
    WeierstrassModel model;
    CurvePoint point;
};

// Curves from the bundled corpus, one per family of components.
std::vector<Case> sample_cases() {
    std::vector<Case> out;
    auto add_q = [&](long p, std::array<const char*, 5> a, const char* x, const char* y) {
        out.push_back({Place::rational_prime(p), model(FieldKind::rationals, a), CurvePoint{q(x), q(y)}});
    };
    add_q(5, {"-500", "4", "0", "-6", "57812176"}, "6", "-6250");                   // I4, a = 2
    add_q(5, {"1", "-75", "-375", "375", "6046875"}, "125", "-2500");               // I6, a = 3
    add_q(5, {"-100", "500", "-20", "15", "15850200"}, "-5", "3750");               // III
    add_q(7, {"35", "0", "-98", "0", "-5023528265"}, "1715", "343");                // IV*
    add_q(5, {"-6", "1", "0", "0", "3915608750"}, "25", "-62500");                  // I1*, far
    add_q(5, {"250", "-75", "-75", "-50", "35500"}, "-5", "-25");                   // I2*, near
    add_q(3, {"-12", "0", "-108", "-2", "5"}, "4/9", "-1/27");                      // good, polar
    out.push_back({Place::polynomial(qt("t")), model(FieldKind::function_field, {"0", "0", "0", "0", "t^2-t^3"}),
                   CurvePoint{qt("t"), qt("t")}});                                  // IV
    out.push_back({Place::polynomial(qt("t-1")), example_curve(), example_point()});
    return out;
}

}  // namespace

TEST_SUITE("heights") {

TEST_CASE("intersection with the zero section") {
    CHECK(intersection_number(Place::polynomial(qt("t-1")), example_point()) == 0);
    const Place p3 = Place::rational_prime(3);
    CHECK(intersection_number(p3, CurvePoint{q("4/9"), q("-1/27")}) == 2);
    CHECK(intersection_number(p3, CurvePoint{q("1/81"), q("1")}) == 4);
    CHECK(intersection_number(p3, CurvePoint{q("9"), q("1")}) == 0);
    CHECK_THROWS(intersection_number(p3, CurvePoint::identity()));
}

TEST_CASE("correction terms") {
    using K = ComponentIndex::Kind;
    const ComponentIndex id{}, non{K::nonidentity, 0}, nr{K::near, 0}, fr{K::far, 0};
    CHECK(correction_term(of_type("I0"), id) == 0);
    CHECK(correction_term(of_type("III"), non) == Q(1, 2));
    CHECK(correction_term(of_type("IV"), non) == Q(2, 3));
    CHECK(correction_term(of_type("IV*"), non) == Q(4, 3));
    CHECK(correction_term(of_type("III*"), non) == Q(3, 2));
    CHECK(correction_term(of_type("I0*"), nr) == 1);
    CHECK(correction_term(of_type("I3*"), nr) == 1);
    CHECK(correction_term(of_type("I1*"), fr) == Q(5, 4));
    CHECK(correction_term(of_type("I3*"), fr) == Q(7, 4));
    CHECK(correction_term(of_type("I2*"), fr) == Q(3, 2));
    CHECK(correction_term(of_type("I4"), ComponentIndex{K::index, 2}) == 1);
    CHECK(correction_term(of_type("I2"), ComponentIndex{K::index, 1}) == Q(1, 2));
    CHECK(correction_term(of_type("I7"), ComponentIndex{K::index, 3}) == Q(12, 7));
    CHECK(correction_term(of_type("III*"), id) == 0);
}

TEST_CASE("local height of the example point") {
    const Place p1 = Place::polynomial(qt("t-1"));
    const TateResult r = tate(example_curve(), p1);
    const LocalHeightRecord h = local_height(p1, r.minimal, r.data, example_point());
    CHECK(h.intersection == 0);
    CHECK(h.c_v == 1);
    CHECK(h.lambda_hat == Q(-1, 6));
    CHECK(neron_local_height(p1, r.minimal, r.data, example_point()) == Q(-1, 6));

    const Place p2 = Place::polynomial(qt("t^2+2*t-1"));
    const TateResult r2 = tate(example_curve(), p2);
    const LocalHeightRecord h2 = local_height(p2, r2.minimal, r2.data, example_point());
    CHECK(h2.c_v == Q(1, 2));
    CHECK(h2.lambda_hat == Q(r2.data.v_delta, 12) - Q(1, 4));
}

TEST_CASE("height is even and quadratic") {
    for (const Case& c : sample_cases()) {
        CAPTURE(c.model.to_string());
        const TateResult r = tate(c.model, c.place);
        const CurvePoint p = transport(r.map, c.point);
        const auto lam = [&](const CurvePoint& x) { return neron_local_height(c.place, r.minimal, r.data, x); };
        CHECK(lam(negate(r.minimal, p)) == lam(p));

        const std::vector<DivPolyEval> ev = divpoly_evals(r.minimal, p, 6);
        CurvePoint np = p;
        for (int n = 2; n <= 6; ++n) {
            np = add(r.minimal, np, p);
            if (np.is_identity()) break;
            const ExtInt v = c.place.valuation(ev[n - 1].psi_sq);
            REQUIRE(v.is_finite());
            const mpq_class want = n * n * lam(p) + Q(v.value(), 2) - Q((n * n - 1) * r.data.v_delta, 12);
            CHECK(lam(np) == want);
        }
    }
}

TEST_CASE("type IV: doubling keeps the component") {
    const Place pt = Place::polynomial(qt("t"));
    const WeierstrassModel e = model(FieldKind::function_field, {"0", "0", "0", "0", "t^2-t^3"});
    const CurvePoint p{qt("t"), qt("t")};
    const TateResult r = tate(e, pt);
    REQUIRE(r.data.type.to_string() == "IV");
    const LocalHeightRecord h1 = local_height(pt, r.minimal, r.data, p);
    const LocalHeightRecord h2 = local_height(pt, r.minimal, r.data, add(r.minimal, p, p));
    const LocalHeightRecord h3 = local_height(pt, r.minimal, r.data, scalar_mul(r.minimal, 3, p));
    CHECK(h1.c_v == Q(2, 3));
    CHECK(h2.c_v == Q(2, 3));
    CHECK(h3.c_v == 0);
}

}
