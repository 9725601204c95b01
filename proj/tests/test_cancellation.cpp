#include <doctest.h>

#include "divcancel/cancellation.hpp"
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

}  // namespace

TEST_SUITE("cancellation") {

TEST_CASE("valuations of the example at both bad places") {
    const WeierstrassModel e = example_curve();
    const CurvePoint p = example_point();
    const Place p1 = Place::polynomial(qt("t-1"));
    const Place p2 = Place::polynomial(qt("t^2+2*t-1"));
    const long want1[] = {0, 4, 8, 16, 24, 36};
    const long want2[] = {0, 2, 4, 8, 12, 18};
    for (long n = 1; n <= 6; ++n) {
        CHECK(k_direct(p1, e, p, n) == ExtInt(want1[n - 1]));
        CHECK(k_direct(p2, e, p, n) == ExtInt(want2[n - 1]));
    }
    CHECK(k_direct(Place::polynomial(qt("t-3")), e, p, 5) == ExtInt(0));
}

TEST_CASE("closed form on the example") {
    const WeierstrassModel e = example_curve();
    const CurvePoint p = example_point();
    const Place p1 = Place::polynomial(qt("t-1"));
    const TateResult r1 = tate(e, p1);
    const Place p2 = Place::polynomial(qt("t^2+2*t-1"));
    const TateResult r2 = tate(e, p2);
    for (long n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(k_formula(p1, r1.minimal, r1.data, p, n) == n * n - (n % 2));
        CHECK(k_formula(p2, r2.minimal, r2.data, p, n) == Q(n * n - (n % 2), 2));
    }
}

TEST_CASE("troublemaker values") {
    using K = ComponentIndex::Kind;
    CHECK(troublemaker_profile(of_type("III"), {K::nonidentity, 0}, 4)[3] == 8);
    CHECK(troublemaker_profile(of_type("IV*"), {K::nonidentity, 0}, 2)[1] == 4);
    CHECK(troublemaker_profile(of_type("I4"), {K::index, 2}, 3)[2] == 8);
    CHECK(troublemaker_profile(of_type("I1*"), {K::far, 0}, 4) == std::vector<mpq_class>{0, 4, 10, 20});
    CHECK(troublemaker_profile(of_type("I2*"), {K::far, 0}, 3) == std::vector<mpq_class>{0, 6, 12});
    CHECK(troublemaker_profile(of_type("I5"), {K::index, 2}, 5) == std::vector<mpq_class>{0, 4, 10, 18, 30});
    CHECK_THROWS(troublemaker_profile(of_type("I4"), ComponentIndex{}, 3));
}

TEST_CASE("profile values are integers and c(nP) is periodic") {
    using K = ComponentIndex::Kind;
    const std::vector<std::pair<const char*, ComponentIndex>> cases = {
        {"III", {K::nonidentity, 0}}, {"IV", {K::nonidentity, 0}}, {"III*", {K::nonidentity, 0}},
        {"IV*", {K::nonidentity, 0}}, {"I0*", {K::near, 0}},       {"I3*", {K::near, 0}},
        {"I3*", {K::far, 0}},         {"I4*", {K::far, 0}},        {"I9", {K::index, 4}},
        {"I8", {K::index, 2}},        {"I12", {K::index, 6}},      {"I1*", {K::far, 0}}};
    for (const auto& [type, comp] : cases) {
        CAPTURE(type);
        const ReductionData rd = of_type(type);
        const long m = order_m_P(rd, comp);
        const mpq_class c = correction_term(rd, comp);
        const std::vector<mpq_class> prof = troublemaker_profile(rd, comp, 3 * m + 2);
        for (std::size_t i = 0; i < prof.size(); ++i) {
            const long n = static_cast<long>(i) + 1;
            CHECK(prof[i].get_den() == 1);
            CHECK(prof[i] >= 0);
            if (n % m == 0) CHECK(prof[i] == n * n * c);
            if (i + m < prof.size()) {
                const long n2 = n + m;
                CHECK(n * n * c - prof[i] == n2 * n2 * c - prof[i + m]);
            }
        }
    }
}

TEST_CASE("good reduction") {
    const Place p5 = Place::rational_prime(5);
    const WeierstrassModel e = model(FieldKind::rationals, {"0", "-15", "375", "750", "3929684676"});
    const VerifyReport rep = verify_range(p5, e, CurvePoint{q("4"), q("62500")}, 10);
    CHECK(rep.reduction.type.to_string() == "I0");
    CHECK(rep.mismatches == 0);
    for (const KRecord& r : rep.records) CHECK(r.k_direct == ExtInt(0));

    const Place p3 = Place::rational_prime(3);
    const WeierstrassModel e3 = model(FieldKind::rationals, {"-12", "0", "-108", "-2", "5"});
    const VerifyReport rep3 = verify_range(p3, e3, CurvePoint{q("4/9"), q("-1/27")}, 8);
    CHECK(rep3.mismatches == 0);
    for (const KRecord& r : rep3.records) CHECK(r.k_direct == ExtInt(-2 * r.n * r.n));
}

TEST_CASE("verify_range on the example") {
    const VerifyReport rep = verify_range(Place::polynomial(qt("t-1")), example_curve(), example_point(), 6);
    CHECK(rep.was_minimal);
    CHECK(rep.mismatches == 0);
    REQUIRE(rep.records.size() == 6);
    const long want[] = {0, 4, 8, 16, 24, 36};
    for (const KRecord& r : rep.records) {
        CHECK(r.matches);
        CHECK_FALSE(r.torsion);
        CHECK(r.k_direct == ExtInt(want[r.n - 1]));
        CHECK(r.k_formula == want[r.n - 1]);
    }
    CHECK(rep.records[3].v_psi_sq == ExtInt(18));
}

TEST_CASE("non-minimal input is minimalized first") {
    const Place p5 = Place::rational_prime(5);
    const WeierstrassModel e = model(FieldKind::rationals, {"-500", "50", "0", "0", "-7988281250"});
    const VerifyReport rep = verify_range(p5, e, CurvePoint{q("-1875"), q("-15625")}, 12);
    CHECK_FALSE(rep.was_minimal);
    CHECK_FALSE(rep.applied_map.is_identity());
    CHECK(rep.reduction.type.to_string() == "I4");
    CHECK(rep.mismatches == 0);
}

TEST_CASE("torsion points give an infinite valuation") {
    // (0, 0) has order 2 on y^2 = x^3 + 5x
    const Place p5 = Place::rational_prime(5);
    const WeierstrassModel e = model(FieldKind::rationals, {"0", "0", "0", "5", "0"});
    const VerifyReport rep = verify_range(p5, e, CurvePoint{q("0"), q("0")}, 4);
    REQUIRE(rep.records.size() == 4);
    CHECK(rep.records[1].torsion);
    CHECK(rep.records[1].v_psi_sq.is_infinite());
    CHECK(rep.records[3].torsion);
    CHECK_FALSE(rep.records[2].torsion);
    CHECK(rep.mismatches == 0);
}

TEST_CASE("scalar cap skips large multiples") {
    VerifyOptions opts;
    opts.scalar_cap = 5;
    const VerifyReport rep = verify_range(Place::polynomial(qt("t-1")), example_curve(), example_point(), 8, opts);
    CHECK(rep.records.size() == 5);
    CHECK(rep.skipped == std::vector<long>{6, 7, 8});
}

TEST_CASE("parallel runs keep input order") {
    std::vector<VerifyTask> tasks;
    for (const char* pi : {"t-1", "t^2+2*t-1", "t-3", "t+1", "t"})
        tasks.push_back({Place::polynomial(qt(pi)), example_curve(), example_point(), 6});
    tasks.push_back({Place::rational_prime(5), model(FieldKind::rationals, {"0", "0", "0", "0", "1"}),
                     CurvePoint{q("2"), q("5")}, 4});  // not on the curve
    const std::vector<VerifyOutcome> serial = verify_all(tasks, 1);
    const std::vector<VerifyOutcome> parallel = verify_all(tasks, 4);
    REQUIRE(serial.size() == tasks.size());
    REQUIRE(parallel.size() == tasks.size());
    for (std::size_t i = 0; i + 1 < tasks.size(); ++i) {
        REQUIRE(serial[i].report);
        REQUIRE(parallel[i].report);
        CHECK(serial[i].report->reduction.type == parallel[i].report->reduction.type);
        for (std::size_t j = 0; j < serial[i].report->records.size(); ++j)
            CHECK(serial[i].report->records[j].k_direct == parallel[i].report->records[j].k_direct);
    }
    CHECK_FALSE(serial.back().report);
    CHECK_FALSE(parallel.back().error.empty());
}

}
