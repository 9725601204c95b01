#include "divcancel/heights.hpp"

#include <stdexcept>

namespace divcancel {

namespace {

mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

long intersection_number(const Place& place, const CurvePoint& p) {
    if (p.is_identity()) throw std::invalid_argument("intersection number of O with itself is not defined");
    const ExtInt v = place.valuation(p.x());
    return v.is_infinite() || v.value() >= 0 ? 0 : -v.value();
}

mpq_class correction_term(const ReductionData& rd, const ComponentIndex& c) {
    using K = ComponentIndex::Kind;
    using S = KodairaType::Symbol;
    const long m = rd.type.m;
    switch (c.kind) {
        case K::identity: return 0;
        case K::index: return frac(c.a * (m - c.a), m);
        case K::near: return 1;
        case K::far: return frac(m + 4, 4);
        case K::nonidentity:
            switch (rd.type.symbol) {
                case S::III: return frac(1, 2);
                case S::IV: return frac(2, 3);
                case S::IVstar: return frac(4, 3);
                case S::IIIstar: return frac(3, 2);
                default: break;
            }
            break;
    }
    throw std::logic_error("correction_term: component does not belong to " + rd.type.to_string());
}

LocalHeightRecord local_height(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                               const CurvePoint& p) {
    LocalHeightRecord r;
    r.intersection = intersection_number(place, p);
    r.component = component_of(place, minimal, rd, p);
    r.c_v = correction_term(rd, r.component);
    r.lambda_hat = frac(rd.v_delta, 12) - r.c_v / 2 + frac(r.intersection, 2);
    return r;
}

mpq_class neron_local_height(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                             const CurvePoint& p) {
    return local_height(place, minimal, rd, p).lambda_hat;
}

}  // namespace divcancel
