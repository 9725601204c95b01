#include "divcancel/cancellation.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "divcancel/divpoly.hpp"

namespace divcancel {

namespace {

void require_affine(const CurvePoint& p) {
    if (p.is_identity()) throw std::invalid_argument("the point must be affine, not O");
}

mpq_class nonsingular_formula(const Place& place, const CurvePoint& p, long n) {
    const ExtInt v = place.valuation(p.x());
    if (v.is_infinite() || v.value() >= 0) return 0;
    return mpq_class(n * n * v.value());
}

}  // namespace

ExtInt k_direct(const Place& place, const WeierstrassModel& minimal, const CurvePoint& p, long n) {
    require_affine(p);
    const DivPolyTable tab(minimal.invariants(), p.x(), static_cast<int>(n));
    const int k = static_cast<int>(n);
    return min(place.valuation(tab.psi_sq(k)), place.valuation(tab.phi(k)));
}

mpq_class k_formula(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                    const CurvePoint& p, long n) {
    require_affine(p);
    const ComponentIndex c = component_of(place, minimal, rd, p);
    if (c.is_identity()) return nonsingular_formula(place, p, n);
    return mpq_class(n * n) * correction_term(rd, c) - correction_term(rd, component_scale(rd, c, n));
}

std::vector<mpq_class> troublemaker_profile(const ReductionData& rd, const ComponentIndex& comp, long n_max) {
    if (comp.is_identity()) throw std::invalid_argument("troublemaker profile of the identity component");
    const mpq_class c = correction_term(rd, comp);
    std::vector<mpq_class> out;
    for (long n = 1; n <= n_max; ++n)
        out.push_back(mpq_class(n * n) * c - correction_term(rd, component_scale(rd, comp, n)));
    return out;
}

VerifyReport verify_range(const Place& place, const WeierstrassModel& e, const CurvePoint& p, long n_max,
                          const VerifyOptions& opts) {
    require_affine(p);
    if (!is_on_curve(e, p)) throw std::invalid_argument("the point is not on the curve");
    TateResult t = tate(e, place);
    VerifyReport rep{t.minimal, t.map, t.was_minimal, t.data, transport(t.map, p), {}, {}, {}, 0};
    rep.height = local_height(place, rep.minimal, rep.reduction, rep.point);

    const long last = std::min(n_max, opts.scalar_cap);
    for (long n = last + 1; n <= n_max; ++n) rep.skipped.push_back(n);
    if (last < 1) return rep;

    const DivPolyTable tab(rep.minimal.invariants(), rep.point.x(), static_cast<int>(last));
    const ComponentIndex& c = rep.height.component;
    for (long n = 1; n <= last; ++n) {
        const int k = static_cast<int>(n);
        KRecord r;
        r.n = n;
        const FieldElement psq = tab.psi_sq(k);
        r.torsion = psq.is_zero();
        r.v_psi_sq = place.valuation(psq);
        r.v_phi = place.valuation(tab.phi(k));
        r.k_direct = min(r.v_psi_sq, r.v_phi);
        if (c.is_identity())
            r.k_formula = nonsingular_formula(place, rep.point, n);
        else
            r.k_formula = mpq_class(n * n) * rep.height.c_v - correction_term(rep.reduction, component_scale(rep.reduction, c, n));
        r.matches = r.k_direct.is_finite() && r.k_formula.get_den() == 1 && r.k_formula == r.k_direct.value();
        if (!r.matches) ++rep.mismatches;
        rep.records.push_back(std::move(r));
    }
    return rep;
}

std::vector<VerifyOutcome> verify_all(const std::vector<VerifyTask>& tasks, unsigned jobs, const VerifyOptions& opts) {
    std::vector<VerifyOutcome> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const VerifyTask& t = tasks[i];
            try {
                out[i].report = verify_range(t.place, t.model, t.point, t.n_max, opts);
            } catch (const std::exception& ex) {
                out[i].error = ex.what();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace divcancel
