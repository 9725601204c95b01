#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "divcancel/heights.hpp"

namespace divcancel {

struct KRecord {
    long n = 0;
    ExtInt v_psi_sq;
    ExtInt v_phi;
    ExtInt k_direct;
    mpq_class k_formula;
    bool matches = false;
    bool torsion = false;  // nP = O
};

/// min(v(psi_n^2(x(P))), v(phi_n(x(P)))) on the given (minimal) model.
ExtInt k_direct(const Place& place, const WeierstrassModel& minimal, const CurvePoint& p, long n);

/// min(0, n^2 v(x(P))) for P non-singular, n^2 c(P) - c(nP) otherwise.
mpq_class k_formula(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                    const CurvePoint& p, long n);

/// n^2 c(P) - c(nP) for n = 1 .. n_max.
std::vector<mpq_class> troublemaker_profile(const ReductionData& rd, const ComponentIndex& comp, long n_max);

struct VerifyOptions {
    long scalar_cap = default_scalar_cap;
};

struct VerifyReport {
    WeierstrassModel minimal;
    ModelMap applied_map;  // input model -> minimal
    bool was_minimal = true;
    ReductionData reduction;
    CurvePoint point;  // P on the minimal model
    LocalHeightRecord height;
    std::vector<KRecord> records;
    std::vector<long> skipped;  // n beyond the size cap
    long mismatches = 0;
};

/// Both computations of k_{v,n} for n = 1 .. n_max.  The model is minimalized
/// first; P must be an affine point of the input model.
VerifyReport verify_range(const Place& place, const WeierstrassModel& e, const CurvePoint& p, long n_max,
                          const VerifyOptions& opts = {});

struct VerifyTask {
    Place place;
    WeierstrassModel model;
    CurvePoint point;
    long n_max;
};

/// Result of one task: a report, or the error that stopped it.
struct VerifyOutcome {
    std::optional<VerifyReport> report;
    std::string error;
};

/// Runs verify_range on every task with up to `jobs` threads; results are in
/// task order.
std::vector<VerifyOutcome> verify_all(const std::vector<VerifyTask>& tasks, unsigned jobs,
                                      const VerifyOptions& opts = {});

}  // namespace divcancel
