#pragma once

#include <gmpxx.h>

#include "divcancel/reduction.hpp"

namespace divcancel {

/// (P.O)_v = max(0, -v(x(P))) for an affine P.
long intersection_number(const Place& place, const CurvePoint& p);

/// Correction term of a component: 0 for the identity, a(m - a)/m on I_m,
/// 1/2, 2/3, 4/3, 3/2 on III, IV, IV*, III*, and 1 or (m + 4)/4 for the near
/// and far components of I_m*.
mpq_class correction_term(const ReductionData& rd, const ComponentIndex& c);

struct LocalHeightRecord {
    long intersection = 0;
    ComponentIndex component;
    mpq_class c_v;
    mpq_class lambda_hat;
};

/// lambda_hat(P) = v(Delta)/12 - c_v(P)/2 + (P.O)_v/2 on the minimal model.
LocalHeightRecord local_height(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                               const CurvePoint& p);

mpq_class neron_local_height(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                             const CurvePoint& p);

}  // namespace divcancel
