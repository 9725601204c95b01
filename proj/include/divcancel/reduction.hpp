#pragma once

#include <optional>
#include <string>

#include "divcancel/curve.hpp"
#include "divcancel/place.hpp"

namespace divcancel {

struct KodairaType {
    enum class Symbol { I0, I, II, III, IV, I0star, Istar, IVstar, IIIstar, IIstar };
    Symbol symbol = Symbol::I0;
    long m = 0;  // for I_m and I_m*

    std::string to_string() const;
    /// Inverse of to_string ("I4", "I0*", "I3*", "IV*", ...).
    static KodairaType parse(const std::string& s);
    friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

struct ReductionData {
    KodairaType type;
    long v_delta = 0;
    /// Shift (r, 0, t) on the minimal model moving the singular point of the
    /// special fibre to (0, 0).  Identity for good reduction.
    ModelMap normalization;
    /// For I_m*: the frame (relative to the minimal model) in which the
    /// double root of the auxiliary cubic sits at 0.
    std::optional<ModelMap> star_frame;
    /// Geometric component group: "trivial", "Z/m", "Z/2 x Z/2", ...
    std::string phi_structure;
    /// For I_m: whether the tangents at the node are rational over the
    /// residue field.
    bool split = false;
};

struct TateResult {
    WeierstrassModel minimal;
    ModelMap map;  // input model -> minimal
    ReductionData data;
    bool was_minimal;
};

TateResult tate(const WeierstrassModel& e, const Place& place);

/// Position of a point in the component group.  For I_m the index is
/// folded into [0, m/2] since only min(a, m - a) is visible to valuations.
struct ComponentIndex {
    enum class Kind { identity, index, nonidentity, near, far };
    Kind kind = Kind::identity;
    long a = 0;  // Kind::index only

    bool is_identity() const { return kind == Kind::identity; }
    std::string to_string() const;
    friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;
};

/// The point must lie on the minimal model returned by tate().
bool is_singular_mod_v(const Place& place, const ReductionData& rd, const CurvePoint& p);
ComponentIndex component_of(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                            const CurvePoint& p);
long order_m_P(const ReductionData& rd, const ComponentIndex& c);
ComponentIndex component_scale(const ReductionData& rd, const ComponentIndex& c, long n);

inline constexpr long default_np_bound = 1000;

/// Smallest n > 0 with nP reducing to the identity, searched up to `bound`;
/// nullopt means "not found within the bound".
std::optional<long> find_n_P(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                             const CurvePoint& p, long bound = default_np_bound);

}  // namespace divcancel
