#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "divcancel/field_element.hpp"

namespace divcancel {

class Place;

struct Invariants {
    FieldElement b2, b4, b6, b8, c4, c6, disc, j;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
class WeierstrassModel {
public:
    /// Throws std::invalid_argument on mixed fields or when the discriminant
    /// vanishes ("not an elliptic curve").
    explicit WeierstrassModel(std::array<FieldElement, 5> a);

    FieldKind field() const { return a_[0].kind(); }
    const std::array<FieldElement, 5>& a() const { return a_; }
    const FieldElement& a1() const { return a_[0]; }
    const FieldElement& a2() const { return a_[1]; }
    const FieldElement& a3() const { return a_[2]; }
    const FieldElement& a4() const { return a_[3]; }
    const FieldElement& a6() const { return a_[4]; }

    const Invariants& invariants() const { return inv_; }
    const FieldElement& discriminant() const { return inv_.disc; }

    std::string to_string() const;
    friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) { return a.a_ == b.a_; }

private:
    std::array<FieldElement, 5> a_;
    Invariants inv_;
};

Invariants compute_invariants(const std::array<FieldElement, 5>& a);

/// The point at infinity O or an affine point (x, y).
class CurvePoint {
public:
    CurvePoint() = default;  // O
    CurvePoint(FieldElement x, FieldElement y) : xy_(std::make_pair(std::move(x), std::move(y))) {}
    static CurvePoint identity() { return {}; }

    bool is_identity() const { return !xy_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;

    std::string to_string() const;
    friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.xy_ == b.xy_; }

private:
    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

bool is_on_curve(const WeierstrassModel& e, const CurvePoint& p);
CurvePoint negate(const WeierstrassModel& e, const CurvePoint& p);
CurvePoint add(const WeierstrassModel& e, const CurvePoint& p, const CurvePoint& q);

/// Raised when a scalar multiple exceeds the configured size cap.
class ScalarCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr long default_scalar_cap = 64;

/// nP by double-and-add; negative n multiplies -P.  Throws ScalarCapExceeded
/// when |n| > cap.
CurvePoint scalar_mul(const WeierstrassModel& e, long n, const CurvePoint& p, long cap = default_scalar_cap);

/// The substitution x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct ModelMap {
    FieldElement u, r, s, t;

    static ModelMap identity(FieldKind kind);
    bool is_identity() const { return u.is_one() && r.is_zero() && s.is_zero() && t.is_zero(); }
    ModelMap inverse() const;
    std::string to_string() const;
    friend bool operator==(const ModelMap&, const ModelMap&) = default;
};

/// The map that applies `first` and then `second`.
ModelMap compose(const ModelMap& first, const ModelMap& second);

/// The model in the primed coordinates; throws std::invalid_argument if u = 0.
WeierstrassModel transform(const WeierstrassModel& e, const ModelMap& m);
/// Moves a point of the source model to the transformed model.
CurvePoint transport(const ModelMap& m, const CurvePoint& p);

struct MinimalModel {
    WeierstrassModel model;
    ModelMap map;  // from the input model to `model`
    bool was_minimal;
};

/// A model integral and minimal at the place (via Tate's algorithm).
MinimalModel minimalize_at(const WeierstrassModel& e, const Place& place);

}  // namespace divcancel
