#include "divcancel/curve.hpp"

#include <sstream>

namespace divcancel {

Invariants compute_invariants(const std::array<FieldElement, 5>& a) {
    const auto& [a1, a2, a3, a4, a6] = a;
    Invariants r;
    r.b2 = a1 * a1 + a2 * 4;
    r.b4 = a1 * a3 + a4 * 2;
    r.b6 = a3 * a3 + a6 * 4;
    r.b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - r.b4 * 24;
    r.c6 = -(r.b2 * r.b2 * r.b2) + r.b2 * r.b4 * 36 - r.b6 * 216;
    r.disc = -(r.b2 * r.b2 * r.b8) - r.b4 * r.b4 * r.b4 * 8 - r.b6 * r.b6 * 27 + r.b2 * r.b4 * r.b6 * 9;
    if (!r.disc.is_zero()) r.j = r.c4 * r.c4 * r.c4 / r.disc;
    return r;
}

WeierstrassModel::WeierstrassModel(std::array<FieldElement, 5> a) : a_(std::move(a)) {
    for (const auto& c : a_)
        if (c.kind() != a_[0].kind()) throw std::invalid_argument("curve coefficients live in different fields");
    inv_ = compute_invariants(a_);
    if (inv_.disc.is_zero()) throw std::invalid_argument("not an elliptic curve (discriminant is zero)");
}

std::string WeierstrassModel::to_string() const {
    std::ostringstream os;
    os << "[" << a_[0].to_string();
    for (int i = 1; i < 5; ++i) os << ", " << a_[i].to_string();
    os << "]";
    return os.str();
}

const FieldElement& CurvePoint::x() const {
    if (!xy_) throw std::logic_error("x() of the point at infinity");
    return xy_->first;
}

const FieldElement& CurvePoint::y() const {
    if (!xy_) throw std::logic_error("y() of the point at infinity");
    return xy_->second;
}

std::string CurvePoint::to_string() const {
    if (!xy_) return "O";
    return "(" + xy_->first.to_string() + ", " + xy_->second.to_string() + ")";
}

bool is_on_curve(const WeierstrassModel& e, const CurvePoint& p) {
    if (p.is_identity()) return true;
    const FieldElement& x = p.x();
    const FieldElement& y = p.y();
    if (x.kind() != e.field() || y.kind() != e.field()) return false;
    const FieldElement lhs = y * (y + e.a1() * x + e.a3());
    const FieldElement rhs = ((x + e.a2()) * x + e.a4()) * x + e.a6();
    return lhs == rhs;
}

CurvePoint negate(const WeierstrassModel& e, const CurvePoint& p) {
    if (p.is_identity()) return p;
    return {p.x(), -p.y() - e.a1() * p.x() - e.a3()};
}

CurvePoint add(const WeierstrassModel& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    const FieldElement& x1 = p.x();
    const FieldElement& y1 = p.y();
    const FieldElement& x2 = q.x();
    const FieldElement& y2 = q.y();
    FieldElement lambda, nu;
    if (x1 == x2) {
        const FieldElement d = y1 * 2 + e.a1() * x1 + e.a3();
        if (y1 + y2 + e.a1() * x2 + e.a3() == FieldElement::zero(e.field())) return {};
        const FieldElement xx = x1 * x1;
        lambda = (xx * 3 + e.a2() * x1 * 2 + e.a4() - e.a1() * y1) / d;
        nu = (-(xx * x1) + e.a4() * x1 + e.a6() * 2 - e.a3() * y1) / d;
    } else {
        const FieldElement dx = x2 - x1;
        lambda = (y2 - y1) / dx;
        nu = (y1 * x2 - y2 * x1) / dx;
    }
    FieldElement x3 = lambda * (lambda + e.a1()) - e.a2() - x1 - x2;
    FieldElement y3 = -((lambda + e.a1()) * x3) - nu - e.a3();
    return {std::move(x3), std::move(y3)};
}

CurvePoint scalar_mul(const WeierstrassModel& e, long n, const CurvePoint& p, long cap) {
    if (n > cap || -n > cap)
        throw ScalarCapExceeded("scalar multiple " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    CurvePoint base = n < 0 ? negate(e, p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc;
    while (k) {
        if (k & 1UL) acc = add(e, acc, base);
        k >>= 1U;
        if (k) base = add(e, base, base);
    }
    return acc;
}

ModelMap ModelMap::identity(FieldKind kind) {
    return {FieldElement::one(kind), FieldElement::zero(kind), FieldElement::zero(kind), FieldElement::zero(kind)};
}

ModelMap ModelMap::inverse() const {
    const FieldElement ui = u.inverse();
    const FieldElement ui2 = ui * ui;
    return {ui, -r * ui2, -s * ui, (r * s - t) * ui2 * ui};
}

std::string ModelMap::to_string() const {
    return "[u=" + u.to_string() + ", r=" + r.to_string() + ", s=" + s.to_string() + ", t=" + t.to_string() + "]";
}

ModelMap compose(const ModelMap& a, const ModelMap& b) {
    const FieldElement u2 = a.u * a.u;
    return {a.u * b.u, a.r + u2 * b.r, a.s + a.u * b.s, a.t + u2 * a.s * b.r + u2 * a.u * b.t};
}

WeierstrassModel transform(const WeierstrassModel& e, const ModelMap& m) {
    if (m.u.is_zero()) throw std::invalid_argument("model map with u = 0");
    if (m.is_identity()) return e;
    const auto& [a1, a2, a3, a4, a6] = e.a();
    const FieldElement &r = m.r, &s = m.s, &t = m.t;
    const FieldElement ui = m.u.inverse();
    const FieldElement ui2 = ui * ui;
    const FieldElement ui3 = ui2 * ui;
    const FieldElement ui4 = ui2 * ui2;
    const FieldElement rr = r * r;
    std::array<FieldElement, 5> n{
        (a1 + s * 2) * ui,
        (a2 - s * a1 + r * 3 - s * s) * ui2,
        (a3 + r * a1 + t * 2) * ui3,
        (a4 - s * a3 + r * a2 * 2 - (t + r * s) * a1 + rr * 3 - s * t * 2) * ui4,
        (a6 + r * a4 + rr * a2 + rr * r - t * a3 - t * t - r * t * a1) * ui4 * ui2,
    };
    return WeierstrassModel(std::move(n));
}

CurvePoint transport(const ModelMap& m, const CurvePoint& p) {
    if (p.is_identity()) return p;
    const FieldElement ui = m.u.inverse();
    const FieldElement ui2 = ui * ui;
    const FieldElement dx = p.x() - m.r;
    return {dx * ui2, (p.y() - m.s * dx - m.t) * ui2 * ui};
}

}  // namespace divcancel
