#include "divcancel/divpoly.hpp"

#include <stdexcept>

namespace divcancel {

DivPolyTable::DivPolyTable(const Invariants& inv, const FieldElement& x, int n_max) : x_(x) {
    if (n_max < 1) throw std::invalid_argument("division polynomial table needs n_max >= 1");
    const FieldElement &b2 = inv.b2, &b4 = inv.b4, &b6 = inv.b6, &b8 = inv.b8;
    const FieldKind kind = x.kind();
    const FieldElement x2 = x * x;
    const FieldElement x3 = x2 * x;
    F_ = x3 * 4 + b2 * x2 + b4 * x * 2 + b6;
    const FieldElement F2 = F_ * F_;

    const std::size_t size = static_cast<std::size_t>(n_max) + 2;
    f_.reserve(std::max<std::size_t>(size, 5));
    f_.push_back(FieldElement::zero(kind));
    f_.push_back(FieldElement::one(kind));
    f_.push_back(FieldElement::one(kind));
    f_.push_back(x3 * x * 3 + b2 * x3 + b4 * x2 * 3 + b6 * x * 3 + b8);
    f_.push_back(x3 * x3 * 2 + b2 * x3 * x2 + b4 * x3 * x * 5 + b6 * x3 * 10 + b8 * x2 * 10 +
                 (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6));
    for (std::size_t n = 5; n < size; ++n) {
        const std::size_t m = n / 2;
        if (n % 2 == 1) {
            FieldElement u = f_[m + 2] * f_[m] * f_[m] * f_[m];
            FieldElement w = f_[m - 1] * f_[m + 1] * f_[m + 1] * f_[m + 1];
            if (m % 2 == 0)
                u *= F2;
            else
                w *= F2;
            f_.push_back(u - w);
        } else {
            f_.push_back(f_[m] * (f_[m + 2] * f_[m - 1] * f_[m - 1] - f_[m - 2] * f_[m + 1] * f_[m + 1]));
        }
    }
    f_.resize(size);
}

FieldElement DivPolyTable::psi_sq(int n) const {
    const FieldElement& v = f(n);
    return n % 2 == 0 ? F_ * v * v : v * v;
}

FieldElement DivPolyTable::psi_adjacent(int n) const {
    FieldElement v = f(n - 1) * f(n + 1);
    if (n % 2 == 1) v *= F_;
    return v;
}

FieldElement DivPolyTable::phi(int n) const { return x_ * psi_sq(n) - psi_adjacent(n); }

namespace {

void require_affine(const CurvePoint& p) {
    if (p.is_identity()) throw std::invalid_argument("division polynomials are evaluated at an affine point, not O");
}

}  // namespace

std::vector<FieldElement> psi_values(const WeierstrassModel& e, const CurvePoint& p, int n_max) {
    require_affine(p);
    const DivPolyTable table(e.invariants(), p.x(), std::max(n_max, 1));
    const FieldElement psi2 = p.y() * 2 + e.a1() * p.x() + e.a3();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(n % 2 == 0 ? psi2 * table.f(n) : table.f(n));
    return out;
}

std::vector<DivPolyEval> divpoly_evals(const WeierstrassModel& e, const CurvePoint& p, int n_max) {
    require_affine(p);
    const DivPolyTable table(e.invariants(), p.x(), n_max);
    const FieldElement psi2 = p.y() * 2 + e.a1() * p.x() + e.a3();
    std::vector<DivPolyEval> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back({n, n % 2 == 0 ? psi2 * table.f(n) : table.f(n), table.psi_sq(n), table.phi(n)});
    return out;
}

FieldElement phi_value(const WeierstrassModel& e, const CurvePoint& p, int n) {
    require_affine(p);
    return DivPolyTable(e.invariants(), p.x(), n).phi(n);
}

std::optional<FieldElement> x_via_divpoly(const WeierstrassModel& e, const CurvePoint& p, int n) {
    require_affine(p);
    const DivPolyTable table(e.invariants(), p.x(), n);
    const FieldElement d = table.psi_sq(n);
    if (d.is_zero()) return std::nullopt;
    return table.phi(n) / d;
}

}  // namespace divcancel
