#pragma once

#include <optional>
#include <vector>

#include "divcancel/curve.hpp"

namespace divcancel {

/// Division polynomials evaluated at a single x, without ever dividing.
///
/// psi_n = f_n for odd n and psi_n = psi_2 f_n for even n, where every f_n
/// is a polynomial in x; F = psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
class DivPolyTable {
public:
    /// Fills f_0 .. f_{n_max + 1}.
    DivPolyTable(const Invariants& inv, const FieldElement& x, int n_max);

    int n_max() const { return static_cast<int>(f_.size()) - 2; }
    const FieldElement& x() const { return x_; }
    const FieldElement& psi2_sq() const { return F_; }
    const FieldElement& f(int n) const { return f_.at(static_cast<std::size_t>(n)); }

    /// psi_n^2(x), for 0 <= n <= n_max + 1.
    FieldElement psi_sq(int n) const;
    /// psi_{n-1} psi_{n+1}, for 1 <= n <= n_max.
    FieldElement psi_adjacent(int n) const;
    /// phi_n(x) = x psi_n^2 - psi_{n-1} psi_{n+1}, for 1 <= n <= n_max.
    FieldElement phi(int n) const;

private:
    FieldElement x_;
    FieldElement F_;
    std::vector<FieldElement> f_;
};

struct DivPolyEval {
    int n;
    FieldElement psi;     // psi_n(P)
    FieldElement psi_sq;  // psi_n^2(x(P))
    FieldElement phi;     // phi_n(x(P))
};

/// psi_0(P) .. psi_N(P).  Throws std::invalid_argument for P = O.
std::vector<FieldElement> psi_values(const WeierstrassModel& e, const CurvePoint& p, int n_max);

/// One record per n = 1 .. n_max.
std::vector<DivPolyEval> divpoly_evals(const WeierstrassModel& e, const CurvePoint& p, int n_max);

FieldElement phi_value(const WeierstrassModel& e, const CurvePoint& p, int n);

/// x(nP) = phi_n / psi_n^2, or nullopt when psi_n^2(x(P)) = 0 (nP = O).
std::optional<FieldElement> x_via_divpoly(const WeierstrassModel& e, const CurvePoint& p, int n);

}  // namespace divcancel
