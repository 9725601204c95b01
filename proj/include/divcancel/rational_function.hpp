#pragma once

#include <gmpxx.h>

#include <string>

#include "divcancel/zpoly.hpp"

namespace divcancel {

/// Element of Q(t) in canonical form  scale * num / den.
///
/// num and den are primitive in Z[t] with positive leading coefficients and
/// coprime; scale carries all rational content.  Zero is scale 0, num 0,
/// den 1.  Two equal elements always have identical fields.
class RationalFunction {
public:
    RationalFunction() : den_(ZPoly::constant(1)) {}
    RationalFunction(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    explicit RationalFunction(const ZPoly& p);
    /// p / q for arbitrary nonzero q (normalized here).
    RationalFunction(const ZPoly& p, const ZPoly& q);

    static RationalFunction variable() { return RationalFunction(ZPoly::variable()); }

    bool is_zero() const { return scale_ == 0; }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    const mpq_class& scale() const { return scale_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RationalFunction operator-() const;
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const mpq_class& k);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Printed as a Q-coefficient polynomial, or "(num)/(den)" with a monic
    /// denominator; the output re-parses to the same element.
    std::string to_string() const;

private:
    static RationalFunction from_parts(mpq_class scale, ZPoly num, ZPoly den);

    mpq_class scale_ = 0;
    ZPoly num_;
    ZPoly den_;
};

/// Writes c * p as a polynomial with rational coefficients.
std::string format_rational_poly(const mpq_class& c, const ZPoly& p, char var = 't');

}  // namespace divcancel
