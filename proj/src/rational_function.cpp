#include "divcancel/rational_function.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace divcancel {

namespace {

// Splits a nonzero integer polynomial into (content with sign, primitive part).
std::pair<mpz_class, ZPoly> split_content(const ZPoly& p) {
    mpz_class c = p.content();
    if (p.leading() < 0) c = -c;
    return {c, p.divexact(c)};
}

}  // namespace

RationalFunction::RationalFunction(const mpq_class& c) : den_(ZPoly::constant(1)) {
    if (c != 0) {
        scale_ = c;
        scale_.canonicalize();
        num_ = ZPoly::constant(1);
    }
}

RationalFunction::RationalFunction(const ZPoly& p) : den_(ZPoly::constant(1)) {
    if (p.is_zero()) return;
    auto [c, prim] = split_content(p);
    scale_ = c;
    num_ = std::move(prim);
}

RationalFunction::RationalFunction(const ZPoly& p, const ZPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    *this = from_parts(1, p, q);
}

RationalFunction RationalFunction::from_parts(mpq_class scale, ZPoly num, ZPoly den) {
    RationalFunction r;
    if (scale == 0 || num.is_zero()) return r;
    auto [cn, pn] = split_content(num);
    auto [cd, pd] = split_content(den);
    scale *= mpq_class(cn, 1);
    scale /= mpq_class(cd, 1);
    scale.canonicalize();
    if (!pd.is_one()) {
        ZPoly g = gcd(pn, pd);
        if (!g.is_one()) {
            pn = divexact(pn, g);
            pd = divexact(pd, g);
        }
    }
    r.scale_ = std::move(scale);
    r.num_ = std::move(pn);
    r.den_ = std::move(pd);
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.scale_ = -r.scale_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    RationalFunction r;
    r.scale_ = 1 / scale_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r;
    r.scale_ = a.scale_ * b.scale_;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ * b.num_;
        r.den_ = ZPoly::constant(1);
        return r;
    }
    // Cross-cancel: the inputs are reduced, so only num/den pairs from
    // different factors can share a factor.
    ZPoly an = a.num_;
    ZPoly bd = b.den_;
    ZPoly bn = b.num_;
    ZPoly ad = a.den_;
    if (!bd.is_one() && !an.is_constant()) {
        ZPoly g = gcd(an, bd);
        if (!g.is_one()) {
            an = divexact(an, g);
            bd = divexact(bd, g);
        }
    }
    if (!ad.is_one() && !bn.is_constant()) {
        ZPoly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = divexact(bn, g);
            ad = divexact(ad, g);
        }
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const mpq_class& k) {
    if (k == 0 || a.is_zero()) return {};
    RationalFunction r = a;
    r.scale_ *= k;
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Common rational scale: a.scale = sa/L, b.scale = sb/L with integers sa, sb.
    const mpz_class l = lcm(a.scale_.get_den(), b.scale_.get_den());
    const mpz_class sa = a.scale_.get_num() * (l / a.scale_.get_den());
    const mpz_class sb = b.scale_.get_num() * (l / b.scale_.get_den());
    if (a.den_ == b.den_) {
        ZPoly m = a.num_ * sa + b.num_ * sb;
        if (m.is_zero()) return {};
        auto [c, pm] = split_content(m);
        RationalFunction r;
        r.scale_ = mpq_class(c, l);
        r.scale_.canonicalize();
        if (a.den_.is_one()) {
            r.num_ = std::move(pm);
            r.den_ = a.den_;
            return r;
        }
        ZPoly g = gcd(pm, a.den_);
        r.num_ = g.is_one() ? std::move(pm) : divexact(pm, g);
        r.den_ = g.is_one() ? a.den_ : divexact(a.den_, g);
        return r;
    }
    const ZPoly g = gcd(a.den_, b.den_);
    const ZPoly a_cof = g.is_one() ? a.den_ : divexact(a.den_, g);
    const ZPoly b_cof = g.is_one() ? b.den_ : divexact(b.den_, g);
    ZPoly m = a.num_ * b_cof * sa + b.num_ * a_cof * sb;
    if (m.is_zero()) return {};
    auto [c, pm] = split_content(m);
    ZPoly den = a_cof * b.den_;
    RationalFunction r;
    r.scale_ = mpq_class(c, l);
    r.scale_.canonicalize();
    // Any common factor of the new numerator and the lcm divides g.
    if (!g.is_one()) {
        ZPoly h = gcd(pm, g);
        if (!h.is_one()) {
            pm = divexact(pm, h);
            den = divexact(den, h);
        }
    }
    r.num_ = std::move(pm);
    r.den_ = std::move(den);
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

std::string format_rational_poly(const mpq_class& c, const ZPoly& p, char var) {
    if (c == 0 || p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        mpq_class coef = c * mpq_class(p[k]);
        mpq_class mag = abs(coef);
        if (first)
            os << (coef < 0 ? "-" : "");
        else
            os << (coef < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return format_rational_poly(scale_, num_);
    // Make the printed denominator monic.
    const mpq_class lc(den_.leading());
    return "(" + format_rational_poly(scale_ / lc, num_) + ")/(" + format_rational_poly(1 / lc, den_) + ")";
}

}  // namespace divcancel
