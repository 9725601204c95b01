#include "divcancel/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modp.hpp"

namespace divcancel {

namespace {

const mpz_class kZero = 0;

// Below this length the schoolbook product beats packing.
constexpr std::size_t kKroneckerThreshold = 12;

std::size_t bits(const mpz_class& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

// Kronecker substitution: evaluate both factors at 2^(64*L), multiply the
// two integers with GMP, and read the signed coefficients back out as
// balanced digits.
ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t terms = std::min(na, nb);
    std::size_t log_terms = 0;
    while ((std::size_t{1} << log_terms) < terms) ++log_terms;
    const std::size_t need = a.max_bits() + b.max_bits() + log_terms + 2;
    const std::size_t limbs = (need + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

    auto pack = [limbs](const ZPoly& p, mpz_class& out) {
        std::vector<mp_limb_t> pos(limbs * p.size(), 0);
        std::vector<mp_limb_t> neg(limbs * p.size(), 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            const mpz_srcptr c = p[i].get_mpz_t();
            const std::size_t n = mpz_size(c);
            const mp_limb_t* src = mpz_limbs_read(c);
            auto& dst = mpz_sgn(c) < 0 ? neg : pos;
            std::copy(src, src + n, dst.begin() + static_cast<std::ptrdiff_t>(i * limbs));
        }
        mpz_t tp;
        mpz_t tn;
        mpz_roinit_n(tp, pos.data(), static_cast<mp_size_t>(pos.size()));
        mpz_roinit_n(tn, neg.data(), static_cast<mp_size_t>(neg.size()));
        mpz_sub(out.get_mpz_t(), tp, tn);
    };

    mpz_class pa;
    mpz_class pb;
    pack(a, pa);
    pack(b, pb);
    mpz_class prod = pa * pb;
    const bool negative = prod < 0;
    if (negative) prod = -prod;

    const std::size_t out_terms = na + nb - 1;
    const std::size_t avail = mpz_size(prod.get_mpz_t());
    const mp_limb_t* data = mpz_limbs_read(prod.get_mpz_t());
    mpz_class half = mpz_class(1) << (limbs * GMP_NUMB_BITS - 1);
    mpz_class full = half << 1;

    std::vector<mpz_class> out(out_terms);
    bool carry = false;
    for (std::size_t i = 0; i < out_terms; ++i) {
        const std::size_t lo = i * limbs;
        mpz_class digit;
        if (lo < avail) {
            mpz_t view;
            mpz_roinit_n(view, data + lo, static_cast<mp_size_t>(std::min(limbs, avail - lo)));
            digit = mpz_class(view);
        }
        if (carry) digit += 1;
        if (digit >= half) {
            digit -= full;
            carry = true;
        } else {
            carry = false;
        }
        out[i] = negative ? mpz_class(-digit) : digit;
    }
    return ZPoly(std::move(out));
}

}  // namespace

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

ZPoly ZPoly::monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& ZPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= k;
    return *this;
}

ZPoly mul_classical(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b * a[0];
    if (b.size() == 1) return a * b[0];
    if (std::min(a.size(), b.size()) < kKroneckerThreshold) return mul_classical(a, b);
    return mul_kronecker(a, b);
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    return divexact(g);
}

ZPoly ZPoly::divexact(const mpz_class& k) const {
    if (k == 1) return *this;
    ZPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    return r;
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(d));
}

std::size_t ZPoly::max_bits() const {
    std::size_t m = 0;
    for (const auto& c : c_) m = std::max(m, bits(c));
    return m;
}

std::string ZPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

ZPoly pow(const ZPoly& base, unsigned exponent) {
    ZPoly result = ZPoly::constant(1);
    ZPoly b = base;
    while (exponent) {
        if (exponent & 1U) result = result * b;
        exponent >>= 1U;
        if (exponent) b = b * b;
    }
    return result;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("ZPoly: division by zero polynomial");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    if (b.size() == 1) {
        for (const auto& c : a.coeffs())
            if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
        return a.divexact(b[0]);
    }
    // Cheap modular rejection before the big-number long division.
    {
        const modp::Field f{modp::large_prime(0)};
        if (f.reduce(b.leading()) != 0) {
            const auto rb = modp::reduce(b, f);
            if (!modp::rem(modp::reduce(a, f), rb, f).empty()) return std::nullopt;
        }
    }
    std::vector<mpz_class> r = a.coeffs();
    const std::size_t nb = b.size();
    std::vector<mpz_class> q(a.size() - nb + 1);
    const mpz_class& lc = b.leading();
    const bool unit_lc = (lc == 1);
    mpz_class tmp;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = r[k + nb - 1];
        if (top == 0) continue;
        if (unit_lc) {
            q[k] = top;
        } else {
            if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
            mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        }
        for (std::size_t j = 0; j < nb; ++j)
            mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 0; i + 1 < nb && i < r.size(); ++i)
        if (r[i] != 0) return std::nullopt;
    return ZPoly(std::move(q));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::domain_error("ZPoly: inexact division");
    return std::move(*q);
}

namespace {

mpz_class symmetric_residue(modp::u64 r, modp::u64 p) {
    if (r > p / 2) return -mpz_class(static_cast<unsigned long>(p - r));
    return mpz_class(static_cast<unsigned long>(r));
}

// gcd of two primitive polynomials of positive degree.  The accumulator keeps
// symmetric residues so a coefficient stops changing once the modulus
// exceeds twice its magnitude.
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b) {
    const mpz_class lc_gcd = gcd(a.leading(), b.leading());
    std::vector<mpz_class> acc;
    mpz_class modulus = 0;
    int acc_degree = std::min(a.degree(), b.degree()) + 1;
    ZPoly last_failed;

    for (std::size_t k = 0;; ++k) {
        const modp::Field f{modp::large_prime(k)};
        if (f.reduce(a.leading()) == 0 || f.reduce(b.leading()) == 0) continue;
        modp::Poly g = modp::gcd(modp::reduce(a, f), modp::reduce(b, f), f);
        const int dg = modp::degree(g);
        if (dg == 0) return ZPoly::constant(1);
        if (dg > acc_degree) continue;  // unlucky prime
        const modp::u64 scale = f.reduce(lc_gcd);
        for (auto& c : g) c = f.mul(c, scale);
        if (dg < acc_degree) {
            acc_degree = dg;
            acc.assign(g.size(), 0);
            for (std::size_t i = 0; i < g.size(); ++i) acc[i] = symmetric_residue(g[i], f.p);
            modulus = static_cast<unsigned long>(f.p);
            continue;
        }
        const modp::u64 m_inv = f.inv(f.reduce(modulus));
        bool changed = false;
        for (std::size_t i = 0; i < acc.size(); ++i) {
            const modp::u64 delta = f.mul(f.sub(g[i], f.reduce(acc[i])), m_inv);
            if (delta == 0) continue;
            changed = true;
            if (delta > f.p / 2)
                mpz_submul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(f.p - delta));
            else
                mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(delta));
        }
        modulus *= static_cast<unsigned long>(f.p);
        if (changed) continue;
        ZPoly candidate = ZPoly(acc).primitive_part();
        if (candidate == last_failed) continue;
        if (divide_exact(a, candidate) && divide_exact(b, candidate)) return candidate;
        last_failed = std::move(candidate);
    }
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    const mpz_class cg = gcd(a.content(), b.content());
    if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(cg);
    const ZPoly pa = a.primitive_part();
    const ZPoly pb = b.primitive_part();
    if (pa == pb) return pa * cg;
    if (pa.degree() <= pb.degree()) {
        if (divide_exact(pb, pa)) return pa * cg;
    } else if (divide_exact(pa, pb)) {
        return pb * cg;
    }
    return gcd_primitive(pa, pb) * cg;
}

}  // namespace divcancel
