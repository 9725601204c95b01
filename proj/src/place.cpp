#include "divcancel/place.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modp.hpp"

namespace divcancel {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_qpoly(const ZPoly& p) {
    QPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = mpq_class(p[i]);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Remainder modulo a monic m.
QPoly qrem(QPoly a, const QPoly& m) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const mpq_class c = a.back();
        const std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] -= c * m[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Quotient and remainder for a general nonzero divisor b.
std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const mpq_class inv_lc = 1 / b.back();
    while (a.size() >= b.size()) {
        const mpq_class c = a.back() * inv_lc;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Inverse of a modulo m (coprime), by the extended Euclidean algorithm.
QPoly qinv_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m;
    QPoly r1 = qrem(a, m);
    QPoly s0;
    QPoly s1{1};
    while (!r1.empty()) {
        auto [q, r] = qdivrem(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::domain_error("residue: element is not invertible");
    const mpq_class c = 1 / r0[0];
    for (auto& x : s0) x *= c;
    return qrem(s0, m);
}

bool is_rational_square(const mpq_class& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

// Non-proper factor degrees compatible with the factorization pattern.
std::vector<bool> subset_sums(const std::vector<int>& degs, int total) {
    std::vector<bool> s(static_cast<std::size_t>(total) + 1, false);
    s[0] = true;
    for (int d : degs)
        for (int k = total; k >= d; --k)
            if (s[static_cast<std::size_t>(k - d)]) s[static_cast<std::size_t>(k)] = true;
    return s;
}

bool certify_irreducible(const ZPoly& pi) {
    const int d = pi.degree();
    if (d == 1) return true;
    if (gcd(pi, pi.derivative()).degree() > 0) return false;
    std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
    mpz_class q = 2;
    for (int tried = 0; tried < 300; ++tried) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        const modp::Field f{q.get_ui()};
        if (f.reduce(pi.leading()) == 0) continue;
        const modp::Poly pq = modp::reduce(pi, f);
        if (modp::degree(modp::gcd(pq, modp::derivative(pq, f), f)) > 0) continue;
        const auto sums = subset_sums(modp::factor_degrees(pq, f), d);
        bool any = false;
        for (int k = 1; k < d; ++k) {
            possible[static_cast<std::size_t>(k)] = possible[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
            any = any || possible[static_cast<std::size_t>(k)];
        }
        if (!any) return true;
    }
    return false;
}

}  // namespace

int multiplicity(const ZPoly& n, const ZPoly& pi) {
    if (n.is_zero()) throw std::domain_error("multiplicity of the zero polynomial");
    int k = 0;
    ZPoly cur = n;
    while (cur.degree() >= pi.degree()) {
        auto q = divide_exact(cur, pi);
        if (!q) break;
        cur = std::move(*q);
        ++k;
    }
    return k;
}

Place Place::rational_prime(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("place: " + p.get_str() + " is not prime");
    return Place(p);
}

Place Place::polynomial(const FieldElement& pi) {
    if (pi.kind() != FieldKind::function_field) throw std::invalid_argument("place: polynomial place requires Q(t)");
    const auto& f = pi.function();
    if (f.is_zero() || !f.is_polynomial() || f.num().degree() < 1)
        throw std::invalid_argument("place: pi must be a nonconstant polynomial");
    if (!certify_irreducible(f.num()))
        throw std::invalid_argument("place: could not certify " + f.to_string() + " irreducible over Q");
    return Place(f.num());
}

FieldElement Place::uniformizer() const {
    if (is_rational_prime()) return FieldElement(mpq_class(prime()));
    const ZPoly& m = modulus();
    const mpq_class inv_lc = 1 / mpq_class(m.leading());
    return FieldElement(RationalFunction(m) * inv_lc);
}

ExtInt Place::valuation(const FieldElement& x) const {
    if (x.kind() != field()) throw std::invalid_argument("valuation: element and place live in different fields");
    if (x.is_zero()) return ExtInt::infinity();
    if (is_rational_prime()) {
        const mpq_class& q = x.rational();
        mpz_class rest;
        const auto vn = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), prime().get_mpz_t()));
        const auto vd = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), prime().get_mpz_t()));
        return ExtInt(vn - vd);
    }
    const auto& f = x.function();
    const ZPoly& pi = modulus();
    const int vn = multiplicity(f.num(), pi);
    const int vd = f.den().is_one() ? 0 : multiplicity(f.den(), pi);
    return ExtInt(vn - vd);
}

std::string Place::to_string() const {
    if (is_rational_prime()) return "p=" + prime().get_str();
    return format_rational_poly(1 / mpq_class(modulus().leading()), modulus());
}

// ---------------------------------------------------------------------------

ResidueField::ResidueField(Place place) : place_(std::move(place)) {
    if (place_.is_rational_prime()) {
        char_ = place_.prime();
    } else {
        char_ = 0;
        const ZPoly& m = place_.modulus();
        const mpq_class lc(m.leading());
        monic_ = to_qpoly(m);
        for (auto& c : monic_) c /= lc;
    }
}

ResidueElement ResidueField::normalize(QPoly v) const {
    if (char_ != 0) {
        mpz_class r = 0;
        if (!v.empty()) {
            const mpz_class& p = char_;
            mpz_class num = v[0].get_num() % p;
            mpz_class den = v[0].get_den() % p;
            if (den < 0) den += p;
            if (den == 0) throw std::domain_error("residue: denominator divisible by p");
            mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            r = (num * den) % p;
            if (r < 0) r += p;
        }
        if (r == 0) return {};
        return ResidueElement{{mpq_class(r)}};
    }
    trim(v);
    if (v.size() >= monic_.size()) v = qrem(std::move(v), monic_);
    return ResidueElement{std::move(v)};
}

ResidueElement ResidueField::reduce(const FieldElement& x) const {
    if (x.kind() != place_.field()) throw std::invalid_argument("residue: element and place live in different fields");
    if (place_.valuation(x) < ExtInt(0)) throw std::domain_error("residue: element has negative valuation");
    if (x.is_zero()) return {};
    if (char_ != 0) return normalize({x.rational()});
    const auto& f = x.function();
    QPoly n = qrem(to_qpoly(f.num()), monic_);
    for (auto& c : n) c *= f.scale();
    if (f.den().is_one()) return normalize(std::move(n));
    const QPoly d = qrem(to_qpoly(f.den()), monic_);
    return normalize(qmul(n, qinv_mod(d, monic_)));
}

FieldElement ResidueField::lift(const ResidueElement& r) const {
    if (char_ != 0) return FieldElement(r.is_zero() ? mpq_class(0) : r.coeffs[0]);
    if (r.is_zero()) return FieldElement::zero(FieldKind::function_field);
    mpz_class l = 1;
    for (const auto& c : r.coeffs) l = lcm(l, mpz_class(c.get_den()));
    std::vector<mpz_class> ints(r.coeffs.size());
    for (std::size_t i = 0; i < ints.size(); ++i) ints[i] = r.coeffs[i].get_num() * (l / r.coeffs[i].get_den());
    const mpq_class inv_l = 1 / mpq_class(l);
    return FieldElement(RationalFunction(ZPoly(std::move(ints))) * inv_l);
}

ResidueElement ResidueField::from_integer(long k) const { return normalize({mpq_class(k)}); }

ResidueElement ResidueField::add(const ResidueElement& a, const ResidueElement& b) const {
    QPoly r = a.coeffs;
    if (b.coeffs.size() > r.size()) r.resize(b.coeffs.size());
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r[i] += b.coeffs[i];
    return normalize(std::move(r));
}

ResidueElement ResidueField::neg(const ResidueElement& a) const {
    QPoly r = a.coeffs;
    for (auto& c : r) c = -c;
    return normalize(std::move(r));
}

ResidueElement ResidueField::sub(const ResidueElement& a, const ResidueElement& b) const { return add(a, neg(b)); }

ResidueElement ResidueField::mul(const ResidueElement& a, const ResidueElement& b) const {
    return normalize(qmul(a.coeffs, b.coeffs));
}

ResidueElement ResidueField::inv(const ResidueElement& a) const {
    if (a.is_zero()) throw std::domain_error("residue: inverse of zero");
    if (char_ != 0) {
        mpz_class r = a.coeffs[0].get_num();
        mpz_invert(r.get_mpz_t(), r.get_mpz_t(), char_.get_mpz_t());
        return normalize({mpq_class(r)});
    }
    return normalize(qinv_mod(a.coeffs, monic_));
}

bool ResidueField::is_square(const ResidueElement& a) const {
    if (a.is_zero()) return true;
    if (char_ != 0) {
        if (char_ == 2) return true;
        const mpz_class v = a.coeffs[0].get_num();
        return mpz_legendre(v.get_mpz_t(), char_.get_mpz_t()) == 1;
    }
    if (monic_.size() == 2) return is_rational_square(a.coeffs.empty() ? mpq_class(0) : a.coeffs[0]);
    if (a.coeffs.size() == 1 && is_rational_square(a.coeffs[0])) return true;

    const ZPoly& pi = place_.modulus();
    int tested = 0;
    mpz_class q = 2;
    while (tested < 64 && q < 200000) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        const modp::Field f{q.get_ui()};
        if (f.reduce(pi.leading()) == 0) continue;
        bool bad = false;
        for (const auto& c : a.coeffs)
            if (f.reduce(mpz_class(c.get_den())) == 0) bad = true;
        if (bad) continue;
        const modp::Poly pq = modp::reduce(pi, f);
        if (modp::degree(modp::gcd(pq, modp::derivative(pq, f), f)) > 0) continue;
        modp::Poly aq(a.coeffs.size());
        for (std::size_t i = 0; i < aq.size(); ++i) aq[i] = f.reduce(a.coeffs[i]);
        modp::trim(aq);
        for (modp::u64 r = 0; r < f.p; ++r) {
            if (modp::eval(pq, r, f) != 0) continue;
            const modp::u64 val = modp::eval(aq, r, f);
            if (val == 0) continue;
            if (f.pow(val, (f.p - 1) / 2) != 1) return false;
            ++tested;
        }
    }
    return true;
}

bool ResidueField::quadratic_has_root(const ResidueElement& a, const ResidueElement& b,
                                      const ResidueElement& c) const {
    if (a.is_zero()) return !b.is_zero() || c.is_zero();
    if (char_ == 2) {
        // F_2: try both elements.
        for (long x = 0; x < 2; ++x) {
            const auto xv = from_integer(x);
            const auto val = add(add(mul(a, mul(xv, xv)), mul(b, xv)), c);
            if (val.is_zero()) return true;
        }
        return false;
    }
    const auto disc = sub(mul(b, b), mul(from_integer(4), mul(a, c)));
    return is_square(disc);
}

std::string ResidueField::to_string(const ResidueElement& a) const {
    if (a.is_zero()) return "0";
    if (char_ != 0) return a.coeffs[0].get_str();
    return lift(a).to_string();
}

}  // namespace divcancel
