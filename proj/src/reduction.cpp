#include "divcancel/reduction.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace divcancel {

std::string KodairaType::to_string() const {
    switch (symbol) {
        case Symbol::I0: return "I0";
        case Symbol::I: return "I" + std::to_string(m);
        case Symbol::II: return "II";
        case Symbol::III: return "III";
        case Symbol::IV: return "IV";
        case Symbol::I0star: return "I0*";
        case Symbol::Istar: return "I" + std::to_string(m) + "*";
        case Symbol::IVstar: return "IV*";
        case Symbol::IIIstar: return "III*";
        case Symbol::IIstar: return "II*";
    }
    return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
    using S = Symbol;
    if (s == "II") return {S::II, 0};
    if (s == "III") return {S::III, 0};
    if (s == "IV") return {S::IV, 0};
    if (s == "II*") return {S::IIstar, 0};
    if (s == "III*") return {S::IIIstar, 0};
    if (s == "IV*") return {S::IVstar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        const bool star = s.back() == '*';
        const std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const long m = std::stol(digits);
            if (m == 0) return {star ? S::I0star : S::I0, 0};
            return {star ? S::Istar : S::I, m};
        }
    }
    throw std::invalid_argument("unknown Kodaira symbol '" + s + "'");
}

namespace {

std::string phi_structure_of(const KodairaType& k) {
    using S = KodairaType::Symbol;
    switch (k.symbol) {
        case S::I0:
        case S::II:
        case S::IIstar: return "trivial";
        case S::I: return k.m == 1 ? "trivial" : "Z/" + std::to_string(k.m);
        case S::III:
        case S::IIIstar: return "Z/2";
        case S::IV:
        case S::IVstar: return "Z/3";
        case S::I0star: return "Z/2 x Z/2";
        case S::Istar: return k.m % 2 == 0 ? "Z/2 x Z/2" : "Z/4";
    }
    return "?";
}

class Tate {
public:
    Tate(const Place& place) : place_(place), k_(place), kind_(place.field()), pi_(place.uniformizer()) {
        const mpz_class& c = k_.characteristic();
        p_ = (c == 2 || c == 3) ? c.get_si() : 0;
    }

    TateResult run(const WeierstrassModel& input) {
        ModelMap total = ModelMap::identity(kind_);
        WeierstrassModel c = input;

        // Make the model integral.
        long e = 0;
        for (int i = 0; i < 5; ++i) {
            const ExtInt v = val(input.a()[i]);
            if (v.is_finite() && v.value() < 0) {
                const long w = weights[i];
                e = std::max(e, (-v.value() + w - 1) / w);
            }
        }
        if (e > 0) apply_scaling(c, total, pi_.inverse().pow(static_cast<unsigned>(e)));
        bool was_minimal = true;

        for (;;) {
            const WeierstrassModel start = c;
            ModelMap pass = ModelMap::identity(kind_);
            ReductionData rd;
            rd.normalization = ModelMap::identity(kind_);
            rd.v_delta = val(c.discriminant()).value();
            auto finish = [&](KodairaType t) {
                rd.type = t;
                rd.phi_structure = phi_structure_of(t);
                return TateResult{start, total, rd, was_minimal};
            };
            if (rd.v_delta == 0) return finish({KodairaType::Symbol::I0, 0});

            const Invariants* iv = &c.invariants();
            FieldElement r, t;
            if (p_ == 2) {
                if (pdiv(iv->b2)) {
                    r = preduce(c.a4());
                    t = preduce(((r + c.a2()) * r + c.a4()) * r + c.a6());
                } else {
                    const FieldElement tmp = pinv(c.a1());
                    r = preduce(tmp * c.a3());
                    t = preduce(tmp * (c.a4() + r * r));
                }
            } else if (p_ == 3) {
                r = pdiv(iv->b2) ? preduce(-iv->b6) : preduce(-pinv(iv->b2) * iv->b4);
                t = preduce(c.a1() * r + c.a3());
            } else {
                if (pdiv(iv->c4))
                    r = preduce(-pinv(FieldElement(kind_, 12)) * iv->b2);
                else
                    r = preduce(-pinv(iv->c4 * 12) * (iv->c6 + iv->b2 * iv->c4));
                t = preduce(-half() * (c.a1() * r + c.a3()));
            }
            rst(c, pass, r, zero(), t);
            rd.normalization = pass;
            iv = &c.invariants();
            if (!pdiv(c.a3()) || !pdiv(c.a4()) || !pdiv(c.a6()))
                throw std::logic_error("tate: singular point not moved to the origin");

            if (!pdiv(iv->c4)) {
                rd.split = quadroots(one(), c.a1(), -c.a2());
                return finish({KodairaType::Symbol::I, rd.v_delta});
            }
            if (v(c.a6()) < 2) return finish({KodairaType::Symbol::II, 0});
            if (v(iv->b8) < 3) return finish({KodairaType::Symbol::III, 0});
            if (v(iv->b6) < 3) return finish({KodairaType::Symbol::IV, 0});

            FieldElement s;
            if (p_ == 2) {
                s = preduce(c.a2());
                t = pi_ * preduce(c.a6() / (pi_ * pi_));
            } else if (p_ == 3) {
                s = c.a1();
                t = c.a3();
            } else {
                s = -c.a1() * half();
                t = -c.a3() * half();
            }
            rst(c, pass, zero(), s, t);

            const FieldElement pi2 = pi_ * pi_;
            const FieldElement pi3 = pi2 * pi_;
            const FieldElement b = c.a2() / pi_;
            const FieldElement cc = c.a4() / pi2;
            const FieldElement d = c.a6() / pi3;
            const FieldElement w = d * d * 27 - b * b * cc * cc + b * b * b * d * 4 - b * cc * d * 18 + cc * cc * cc * 4;
            const FieldElement x = cc * 3 - b * b;
            const int sw = pdiv(w) ? (pdiv(x) ? 3 : 2) : 1;

            if (sw == 1) return finish({KodairaType::Symbol::I0star, 0});

            if (sw == 2) {
                if (p_ == 2)
                    r = preduce(cc);
                else if (p_ == 3)
                    r = preduce(cc * pinv(b));
                else
                    r = preduce((b * cc - d * 9) * pinv(x * 2));
                rst(c, pass, pi_ * r, zero(), zero());
                rd.star_frame = pass;
                long ix = 3, iy = 3;
                FieldElement mx = pi2, my = pi2;
                for (;;) {
                    FieldElement a2t = c.a2() / pi_;
                    FieldElement a3t = c.a3() / my;
                    FieldElement a4t = c.a4() / (pi_ * mx);
                    FieldElement a6t = c.a6() / (mx * my);
                    if (!pdiv(a3t * a3t + a6t * 4)) break;
                    t = p_ == 2 ? my * preduce(a6t) : my * preduce(-a3t * half());
                    rst(c, pass, zero(), zero(), t);
                    my *= pi_;
                    ++iy;
                    a2t = c.a2() / pi_;
                    a4t = c.a4() / (pi_ * mx);
                    a6t = c.a6() / (mx * my);
                    if (!pdiv(a4t * a4t - a6t * a2t * 4)) break;
                    r = p_ == 2 ? mx * preduce(a6t * pinv(a2t)) : mx * preduce(-a4t * pinv(a2t * 2));
                    rst(c, pass, r, zero(), zero());
                    mx *= pi_;
                    ++ix;
                }
                return finish({KodairaType::Symbol::Istar, ix + iy - 5});
            }

            // sw == 3: triple root
            if (p_ == 2)
                r = preduce(b);
            else if (p_ == 3)
                r = preduce(-d);
            else
                r = preduce(-b * pinv(FieldElement(kind_, 3)));
            rst(c, pass, pi_ * r, zero(), zero());
            const FieldElement x3 = c.a3() / pi2;
            const FieldElement x6 = c.a6() / (pi2 * pi2);
            if (!pdiv(x3 * x3 + x6 * 4)) return finish({KodairaType::Symbol::IVstar, 0});
            t = p_ == 2 ? -pi2 * preduce(x6) : pi2 * preduce(-x3 * half());
            rst(c, pass, zero(), zero(), t);
            if (v(c.a4()) < 4) return finish({KodairaType::Symbol::IIIstar, 0});
            if (v(c.a6()) < 6) return finish({KodairaType::Symbol::IIstar, 0});

            // Not minimal: divide out by the uniformizer and start again.
            total = compose(total, pass);
            apply_scaling(c, total, pi_);
            was_minimal = false;
        }
    }

private:
    static constexpr long weights[5] = {1, 2, 3, 4, 6};

    FieldElement zero() const { return FieldElement::zero(kind_); }
    FieldElement one() const { return FieldElement::one(kind_); }
    FieldElement half() const { return p_ == 2 ? zero() : pinv(FieldElement(kind_, 2)); }

    ExtInt val(const FieldElement& x) const { return place_.valuation(x); }
    /// Valuation with 0 mapped to a large finite value, for threshold tests.
    long v(const FieldElement& x) const {
        const ExtInt e = val(x);
        return e.is_infinite() ? std::numeric_limits<long>::max() : e.value();
    }
    bool pdiv(const FieldElement& x) const { return x.is_zero() || v(x) > 0; }
    FieldElement preduce(const FieldElement& x) const { return k_.lift(k_.reduce(x)); }
    FieldElement pinv(const FieldElement& x) const { return k_.lift(k_.inv(k_.reduce(x))); }

    bool quadroots(const FieldElement& a, const FieldElement& b, const FieldElement& c) const {
        return k_.quadratic_has_root(k_.reduce(a), k_.reduce(b), k_.reduce(c));
    }

    void rst(WeierstrassModel& c, ModelMap& pass, const FieldElement& r, const FieldElement& s,
             const FieldElement& t) const {
        const ModelMap m{one(), r, s, t};
        if (m.is_identity()) return;
        c = transform(c, m);
        pass = compose(pass, m);
    }

    void apply_scaling(WeierstrassModel& c, ModelMap& total, const FieldElement& u) const {
        const ModelMap m{u, zero(), zero(), zero()};
        c = transform(c, m);
        total = compose(total, m);
    }

    const Place& place_;
    ResidueField k_;
    FieldKind kind_;
    FieldElement pi_;
    long p_ = 0;  // 2 or 3 when the residue characteristic is special, else 0
};

long fold(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    return std::min(a, m - a);
}

}  // namespace

TateResult tate(const WeierstrassModel& e, const Place& place) {
    if (e.field() != place.field()) throw std::invalid_argument("curve and place live over different fields");
    return Tate(place).run(e);
}

MinimalModel minimalize_at(const WeierstrassModel& e, const Place& place) {
    TateResult r = tate(e, place);
    return {std::move(r.minimal), std::move(r.map), r.was_minimal};
}

std::string ComponentIndex::to_string() const {
    switch (kind) {
        case Kind::identity: return "identity";
        case Kind::index: return "a=" + std::to_string(a);
        case Kind::nonidentity: return "nonidentity";
        case Kind::near: return "near";
        case Kind::far: return "far";
    }
    return "?";
}

bool is_singular_mod_v(const Place& place, const ReductionData& rd, const CurvePoint& p) {
    if (p.is_identity() || rd.type.symbol == KodairaType::Symbol::I0) return false;
    const CurvePoint q = transport(rd.normalization, p);
    return place.valuation(q.x()) > 0 && place.valuation(q.y()) > 0;
}

ComponentIndex component_of(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                            const CurvePoint& p) {
    using K = ComponentIndex::Kind;
    using S = KodairaType::Symbol;
    if (!is_singular_mod_v(place, rd, p)) return {};
    switch (rd.type.symbol) {
        case S::I: {
            const long m = rd.type.m;
            const ExtInt v2 = place.valuation(p.y() * 2 + minimal.a1() * p.x() + minimal.a3());
            const long a = v2.is_infinite() ? m / 2 : std::min(v2.value(), m / 2);
            if (a <= 0) throw std::logic_error("component_of: singular point with trivial I_m index");
            return {K::index, a};
        }
        case S::III:
        case S::IV:
        case S::IIIstar:
        case S::IVstar: return {K::nonidentity, 0};
        case S::I0star: return {K::near, 0};
        case S::Istar: {
            const CurvePoint q = transport(*rd.star_frame, p);
            return place.valuation(q.x()) == 1 ? ComponentIndex{K::near, 0} : ComponentIndex{K::far, 0};
        }
        case S::I0:
        case S::II:
        case S::IIstar: break;
    }
    throw std::logic_error("component_of: singular point on a fibre with trivial component group");
}

long order_m_P(const ReductionData& rd, const ComponentIndex& c) {
    using K = ComponentIndex::Kind;
    using S = KodairaType::Symbol;
    switch (c.kind) {
        case K::identity: return 1;
        case K::index: return rd.type.m / std::gcd(c.a, rd.type.m);
        case K::nonidentity:
            return (rd.type.symbol == S::III || rd.type.symbol == S::IIIstar) ? 2 : 3;
        case K::near: return 2;
        case K::far: return rd.type.m % 2 == 1 ? 4 : 2;
    }
    return 1;
}

ComponentIndex component_scale(const ReductionData& rd, const ComponentIndex& c, long n) {
    using K = ComponentIndex::Kind;
    if (c.is_identity()) return c;
    const long order = order_m_P(rd, c);
    const long r = ((n % order) + order) % order;
    if (r == 0) return {};
    switch (c.kind) {
        case K::index: {
            const long a = fold(c.a * r, rd.type.m);
            return a == 0 ? ComponentIndex{} : ComponentIndex{K::index, a};
        }
        case K::far:
            // Z/4: far, near, far, identity
            if (order == 4 && r == 2) return {K::near, 0};
            return c;
        default: return c;
    }
}

namespace {

struct ResiduePoint {
    bool inf = true;
    ResidueElement x, y;
};

std::size_t residue_size(const ResidueElement& e) {
    std::size_t s = 0;
    for (const auto& c : e.coeffs) s += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    return s;
}

}  // namespace

std::optional<long> find_n_P(const Place& place, const WeierstrassModel& minimal, const ReductionData& rd,
                             const CurvePoint& p, long bound) {
    if (p.is_identity()) return 1;
    const long mp = order_m_P(rd, component_of(place, minimal, rd, p));
    if (mp > bound) return std::nullopt;
    const CurvePoint q = scalar_mul(minimal, mp, p, std::max(mp, default_scalar_cap));
    if (q.is_identity() || place.valuation(q.x()) < 0) return mp;

    const ResidueField k(place);
    std::array<ResidueElement, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = k.reduce(minimal.a()[i]);
    const ResidueElement two = k.from_integer(2), three = k.from_integer(3);
    auto add = [&](const ResiduePoint& P, const ResiduePoint& Q) -> ResiduePoint {
        if (P.inf) return Q;
        if (Q.inf) return P;
        ResidueElement lambda, nu;
        if (P.x == Q.x) {
            const ResidueElement s = k.add(k.add(k.add(P.y, Q.y), k.mul(a[0], Q.x)), a[2]);
            if (s.is_zero()) return {};
            const ResidueElement d = k.add(k.add(k.mul(two, P.y), k.mul(a[0], P.x)), a[2]);
            const ResidueElement di = k.inv(d);
            const ResidueElement xx = k.mul(P.x, P.x);
            lambda = k.mul(k.sub(k.add(k.add(k.mul(three, xx), k.mul(k.mul(two, a[1]), P.x)), a[3]), k.mul(a[0], P.y)), di);
            nu = k.mul(k.sub(k.add(k.add(k.neg(k.mul(xx, P.x)), k.mul(a[3], P.x)), k.mul(two, a[4])), k.mul(a[2], P.y)),
                       di);
        } else {
            const ResidueElement di = k.inv(k.sub(Q.x, P.x));
            lambda = k.mul(k.sub(Q.y, P.y), di);
            nu = k.mul(k.sub(k.mul(P.y, Q.x), k.mul(Q.y, P.x)), di);
        }
        ResiduePoint R;
        R.inf = false;
        R.x = k.sub(k.sub(k.sub(k.mul(lambda, k.add(lambda, a[0])), a[1]), P.x), Q.x);
        R.y = k.sub(k.sub(k.neg(k.mul(k.add(lambda, a[0]), R.x)), nu), a[2]);
        return R;
    };

    const ResiduePoint base{false, k.reduce(q.x()), k.reduce(q.y())};
    const std::size_t size_limit = 64 * (residue_size(base.x) + residue_size(base.y)) + 4096;
    ResiduePoint acc = base;
    for (long j = 2; mp * j <= bound; ++j) {
        acc = add(acc, base);
        if (acc.inf) return mp * j;
        // A point of finite order has multiples of bounded height.
        if (residue_size(acc.x) + residue_size(acc.y) > size_limit) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace divcancel
