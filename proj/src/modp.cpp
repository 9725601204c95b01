#include "modp.hpp"

#include <mutex>
#include <utility>

namespace divcancel::modp {

Poly reduce(const ZPoly& a, const Field& f) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.reduce(a[i]);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& b, const Field& f) {
    const int db = degree(b);
    const u64 inv_lc = f.inv(b.back());
    while (degree(a) >= db) {
        const u64 q = f.mul(a.back(), inv_lc);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = f.sub(a[shift + j], f.mul(q, b[j]));
        trim(a);
    }
    return a;
}

Poly make_monic(Poly a, const Field& f) {
    if (a.empty()) return a;
    const u64 inv_lc = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv_lc);
    return a;
}

Poly gcd(Poly a, Poly b, const Field& f) {
    while (!b.empty()) {
        a = rem(std::move(a), b, f);
        std::swap(a, b);
    }
    return make_monic(std::move(a), f);
}

Poly powmod(Poly base, mpz_class e, const Poly& m, const Field& f) {
    Poly result{1 % f.p};
    result = rem(std::move(result), m, f);
    base = rem(std::move(base), m, f);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, f), m, f);
        base = rem(mul(base, base, f), m, f);
        e >>= 1;
    }
    return result;
}

u64 eval(const Poly& a, u64 x, const Field& f) {
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = f.add(f.mul(r, x), *it);
    return r;
}

Poly derivative(const Poly& a, const Field& f) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(a[i], i % f.p);
    trim(d);
    return d;
}

std::vector<int> factor_degrees(const Poly& squarefree, const Field& f) {
    std::vector<int> out;
    Poly rest = make_monic(squarefree, f);
    const Poly x{0, 1};
    Poly xq = x;  // x^(p^i) mod rest
    for (int i = 1; 2 * i <= degree(rest); ++i) {
        xq = powmod(xq, mpz_class(static_cast<unsigned long>(f.p)), rest, f);
        Poly diff = xq;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = f.sub(diff[1], 1);
        trim(diff);
        Poly g = gcd(rest, diff, f);
        const int dg = degree(g);
        if (dg > 0) {
            for (int k = 0; k < dg / i; ++k) out.push_back(i);
            // rest /= g
            Poly q;
            Poly r = rest;
            q.assign(r.size() - g.size() + 1, 0);
            while (degree(r) >= dg) {
                const u64 c = r.back();  // g is monic
                const std::size_t shift = r.size() - g.size();
                q[shift] = c;
                for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, g[j]));
                trim(r);
            }
            trim(q);
            rest = std::move(q);
            xq = rem(std::move(xq), rest, f);
        }
    }
    if (degree(rest) > 0) out.push_back(degree(rest));
    return out;
}

u64 large_prime(std::size_t k) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard lock(mu);
    while (primes.size() <= k) {
        mpz_class start = primes.empty() ? (mpz_class(1) << 62) : mpz_class(static_cast<unsigned long>(primes.back()));
        mpz_class next;
        mpz_nextprime(next.get_mpz_t(), start.get_mpz_t());
        primes.push_back(next.get_ui());
    }
    return primes[k];
}

}  // namespace divcancel::modp
