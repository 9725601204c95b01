#pragma once

// Word-size prime field arithmetic and dense polynomials over F_p.  Internal
// to the library: used by the modular gcd, the irreducibility certificate and
// the residue square test.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "divcancel/zpoly.hpp"

namespace divcancel::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
    u64 p;

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) * b) % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 reduce(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
    /// Image of a rational; the denominator must be prime to p.
    u64 reduce(const mpq_class& q) const {
        return mul(reduce(q.get_num()), inv(reduce(q.get_den())));
    }
};

/// Polynomial over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const ZPoly& a, const Field& f);
Poly mul(const Poly& a, const Poly& b, const Field& f);
/// Remainder of a modulo a nonzero b.
Poly rem(Poly a, const Poly& b, const Field& f);
/// Monic gcd.
Poly gcd(Poly a, Poly b, const Field& f);
Poly make_monic(Poly a, const Field& f);
/// base^e mod m.
Poly powmod(Poly base, mpz_class e, const Poly& m, const Field& f);
u64 eval(const Poly& a, u64 x, const Field& f);
Poly derivative(const Poly& a, const Field& f);

/// Degrees of the irreducible factors of a squarefree polynomial (with
/// multiplicity), via distinct-degree factorization.
std::vector<int> factor_degrees(const Poly& squarefree, const Field& f);

/// The k-th prime at or above 2^62 (deterministic sequence).
u64 large_prime(std::size_t k);

}  // namespace divcancel::modp
