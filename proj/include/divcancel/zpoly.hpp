#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace divcancel {

/// Dense univariate polynomial over Z in the variable t.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty vector and every value has exactly one
/// representation.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);

    static ZPoly constant(const mpz_class& c);
    static ZPoly monomial(const mpz_class& c, std::size_t k);
    static ZPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    /// Coefficient of t^i (zero past the degree).
    const mpz_class& operator[](std::size_t i) const;
    const mpz_class& leading() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const mpz_class& k);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const mpz_class& k) { return a *= k; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// this / content, sign-normalized so the leading coefficient is positive.
    ZPoly primitive_part() const;
    /// Divides every coefficient by k, which must divide them all.
    ZPoly divexact(const mpz_class& k) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    ZPoly derivative() const;
    /// Largest coefficient bit length.
    std::size_t max_bits() const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

ZPoly pow(const ZPoly& base, unsigned exponent);

/// a / b in Z[t] when b divides a there, std::nullopt otherwise.  For
/// primitive b this coincides with divisibility in Q[t].
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Quotient of a / b in Z[t]; b must divide a.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// Greatest common divisor in Z[t], normalized to a positive leading
/// coefficient.  gcd(0, 0) = 0.  Uses a multi-modular algorithm with exact
/// trial division as the certificate.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Schoolbook product; exposed so tests can cross-check the fast path.
ZPoly mul_classical(const ZPoly& a, const ZPoly& b);

}  // namespace divcancel
