#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "divcancel/ext_int.hpp"
#include "divcancel/field_element.hpp"
#include "divcancel/zpoly.hpp"

namespace divcancel {

/// A normalized discrete valuation: a rational prime p on Q, or a monic
/// irreducible pi(t) on Q(t).  The uniformizer always has valuation 1.
class Place {
public:
    /// Throws std::invalid_argument unless p is prime.
    static Place rational_prime(const mpz_class& p);
    /// pi must be a nonconstant polynomial of Q(t) (any nonzero scaling);
    /// irreducibility over Q is certified here or std::invalid_argument is
    /// thrown.
    static Place polynomial(const FieldElement& pi);

    FieldKind field() const { return is_rational_prime() ? FieldKind::rationals : FieldKind::function_field; }
    bool is_rational_prime() const { return std::holds_alternative<mpz_class>(data_); }
    const mpz_class& prime() const { return std::get<mpz_class>(data_); }
    /// pi as a primitive integer polynomial with positive leading coefficient.
    const ZPoly& modulus() const { return std::get<ZPoly>(data_); }
    /// Degree of the residue field over its prime field (deg pi, or 1).
    int residue_degree() const { return is_rational_prime() ? 1 : modulus().degree(); }

    FieldElement uniformizer() const;
    /// v(x); v(0) = infinity.
    ExtInt valuation(const FieldElement& x) const;

    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) { return a.data_ == b.data_; }

private:
    explicit Place(std::variant<mpz_class, ZPoly> d) : data_(std::move(d)) {}
    std::variant<mpz_class, ZPoly> data_;
};

/// Multiplicity of the primitive polynomial pi in a nonzero n.
int multiplicity(const ZPoly& n, const ZPoly& pi);

/// Element of a residue field: an integer in [0, p) for F_p, or a
/// polynomial remainder of degree < deg pi with rational coefficients for
/// Q[t]/(pi).
struct ResidueElement {
    std::vector<mpq_class> coeffs;  // lowest degree first, trimmed
    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
    bool is_zero() const { return coeffs.empty(); }
};

/// The residue field of a place, with exact arithmetic.
class ResidueField {
public:
    explicit ResidueField(Place place);

    const Place& place() const { return place_; }
    /// 0 for the number fields Q[t]/(pi), p for F_p.
    const mpz_class& characteristic() const { return char_; }

    /// Image of x; throws std::domain_error when v(x) < 0.
    ResidueElement reduce(const FieldElement& x) const;
    /// A representative in the valuation ring.
    FieldElement lift(const ResidueElement& r) const;

    ResidueElement from_integer(long k) const;
    ResidueElement add(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement sub(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement mul(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement neg(const ResidueElement& a) const;
    ResidueElement inv(const ResidueElement& a) const;

    /// Whether a is a square.  Exact over F_p and Q; for Q[t]/(pi) of
    /// degree >= 2 a non-square is detected by finding a degree-one prime
    /// where the reduction is a quadratic non-residue, and the answer
    /// "square" is returned after 64 consistent primes.
    bool is_square(const ResidueElement& a) const;
    /// Whether a X^2 + b X + c has a root in the field.
    bool quadratic_has_root(const ResidueElement& a, const ResidueElement& b, const ResidueElement& c) const;

    std::string to_string(const ResidueElement& a) const;

private:
    ResidueElement normalize(std::vector<mpq_class> v) const;

    Place place_;
    mpz_class char_;
    std::vector<mpq_class> monic_;  // monic pi over Q (number-field case)
};

}  // namespace divcancel
