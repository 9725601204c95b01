#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "divcancel/rational_function.hpp"

namespace divcancel {

/// The two supported base fields.
enum class FieldKind { rationals, function_field };

std::string to_string(FieldKind kind);
/// Accepts "Q" and "Q(t)" (also "Q_t").
FieldKind parse_field_kind(const std::string& tag);

/// Exact element of Q or Q(t).  Binary operations require both operands to
/// live in the same field.
class FieldElement {
public:
    FieldElement() : value_(mpq_class(0)) {}
    FieldElement(FieldKind kind, const mpq_class& c);
    explicit FieldElement(mpq_class q) {
        q.canonicalize();
        value_ = std::move(q);
    }
    explicit FieldElement(RationalFunction f) : value_(std::move(f)) {}

    static FieldElement zero(FieldKind kind) { return FieldElement(kind, 0); }
    static FieldElement one(FieldKind kind) { return FieldElement(kind, 1); }
    /// The variable t of Q(t).
    static FieldElement variable() { return FieldElement(RationalFunction::variable()); }

    FieldKind kind() const {
        return std::holds_alternative<mpq_class>(value_) ? FieldKind::rationals : FieldKind::function_field;
    }
    bool is_zero() const;
    bool is_one() const;

    /// Underlying representations; the caller must check kind() first.
    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    const RationalFunction& function() const { return std::get<RationalFunction>(value_); }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(unsigned e) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(const FieldElement& a, long k);
    friend FieldElement operator*(long k, const FieldElement& a) { return a * k; }
    friend FieldElement operator+(const FieldElement& a, long k);
    friend FieldElement operator-(const FieldElement& a, long k) { return a + (-k); }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

    std::string to_string() const;

private:
    void require_same(const FieldElement& o) const;
    std::variant<mpq_class, RationalFunction> value_;
};

}  // namespace divcancel
