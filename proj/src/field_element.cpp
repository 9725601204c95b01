#include "divcancel/field_element.hpp"

#include <stdexcept>

namespace divcancel {

std::string to_string(FieldKind kind) { return kind == FieldKind::rationals ? "Q" : "Q(t)"; }

FieldKind parse_field_kind(const std::string& tag) {
    if (tag == "Q") return FieldKind::rationals;
    if (tag == "Q(t)" || tag == "Q_t") return FieldKind::function_field;
    throw std::invalid_argument("unknown field tag '" + tag + "' (expected Q or Q(t))");
}

FieldElement::FieldElement(FieldKind kind, const mpq_class& c) {
    if (kind == FieldKind::rationals) {
        mpq_class q = c;
        q.canonicalize();
        value_ = std::move(q);
    } else {
        value_ = RationalFunction(c);
    }
}

bool FieldElement::is_zero() const {
    if (kind() == FieldKind::rationals) return rational() == 0;
    return function().is_zero();
}

bool FieldElement::is_one() const {
    if (kind() == FieldKind::rationals) return rational() == 1;
    const auto& f = function();
    return f.is_constant() && f.scale() == 1;
}

void FieldElement::require_same(const FieldElement& o) const {
    if (value_.index() != o.value_.index()) throw std::invalid_argument("field mismatch between Q and Q(t) operands");
}

FieldElement FieldElement::operator-() const {
    return std::visit([](const auto& v) { return FieldElement(-v); }, value_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (kind() == FieldKind::rationals) return FieldElement(mpq_class(1 / rational()));
    return FieldElement(function().inverse());
}

FieldElement FieldElement::pow(unsigned e) const {
    FieldElement result = one(kind());
    FieldElement b = *this;
    while (e) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return result;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same(o);
    if (kind() == FieldKind::rationals)
        std::get<mpq_class>(value_) += o.rational();
    else
        value_ = function() + o.function();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same(o);
    if (kind() == FieldKind::rationals)
        std::get<mpq_class>(value_) -= o.rational();
    else
        value_ = function() - o.function();
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same(o);
    if (kind() == FieldKind::rationals)
        std::get<mpq_class>(value_) *= o.rational();
    else
        value_ = function() * o.function();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    require_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (kind() == FieldKind::rationals)
        std::get<mpq_class>(value_) /= o.rational();
    else
        value_ = function() / o.function();
    return *this;
}

FieldElement operator*(const FieldElement& a, long k) {
    if (a.kind() == FieldKind::rationals) return FieldElement(mpq_class(a.rational() * k));
    return FieldElement(a.function() * mpq_class(k));
}

FieldElement operator+(const FieldElement& a, long k) { return a + FieldElement(a.kind(), k); }

std::string FieldElement::to_string() const {
    if (kind() == FieldKind::rationals) return rational().get_str();
    return function().to_string();
}

}  // namespace divcancel
