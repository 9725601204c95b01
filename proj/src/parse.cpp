#include "divcancel/parse.hpp"

#include <cctype>
#include <limits>

namespace divcancel {

namespace {

class Parser {
public:
    Parser(std::string_view text, FieldKind kind) : s_(text), kind_(kind) {}

    FieldElement run() {
        FieldElement v = expr();
        skip_ws();
        if (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("implicit multiplication is not allowed (use '*')", pos_);
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElement expr() {
        FieldElement v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    FieldElement term() {
        FieldElement v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                FieldElement d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    FieldElement unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    FieldElement power() {
        FieldElement base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("exponent must be a non-negative integer literal", at);
        const mpz_class e = integer();
        if (e > 4096) throw ParseError("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    FieldElement primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElement(kind_, mpq_class(integer()));
        if (c == 't') {
            if (kind_ != FieldKind::function_field) throw ParseError("variable t is not allowed over Q", pos_);
            ++pos_;
            return FieldElement::variable();
        }
        if (c == '(') {
            ++pos_;
            FieldElement v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view s_;
    FieldKind kind_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(std::string_view text, FieldKind kind) { return Parser(text, kind).run(); }

}  // namespace divcancel
