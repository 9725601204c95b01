#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace divcancel {

/// An integer extended by +infinity, used for valuations where v(0) = inf.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtInt infinity() {
        ExtInt e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    std::int64_t value() const {
        if (infinite_) throw std::domain_error("ExtInt: value() of infinity");
        return value_;
    }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtInt(a.value_ + b.value_);
    }

    // Subtraction is only meaningful with a finite right-hand side.
    friend ExtInt operator-(ExtInt a, ExtInt b) {
        if (b.infinite_) throw std::domain_error("ExtInt: subtracting infinity");
        if (a.infinite_) return infinity();
        return ExtInt(a.value_ - b.value_);
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, ExtInt e) { return os << e.to_string(); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

constexpr ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }

}  // namespace divcancel
