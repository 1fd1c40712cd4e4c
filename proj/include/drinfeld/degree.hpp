#pragma once

#include <compare>
#include <cstddef>
#include <ostream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

/// Degree of a polynomial: a non-negative integer or −∞ (the degree of 0).
/// −∞ compares below every integer and absorbs addition.
class Degree {
public:
    constexpr Degree() = default;  // −∞
    constexpr explicit Degree(int v) : value_(v), finite_(true) {}

    static constexpr Degree minus_infinity() { return Degree{}; }

    /// Degree of a dense coefficient vector with no trailing zeros.
    static constexpr Degree of_size(std::size_t n) {
        return n == 0 ? Degree{} : Degree(static_cast<int>(n) - 1);
    }

    [[nodiscard]] constexpr bool is_minus_infinity() const { return !finite_; }

    [[nodiscard]] int value() const {
        if (!finite_) throw Error("degree of the zero polynomial is -infinity");
        return value_;
    }

    constexpr std::strong_ordering operator<=>(const Degree& o) const {
        if (!finite_ && !o.finite_) return std::strong_ordering::equal;
        if (!finite_) return std::strong_ordering::less;
        if (!o.finite_) return std::strong_ordering::greater;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(const Degree& o) const { return (*this <=> o) == 0; }

    constexpr std::strong_ordering operator<=>(int v) const { return *this <=> Degree(v); }
    constexpr bool operator==(int v) const { return finite_ && value_ == v; }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return Degree{};
        return Degree(a.value_ + b.value_);
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        if (!d.finite_) return os << "-inf";
        return os << d.value_;
    }

private:
    int value_ = 0;
    bool finite_ = false;
};

}  // namespace drinfeld
