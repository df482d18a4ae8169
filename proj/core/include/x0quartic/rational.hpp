#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace x0quartic {

/// Exact rational number on int64 numerator/denominator. Always reduced with a
/// positive denominator; every operation throws OverflowError instead of wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer <= *this / smallest integer >= *this.
    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;

    long double to_long_double() const noexcept {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    std::string to_string() const;

    friend Rational operator+(Rational const& a, Rational const& b);
    friend Rational operator-(Rational const& a, Rational const& b);
    friend Rational operator*(Rational const& a, Rational const& b);
    friend Rational operator/(Rational const& a, Rational const& b);
    Rational operator-() const;

    Rational& operator+=(Rational const& o) { return *this = *this + o; }
    Rational& operator-=(Rational const& o) { return *this = *this - o; }
    Rational& operator*=(Rational const& o) { return *this = *this * o; }
    Rational& operator/=(Rational const& o) { return *this = *this / o; }

    friend bool operator==(Rational const& a, Rational const& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) noexcept {
        // cross products of int64 values always fit in 128 bits
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, Rational const& r);

}  // namespace x0quartic
