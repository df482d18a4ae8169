#include "x0quartic/rational.hpp"

#include <ostream>

#include "x0quartic/checked.hpp"
#include "x0quartic/error.hpp"

namespace x0quartic {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = checked::narrow(num);
    r.den_ = checked::narrow(den);
    return r;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational const& a, Rational const& b) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    return Rational::from_wide(n, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(Rational const& a, Rational const& b) { return a + (-b); }

Rational operator*(Rational const& a, Rational const& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(Rational const& a, Rational const& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked::narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

std::ostream& operator<<(std::ostream& os, Rational const& r) { return os << r.to_string(); }

}  // namespace x0quartic
