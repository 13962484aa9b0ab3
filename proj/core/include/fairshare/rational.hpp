#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fairshare/errors.hpp"

namespace fairshare {

/// Exact rational number: int64 numerator over positive int64 denominator,
/// always in lowest terms. All fairness quantities in this library are
/// Rationals; there is no floating point anywhere in the fairness logic.
///
/// Intermediates are computed in 128 bits; results that do not fit back
/// into int64 after reduction raise OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(int value) : num_(value) {}        // NOLINT(google-explicit-constructor)
    Rational(long long numerator, long long denominator);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Parses "p", "-p" or "p/q". Anything else raises ValidationError.
    static Rational parse(std::string_view text);
    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    long long floor() const;
    long long ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational from_reduced(__int128 num, __int128 den);

    long long num_ = 0;
    long long den_ = 1;
};

/// Nearest integer with halves rounding up:
/// ceil(x) when x >= floor(x) + 1/2, floor(x) otherwise.
long long nearest_int(const Rational& x);

}  // namespace fairshare
