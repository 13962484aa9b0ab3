#include "fairshare/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace fairshare {

namespace {

using int128 = __int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 kMinI64 = std::numeric_limits<long long>::min();
constexpr int128 kMaxI64 = std::numeric_limits<long long>::max();

long long parse_int64(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ValidationError(ValidationError::Code::ParseError,
                              "invalid rational literal: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::from_reduced(int128 num, int128 den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return Rational();
    }
    int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num < kMinI64 || num > kMaxI64 || den > kMaxI64) {
        throw OverflowError("rational out of 64-bit range after reduction");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long numerator, long long denominator) {
    *this = from_reduced(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int64(text));
    }
    long long num = parse_int64(text.substr(0, slash));
    long long den = parse_int64(text.substr(slash + 1));
    if (den <= 0) {
        throw ValidationError(ValidationError::Code::ParseError,
                              "rational denominator must be positive: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

long long Rational::floor() const {
    if (num_ >= 0) {
        return num_ / den_;
    }
    return -((-num_ + den_ - 1) / den_);
}

long long Rational::ceil() const {
    if (num_ > 0) {
        return (num_ + den_ - 1) / den_;
    }
    return -(-num_ / den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& other) {
    if (den_ == 1 && other.den_ == 1) {
        int128 sum = static_cast<int128>(num_) + other.num_;
        if (sum < kMinI64 || sum > kMaxI64) {
            throw OverflowError("rational out of 64-bit range after addition");
        }
        num_ = static_cast<long long>(sum);
        return *this;
    }
    int128 num = static_cast<int128>(num_) * other.den_ + static_cast<int128>(other.num_) * den_;
    int128 den = static_cast<int128>(den_) * other.den_;
    *this = from_reduced(num, den);
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
    int128 num = static_cast<int128>(num_) * other.num_;
    int128 den = static_cast<int128>(den_) * other.den_;
    *this = from_reduced(num, den);
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.num_ == 0) {
        throw Error("rational division by zero");
    }
    int128 num = static_cast<int128>(num_) * other.den_;
    int128 den = static_cast<int128>(den_) * other.num_;
    *this = from_reduced(num, den);
    return *this;
}

long long nearest_int(const Rational& x) {
    long long f = x.floor();
    // x >= f + 1/2  <=>  2*(num - f*den) >= den
    __int128 frac_num = static_cast<__int128>(x.numerator()) -
                        static_cast<__int128>(f) * x.denominator();
    if (2 * frac_num >= x.denominator()) {
        return x.ceil();
    }
    return f;
}

}  // namespace fairshare
