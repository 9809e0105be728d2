#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator.
//
// All root and weight coordinates in this library are small rationals
// (denominators divide 6 in every built-in realization), so int64 storage
// with __int128 intermediates is always enough in practice.  Overflow is
// detected and reported, never wrapped.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acm {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}  // intentionally implicit
    Rational(long long n, long long d) { assign(n, d); }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Throws unless the value is an exact integer.
    long long as_integer() const {
        if (den_ != 1) throw std::domain_error("Rational::as_integer: " + str());
        return num_;
    }

    long long floor() const {
        if (num_ >= 0 || den_ == 1) return num_ / den_;
        return num_ / den_ - 1;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return from_i128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        return from_i128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    // Lowest terms, positive denominator; integers print without "/1".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static i128 gcd_i128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        i128 g = gcd_i128(n, d);
        n /= g;
        d /= g;
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    void assign(long long n, long long d) { *this = from_i128(n, d); }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace acm
