#pragma once

// Exact rational arithmetic on overflow-checked 128-bit integers.
// Bound evaluation stays in the exact domain; decimals appear only at output.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkfree {

using int128 = __int128;

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exact arithmetic range exceeded");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exact arithmetic range exceeded");
    return r;
}

inline int128 int128_gcd(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string int128_to_string(int128 v);

struct Rational {
    int128 num = 0;
    int128 den = 1; // > 0

    Rational() = default;
    Rational(int128 n) : num(n), den(1) {}
    Rational(int128 n, int128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        int128 g = int128_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    int128 floor() const {
        int128 q = num / den;
        if (num < 0 && num % den != 0) --q;
        return q;
    }

    double approx() const { return (double)num / (double)den; }

    std::string to_string() const; // "num/den", or "num" when den == 1
    std::string to_decimal(int digits) const;
};

// n choose k, exact and overflow-checked.
int128 binomial(int n, int k);

// 2^n as int128 (n <= 126)
int128 pow2_int128(int n);

// n^t, overflow-checked
int128 ipow_int128(int128 n, int t);

} // namespace hkfree
