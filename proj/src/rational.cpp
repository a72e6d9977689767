#include "hkfree/rational.hpp"

namespace hkfree {

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back((char)('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

std::string Rational::to_string() const {
    if (den == 1) return int128_to_string(num);
    return int128_to_string(num) + "/" + int128_to_string(den);
}

std::string Rational::to_decimal(int digits) const {
    int128 n = num;
    bool neg = n < 0;
    if (neg) n = -n;
    int128 whole = n / den;
    int128 rem = n % den;
    std::string s = (neg && (whole != 0 || rem != 0) ? "-" : "") + int128_to_string(whole);
    if (digits > 0) {
        s.push_back('.');
        for (int i = 0; i < digits; ++i) {
            rem = checked_mul(rem, 10);
            s.push_back((char)('0' + (int)(rem / den)));
            rem %= den;
        }
    }
    return s;
}

int128 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

int128 pow2_int128(int n) {
    if (n < 0 || n > 126) throw std::overflow_error("2^n outside exact range");
    return (int128)1 << n;
}

int128 ipow_int128(int128 n, int t) {
    int128 r = 1;
    for (int i = 0; i < t; ++i) r = checked_mul(r, n);
    return r;
}

} // namespace hkfree
