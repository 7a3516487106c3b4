#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclelab {

// Exact rational on int64 with __int128 cross-multiplication for comparisons.
// All density/threshold arithmetic in the library goes through this type so
// verdicts never depend on floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational x(a.num, b.den);  // cross-reduce to keep magnitudes small
        Rational y(b.num, a.den);
        return Rational(x.num * y.num, x.den * y.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den, b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

inline long long floor_ll(const Rational& r) {
    long long q = r.num / r.den;
    if (r.num % r.den != 0 && r.num < 0) --q;
    return q;
}

inline long long ceil_ll(const Rational& r) {
    long long q = r.num / r.den;
    if (r.num % r.den != 0 && r.num > 0) ++q;
    return q;
}

// Largest odd (resp. even) integer <= r. Requires r >= 1 (resp. >= 0).
inline long long floor_odd(const Rational& r) {
    long long f = floor_ll(r);
    return (f % 2 != 0) ? f : f - 1;
}

inline long long floor_even(const Rational& r) {
    long long f = floor_ll(r);
    return (f % 2 == 0) ? f : f - 1;
}

// Parses "3", "-3", "3/4" or a plain decimal like "0.05" (exact: 5/100).
Rational parse_rational(const std::string& s);

}  // namespace cyclelab
