#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lensball {

using i64 = long long;

// All arithmetic in the library is 64-bit and checked. Desk-scale inputs
// never get near the limits; an overflow therefore indicates a caller bug
// or an out-of-range parameter and is reported instead of wrapping.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Integer square root; returns floor(sqrt(x)) for x >= 0.
inline i64 isqrt(i64 x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative number");
    if (x < 2) return x;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline bool is_perfect_square(i64 x) {
    if (x < 0) return false;
    i64 r = isqrt(x);
    return r * r == x;
}

// An exact rational value, always kept reduced with positive denominator.
// Unlike Fraction (see cfrac.hpp) there is no p > q requirement; this is
// the working type for continued-fraction folds.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = checked_sub(0, num); den = checked_sub(0, den); }
        i64 g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational&) const = default;

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}

inline Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}

inline Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("division by zero rational");
    return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

}  // namespace lensball
