#pragma once

#include <cstdint>
#include <string>

#include "gramroot/errors.hpp"

namespace gramroot {

/// Exact rational arithmetic on 128-bit integers with overflow detection.
/// Covers the coefficient recurrences comfortably (TSE to order ~60, binomial
/// rows to ~125 over 62); anything larger throws and callers fall back to
/// floating recurrences.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long num, long long den = 1) { assign(num, den); }

    static Rational of(__int128 num, __int128 den) {
        Rational r;
        r.assign(num, den);
        return r;
    }

    __int128 num() const { return num_; }
    __int128 den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return of(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return of(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return of(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw ValidationError("rational division by zero");
        return of(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return of(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) /
                                   static_cast<long double>(den_));
    }

    std::string str() const {
        if (den_ == 1) return int128_str(num_);
        return int128_str(num_) + "/" + int128_str(den_);
    }

private:
    void assign(__int128 num, __int128 den) {
        if (den == 0) throw ValidationError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num < 0 ? -num : num, den);
        num_ = g == 0 ? 0 : num / g;
        den_ = g == 0 ? 1 : den / g;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static __int128 checked_mul(__int128 a, __int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw Error("rational overflow (multiply)");
        return r;
    }
    static __int128 checked_add(__int128 a, __int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a, b, &r)) throw Error("rational overflow (add)");
        return r;
    }

    static std::string int128_str(__int128 v) {
        if (v == 0) return "0";
        const bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
        std::string s;
        while (u != 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }

    __int128 num_ = 0;
    __int128 den_ = 1;
};

} // namespace gramroot
