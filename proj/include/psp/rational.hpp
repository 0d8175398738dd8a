// Copyright (c) psp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "psp/error.hpp"

#include <cstdint>
#include <string>

namespace psp {

using int128 = __int128;
using uint128 = unsigned __int128;

// Exact rational over 128-bit integers with +/-infinity sentinels.
// Canonical form: den > 0, gcd(|num|, den) = 1; infinities encoded as den == 0,
// num == +/-1. Comparisons cross-multiply into 256 bits, so any values whose
// components were built from 64-bit integers compare exactly. Arithmetic is
// overflow-checked and throws errc::overflow rather than wrapping.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t value) : num_(value), den_(1) {}
    Rational(int128 num, int128 den) { init(num, den); }

    static Rational plus_inf() { return Rational(1, int128(0), raw_tag{}); }
    static Rational minus_inf() { return Rational(-1, int128(0), raw_tag{}); }

    bool is_finite() const { return den_ != 0; }
    bool is_plus_inf() const { return den_ == 0 && num_ > 0; }
    bool is_minus_inf() const { return den_ == 0 && num_ < 0; }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.den_ == 0 || b.den_ == 0)
            return a.den_ == b.den_ && a.sign() == b.sign();
        // canonical forms compare componentwise
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    // Three-way compare; infinities order below/above all finite values.
    static int cmp(const Rational& a, const Rational& b) {
        if (a.den_ == 0 || b.den_ == 0) {
            int sa = a.den_ == 0 ? (a.num_ > 0 ? 2 : -2) : 0;
            int sb = b.den_ == 0 ? (b.num_ > 0 ? 2 : -2) : 0;
            if (sa != sb)
                return sa < sb ? -1 : 1;
            if (sa != 0)
                return 0; // same infinity
            // fall through: both finite
        }
        int sa = a.sign(), sb = b.sign();
        if (sa != sb)
            return sa < sb ? -1 : 1;
        if (sa == 0)
            return 0;
        int c = cmp_mag(mag(a.num_), uint128(b.den_), mag(b.num_), uint128(a.den_));
        return sa > 0 ? c : -c;
    }

    Rational operator-() const {
        if (den_ == 0)
            return num_ > 0 ? minus_inf() : plus_inf();
        return Rational(-num_, den_, raw_tag{});
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        require_finite(a, b);
        int128 g = gcd128(mag(a.den_), mag(b.den_));
        int128 bd = a.den_ / g, dd = b.den_ / g;
        int128 n = checked_add(checked_mul(a.num_, dd), checked_mul(b.num_, bd));
        int128 d = checked_mul(a.den_, dd);
        return Rational(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        require_finite(a, b);
        int128 g1 = gcd128(mag(a.num_), mag(b.den_));
        int128 g2 = gcd128(mag(b.num_), mag(a.den_));
        int128 n = checked_mul(a.num_ / g1, b.num_ / g2);
        int128 d = checked_mul(a.den_ / g2, b.den_ / g1);
        return Rational(n, d, norm_tag{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        require_finite(a, b);
        if (b.num_ == 0)
            fail(errc::invalid_argument, "rational division by zero");
        Rational inv = b.num_ > 0 ? Rational(b.den_, b.num_, raw_tag{})
                                  : Rational(-b.den_, -b.num_, raw_tag{});
        return a * inv;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    // "num" or "num/den"; infinities as "inf" / "-inf".
    std::string str() const {
        if (is_plus_inf())
            return "inf";
        if (is_minus_inf())
            return "-inf";
        std::string s = int128_str(num_);
        if (den_ != 1)
            s += "/" + int128_str(den_);
        return s;
    }

    double to_double() const {
        if (is_plus_inf())
            return 1e300 * 1e300;
        if (is_minus_inf())
            return -(1e300 * 1e300);
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    static std::string int128_str(int128 v) {
        if (v == 0)
            return "0";
        bool neg = v < 0;
        uint128 u = mag(v);
        char buf[48];
        int i = 48;
        while (u > 0) {
            buf[--i] = char('0' + int(u % 10));
            u /= 10;
        }
        std::string s(buf + i, 48 - i);
        return neg ? "-" + s : s;
    }

  private:
    struct raw_tag {};
    struct norm_tag {};
    Rational(int128 n, int128 d, raw_tag) : num_(n), den_(d) {}
    Rational(int128 n, int128 d, norm_tag) : num_(n), den_(d) {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    void init(int128 num, int128 den) {
        if (den == 0)
            fail(errc::invalid_argument, "rational with zero denominator");
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        int128 g = gcd128(mag(num), mag(den));
        num_ = num / g;
        den_ = den / g;
    }

    static void require_finite(const Rational& a, const Rational& b) {
        if (a.den_ == 0 || b.den_ == 0)
            fail(errc::invalid_argument, "arithmetic on infinite rational");
    }

    static uint128 mag(int128 v) { return v < 0 ? uint128(0) - uint128(v) : uint128(v); }

    static int128 gcd128(uint128 a, uint128 b) {
        while (b != 0) {
            uint128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? int128(1) : int128(a);
    }

    static int128 checked_add(int128 a, int128 b) {
        int128 r;
        if (__builtin_add_overflow(a, b, &r))
            fail(errc::overflow, "rational overflow (add)");
        return r;
    }
    static int128 checked_mul(int128 a, int128 b) {
        int128 r;
        if (__builtin_mul_overflow(a, b, &r))
            fail(errc::overflow, "rational overflow (mul)");
        return r;
    }
    static int128 checked_neg(int128 a) {
        int128 r;
        if (__builtin_sub_overflow(int128(0), a, &r))
            fail(errc::overflow, "rational overflow (neg)");
        return r;
    }

    // compare a*b against c*d in 256 bits
    static int cmp_mag(uint128 a, uint128 b, uint128 c, uint128 d) {
        uint128 hi1, lo1, hi2, lo2;
        mul_full(a, b, hi1, lo1);
        mul_full(c, d, hi2, lo2);
        if (hi1 != hi2)
            return hi1 < hi2 ? -1 : 1;
        if (lo1 != lo2)
            return lo1 < lo2 ? -1 : 1;
        return 0;
    }

    static void mul_full(uint128 a, uint128 b, uint128& hi, uint128& lo) {
        uint128 al = static_cast<uint64_t>(a), ah = a >> 64;
        uint128 bl = static_cast<uint64_t>(b), bh = b >> 64;
        uint128 ll = al * bl;
        uint128 lh = al * bh;
        uint128 hl = ah * bl;
        uint128 mid = (ll >> 64) + static_cast<uint64_t>(lh) + static_cast<uint64_t>(hl);
        lo = static_cast<uint64_t>(ll) | (mid << 64);
        hi = ah * bh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    }

    int128 num_;
    int128 den_;
};

} // namespace psp
