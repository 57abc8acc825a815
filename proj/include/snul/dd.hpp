#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "snul/errors.hpp"

namespace snul {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2, ~31 significant
// decimal digits. Enough to keep frac(xi * rho) accurate to well below
// 1e-15 while xi climbs into the thousands.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline DD operator+(DD a, DD b) {
    DD s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    const double q3 = r.hi / b.hi;
    DD q = detail::quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }

inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DD a, DD b) { return !(a == b); }
inline bool operator<(DD a, DD b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }

// In normalized form hi is the nearest double to the full value.
inline double to_double(DD a) { return a.hi; }

inline DD dd_floor(DD a) {
    const double f = std::floor(a.hi);
    if (f != a.hi) return {f, 0.0};
    return detail::quick_two_sum(f, std::floor(a.lo));
}

inline DD dd_ceil(DD a) { return -dd_floor(-a); }

inline DD dd_frac(DD a) { return a - dd_floor(a); }

inline DD dd_abs(DD a) { return a.hi < 0.0 ? -a : a; }

inline DD dd_pow10(int e) {
    DD r(1.0);
    DD base(10.0);
    int n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    if (e < 0) return DD(1.0) / r;
    return r;
}

// Parses a plain decimal string ("1.618...", "0.5", "2e-3").
inline DD dd_from_string(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    DD value(0.0);
    int frac_digits = 0;
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            if (seen_point) throw Error("malformed decimal: " + std::string(s));
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            value = value * DD(10.0) + DD(double(c - '0'));
            if (seen_point) ++frac_digits;
            seen_digit = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw Error("malformed decimal: " + std::string(s));
        }
    }
    int exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw Error("malformed decimal: " + std::string(s));
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw Error("malformed decimal: " + std::string(s));
            exp10 = exp10 * 10 + (s[i] - '0');
        }
        if (eneg) exp10 = -exp10;
    }
    if (!seen_digit) throw Error("malformed decimal: " + std::string(s));
    const int shift = exp10 - frac_digits;
    if (shift > 0) value = value * dd_pow10(shift);
    if (shift < 0) value = value / dd_pow10(-shift);
    return neg ? -value : value;
}

// Fixed-point rendering with `sig` significant digits, for values
// with |x| < 10^9. Used by the CLI to print 19-digit columns.
inline std::string dd_to_string(DD a, int sig) {
    if (a.hi == 0.0 && a.lo == 0.0) return "0";
    std::string out;
    if (a.hi < 0.0) {
        out += '-';
        a = -a;
    }
    DD ip = dd_floor(a);
    auto int_part = static_cast<std::int64_t>(to_double(ip));
    std::string istr = std::to_string(int_part);
    out += istr;
    int digits_used = (int_part == 0) ? 0 : static_cast<int>(istr.size());
    DD rest = a - ip;
    out += '.';
    bool leading = (int_part == 0);
    while (digits_used < sig) {
        rest = rest * DD(10.0);
        DD d = dd_floor(rest);
        int digit = static_cast<int>(to_double(d));
        if (digit < 0) digit = 0;
        if (digit > 9) digit = 9;
        out += static_cast<char>('0' + digit);
        rest = rest - DD(double(digit));
        if (!(leading && digit == 0)) {
            leading = false;
            ++digits_used;
        }
    }
    return out;
}

inline const DD kPi = dd_from_string("3.14159265358979323846264338327950288420");
// (sqrt(5)+1)/2, the worked golden-ratio value of theta/(2*pi).
inline const DD kGoldenRho =
    dd_from_string("1.61803398874989484820458683436563811772");
inline const DD kSqrt2 =
    dd_from_string("1.41421356237309504880168872420969807857");

// theta reduced modulo 4*pi (even multiples of 2*pi only: reducing by an
// odd multiple flips the sign of every cos((k-1/2)theta)).
inline double theta_from_rho(DD rho) {
    DD m = rho - DD(2.0) * dd_floor(rho / DD(2.0));
    return to_double(DD(2.0) * kPi * m);
}

} // namespace snul
