// dd_real.hpp -- minimal double-double arithmetic for phase reduction.
//
// A dd_real stores an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving ~106 bits of significand. Only the operations needed by the
// summation kernels are provided: exact products of doubles, addition,
// multiplication, exp/log, and reduction modulo 2*pi. Phases gamma*log(x)
// reach ~1e9 at the top of the supported x range; a plain double product
// would leave only ~7 accurate digits in the reduced phase.

#pragma once

#include <cmath>

namespace zerodist {

struct dd_real {
    double hi = 0.0;
    double lo = 0.0;

    dd_real() = default;
    constexpr dd_real(double h, double l) : hi(h), lo(l) {}
    explicit constexpr dd_real(double h) : hi(h), lo(0.0) {}

    double to_double() const { return hi + lo; }
};

namespace ddops {

// Knuth two-sum: a + b = s + err exactly.
inline dd_real two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double e = (a - (s - v)) + (b - v);
    return {s, e};
}

// Fast two-sum, requires |a| >= |b|.
inline dd_real quick_two_sum(double a, double b) {
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

// a * b = p + err exactly (FMA).
inline dd_real two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

} // namespace ddops

inline dd_real operator+(const dd_real& a, const dd_real& b) {
    dd_real s = ddops::two_sum(a.hi, b.hi);
    dd_real t = ddops::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = ddops::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return ddops::quick_two_sum(s.hi, s.lo);
}

inline dd_real operator+(const dd_real& a, double b) {
    dd_real s = ddops::two_sum(a.hi, b);
    s.lo += a.lo;
    return ddops::quick_two_sum(s.hi, s.lo);
}

inline dd_real operator-(const dd_real& a) { return {-a.hi, -a.lo}; }
inline dd_real operator-(const dd_real& a, const dd_real& b) { return a + dd_real(-b.hi, -b.lo); }
inline dd_real operator-(const dd_real& a, double b) { return a + (-b); }

inline dd_real operator*(const dd_real& a, const dd_real& b) {
    dd_real p = ddops::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return ddops::quick_two_sum(p.hi, p.lo);
}

inline dd_real operator*(const dd_real& a, double b) {
    dd_real p = ddops::two_prod(a.hi, b);
    p.lo += a.lo * b;
    return ddops::quick_two_sum(p.hi, p.lo);
}

inline dd_real operator*(double a, const dd_real& b) { return b * a; }

inline dd_real operator/(const dd_real& a, const dd_real& b) {
    double q0 = a.hi / b.hi;
    dd_real r = a - b * q0;
    double q1 = r.hi / b.hi;
    r = r - b * q1;
    double q2 = r.hi / b.hi;
    dd_real q = ddops::quick_two_sum(q0, q1);
    return q + q2;
}

inline dd_real operator/(const dd_real& a, double b) { return a / dd_real(b); }

// pi and 2*pi to double-double precision.
inline constexpr dd_real dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr dd_real dd_two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr dd_real dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};

dd_real dd_exp(const dd_real& a);
dd_real dd_log(const dd_real& a);

// gamma * logx reduced into [-pi, pi]. logx must carry the full
// double-double value of log(x); gamma is exact as a double.
double reduce_phase(double gamma, const dd_real& logx);

// Fractional part of alpha * gamma in [0, 1), alpha and gamma doubles.
// The product is formed exactly, so the result is correct even when
// alpha * gamma exceeds 2^52.
double frac_product(double alpha, double gamma);

} // namespace zerodist
