#include "zerodist/dd_real.hpp"

#include <stdexcept>

namespace zerodist {

// exp by scaling: e^a = (e^{a/512})^512 after removing k*ln2.
// Taylor on |r| <= ln2/1024 needs few terms; repeated squaring tracks
// p = e^r - 1 to avoid cancellation.
dd_real dd_exp(const dd_real& a) {
    if (a.hi > 709.0) throw std::overflow_error("dd_exp: overflow");
    if (a.hi < -709.0) return dd_real(0.0);

    double k = std::nearbyint(a.hi / dd_ln2.hi);
    dd_real r = a - dd_ln2 * k;
    const double scale = 512.0;
    r = r * (1.0 / scale);

    // p = e^r - 1, Taylor to r^8 (|r| < 7e-4 -> next term < 1e-34)
    dd_real p = r;
    dd_real term = r;
    for (int n = 2; n <= 8; ++n) {
        term = term * r * (1.0 / n);
        p = p + term;
    }
    // square 9 times: (1+p)^2 - 1 = 2p + p^2
    for (int i = 0; i < 9; ++i) p = p * 2.0 + p * p;

    dd_real result = p + 1.0;
    return result * std::ldexp(1.0, static_cast<int>(k));
}

// One Newton step on exp refines log from double to double-double:
// y1 = y0 + (a * e^{-y0} - 1).
dd_real dd_log(const dd_real& a) {
    if (a.hi <= 0.0) throw std::domain_error("dd_log: nonpositive argument");
    dd_real y(std::log(a.hi));
    dd_real e = dd_exp(-y);
    dd_real correction = a * e - 1.0;
    return y + correction;
}

double reduce_phase(double gamma, const dd_real& logx) {
    dd_real phase = logx * gamma;
    double k = std::nearbyint(phase.hi / dd_two_pi.hi);
    dd_real reduced = phase - dd_two_pi * k;
    return reduced.to_double();
}

double frac_product(double alpha, double gamma) {
    dd_real prod = ddops::two_prod(alpha, gamma);
    double fl = std::floor(prod.hi);
    dd_real frac = prod - fl;
    double f = frac.to_double();
    // the low part can push the sum across an integer boundary
    if (f < 0.0) f += 1.0;
    if (f >= 1.0) f -= 1.0;
    return f;
}

} // namespace zerodist
