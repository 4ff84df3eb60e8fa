// Classification of alpha: resonant means alpha = (a/q) log(p) / (2 pi)
// for a prime p and coprime positive integers a, q. Only resonant alpha
// produce a nonzero limiting density.

#pragma once

#include <cstdint>

namespace zerodist {

struct AlphaForm {
    double alpha = 0.0;
    bool resonant = false;
    std::uint64_t p = 0;  // prime (resonant only)
    std::uint64_t a = 0;
    std::uint64_t q = 0;
    double match_error = 0.0;  // |alpha - (a/q) log(p)/(2 pi)|

    // alpha built directly from (p, a, q); match_error 0 by construction.
    static AlphaForm exact_resonant(std::uint64_t p, std::uint64_t a, std::uint64_t q);
    static AlphaForm generic(double alpha);
};

struct ClassifyOptions {
    std::uint64_t p_max = 1000000;
    std::uint64_t aq_max = 1000;
    double tol = 1e-9;
};

// Search for (p, a, q) with p <= p_max, a,q <= aq_max, gcd(a,q) = 1 and
// |alpha - (a/q) log(p)/(2 pi)| <= tol, via continued-fraction convergents
// of 2 pi alpha / log p for each prime. Smallest q wins, then smallest p.
AlphaForm classify_alpha(double alpha, const ClassifyOptions& opt = {});

} // namespace zerodist
