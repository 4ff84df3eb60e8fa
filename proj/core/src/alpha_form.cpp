#include "zerodist/alpha_form.hpp"

#include "zerodist/prime_tables.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zerodist {

AlphaForm AlphaForm::exact_resonant(std::uint64_t p, std::uint64_t a, std::uint64_t q) {
    if (a == 0 || q == 0 || std::gcd(a, q) != 1)
        throw std::invalid_argument("AlphaForm::exact_resonant: need coprime positive a, q");
    AlphaForm f;
    f.alpha = (static_cast<double>(a) / static_cast<double>(q)) *
              std::log(static_cast<double>(p)) / (2.0 * M_PI);
    f.resonant = true;
    f.p = p;
    f.a = a;
    f.q = q;
    f.match_error = 0.0;
    return f;
}

AlphaForm AlphaForm::generic(double alpha) {
    AlphaForm f;
    f.alpha = alpha;
    return f;
}

namespace {

struct Candidate {
    std::uint64_t p = 0, a = 0, q = 0;
    double err = 0.0;
    bool valid = false;
};

// Continued-fraction convergents of beta with denominators <= den_max;
// reports the best |beta - a/q| candidate meeting tol (numerator also
// capped). Semiconvergents at the denominator cap are checked too.
void scan_convergents(double beta, std::uint64_t aq_max, double tol,
                      std::uint64_t p, Candidate& best) {
    auto consider = [&](std::uint64_t a, std::uint64_t q) {
        if (a == 0 || a > aq_max || q > aq_max) return;
        if (std::gcd(a, q) != 1) return;
        double err = std::abs(beta - static_cast<double>(a) / static_cast<double>(q));
        if (err > tol) return;
        if (!best.valid || q < best.q || (q == best.q && p < best.p)) {
            best = {p, a, q, err, true};
        }
    };

    double x = beta;
    // convergent recurrence: h_n = a_n h_{n-1} + h_{n-2}, same for k
    std::uint64_t hm1 = 1, hm2 = 0, km1 = 0, km2 = 1;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(x);
        if (fl < 0 || fl > 1e18) break;
        std::uint64_t an = static_cast<std::uint64_t>(fl);
        std::uint64_t h = an * hm1 + hm2;
        std::uint64_t k = an * km1 + km2;
        if (k > aq_max) {
            // semiconvergents a' * hm1 + hm2 with the largest a' keeping k <= cap
            if (km1 > 0) {
                std::uint64_t amax = (aq_max - km2) / km1;
                if (amax >= 1 && amax < an) {
                    consider(amax * hm1 + hm2, amax * km1 + km2);
                }
            }
            break;
        }
        consider(h, k);
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
        hm2 = hm1; hm1 = h;
        km2 = km1; km1 = k;
    }
}

} // namespace

AlphaForm classify_alpha(double alpha, const ClassifyOptions& opt) {
    if (!(alpha > 0.0)) throw std::domain_error("classify_alpha: alpha must be positive");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("classify_alpha: tol must be positive");

    const double two_pi_alpha = 2.0 * M_PI * alpha;
    Candidate best;
    for (std::uint64_t p : primes_up_to(opt.p_max)) {
        const double logp = std::log(static_cast<double>(p));
        const double beta = two_pi_alpha / logp;
        // even a = aq_max, q = 1 cannot reach beta beyond the cap
        if (beta > static_cast<double>(opt.aq_max) + 1.0) continue;
        // tolerance in beta units: |alpha - (a/q) logp/2pi| <= tol
        scan_convergents(beta, opt.aq_max, 2.0 * M_PI * opt.tol / logp, p, best);
        if (best.valid && best.q == 1) break;  // cannot beat q = 1 except by smaller p; primes ascend
    }

    if (!best.valid) return AlphaForm::generic(alpha);
    AlphaForm f;
    f.alpha = alpha;
    f.resonant = true;
    f.p = best.p;
    f.a = best.a;
    f.q = best.q;
    f.match_error = best.err * std::log(static_cast<double>(best.p)) / (2.0 * M_PI);
    return f;
}

} // namespace zerodist
