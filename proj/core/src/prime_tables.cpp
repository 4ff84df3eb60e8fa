#include "zerodist/prime_tables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zerodist {

double VonMangoldtTable::lambda(std::uint64_t n) const {
    if (n == 0 || n > limit) throw std::out_of_range("VonMangoldtTable::lambda: n out of range");
    return values[n];
}

VonMangoldtTable sieve_lambda(std::uint64_t limit) {
    if (limit < 2 || limit > 1000000000ull)
        throw std::invalid_argument("sieve_lambda: limit must be in [2, 1e9]");

    VonMangoldtTable tbl;
    tbl.limit = limit;
    tbl.values.assign(limit + 1, 0.0);

    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        const double logp = std::log(static_cast<double>(p));
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
        // same double log(p) for every power, so Lambda(p^k) == Lambda(p) exactly
        for (std::uint64_t pk = p; pk <= limit; ) {
            tbl.values[pk] = logp;
            if (pk > limit / p) break;
            pk *= p;
        }
    }
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (tbl.values[n] > 0.0) tbl.prime_power_index.push_back(n);
    return tbl;
}

NearestPrimePower nearest_prime_power(double x, const VonMangoldtTable& tbl) {
    if (!(x > 1.0)) throw std::domain_error("nearest_prime_power: x must exceed 1");
    if (x > static_cast<double>(tbl.limit))
        throw std::out_of_range("nearest_prime_power: x exceeds table limit");

    const auto& idx = tbl.prime_power_index;
    auto it = std::lower_bound(idx.begin(), idx.end(),
                               static_cast<std::uint64_t>(std::ceil(x)));
    // candidates: first prime power >= x and the one before it
    std::uint64_t best = 0;
    double best_dist = 0.0;
    auto consider = [&](std::uint64_t n) {
        double d = std::abs(x - static_cast<double>(n));
        if (best == 0 || d < best_dist || (d == best_dist && n < best)) {
            best = n;
            best_dist = d;
        }
    };
    if (it != idx.end()) consider(*it);
    if (it != idx.begin()) consider(*(it - 1));
    return {best, tbl.values[best]};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return out;
}

} // namespace zerodist
