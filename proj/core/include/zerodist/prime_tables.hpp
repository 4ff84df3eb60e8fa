// Von Mangoldt table: Lambda(n) = log p for n = p^k, 0 otherwise,
// with a sorted prime-power index for nearest-prime-power queries.

#pragma once

#include <cstdint>
#include <vector>

namespace zerodist {

struct VonMangoldtTable {
    std::uint64_t limit = 0;
    // values[n] = Lambda(n) for 1 <= n <= limit; values[0] unused.
    std::vector<double> values;
    // ascending list of n with Lambda(n) > 0
    std::vector<std::uint64_t> prime_power_index;

    double lambda(std::uint64_t n) const;
};

// Sieve of Lambda up to limit. Lambda(p^k) is stored as the identical
// double log(p) for every power k. 2 <= limit <= 1e9.
VonMangoldtTable sieve_lambda(std::uint64_t limit);

struct NearestPrimePower {
    std::uint64_t n = 0;
    double lambda = 0.0;
};

// Prime power minimizing |x - n|; ties break toward the smaller n.
// Requires 1 < x <= tbl.limit.
NearestPrimePower nearest_prime_power(double x, const VonMangoldtTable& tbl);

// Primes up to limit (used by classify_alpha and the character code).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace zerodist
