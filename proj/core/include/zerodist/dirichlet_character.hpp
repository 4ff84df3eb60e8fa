// Dirichlet characters mod q, enumerated by exponent vectors on a fixed
// generator set of (Z/qZ)*.
//
// Generator convention (this fixes the meaning of "index"):
//   - factor q = prod p_i^{e_i}, factors in increasing p order;
//   - odd p^e contributes one generator, the smallest primitive root;
//   - 2 contributes nothing, 4 contributes the generator 3 (order 2),
//     2^e with e >= 3 contributes -1 (order 2) then 3 (order 2^{e-2});
//   - a character is a mixed-radix digit vector (k_1, ..., k_r) over the
//     generator orders (d_1, ..., d_r), index = k_1 + d_1 (k_2 + d_2 (...)).
// Index 0 is the principal character.
//
// Values are kept as exact rational phases: chi(a) = e^{2 pi i num/den},
// so xi_at returns exact dyadic-free rationals like 3/4 rather than
// rounded arguments.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zerodist {

class DirichletCharacter {
public:
    // chi mod q with the given index in [0, phi(q)).
    static DirichletCharacter make(std::uint32_t q, std::uint32_t index);

    std::uint32_t modulus() const { return q_; }
    std::uint32_t index() const { return index_; }

    // chi(n); 0 when gcd(n, q) > 1.
    std::complex<double> operator()(std::uint64_t n) const;

    bool is_principal() const { return principal_; }
    bool is_primitive() const { return conductor_ == q_; }
    std::uint32_t conductor() const { return conductor_; }
    // +1 for even (chi(-1) = 1), -1 for odd
    int parity() const { return parity_; }

    // xi in [0, 1) with chi(p) = e^{2 pi i xi}; gcd(p, q) must be 1.
    double xi_at(std::uint64_t p) const;
    // exact rational phase (num/den in lowest terms), gcd(n, q) = 1 required
    void phase_at(std::uint64_t n, std::uint64_t& num, std::uint64_t& den) const;

    DirichletCharacter conjugate() const;

    std::complex<double> gauss_sum() const;

    // number of characters mod q
    static std::uint32_t group_order(std::uint32_t q);

private:
    DirichletCharacter() = default;

    std::uint32_t q_ = 1;
    std::uint32_t index_ = 0;
    std::uint32_t conductor_ = 1;
    bool principal_ = true;
    int parity_ = 1;
    std::uint32_t order_ = 1;                   // common phase denominator
    std::vector<std::int64_t> phase_num_;       // per residue: num with chi(a)=e^{2 pi i num/order_}, -1 if chi(a)=0
    std::vector<std::complex<double>> values_;  // per residue a in [0, q)
};

} // namespace zerodist
