#include "zerodist/dirichlet_character.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zerodist {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

// smallest primitive root mod p^e (p odd prime)
std::uint64_t primitive_root(std::uint64_t pe, std::uint64_t p) {
    std::uint64_t phi = pe / p * (p - 1);
    // factor phi
    std::vector<std::uint64_t> qs;
    std::uint64_t m = phi;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (std::uint64_t g = 2; g < pe; ++g) {
        if (std::gcd(g, pe) != 1) continue;
        bool ok = true;
        for (std::uint64_t qd : qs)
            if (pow_mod(g, phi / qd, pe) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

struct GroupFactor {
    std::uint64_t pe;       // prime power dividing q
    std::uint64_t gen;      // generator within this factor (mod pe)
    std::uint64_t order;    // order of gen
};

// discrete log of a modulo pe w.r.t. gen (brute force; q is desk scale)
std::uint64_t dlog(std::uint64_t a, std::uint64_t gen, std::uint64_t order, std::uint64_t pe) {
    std::uint64_t x = 1 % pe;
    for (std::uint64_t k = 0; k < order; ++k) {
        if (x == a % pe) return k;
        x = (__uint128_t)x * gen % pe;
    }
    throw std::logic_error("dlog: not in subgroup");
}

} // namespace

DirichletCharacter DirichletCharacter::make(std::uint32_t q, std::uint32_t index) {
    if (q < 1) throw std::invalid_argument("DirichletCharacter: modulus must be >= 1");
    std::uint64_t phi = euler_phi(q);
    if (index >= phi) throw std::invalid_argument("DirichletCharacter: index out of range");

    // factor q and build the generator list
    std::vector<GroupFactor> factors;
    bool two_part_has_minus1 = false;
    std::uint64_t rem = q;
    std::uint64_t two_e = 0;
    while (rem % 2 == 0) { rem /= 2; ++two_e; }
    std::uint64_t two_pe = std::uint64_t(1) << two_e;
    if (two_e == 2) {
        factors.push_back({4, 3, 2});
    } else if (two_e >= 3) {
        factors.push_back({two_pe, two_pe - 1, 2});  // -1 mod 2^e
        factors.push_back({two_pe, 3, two_pe / 4});
        two_part_has_minus1 = true;
    }
    (void)two_part_has_minus1;
    for (std::uint64_t p = 3; p * p <= rem || rem > 1; p += 2) {
        if (rem == 1) break;
        if (p * p > rem) p = rem;
        if (rem % p == 0) {
            std::uint64_t pe = 1;
            while (rem % p == 0) { rem /= p; pe *= p; }
            factors.push_back({pe, primitive_root(pe, p), pe / p * (p - 1)});
        }
    }

    // mixed-radix decomposition of the index
    std::vector<std::uint64_t> digits(factors.size(), 0);
    {
        std::uint64_t rest = index;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            digits[i] = rest % factors[i].order;
            rest /= factors[i].order;
        }
    }

    DirichletCharacter chi;
    chi.q_ = q;
    chi.index_ = index;
    chi.principal_ = (index == 0);

    // common denominator: lcm of the factor orders
    std::uint64_t L = 1;
    for (auto& f : factors) L = std::lcm(L, f.order);
    if (L == 0) L = 1;
    chi.order_ = static_cast<std::uint32_t>(L);

    chi.phase_num_.assign(q, -1);
    chi.values_.assign(q, {0.0, 0.0});
    for (std::uint64_t a = 0; a < q; ++a) {
        if (q > 1 && std::gcd(a, (std::uint64_t)q) != 1) continue;
        // phase = sum_i digits[i] * dlog_i(a) / order_i  (mod 1)
        std::uint64_t num = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::uint64_t k = dlog(a, factors[i].gen, factors[i].order, factors[i].pe);
            num = (num + digits[i] * k % factors[i].order * (L / factors[i].order)) % L;
        }
        chi.phase_num_[a] = static_cast<std::int64_t>(num);
        double ang = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(L);
        chi.values_[a] = {std::cos(ang), std::sin(ang)};
    }

    // parity
    if (q <= 2) {
        chi.parity_ = 1;
    } else {
        std::uint64_t m1 = q - 1;
        chi.parity_ = (chi.phase_num_[m1] == 0) ? 1 : -1;
    }

    // conductor: smallest divisor f of q with chi trivial on {a = 1 mod f}
    chi.conductor_ = q;
    for (std::uint32_t f = 1; f <= q; ++f) {
        if (q % f != 0) continue;
        bool trivial = true;
        for (std::uint64_t a = 1; a < q && trivial; a += f) {
            if (std::gcd(a, (std::uint64_t)q) != 1) continue;
            if (chi.phase_num_[a] != 0) trivial = false;
        }
        if (trivial) { chi.conductor_ = f; break; }
    }
    return chi;
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const {
    return values_[n % q_];
}

double DirichletCharacter::xi_at(std::uint64_t p) const {
    std::uint64_t num, den;
    phase_at(p, num, den);
    return static_cast<double>(num) / static_cast<double>(den);
}

void DirichletCharacter::phase_at(std::uint64_t n, std::uint64_t& num, std::uint64_t& den) const {
    std::uint64_t a = n % q_;
    if (q_ > 1 && std::gcd(a, (std::uint64_t)q_) != 1)
        throw std::domain_error("DirichletCharacter: chi(n) = 0 has no phase");
    std::uint64_t raw = static_cast<std::uint64_t>(phase_num_[a]);
    std::uint64_t g = std::gcd(raw == 0 ? (std::uint64_t)order_ : raw, (std::uint64_t)order_);
    num = raw / g;
    den = order_ / g;
    if (raw == 0) { num = 0; den = 1; }
}

DirichletCharacter DirichletCharacter::conjugate() const {
    // conjugate character has all phases negated; find its index by value table
    std::uint32_t n = group_order(q_);
    for (std::uint32_t j = 0; j < n; ++j) {
        DirichletCharacter c = make(q_, j);
        bool match = true;
        for (std::uint64_t a = 0; a < q_ && match; ++a) {
            if (phase_num_[a] < 0) continue;
            std::uint64_t neg = (order_ - static_cast<std::uint64_t>(phase_num_[a])) % order_;
            // compare as rationals num/order_ vs c.phase_num_[a]/c.order_
            if (c.phase_num_[a] < 0 ||
                neg * c.order_ != static_cast<std::uint64_t>(c.phase_num_[a]) * order_)
                match = false;
        }
        if (match) return c;
    }
    throw std::logic_error("DirichletCharacter::conjugate: not found");
}

std::complex<double> DirichletCharacter::gauss_sum() const {
    std::complex<double> s{0.0, 0.0};
    for (std::uint64_t a = 1; a < q_; ++a) {
        if (phase_num_[a] < 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(q_);
        s += values_[a] * std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    if (q_ == 1) s = {1.0, 0.0};
    return s;
}

std::uint32_t DirichletCharacter::group_order(std::uint32_t q) {
    return static_cast<std::uint32_t>(euler_phi(q));
}

} // namespace zerodist
