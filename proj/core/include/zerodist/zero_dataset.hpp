// ZeroDataset: a validated, sorted list of positive zero ordinates with a
// completeness ceiling t_max and provenance.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zerodist {

enum class ZeroSource : std::uint8_t {
    computed_zeta = 0,
    computed_dirichlet = 1,
    imported = 2,
};

struct ZeroDataset {
    std::vector<double> ordinates;  // strictly increasing, all in (0, t_max]
    double t_max = 0.0;
    ZeroSource source = ZeroSource::imported;
    std::uint32_t modulus = 0;     // Dirichlet sources only
    std::uint32_t char_index = 0;  // Dirichlet sources only
    std::string label;
};

// Main term of the zero counting function: (T/2pi) log(T/(2 pi e)).
double zeta_count_mainterm(double T);
// Dirichlet analogue with conductor q: (T/2pi) log(qT/(2 pi e)).
double dirichlet_count_mainterm(std::uint32_t q, double T);

// Throws std::invalid_argument on any invariant violation. For
// computed_zeta sources the count is also certified against the main
// term within 5 + 2 log T on a grid up to t_max.
void validate_dataset(const ZeroDataset& ds);

// |{gamma in ds : gamma <= T}|; T must not exceed t_max.
std::size_t count_zeros(const ZeroDataset& ds, double T);

// count(T) minus the source-appropriate main term.
double mainterm_residual(const ZeroDataset& ds, double T);

} // namespace zerodist
