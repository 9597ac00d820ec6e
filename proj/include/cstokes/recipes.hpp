#pragma once

#include <cstdint>
#include <utility>

#include "cstokes/besov.hpp"
#include "cstokes/semigroup.hpp"

namespace cstokes {

/// Manufactured test data: tensor Gaussian bumps with seeded random centers
/// and widths. Normal centers sit well inside (0, Y_max) so the normal tails
/// at the boundary and at Y_max are below 1e-12 and the semi-infinite
/// quadratures truncated at Y_max are faithful.
Field gaussian_scalar(GridPtr g, std::uint64_t seed);
Field gaussian_vector(GridPtr g, std::uint64_t seed);

/// (f, g) data pair for the resolvent problem.
std::pair<Field, Field> gaussian_pair(GridPtr g, std::uint64_t seed);

/// Initial state (rho0, u0); unit-normalized in the H^s pair norm when a
/// partition is supplied.
EvolutionState gaussian_state(GridPtr g, std::uint64_t seed);
EvolutionState gaussian_state_normalized(GridPtr g, std::uint64_t seed,
                                         const BesovParams& bp,
                                         const DyadicPartition& P);

/// Whole-box Gaussian vector field (for whole-space oracles).
WholeField gaussian_whole_vector(GridPtr g, std::uint64_t seed);

/// Named CLI recipes: "zero", "gauss-<seed>" (e.g. gauss-1).
std::pair<Field, Field> recipe_pair(GridPtr g, const std::string& name);
EvolutionState recipe_state(GridPtr g, const std::string& name);

/// Admissible lambda sampler: radius in [lo_mag, hi_mag] (log-uniform),
/// argument uniform in [-max_arg, max_arg]; rejection against in_sector.
std::vector<cplx> sample_admissible(const SectorSpec& sector,
                                    const FluidParams& p, int count,
                                    std::uint64_t seed, double lo_mag,
                                    double hi_mag, double max_arg);

}  // namespace cstokes
