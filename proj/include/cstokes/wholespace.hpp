#pragma once

#include "cstokes/field.hpp"
#include "cstokes/symbols.hpp"

namespace cstokes {

/// Throws std::domain_error unless lambda lies in the admissible region.
void require_admissible(cplx lambda, const SectorSpec& spec,
                        const FluidParams& p);

/// Whole-space solution operator of the lambda-dependent Lame system
///   lambda u - alpha Lap u - eta(lambda) grad div u = g :
/// per-mode inverse
///   u_hat = g_hat/(lambda+a|xi|^2)
///         - c(lambda) xi (xi . g_hat) / ((lambda+a|xi|^2)(p(lambda)+|xi|^2)),
/// c(lambda) = (beta lambda + gamma^2)/((alpha+beta) lambda + gamma^2).
/// Input vector field in any rep; output Spectral.
WholeField apply_S0(cplx lambda, const WholeField& g, const FluidParams& p);

/// Two-part split S0 = T01 + T02: T01 keeps the lambda-independent
/// coefficient block beta/(alpha(alpha+beta)); T02 carries the remainder,
/// evaluated in closed form. Requires |lambda| > gamma^2/(alpha+beta).
struct WholeParts {
    WholeField t01, t02;
};
WholeParts apply_S0_parts(cplx lambda, const WholeField& g,
                          const FluidParams& p);

/// Exact lambda-derivative of apply_S0 (differentiated symbols per mode).
WholeField apply_dS0(cplx lambda, const WholeField& g, const FluidParams& p);

/// Lambda-derivative of the T01 part (per-mode symbolic derivative).
WholeField apply_dT01(cplx lambda, const WholeField& g, const FluidParams& p);

/// Forward operator lambda u - alpha Lap u - eta grad div u (per mode).
WholeField apply_lame_forward(cplx lambda, const WholeField& u,
                              const FluidParams& p);

}  // namespace cstokes
