#pragma once

#include <optional>

#include "cstokes/besov.hpp"
#include "cstokes/field.hpp"
#include "cstokes/symbols.hpp"
#include "cstokes/wholespace.hpp"

namespace cstokes {

/// Boundary trace coefficients per tangential frequency: h[t][j],
/// j = 0..dim-1, with the normal entry identically zero.
struct BoundaryCoefficients {
    GridPtr grid;
    int dim = 2;
    std::vector<cplx> h;  // [t * dim + j]

    cplx at(int t, int j) const { return h[static_cast<std::size_t>(t) * dim + j]; }
};

/// Lambda-independent preprocessing of one data field: the reflected
/// extension in full spectral representation plus the band-limited values of
/// the tangential-spectral data at the graded quadrature nodes.
struct LamePrepared {
    GridPtr grid;
    int ncomp = 0;
    WholeField ext_spectral;
    std::vector<cplx> graded;  // [c][t * n_quad + q]

    const cplx* graded_col(int c, int t) const {
        const std::size_t nq = grid->normal_quadrature().size();
        return graded.data() + (static_cast<std::size_t>(c) * grid->nt() +
                                static_cast<std::size_t>(t)) * nq;
    }
};

LamePrepared prepare_lame(const Field& g);

struct LameOutputs {
    Field u;  // TanSpectral
    BoundaryCoefficients h;
    std::optional<Field> part1, part2;  // u = part1 + part2 when split
    /// Tangential-spectral boundary trace of u (diagnostic; should be ~0).
    std::vector<cplx> trace;            // [t * dim + j]
};

/// Solves the half-space Lame system for prepared data: whole-space part by
/// the per-mode multiplier on the reflected extension, boundary corrector
/// from the trace coefficients. `split` also produces the two-block
/// decomposition (lambda-uniform block / lambda^{-1}-weighted block).
LameOutputs solve_lame_prepared(cplx lambda, const LamePrepared& prep,
                                const FluidParams& p, bool split = false);

/// Trace coefficients of the solution formula: h_j in terms of the
/// y_N-quadratures of e^{-B y} and M(y) against the data columns; h_N = 0.
BoundaryCoefficients boundary_coefficients(cplx lambda, const Field& g,
                                           const FluidParams& p);

/// Boundary corrector from given trace coefficients:
///   w_j = h_j e^{-B x} - (i xi_j eta/K) M(x) (i xi'. h'),
///   w_N = (A eta/K) M(x) (i xi'. h').
/// Output TanSpectral.
Field apply_corrector_W(cplx lambda, const BoundaryCoefficients& h,
                        const FluidParams& p);

/// u solving lambda u - alpha Lap u - eta grad div u = g, u|_{x_N=0} = 0.
Field solve_lame(cplx lambda, const Field& g, const FluidParams& p);

struct ResidualNorms {
    double eq1 = 0.0;       // || lambda rho + gamma div u - f || / ||(f,g)||
    double eq2 = 0.0;       // momentum residual at interior nodes, relative
    double boundary = 0.0;  // || u(.,0) || / || u ||
};

struct ResolventSolution {
    Field rho;  // TanSpectral scalar
    Field u;    // TanSpectral vector
    ResidualNorms diagnostics;
};

/// Full resolvent solve: u = solve_lame(lambda, g - gamma/lambda grad f),
/// rho = (f - gamma div u)/lambda. Fills the boundary diagnostic; equation
/// residuals are computed by resolvent_residuals below.
ResolventSolution solve_resolvent(cplx lambda, const Field& f, const Field& g,
                                  const FluidParams& p);

/// Independent residual evaluation of the resolvent system via the spectral/
/// finite-difference derivative realization (no solver internals).
ResidualNorms resolvent_residuals(cplx lambda, const Field& f, const Field& g,
                                  const ResolventSolution& sol,
                                  const FluidParams& p);

struct SplitOperators {
    Field s1;   // lambda-uniform velocity block, acts on g alone
    Field s2;   // lambda^{-1}-weighted velocity block
    Field r;    // density block
};

/// Decomposition u = S1(lambda) g + S2(lambda)(f,g), rho = R(lambda)(f,g).
/// Requires the K2/K3 region bound <= 1/2 on the grid's frequency range.
SplitOperators split_operators(cplx lambda, const Field& f, const Field& g,
                               const FluidParams& p);

/// Reusable resolvent operator for a fixed data pair (prepares extensions
/// once; every lambda evaluation is then cheap). Used by the semigroup
/// quadrature.
class ResolventOperator {
  public:
    ResolventOperator(const Field& f, const Field& g, const FluidParams& p);

    /// (rho, u) at lambda.
    ResolventSolution apply(cplx lambda) const;

    /// (S1 g, S2(f,g), R(f,g)) at lambda.
    SplitOperators apply_split(cplx lambda) const;

    const FluidParams& params() const { return params_; }
    const GridPtr& grid() const { return grid_; }

  private:
    FluidParams params_;
    GridPtr grid_;
    Field f_;  // TanSpectral copy of the scalar datum
    LamePrepared g_prep_;
    LamePrepared gradf_prep_;

    Field velocity(cplx lambda, LameOutputs* split_out) const;
};

}  // namespace cstokes
