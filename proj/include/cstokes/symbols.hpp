#pragma once

#include "cstokes/types.hpp"

namespace cstokes {

/// Membership test for the admissible resolvent-parameter region: the sector
/// |arg lambda| <= pi - epsilon, the disk-complement condition
/// (Re l + g^2/(a+b) + eps)^2 + (Im l)^2 >= (g^2/(a+b) + eps)^2, and
/// |lambda| >= nu0. Total on nonzero lambda.
bool in_sector(cplx lambda, const SectorSpec& spec, const FluidParams& p);

/// eta(lambda) = beta + gamma^2 / lambda.
cplx eta_lambda(cplx lambda, const FluidParams& p);

/// p(lambda) = lambda / (alpha + eta(lambda)) = lambda^2/((a+b)lambda + g^2).
cplx p_lambda(cplx lambda, const FluidParams& p);

/// Characteristic roots and denominators at one (lambda, xi') point:
///   A = sqrt(p(lambda) + |xi'|^2),   B = sqrt(lambda/alpha + |xi'|^2),
///   K = (alpha+eta)A + alpha B,      K1 = (alpha+beta)A + alpha B.
/// Both square roots take the principal branch, so Re A, Re B > 0 and the
/// kernels exp(-A x_N), exp(-B x_N) decay.
struct SymbolSet {
    cplx eta, p, A, B, K, K1;
};

SymbolSet eval_symbols(cplx lambda, double xi_sq, const FluidParams& p);

cplx symbol_A(const SymbolPoint& pt, const FluidParams& p);
cplx symbol_B(const SymbolPoint& pt, const FluidParams& p);
cplx symbol_K(const SymbolPoint& pt, const FluidParams& p);
cplx symbol_K1(const SymbolPoint& pt, const FluidParams& p);

/// K2(lambda; xi') from the split eta/K = beta/K1 + K2/lambda, valid where
/// |gamma^2 A K1^{-1} lambda^{-1}| <= 1/2. Throws std::domain_error when the
/// bound fails at the given point.
cplx symbol_K2(const SymbolPoint& pt, const FluidParams& p);

/// K3(lambda; xi') from
/// (eta/K)(beta l + g^2)/((a+b)l + g^2) = beta^2/((a+b)K1) + K3/lambda.
cplx symbol_K3(const SymbolPoint& pt, const FluidParams& p);

/// q(lambda) from (beta l + g^2)/((a+b)l + g^2) = beta/(a+b) + q(lambda)/l.
cplx q_lambda(cplx lambda, const FluidParams& p);

/// The admissibility bound |gamma^2 A K1^{-1} / lambda| at a point.
double k2_region_bound(cplx lambda, double xi_sq, const FluidParams& p);

/// Two-mode boundary-layer kernel  M(x) = (e^{-Ax} - e^{-Bx})/(A - B),
/// evaluated through the integral representation
/// M(x) = -x \int_0^1 e^{-((1-t)A + tB)x} dt when |A-B| is small relative to
/// |A|+|B| (crossover threshold tau_M), which removes the cancellation in the
/// divided difference.
inline constexpr double kernel_M_tau = 1e-3;

cplx kernel_M(cplx A, cplx B, double xN);
cplx kernel_M(const SymbolPoint& pt, const FluidParams& p, double xN);

/// Naive divided-difference evaluation (no stabilized branch); test hook.
cplx kernel_M_naive(cplx A, cplx B, double xN);

/// d^l/dx^l M(x) = (-1)^l (A^l M(x) + ((A^l - B^l)/(A-B)) e^{-Bx}), l >= 1.
/// The divided difference (A^l-B^l)/(A-B) is expanded as a polynomial, so no
/// cancellation occurs.
cplx kernel_M_dN(int ell, cplx A, cplx B, double xN);

/// Boundary kernels:
///   P1 = B e^{-B(x+y)},  P2 = B^2 e^{-Bx} M(y),
///   P3 = B^2 M(x) e^{-By},  P4 = B^3 M(x) M(y).
cplx kernel_P(int j, const SymbolPoint& pt, const FluidParams& p, double xN,
              double yN);

/// Admissibility thresholds computed by sampled suprema:
///   lambda1 = 2 gamma^2 sup |A / K1| over the sampled region,
///   lambda2 = max(lambda1, 2 gamma^2/(alpha+beta)).
struct AdmissibleRegion {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double sup_A_over_K1 = 0.0;  // the sampled supremum behind lambda1
};

/// xi_max should cover the grid's tangential Nyquist frequency.
AdmissibleRegion compute_region(const FluidParams& p, double epsilon,
                                double xi_max, double probe_floor = 0.5);

}  // namespace cstokes
