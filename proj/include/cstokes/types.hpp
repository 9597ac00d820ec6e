#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cstokes {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Coefficients of the linearized compressible Stokes system.
/// alpha, beta are the (density-scaled) viscosities, gamma_c the sound-speed
/// coefficient, dim the space dimension N.
struct FluidParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma_c = 1.0;
    int dim = 2;

    FluidParams() = default;
    FluidParams(double a, double b, double g, int n)
        : alpha(a), beta(b), gamma_c(g), dim(n) {
        validate();
    }

    void validate() const {
        if (!(alpha > 0.0))
            throw std::invalid_argument("FluidParams: alpha must be positive");
        if (!(alpha + beta > 0.0))
            throw std::invalid_argument("FluidParams: alpha+beta must be positive");
        if (!(gamma_c > 0.0))
            throw std::invalid_argument("FluidParams: gamma_c must be positive");
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("FluidParams: dim must be 2 or 3");
    }

    double gamma_sq() const { return gamma_c * gamma_c; }
};

/// Spectral region parameters: the admissible set is the intersection of the
/// sector |arg z| <= pi - epsilon, the disk-complement condition, and
/// |z| >= nu0.
struct SectorSpec {
    double epsilon = pi / 4.0;
    double nu0 = 1.0;

    SectorSpec() = default;
    SectorSpec(double eps, double n0) : epsilon(eps), nu0(n0) { validate(); }

    void validate() const {
        if (!(epsilon > 0.0 && epsilon < pi / 2.0))
            throw std::invalid_argument("SectorSpec: epsilon must lie in (0, pi/2)");
        if (!(nu0 > 0.0))
            throw std::invalid_argument("SectorSpec: nu0 must be positive");
    }
};

/// A point (lambda, xi') in resolvent-parameter x tangential-frequency space.
/// xi_t holds the first dim_t components of the tangential frequency.
struct SymbolPoint {
    cplx lambda;
    std::array<double, 2> xi_t{0.0, 0.0};
    int dim_t = 1;

    SymbolPoint() = default;
    SymbolPoint(cplx lam, double xi1) : lambda(lam), xi_t{xi1, 0.0}, dim_t(1) {}
    SymbolPoint(cplx lam, double xi1, double xi2)
        : lambda(lam), xi_t{xi1, xi2}, dim_t(2) {}

    double xi_sq() const {
        double s = 0.0;
        for (int d = 0; d < dim_t; ++d) s += xi_t[d] * xi_t[d];
        return s;
    }
    double xi_norm() const { return std::sqrt(xi_sq()); }
};

/// Besov-space indices: smoothness s, integrability q, summation exponent r.
/// r == infinity is encoded as r_inf = true.
struct BesovParams {
    double s = 0.0;
    double q = 2.0;
    double r = 1.0;
    bool r_inf = false;

    BesovParams() = default;
    BesovParams(double s_, double q_, double r_, bool rinf = false)
        : s(s_), q(q_), r(r_), r_inf(rinf) {
        validate();
    }

    void validate() const {
        if (!(q > 1.0))
            throw std::invalid_argument("BesovParams: q must lie in (1, inf)");
        if (!r_inf && !(r >= 1.0))
            throw std::invalid_argument("BesovParams: r must lie in [1, inf]");
    }

    /// True when s lies in the range where the reflection-extension norm is
    /// an equivalent half-space norm.
    bool in_equivalence_range() const {
        return s > -1.0 + 1.0 / q && s < 1.0 / q;
    }
};

}  // namespace cstokes
