#include "cstokes/wholespace.hpp"

#include <stdexcept>

namespace cstokes {

void require_admissible(cplx lambda, const SectorSpec& spec,
                        const FluidParams& p) {
    if (!in_sector(lambda, spec, p)) {
        std::string why;
        if (lambda == cplx(0.0)) {
            why = "lambda = 0";
        } else if (std::abs(std::arg(lambda)) > pi - spec.epsilon) {
            why = "|arg lambda| > pi - epsilon";
        } else {
            const double R = p.gamma_sq() / (p.alpha + p.beta) + spec.epsilon;
            const double re = lambda.real() + R;
            if (re * re + lambda.imag() * lambda.imag() < R * R)
                why = "disk-complement condition violated";
            else
                why = "|lambda| < nu0";
        }
        throw std::domain_error("inadmissible lambda: " + why);
    }
}

namespace {

struct ModeCoeffs {
    cplx eta, p, c;        // c = eta/(alpha+eta)
    cplx c1;               // beta/(alpha(alpha+beta)) block for T01
    cplx c2;               // eta/(alpha(alpha+eta)) - c1, the T02 coefficient
};

ModeCoeffs coeffs(cplx lambda, const FluidParams& p) {
    ModeCoeffs m;
    m.eta = eta_lambda(lambda, p);
    m.p = lambda / (p.alpha + m.eta);
    m.c = m.eta / (p.alpha + m.eta);
    m.c1 = p.beta / (p.alpha * (p.alpha + p.beta));
    m.c2 = m.eta / (p.alpha * (p.alpha + m.eta)) - m.c1;
    return m;
}

// Visits every lattice mode with its frequency components.
template <class F>
void for_each_mode(const Grid& g, F&& fn) {
    const int nzw = g.nz_whole();
    for (int t = 0; t < g.nt(); ++t) {
        const double xs = g.xi_sq(t);
        for (int n = 0; n < nzw; ++n) {
            const double kap = g.kappa(n);
            fn(t, n, xs + kap * kap);
        }
    }
}

cplx dot_mode(const Grid& g, const WholeField& f, int t, int n) {
    const int dim = g.dim();
    cplx acc = 0.0;
    for (int d = 0; d < dim - 1; ++d)
        acc += g.xi_comp(t, d) * f.at(d, t, n);
    acc += g.kappa(n) * f.at(dim - 1, t, n);
    return acc;
}

void put_mode(const Grid& g, WholeField& out, int t, int n, cplx diag_in,
              cplx rank1, const WholeField& src) {
    const int dim = g.dim();
    for (int d = 0; d < dim - 1; ++d)
        out.at(d, t, n) = diag_in * src.at(d, t, n) + rank1 * g.xi_comp(t, d);
    out.at(dim - 1, t, n) =
        diag_in * src.at(dim - 1, t, n) + rank1 * g.kappa(n);
}

void check_vector(const WholeField& g) {
    if (g.ncomp != g.grid->dim())
        throw std::invalid_argument("whole-space operator: vector field expected");
}

}  // namespace

WholeField apply_S0(cplx lambda, const WholeField& g, const FluidParams& p) {
    check_vector(g);
    const WholeField s = to_rep(g, Rep::Spectral);
    const Grid& gr = *g.grid;
    const ModeCoeffs mc = coeffs(lambda, p);
    WholeField out(g.grid, g.ncomp, Rep::Spectral);
    for_each_mode(gr, [&](int t, int n, double xi2) {
        const cplx a = 1.0 / (lambda + p.alpha * xi2);
        const cplx b = 1.0 / (mc.p + xi2);
        const cplx xg = dot_mode(gr, s, t, n);
        put_mode(gr, out, t, n, a, -mc.c * a * b * xg, s);
    });
    return out;
}

WholeParts apply_S0_parts(cplx lambda, const WholeField& g,
                          const FluidParams& p) {
    check_vector(g);
    if (!(std::abs(lambda) > p.gamma_sq() / (p.alpha + p.beta)))
        throw std::domain_error(
            "apply_S0_parts: |lambda| <= gamma^2/(alpha+beta) (series region)");
    const WholeField s = to_rep(g, Rep::Spectral);
    const Grid& gr = *g.grid;
    const ModeCoeffs mc = coeffs(lambda, p);
    WholeParts parts{WholeField(g.grid, g.ncomp, Rep::Spectral),
                     WholeField(g.grid, g.ncomp, Rep::Spectral)};
    for_each_mode(gr, [&](int t, int n, double xi2) {
        const cplx a = 1.0 / (lambda + p.alpha * xi2);
        const cplx b = 1.0 / (mc.p + xi2);
        const cplx xg = dot_mode(gr, s, t, n);
        // S02 g = -alpha a b xi (xi . g); T01 = S01 + c1 S02, T02 = c2 S02.
        const cplx s02 = -p.alpha * a * b * xg;
        put_mode(gr, parts.t01, t, n, a, mc.c1 * s02, s);
        put_mode(gr, parts.t02, t, n, 0.0, mc.c2 * s02, s);
    });
    return parts;
}

namespace {

struct DerivCoeffs {
    cplx c, dc, dp;
};

DerivCoeffs deriv_coeffs(cplx lambda, const FluidParams& p) {
    DerivCoeffs d;
    const cplx eta = eta_lambda(lambda, p);
    const cplx ae = p.alpha + eta;
    d.c = eta / ae;
    d.dc = -p.alpha * p.gamma_sq() / (lambda * lambda * ae * ae);
    d.dp = (p.alpha + p.beta + 2.0 * p.gamma_sq() / lambda) / (ae * ae);
    return d;
}

}  // namespace

WholeField apply_dS0(cplx lambda, const WholeField& g, const FluidParams& p) {
    check_vector(g);
    const WholeField s = to_rep(g, Rep::Spectral);
    const Grid& gr = *g.grid;
    const ModeCoeffs mc = coeffs(lambda, p);
    const DerivCoeffs dc = deriv_coeffs(lambda, p);
    WholeField out(g.grid, g.ncomp, Rep::Spectral);
    for_each_mode(gr, [&](int t, int n, double xi2) {
        const cplx a = 1.0 / (lambda + p.alpha * xi2);
        const cplx b = 1.0 / (mc.p + xi2);
        const cplx xg = dot_mode(gr, s, t, n);
        // d/dl [a I - c a b xi xi^T] =
        //   -a^2 I - (dc a b - c (a^2 b + a b^2 dp)) xi xi^T.
        const cplx rank1 =
            -(dc.dc * a * b - dc.c * (a * a * b + a * b * b * dc.dp)) * xg;
        put_mode(gr, out, t, n, -a * a, rank1, s);
    });
    return out;
}

WholeField apply_dT01(cplx lambda, const WholeField& g, const FluidParams& p) {
    check_vector(g);
    const WholeField s = to_rep(g, Rep::Spectral);
    const Grid& gr = *g.grid;
    const ModeCoeffs mc = coeffs(lambda, p);
    const DerivCoeffs dc = deriv_coeffs(lambda, p);
    WholeField out(g.grid, g.ncomp, Rep::Spectral);
    for_each_mode(gr, [&](int t, int n, double xi2) {
        const cplx a = 1.0 / (lambda + p.alpha * xi2);
        const cplx b = 1.0 / (mc.p + xi2);
        const cplx xg = dot_mode(gr, s, t, n);
        // T01 = a I + c1 S02 with S02 = -alpha a b xi xi^T;
        // d S02/dl = alpha (a^2 b + a b^2 dp) xi xi^T.
        const cplx rank1 =
            mc.c1 * p.alpha * (a * a * b + a * b * b * dc.dp) * xg;
        put_mode(gr, out, t, n, -a * a, rank1, s);
    });
    return out;
}

WholeField apply_lame_forward(cplx lambda, const WholeField& u,
                              const FluidParams& p) {
    check_vector(u);
    const WholeField s = to_rep(u, Rep::Spectral);
    const Grid& gr = *u.grid;
    const cplx eta = eta_lambda(lambda, p);
    WholeField out(u.grid, u.ncomp, Rep::Spectral);
    for_each_mode(gr, [&](int t, int n, double xi2) {
        const cplx xg = dot_mode(gr, s, t, n);
        put_mode(gr, out, t, n, lambda + p.alpha * xi2, eta * xg, s);
    });
    return out;
}

}  // namespace cstokes
