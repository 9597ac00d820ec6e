#include "cstokes/symbols.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cstokes/quadrature.hpp"

namespace cstokes {

bool in_sector(cplx lambda, const SectorSpec& spec, const FluidParams& p) {
    if (lambda == cplx(0.0)) return false;
    if (std::abs(std::arg(lambda)) > pi - spec.epsilon) return false;
    const double R = p.gamma_sq() / (p.alpha + p.beta) + spec.epsilon;
    const double re = lambda.real() + R;
    const double im = lambda.imag();
    if (re * re + im * im < R * R) return false;
    return std::abs(lambda) >= spec.nu0;
}

cplx eta_lambda(cplx lambda, const FluidParams& p) {
    if (lambda == cplx(0.0))
        throw std::domain_error("eta_lambda: lambda = 0");
    return p.beta + p.gamma_sq() / lambda;
}

cplx p_lambda(cplx lambda, const FluidParams& p) {
    const cplx denom = p.alpha + eta_lambda(lambda, p);
    if (denom == cplx(0.0))
        throw std::domain_error("p_lambda: (alpha+beta)lambda + gamma^2 = 0");
    return lambda / denom;
}

namespace {

cplx sqrt_right_halfplane(cplx z, const char* who) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error(std::string(who) +
                                ": radicand on the closed negative real axis");
    return std::sqrt(z);  // principal branch, Re >= 0
}

}  // namespace

SymbolSet eval_symbols(cplx lambda, double xi_sq, const FluidParams& p) {
    SymbolSet s;
    s.eta = eta_lambda(lambda, p);
    s.p = lambda / (p.alpha + s.eta);
    s.A = sqrt_right_halfplane(s.p + xi_sq, "symbol_A");
    s.B = sqrt_right_halfplane(lambda / p.alpha + xi_sq, "symbol_B");
    s.K = (p.alpha + s.eta) * s.A + p.alpha * s.B;
    s.K1 = (p.alpha + p.beta) * s.A + p.alpha * s.B;
    return s;
}

cplx symbol_A(const SymbolPoint& pt, const FluidParams& p) {
    return eval_symbols(pt.lambda, pt.xi_sq(), p).A;
}
cplx symbol_B(const SymbolPoint& pt, const FluidParams& p) {
    return eval_symbols(pt.lambda, pt.xi_sq(), p).B;
}
cplx symbol_K(const SymbolPoint& pt, const FluidParams& p) {
    return eval_symbols(pt.lambda, pt.xi_sq(), p).K;
}
cplx symbol_K1(const SymbolPoint& pt, const FluidParams& p) {
    return eval_symbols(pt.lambda, pt.xi_sq(), p).K1;
}

double k2_region_bound(cplx lambda, double xi_sq, const FluidParams& p) {
    const SymbolSet s = eval_symbols(lambda, xi_sq, p);
    return std::abs(p.gamma_sq() * s.A / (s.K1 * lambda));
}

namespace {

void require_k2_region(cplx lambda, double xi_sq, const FluidParams& p) {
    if (k2_region_bound(lambda, xi_sq, p) > 0.5)
        throw std::domain_error(
            "symbol_K2/K3: |gamma^2 A / (K1 lambda)| > 1/2 at this point");
}

}  // namespace

cplx symbol_K2(const SymbolPoint& pt, const FluidParams& p) {
    const double xi2 = pt.xi_sq();
    require_k2_region(pt.lambda, xi2, p);
    const SymbolSet s = eval_symbols(pt.lambda, xi2, p);
    const cplx g2 = p.gamma_sq();
    const cplx aK1 = g2 * s.A / s.K1;
    // eta/K = beta/K1 + K2/lambda with
    // K2 = -(beta/K1) * aK1 / (1 + aK1/lambda) + gamma^2 / K.
    return -(p.beta / s.K1) * aK1 / (1.0 + aK1 / pt.lambda) + g2 / s.K;
}

cplx q_lambda(cplx lambda, const FluidParams& p) {
    const double ab = p.alpha + p.beta;
    return p.alpha * p.gamma_sq() * lambda / (ab * (ab * lambda + p.gamma_sq()));
}

cplx symbol_K3(const SymbolPoint& pt, const FluidParams& p) {
    const double xi2 = pt.xi_sq();
    require_k2_region(pt.lambda, xi2, p);
    const SymbolSet s = eval_symbols(pt.lambda, xi2, p);
    const double ab = p.alpha + p.beta;
    const cplx g2 = p.gamma_sq();
    const cplx denom = ab * pt.lambda + g2;
    return p.alpha * p.beta * g2 / (ab * s.K1) * (pt.lambda / denom) +
           symbol_K2(pt, p) * (p.beta * pt.lambda + g2) / denom;
}

cplx kernel_M_naive(cplx A, cplx B, double xN) {
    return (std::exp(-A * xN) - std::exp(-B * xN)) / (A - B);
}

cplx kernel_M(cplx A, cplx B, double xN) {
    if (xN == 0.0) return 0.0;
    if (std::abs(A - B) >= kernel_M_tau * (std::abs(A) + std::abs(B)))
        return kernel_M_naive(A, B, xN);
    // M(x) = -x * int_0^1 exp(-((1-t)A + tB) x) dt, 16-node Gauss-Legendre.
    static thread_local std::vector<double> tn, tw;
    if (tn.empty()) gauss_legendre(16, 0.0, 1.0, tn, tw);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < tn.size(); ++i)
        acc += tw[i] * std::exp(-((1.0 - tn[i]) * A + tn[i] * B) * xN);
    return -xN * acc;
}

cplx kernel_M(const SymbolPoint& pt, const FluidParams& p, double xN) {
    const SymbolSet s = eval_symbols(pt.lambda, pt.xi_sq(), p);
    return kernel_M(s.A, s.B, xN);
}

cplx kernel_M_dN(int ell, cplx A, cplx B, double xN) {
    if (ell < 1) throw std::invalid_argument("kernel_M_dN: ell >= 1");
    // (A^l - B^l)/(A - B) = sum_{i=0}^{l-1} A^i B^{l-1-i}
    cplx divdiff = 0.0;
    for (int i = 0; i < ell; ++i)
        divdiff += std::pow(A, i) * std::pow(B, ell - 1 - i);
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return sign * (std::pow(A, ell) * kernel_M(A, B, xN) +
                   divdiff * std::exp(-B * xN));
}

cplx kernel_P(int j, const SymbolPoint& pt, const FluidParams& p, double xN,
              double yN) {
    const SymbolSet s = eval_symbols(pt.lambda, pt.xi_sq(), p);
    const cplx B = s.B;
    switch (j) {
        case 1: return B * std::exp(-B * (xN + yN));
        case 2: return B * B * std::exp(-B * xN) * kernel_M(s.A, B, yN);
        case 3: return B * B * kernel_M(s.A, B, xN) * std::exp(-B * yN);
        case 4: return B * B * B * kernel_M(s.A, B, xN) * kernel_M(s.A, B, yN);
        default: throw std::invalid_argument("kernel_P: j must be 1..4");
    }
}

AdmissibleRegion compute_region(const FluidParams& p, double epsilon,
                                double xi_max, double probe_floor) {
    // Sampled sup of |A/K1| over the sector above probe_floor. The ratio is
    // scale-invariant enough that a log radius sweep suffices.
    const int n_angle = 32, n_rad = 24, n_xi = 48;
    double sup = 0.0;
    const SectorSpec probe{epsilon, probe_floor};
    for (int ia = 0; ia <= n_angle; ++ia) {
        const double th = (pi - epsilon) * (2.0 * ia / n_angle - 1.0);
        for (int ir = 0; ir <= n_rad; ++ir) {
            const double r =
                probe_floor * std::pow(1e4, static_cast<double>(ir) / n_rad);
            const cplx lam = std::polar(r, th);
            if (!in_sector(lam, probe, p)) continue;
            for (int ix = 0; ix <= n_xi; ++ix) {
                const double xi = xi_max * ix / n_xi;
                const SymbolSet s = eval_symbols(lam, xi * xi, p);
                sup = std::max(sup, std::abs(s.A / s.K1));
            }
        }
    }
    AdmissibleRegion reg;
    reg.sup_A_over_K1 = sup;
    reg.lambda1 = 2.0 * p.gamma_sq() * sup;
    reg.lambda2 = std::max(reg.lambda1, 2.0 * p.gamma_sq() / (p.alpha + p.beta));
    return reg;
}

}  // namespace cstokes
