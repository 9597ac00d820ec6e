#include "cstokes/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cstokes {

namespace {

double glue(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double DyadicPartition::profile(double r) {
    // 1 on r <= 1, 0 on r >= 2, C^inf in between.
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double a = glue(2.0 - r);
    const double b = glue(r - 1.0);
    return a / (a + b);
}

DyadicPartition build_partition(GridPtr grid) {
    DyadicPartition P;
    P.grid = grid;
    const Grid& g = *grid;

    const double nyq_t = g.tangential().nyquist();
    const double nyq_n = pi / g.y_max() * g.nz();
    const double nyq_min = std::min(nyq_t, nyq_n);
    P.j_usable = static_cast<int>(std::floor(std::log2(nyq_min))) - 1;
    if (P.j_usable < 2)
        throw std::invalid_argument("build_partition: grid too coarse");
    P.j_cover = static_cast<int>(
        std::ceil(std::log2(std::max(g.lattice_freq_max(), 2.0))));

    const int nzw = g.nz_whole();
    const std::size_t lattice = static_cast<std::size_t>(g.nt()) * nzw;
    P.mult_.assign(P.j_cover + 1, std::vector<double>(lattice));
    for (int t = 0; t < g.nt(); ++t) {
        const double xs = g.xi_sq(t);
        for (int n = 0; n < nzw; ++n) {
            const double kap = g.kappa(n);
            const double r = std::sqrt(xs + kap * kap);
            const std::size_t idx = static_cast<std::size_t>(t) * nzw + n;
            double prev = DyadicPartition::profile(r);  // Phi(2^0 r)
            P.mult_[0][idx] = prev;
            for (int k = 1; k <= P.j_cover; ++k) {
                const double cur = DyadicPartition::profile(std::ldexp(r, -k));
                P.mult_[k][idx] = cur - prev;
                prev = cur;
            }
        }
    }
    return P;
}

std::vector<WholeField> lp_blocks(const WholeField& f, const DyadicPartition& P) {
    if (f.grid != P.grid)
        throw std::invalid_argument("lp_blocks: partition built for another grid");
    const WholeField s = to_rep(f, Rep::Spectral);
    std::vector<WholeField> blocks;
    blocks.reserve(P.j_cover + 1);
    for (int k = 0; k <= P.j_cover; ++k) {
        WholeField b = s;
        const auto& m = P.block_multiplier(k);
        for (int c = 0; c < b.ncomp; ++c) {
            cplx* d = b.comp(c);
            for (std::size_t i = 0; i < m.size(); ++i) d[i] *= m[i];
        }
        blocks.push_back(to_rep(b, Rep::Physical));
    }
    return blocks;
}

double besov_norm(const WholeField& f, const BesovParams& bp,
                  const DyadicPartition& P) {
    const auto blocks = lp_blocks(f, P);
    const double low = lq_norm(blocks[0], bp.q);
    if (bp.r_inf) {
        double sup = 0.0;
        for (int k = 1; k <= P.j_cover; ++k)
            sup = std::max(sup,
                           std::pow(2.0, bp.s * k) * lq_norm(blocks[k], bp.q));
        return low + sup;
    }
    double acc = 0.0;
    for (int k = 1; k <= P.j_cover; ++k)
        acc += std::pow(std::pow(2.0, bp.s * k) * lq_norm(blocks[k], bp.q), bp.r);
    return low + std::pow(acc, 1.0 / bp.r);
}

HalfspaceNorm besov_norm_halfspace(const Field& f, const BesovParams& bp,
                                   std::span<const Parity> parity,
                                   const DyadicPartition& P) {
    HalfspaceNorm out;
    out.equivalent = bp.in_equivalence_range();
    out.value = besov_norm(extend_reflect(f, parity), bp, P);
    return out;
}

double pair_norm_halfspace(const Field& f_scalar, const Field& g_vector,
                           const BesovParams& bp, const DyadicPartition& P) {
    BesovParams bp1 = bp;
    bp1.s = bp.s + 1.0;
    const auto nf = besov_norm_halfspace(
        f_scalar, bp1, all_parity(Parity::Even, 1), P);
    const auto ng = besov_norm_halfspace(
        g_vector, bp, vector_parity(g_vector.ncomp), P);
    return nf.value + ng.value;
}

WholeField bessel_lift(const WholeField& f, double sigma) {
    const WholeField s = to_rep(f, Rep::Spectral);
    const Grid& g = *f.grid;
    WholeField out = s;
    const int nzw = g.nz_whole();
    for (int c = 0; c < out.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            const double xs = g.xi_sq(t);
            cplx* row = out.comp(c) + static_cast<std::size_t>(t) * nzw;
            for (int n = 0; n < nzw; ++n) {
                const double w = std::pow(
                    1.0 + xs + g.kappa(n) * g.kappa(n), 0.5 * sigma);
                row[n] *= w;
            }
        }
    return out;
}

double sequence_norm(std::span<const double> a, int nu_first, double s,
                     double q, bool q_inf) {
    if (q_inf) {
        double sup = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double nu = nu_first + static_cast<double>(i);
            sup = std::max(sup, std::pow(2.0, nu * s) * std::abs(a[i]));
        }
        return sup;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double nu = nu_first + static_cast<double>(i);
        acc += std::pow(std::pow(2.0, nu * s) * std::abs(a[i]), q);
    }
    return std::pow(acc, 1.0 / q);
}

}  // namespace cstokes
