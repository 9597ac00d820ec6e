#include "cstokes/semigroup.hpp"

#include <cmath>
#include <stdexcept>

namespace cstokes {

Contour build_contour(const ContourSpec& spec, const FluidParams& p) {
    double gamma = spec.gamma_shift;
    const bool auto_shift = gamma <= 0.0;
    if (auto_shift) gamma = 2.0 * spec.lambda0;
    const double r_max =
        spec.r_max > 0.0 ? spec.r_max : 10.0 * spec.lambda0;

    const SectorSpec sector(spec.epsilon, spec.lambda0);
    for (int attempt = 0;; ++attempt) {
        Contour c;
        c.gamma_shift = gamma;
        c.epsilon = spec.epsilon;
        c.r_min = spec.r_min_factor * spec.lambda0;
        c.r_max = r_max;
        const double theta = pi - spec.epsilon;

        const int n_ray = std::max(
            8, static_cast<int>(std::ceil(std::log(c.r_max / c.r_min) /
                                          spec.h_log)) + 1);
        const double h = std::log(c.r_max / c.r_min) / (n_ray - 1);

        // Upper ray (r increasing) and its conjugate, built pairwise.
        std::vector<Contour::Node> upper;
        upper.reserve(n_ray);
        for (int j = 0; j < n_ray; ++j) {
            const double r = c.r_min * std::exp(h * j);
            const double wr = r * h * ((j == 0 || j == n_ray - 1) ? 0.5 : 1.0);
            Contour::Node nd;
            nd.lambda = gamma + std::polar(r, theta);
            nd.weight = wr * std::polar(1.0, theta);
            upper.push_back(nd);
        }
        // Vertex arc from -theta to theta, built as a mirrored half so nodes
        // pair off exactly under conjugation.
        std::vector<double> an, aw;
        gauss_legendre(8, 0.0, theta, an, aw);
        std::vector<Contour::Node> arc;
        for (std::size_t j = 0; j < an.size(); ++j) {
            Contour::Node nd;
            nd.lambda = gamma + std::polar(c.r_min, an[j]);
            nd.weight = cplx(0.0, 1.0) * c.r_min * std::polar(1.0, an[j]) * aw[j];
            arc.push_back(nd);
        }

        // Assemble with exact conjugate mirroring: lower ray (descending r)
        // first, then lower arc half, upper arc half, upper ray.
        for (int j = n_ray - 1; j >= 0; --j) {
            Contour::Node nd;
            nd.lambda = std::conj(upper[j].lambda);
            nd.weight = -std::conj(upper[j].weight);
            c.nodes.push_back(nd);
        }
        for (int j = static_cast<int>(arc.size()) - 1; j >= 0; --j) {
            Contour::Node nd;
            nd.lambda = std::conj(arc[j].lambda);
            nd.weight = -std::conj(arc[j].weight);
            c.nodes.push_back(nd);
        }
        c.nodes.insert(c.nodes.end(), arc.begin(), arc.end());
        c.nodes.insert(c.nodes.end(), upper.begin(), upper.end());

        bool ok = true;
        for (const auto& nd : c.nodes)
            if (!in_sector(nd.lambda, sector, p)) {
                ok = false;
                break;
            }
        if (ok) return c;
        if (!auto_shift || attempt > 40)
            throw std::domain_error(
                "build_contour: node fails the sector check (shift too small)");
        gamma *= 1.5;
    }
}

double contour_rmax_for_time(double t, const ContourSpec& spec) {
    return std::max(50.0 / t, 10.0 * spec.lambda0);
}

namespace {

EvolutionState weighted_sum(const Contour& c,
                            const std::vector<ResolventSolution>& vals,
                            double t, GridPtr grid, int dim) {
    EvolutionState out;
    out.t = t;
    out.rho = Field(grid, 1, Rep::TanSpectral);
    out.u = Field(grid, dim, Rep::TanSpectral);
    const cplx pref = 1.0 / (2.0 * pi * cplx(0.0, 1.0));
    for (std::size_t j = 0; j < c.nodes.size(); ++j) {
        const cplx w = pref * c.nodes[j].weight *
                       std::exp(c.nodes[j].lambda * t);
        if (w == cplx(0.0)) continue;
        axpy(w, vals[j].rho, out.rho);
        axpy(w, vals[j].u, out.u);
    }
    return out;
}

}  // namespace

Propagator::Propagator(const EvolutionState& state0, const Contour& contour,
                       const FluidParams& p, bool with_parts)
    : contour_(contour), grid_(state0.rho.grid), dim_(state0.u.ncomp) {
    const ResolventOperator op(state0.rho, state0.u, p);
    vals_.reserve(contour_.nodes.size());
    if (with_parts) split_vals_.reserve(contour_.nodes.size());
    for (const auto& nd : contour_.nodes) {
        vals_.push_back(op.apply(nd.lambda));
        if (with_parts) split_vals_.push_back(op.apply_split(nd.lambda));
    }
}

EvolutionState Propagator::eval(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("Propagator::eval: t > 0");
    return weighted_sum(contour_, vals_, t, grid_, dim_);
}

EvolutionParts Propagator::eval_parts(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("eval_parts: t > 0");
    if (split_vals_.empty())
        throw std::logic_error("eval_parts: propagator built without parts");
    EvolutionParts out;
    out.t = t;
    out.t1_u = Field(grid_, dim_, Rep::TanSpectral);
    out.t2_u = Field(grid_, dim_, Rep::TanSpectral);
    out.t3_rho = Field(grid_, 1, Rep::TanSpectral);
    const cplx pref = 1.0 / (2.0 * pi * cplx(0.0, 1.0));
    for (std::size_t j = 0; j < contour_.nodes.size(); ++j) {
        const cplx w = pref * contour_.nodes[j].weight *
                       std::exp(contour_.nodes[j].lambda * t);
        if (w == cplx(0.0)) continue;
        axpy(w, split_vals_[j].s1, out.t1_u);
        axpy(w, split_vals_[j].s2, out.t2_u);
        axpy(w, split_vals_[j].r, out.t3_rho);
    }
    return out;
}

EvolutionState apply_T(double t, const EvolutionState& state0,
                       const Contour& contour, const FluidParams& p) {
    if (!(t > 0.0)) throw std::invalid_argument("apply_T: t > 0 required");
    const Propagator prop(state0, contour, p);
    return prop.eval(t);
}

EvolutionParts apply_T_parts(double t, const EvolutionState& state0,
                             const Contour& contour, const FluidParams& p) {
    if (!(t > 0.0)) throw std::invalid_argument("apply_T_parts: t > 0 required");
    const Propagator prop(state0, contour, p, true);
    return prop.eval_parts(t);
}

EvolutionState apply_generator(const EvolutionState& s, const FluidParams& p) {
    const Field rho = s.rho.rep == Rep::TanSpectral
                          ? s.rho
                          : fourier_tangential(s.rho);
    const Field u = s.u.rep == Rep::TanSpectral ? s.u : fourier_tangential(s.u);
    EvolutionState out;
    out.t = s.t;
    const Field divu = differentiate_divergence(u);
    out.rho = divu;
    scale(out.rho, p.gamma_c);
    const Field lap = differentiate_laplacian(u);
    const Field graddiv = differentiate_gradient(divu);
    const Field gradrho = differentiate_gradient(rho);
    out.u = Field(u.grid, u.ncomp, Rep::TanSpectral);
    for (std::size_t i = 0; i < out.u.data.size(); ++i)
        out.u.data[i] = -p.alpha * lap.data[i] - p.beta * graddiv.data[i] +
                        p.gamma_c * gradrho.data[i];
    return out;
}

L1Report l1_maximal_integral(const EvolutionState& state0, double t_min,
                             double t_end, const Contour& contour,
                             const FluidParams& p, const BesovParams& bp,
                             const DyadicPartition& P, int points_per_decade) {
    if (!(t_min > 0.0) || !(t_end > t_min))
        throw std::invalid_argument("l1_maximal_integral: bad t range");

    const Propagator prop(state0, contour, p);

    const double decades = std::log10(t_end / t_min);
    const int n = std::max(3, static_cast<int>(std::ceil(
                                  decades * points_per_decade)) + 1);
    const double h = std::log(t_end / t_min) / (n - 1);

    L1Report rep;
    BesovParams bp_rho = bp;
    bp_rho.s = bp.s + 1.0;
    BesovParams bp_u = bp;
    bp_u.s = bp.s + 2.0;
    const auto odd = all_parity(Parity::Odd, state0.u.ncomp);
    const auto even = all_parity(Parity::Even, 1);

    for (int j = 0; j < n; ++j) {
        const double t = t_min * std::exp(h * j);
        const EvolutionState st = prop.eval(t);
        const double nr = besov_norm_halfspace(st.rho, bp_rho, even, P);
        const double nu = besov_norm_halfspace(st.u, bp_u, odd, P);
        const double val = std::exp(-contour.gamma_shift * t) * (nr + nu);
        rep.t_grid.push_back(t);
        rep.integrand.push_back(val);
        const double wt = t * h * ((j == 0 || j == n - 1) ? 0.5 : 1.0);
        rep.integral += wt * val;
    }
    rep.data_norm = pair_norm_halfspace(state0.rho, state0.u, bp, P);
    rep.ratio = rep.data_norm > 0.0 ? rep.integral / rep.data_norm : 0.0;
    return rep;
}

}  // namespace cstokes
