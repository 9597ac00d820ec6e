#include "cstokes/halfspace.hpp"

#include <cmath>
#include <stdexcept>

namespace cstokes {

namespace {

Field as_tan_spectral(const Field& f) {
    return f.rep == Rep::TanSpectral ? f : fourier_tangential(f);
}

void check_vector_field(const Field& g) {
    if (g.ncomp != g.grid->dim())
        throw std::invalid_argument("half-space solver: vector field expected");
}

}  // namespace

LamePrepared prepare_lame(const Field& g_in) {
    check_vector_field(g_in);
    const Field g = as_tan_spectral(g_in);
    const Grid& gr = *g.grid;

    LamePrepared prep;
    prep.grid = g.grid;
    prep.ncomp = g.ncomp;
    prep.ext_spectral =
        to_rep(extend_reflect(g, vector_parity(g.ncomp)), Rep::Spectral);

    // Band-limited values of the data columns at the graded quadrature nodes.
    const auto& quad = gr.normal_quadrature();
    const std::size_t nq = quad.size();
    const int nzw = gr.nz_whole();
    prep.graded.assign(static_cast<std::size_t>(g.ncomp) * gr.nt() * nq, cplx(0.0));
    for (int c = 0; c < g.ncomp; ++c)
        for (int t = 0; t < gr.nt(); ++t) {
            const cplx* coeff =
                prep.ext_spectral.comp(c) + static_cast<std::size_t>(t) * nzw;
            cplx* dst = prep.graded.data() +
                        (static_cast<std::size_t>(c) * gr.nt() + t) * nq;
            for (std::size_t q = 0; q < nq; ++q) {
                const cplx* row = gr.graded_eval_row(static_cast<int>(q));
                cplx acc = 0.0;
                for (int n = 0; n < nzw; ++n) acc += row[n] * coeff[n];
                dst[q] = acc;
            }
        }
    return prep;
}

namespace {

// Everything the corrector needs at one tangential frequency.
struct TraceTerms {
    SymbolSet sym;
    // h_j = h1_j + kappa * h2_j (j tangential), h_N = 0.
    std::vector<cplx> h1, h2;
    cplx ixh1 = 0.0, ixh2 = 0.0;  // i xi' . h' pieces
};

TraceTerms trace_terms(cplx lambda, const LamePrepared& prep, int t,
                       const FluidParams& p, std::vector<cplx>& work) {
    const Grid& gr = *prep.grid;
    const auto& quad = gr.normal_quadrature();
    const std::size_t nq = quad.size();
    const int dim = gr.dim();
    const int dt = dim - 1;

    TraceTerms tt;
    tt.sym = eval_symbols(lambda, gr.xi_sq(t), p);
    const cplx A = tt.sym.A, B = tt.sym.B;

    // y_N integrals of exp(-B y) and M(y) against each data column.
    work.resize(nq);
    std::vector<cplx> i_exp(dim), i_m(dim);
    for (int c = 0; c < dim; ++c) {
        const cplx* col = prep.graded_col(c, t);
        for (std::size_t q = 0; q < nq; ++q)
            work[q] = std::exp(-B * quad.nodes[q]) * col[q];
        i_exp[c] = quadrature_normal(quad, work);
        for (std::size_t q = 0; q < nq; ++q)
            work[q] = kernel_M(A, B, quad.nodes[q]) * col[q];
        i_m[c] = quadrature_normal(quad, work);
    }

    cplx c_int = 0.0, e_int = 0.0;
    for (int k = 0; k < dt; ++k) {
        const double xk = gr.xi_comp(t, k);
        c_int += xk / A * i_m[k];
        e_int += xk / A * i_exp[k];
    }
    const cplx d_int = i_m[dim - 1];

    tt.h1.resize(dt);
    tt.h2.resize(dt);
    for (int j = 0; j < dt; ++j) {
        const cplx ixj(0.0, gr.xi_comp(t, j));
        tt.h1[j] = -i_exp[j] / (p.alpha * B);
        tt.h2[j] = -ixj / (A + B) * (c_int - d_int) + ixj / ((A + B) * B) * e_int;
        tt.ixh1 += ixj * tt.h1[j];
        tt.ixh2 += ixj * tt.h2[j];
    }
    return tt;
}

cplx kappa_coeff(cplx lambda, const FluidParams& p) {
    return (p.beta * lambda + p.gamma_sq()) /
           (p.alpha * ((p.alpha + p.beta) * lambda + p.gamma_sq()));
}

void check_k2_region(cplx lambda, const Grid& gr, const FluidParams& p) {
    double worst = 0.0;
    for (int t = 0; t < gr.nt(); ++t)
        worst = std::max(worst, k2_region_bound(lambda, gr.xi_sq(t), p));
    if (worst > 0.5)
        throw std::domain_error(
            "split_operators: |gamma^2 A/(K1 lambda)| > 1/2 on the grid");
}

}  // namespace

BoundaryCoefficients boundary_coefficients(cplx lambda, const Field& g,
                                           const FluidParams& p) {
    const LamePrepared prep = prepare_lame(g);
    const Grid& gr = *prep.grid;
    const int dim = gr.dim();
    BoundaryCoefficients bc;
    bc.grid = prep.grid;
    bc.dim = dim;
    bc.h.assign(static_cast<std::size_t>(gr.nt()) * dim, cplx(0.0));
    std::vector<cplx> work;
    const cplx kap = kappa_coeff(lambda, p);
    for (int t = 0; t < gr.nt(); ++t) {
        const TraceTerms tt = trace_terms(lambda, prep, t, p, work);
        for (int j = 0; j < dim - 1; ++j)
            bc.h[static_cast<std::size_t>(t) * dim + j] = tt.h1[j] + kap * tt.h2[j];
        // normal entry stays zero
    }
    return bc;
}

Field apply_corrector_W(cplx lambda, const BoundaryCoefficients& bc,
                        const FluidParams& p) {
    const Grid& gr = *bc.grid;
    const int dim = bc.dim;
    Field w(bc.grid, dim, Rep::TanSpectral);
    const int K = gr.nz();
    for (int t = 0; t < gr.nt(); ++t) {
        const SymbolSet s = eval_symbols(lambda, gr.xi_sq(t), p);
        cplx ixh = 0.0;
        for (int j = 0; j < dim - 1; ++j)
            ixh += cplx(0.0, gr.xi_comp(t, j)) * bc.at(t, j);
        const cplx corr = s.eta / s.K * ixh;
        for (int i = 0; i < K; ++i) {
            const double x = gr.znode(i);
            const cplx eb = std::exp(-s.B * x);
            const cplx m = kernel_M(s.A, s.B, x);
            for (int j = 0; j < dim - 1; ++j)
                w.at(j, t, i) = bc.at(t, j) * eb -
                                cplx(0.0, gr.xi_comp(t, j)) * m * corr;
            w.at(dim - 1, t, i) = s.A * m * corr;
        }
    }
    return w;
}

LameOutputs solve_lame_prepared(cplx lambda, const LamePrepared& prep,
                                const FluidParams& p, bool split) {
    const Grid& gr = *prep.grid;
    const int dim = gr.dim();
    const int K = gr.nz();
    const double trace_amp = (pi / gr.y_max()) / (2.0 * pi);

    LameOutputs out;
    out.h.grid = prep.grid;
    out.h.dim = dim;
    out.h.h.assign(static_cast<std::size_t>(gr.nt()) * dim, cplx(0.0));
    out.trace.assign(static_cast<std::size_t>(gr.nt()) * dim, cplx(0.0));

    // Whole-space part restricted to the half space.
    const WholeField u0 = apply_S0(lambda, prep.ext_spectral, p);
    out.u = restrict_half(to_rep(u0, Rep::TanSpectral));
    // Trace of the whole-space part per tangential mode (normal series at 0).
    const WholeField u0s = u0;  // spectral
    for (int t = 0; t < gr.nt(); ++t)
        for (int c = 0; c < dim; ++c) {
            const cplx* row = u0s.comp(c) + static_cast<std::size_t>(t) * gr.nz_whole();
            cplx acc = 0.0;
            for (int n = 0; n < gr.nz_whole(); ++n) acc += row[n];
            out.trace[static_cast<std::size_t>(t) * dim + c] = trace_amp * acc;
        }

    if (split) {
        check_k2_region(lambda, gr, p);
        const WholeParts tparts = apply_S0_parts(lambda, prep.ext_spectral, p);
        out.part1 = restrict_half(to_rep(tparts.t01, Rep::TanSpectral));
        out.part2 = restrict_half(to_rep(tparts.t02, Rep::TanSpectral));
    }

    // Corrector and its coefficient-block split.
    const cplx kap = kappa_coeff(lambda, p);
    const cplx kap1 = p.beta / (p.alpha * (p.alpha + p.beta));
    const cplx kap2 = q_lambda(lambda, p) / (p.alpha * lambda);
    std::vector<cplx> work;
    for (int t = 0; t < gr.nt(); ++t) {
        const TraceTerms tt = trace_terms(lambda, prep, t, p, work);
        const SymbolSet& s = tt.sym;

        const cplx ixh = tt.ixh1 + kap * tt.ixh2;
        const cplx corr = s.eta / s.K * ixh;

        cplx m1 = 0.0, m2 = 0.0, n1 = 0.0, n2 = 0.0;
        if (split) {
            const SymbolPoint pt =
                (dim - 1 == 1)
                    ? SymbolPoint(lambda, gr.xi_comp(t, 0))
                    : SymbolPoint(lambda, gr.xi_comp(t, 0), gr.xi_comp(t, 1));
            m1 = p.beta / s.K1;
            m2 = symbol_K2(pt, p) / lambda;
            n1 = p.beta * p.beta / (p.alpha * (p.alpha + p.beta) * s.K1);
            n2 = symbol_K3(pt, p) / (p.alpha * lambda);
        }
        const cplx corr1 = m1 * tt.ixh1 + n1 * tt.ixh2;
        const cplx corr2 = m2 * tt.ixh1 + n2 * tt.ixh2;

        for (int j = 0; j < dim - 1; ++j) {
            const cplx hj = tt.h1[j] + kap * tt.h2[j];
            out.h.h[static_cast<std::size_t>(t) * dim + j] = hj;
            out.trace[static_cast<std::size_t>(t) * dim + j] += hj;
        }

        for (int i = 0; i < K; ++i) {
            const double x = gr.znode(i);
            const cplx eb = std::exp(-s.B * x);
            const cplx m = kernel_M(s.A, s.B, x);
            for (int j = 0; j < dim - 1; ++j) {
                const cplx ixj(0.0, gr.xi_comp(t, j));
                const cplx hj = tt.h1[j] + kap * tt.h2[j];
                out.u.at(j, t, i) += hj * eb - ixj * m * corr;
                if (split) {
                    out.part1->at(j, t, i) +=
                        (tt.h1[j] + kap1 * tt.h2[j]) * eb - ixj * m * corr1;
                    out.part2->at(j, t, i) +=
                        kap2 * tt.h2[j] * eb - ixj * m * corr2;
                }
            }
            out.u.at(dim - 1, t, i) += s.A * m * corr;
            if (split) {
                out.part1->at(dim - 1, t, i) += s.A * m * corr1;
                out.part2->at(dim - 1, t, i) += s.A * m * corr2;
            }
        }
    }
    return out;
}

Field solve_lame(cplx lambda, const Field& g, const FluidParams& p) {
    return solve_lame_prepared(lambda, prepare_lame(g), p).u;
}

namespace {

double trace_l2(const Grid& gr, const std::vector<cplx>& trace) {
    // Parseval: ||f||_{L2}^2 = sum |f_hat|^2 / (2L)^{dim_t}
    double denom = 1.0;
    for (int d = 0; d < gr.tangential().dim_t; ++d)
        denom *= 2.0 * gr.tangential().L;
    double acc = 0.0;
    for (const auto& v : trace) acc += std::norm(v);
    return std::sqrt(acc / denom);
}

}  // namespace

ResolventSolution solve_resolvent(cplx lambda, const Field& f_in,
                                  const Field& g_in, const FluidParams& p) {
    if (f_in.grid != g_in.grid)
        throw std::invalid_argument("solve_resolvent: grid mismatch");
    if (f_in.ncomp != 1)
        throw std::invalid_argument("solve_resolvent: f must be scalar");
    check_vector_field(g_in);
    if (lambda == cplx(0.0))
        throw std::domain_error("solve_resolvent: lambda = 0");

    const Field f = as_tan_spectral(f_in);
    const Field g = as_tan_spectral(g_in);
    const Field gradf = differentiate_gradient(f);

    const LameOutputs og = solve_lame_prepared(lambda, prepare_lame(g), p);
    const LameOutputs of = solve_lame_prepared(lambda, prepare_lame(gradf), p);

    ResolventSolution sol;
    sol.u = og.u;
    const cplx cf = -p.gamma_c / lambda;
    axpy(cf, of.u, sol.u);

    Field divu = differentiate_divergence(sol.u);
    sol.rho = Field(f.grid, 1, Rep::TanSpectral);
    for (std::size_t i = 0; i < sol.rho.data.size(); ++i)
        sol.rho.data[i] = (f.data[i] - p.gamma_c * divu.data[i]) / lambda;

    std::vector<cplx> trace = og.trace;
    for (std::size_t i = 0; i < trace.size(); ++i)
        trace[i] += cf * of.trace[i];
    const double un = l2_norm(sol.u);
    sol.diagnostics.boundary =
        un > 0.0 ? trace_l2(*f.grid, trace) / un : 0.0;
    return sol;
}

ResidualNorms resolvent_residuals(cplx lambda, const Field& f_in,
                                  const Field& g_in,
                                  const ResolventSolution& sol,
                                  const FluidParams& p) {
    const Field f = as_tan_spectral(f_in);
    const Field g = as_tan_spectral(g_in);
    const Grid& gr = *f.grid;
    const int dim = gr.dim();

    const Field divu = differentiate_divergence(sol.u);
    Field eq1(f.grid, 1, Rep::TanSpectral);
    for (std::size_t i = 0; i < eq1.data.size(); ++i)
        eq1.data[i] =
            lambda * sol.rho.data[i] + p.gamma_c * divu.data[i] - f.data[i];

    const Field lap = differentiate_laplacian(sol.u);
    const Field graddiv = differentiate_gradient(divu);
    const Field gradrho = differentiate_gradient(sol.rho);
    Field eq2(f.grid, dim, Rep::TanSpectral);
    for (std::size_t i = 0; i < eq2.data.size(); ++i)
        eq2.data[i] = lambda * sol.u.data[i] - p.alpha * lap.data[i] -
                      p.beta * graddiv.data[i] + p.gamma_c * gradrho.data[i] -
                      g.data[i];

    // Interior mask: rows where both composed FD stencils are centered.
    const int K = gr.nz();
    const int lo = 6, hi = K - 7;
    for (int c = 0; c < dim; ++c)
        for (int t = 0; t < gr.nt(); ++t)
            for (int z = 0; z < K; ++z)
                if (z < lo || z > hi) eq2.at(c, t, z) = 0.0;

    const double datan = std::sqrt(std::pow(l2_norm(f), 2) + std::pow(l2_norm(g), 2));
    ResidualNorms rn;
    rn.eq1 = datan > 0.0 ? l2_norm(eq1) / datan : l2_norm(eq1);
    rn.eq2 = datan > 0.0 ? l2_norm(eq2) / datan : l2_norm(eq2);
    rn.boundary = sol.diagnostics.boundary;
    return rn;
}

SplitOperators split_operators(cplx lambda, const Field& f, const Field& g,
                               const FluidParams& p) {
    ResolventOperator op(f, g, p);
    return op.apply_split(lambda);
}

ResolventOperator::ResolventOperator(const Field& f, const Field& g,
                                     const FluidParams& p)
    : params_(p), grid_(f.grid) {
    if (f.grid != g.grid)
        throw std::invalid_argument("ResolventOperator: grid mismatch");
    f_ = as_tan_spectral(f);
    g_prep_ = prepare_lame(as_tan_spectral(g));
    gradf_prep_ = prepare_lame(differentiate_gradient(f_));
}

Field ResolventOperator::velocity(cplx lambda, LameOutputs* split_out) const {
    const bool split = split_out != nullptr;
    LameOutputs og = solve_lame_prepared(lambda, g_prep_, params_, split);
    const LameOutputs of = solve_lame_prepared(lambda, gradf_prep_, params_);
    Field u = og.u;
    axpy(-params_.gamma_c / lambda, of.u, u);
    if (split) {
        // S2 collects the lambda^{-1}-weighted block plus the grad-f solve.
        axpy(-params_.gamma_c / lambda, of.u, *og.part2);
        *split_out = std::move(og);
    }
    return u;
}

ResolventSolution ResolventOperator::apply(cplx lambda) const {
    if (lambda == cplx(0.0))
        throw std::domain_error("ResolventOperator: lambda = 0");
    ResolventSolution sol;
    sol.u = velocity(lambda, nullptr);
    const Field divu = differentiate_divergence(sol.u);
    sol.rho = Field(grid_, 1, Rep::TanSpectral);
    for (std::size_t i = 0; i < sol.rho.data.size(); ++i)
        sol.rho.data[i] =
            (f_.data[i] - params_.gamma_c * divu.data[i]) / lambda;
    return sol;
}

SplitOperators ResolventOperator::apply_split(cplx lambda) const {
    LameOutputs og;
    const Field u = velocity(lambda, &og);
    SplitOperators sp;
    sp.s1 = *og.part1;
    sp.s2 = *og.part2;
    const Field divu = differentiate_divergence(u);
    sp.r = Field(grid_, 1, Rep::TanSpectral);
    for (std::size_t i = 0; i < sp.r.data.size(); ++i)
        sp.r.data[i] = (f_.data[i] - params_.gamma_c * divu.data[i]) / lambda;
    return sp;
}

}  // namespace cstokes
