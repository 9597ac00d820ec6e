#include "cstokes/field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace cstokes {

std::vector<Parity> vector_parity(int ncomp) {
    std::vector<Parity> p(ncomp, Parity::Even);
    p.back() = Parity::Odd;
    return p;
}

std::vector<Parity> all_parity(Parity p, int ncomp) {
    return std::vector<Parity>(ncomp, p);
}

Field::Field(GridPtr g, int ncomponents, Rep r) {
    grid = std::move(g);
    ncomp = ncomponents;
    rep = r;
    if (rep == Rep::Spectral)
        throw std::invalid_argument("Field: full spectral rep is for WholeField");
    data.assign(static_cast<std::size_t>(ncomp) * slice(), cplx(0.0));
}

WholeField::WholeField(GridPtr g, int ncomponents, Rep r) {
    grid = std::move(g);
    ncomp = ncomponents;
    rep = r;
    data.assign(static_cast<std::size_t>(ncomp) * slice(), cplx(0.0));
}

namespace {

// Per-axis tangential phase: forward multiplies by dx * (-1)^k per axis,
// backward by (dxi / 2pi) * (-1)^k. Sign pattern identical both ways.
void tangential_scale(const Grid& g, cplx* comp, int nz, bool forward) {
    const auto& tg = g.tangential();
    const double per_axis = forward ? tg.spacing() : (pi / tg.L) / (2.0 * pi);
    double factor0 = 1.0;
    for (int d = 0; d < tg.dim_t; ++d) factor0 *= per_axis;
    for (int t = 0; t < g.nt(); ++t) {
        int sign = 0;
        if (tg.dim_t == 1) {
            sign = t;
        } else {
            sign = t / tg.M + t % tg.M;
        }
        const double f = (sign % 2 == 0) ? factor0 : -factor0;
        cplx* row = comp + static_cast<std::size_t>(t) * nz;
        for (int z = 0; z < nz; ++z) row[z] *= f;
    }
}

// Normal phase for the cell-centered box: forward multiplies mode n by
// dz * exp(i (Y - dz/2) kappa_n), backward by the conjugate times dk/2pi.
void normal_scale(const Grid& g, cplx* comp, bool forward) {
    const int nzw = g.nz_whole();
    const double y0 = g.y_max() - 0.5 * g.dz();
    const double amp = forward ? g.dz() : (pi / g.y_max()) / (2.0 * pi);
    std::vector<cplx> phase(nzw);
    for (int n = 0; n < nzw; ++n) {
        const double a = y0 * g.kappa(n);
        phase[n] = amp * std::exp(cplx(0.0, forward ? a : -a));
    }
    for (int t = 0; t < g.nt(); ++t) {
        cplx* row = comp + static_cast<std::size_t>(t) * nzw;
        for (int n = 0; n < nzw; ++n) row[n] *= phase[n];
    }
}

}  // namespace

Field fourier_tangential(const Field& f) {
    if (f.rep != Rep::Physical)
        throw std::invalid_argument("fourier_tangential: field not physical");
    Field out = f;
    out.rep = Rep::TanSpectral;
    for (int c = 0; c < out.ncomp; ++c) {
        out.grid->fft_tangential(out.comp(c), out.grid->nz(), true);
        tangential_scale(*out.grid, out.comp(c), out.grid->nz(), true);
    }
    return out;
}

Field inverse_fourier_tangential(const Field& f) {
    if (f.rep != Rep::TanSpectral)
        throw std::invalid_argument("inverse_fourier_tangential: wrong rep");
    Field out = f;
    out.rep = Rep::Physical;
    for (int c = 0; c < out.ncomp; ++c) {
        tangential_scale(*out.grid, out.comp(c), out.grid->nz(), false);
        out.grid->fft_tangential(out.comp(c), out.grid->nz(), false);
    }
    return out;
}

WholeField to_rep(const WholeField& f, Rep target) {
    if (f.rep == target) return f;
    WholeField out = f;
    auto step_tan = [&](bool fwd) {
        for (int c = 0; c < out.ncomp; ++c) {
            if (fwd) {
                out.grid->fft_tangential(out.comp(c), out.grid->nz_whole(), true);
                tangential_scale(*out.grid, out.comp(c), out.grid->nz_whole(), true);
            } else {
                tangential_scale(*out.grid, out.comp(c), out.grid->nz_whole(), false);
                out.grid->fft_tangential(out.comp(c), out.grid->nz_whole(), false);
            }
        }
    };
    auto step_norm = [&](bool fwd) {
        for (int c = 0; c < out.ncomp; ++c) {
            if (fwd) {
                out.grid->fft_normal_whole(out.comp(c), true);
                normal_scale(*out.grid, out.comp(c), true);
            } else {
                normal_scale(*out.grid, out.comp(c), false);
                out.grid->fft_normal_whole(out.comp(c), false);
            }
        }
    };
    // Move along Physical <-> TanSpectral <-> Spectral.
    auto pos = [](Rep r) { return r == Rep::Physical ? 0 : (r == Rep::TanSpectral ? 1 : 2); };
    int cur = pos(f.rep);
    const int dst = pos(target);
    while (cur < dst) {
        if (cur == 0) step_tan(true);
        else step_norm(true);
        ++cur;
    }
    while (cur > dst) {
        if (cur == 2) step_norm(false);
        else step_tan(false);
        --cur;
    }
    out.rep = target;
    return out;
}

WholeField extend_reflect(const Field& f, std::span<const Parity> par) {
    if (f.rep == Rep::Spectral)
        throw std::invalid_argument("extend_reflect: physical or tan-spectral input");
    if (static_cast<int>(par.size()) != f.ncomp)
        throw std::invalid_argument("extend_reflect: parity per component");
    const Grid& g = *f.grid;
    WholeField w(f.grid, f.ncomp, f.rep);
    const int K = g.nz();
    for (int c = 0; c < f.ncomp; ++c) {
        const double s = (par[c] == Parity::Even) ? 1.0 : -1.0;
        for (int t = 0; t < g.nt(); ++t) {
            const cplx* src = f.comp(c) + static_cast<std::size_t>(t) * K;
            cplx* dst = w.comp(c) + static_cast<std::size_t>(t) * 2 * K;
            for (int i = 0; i < K; ++i) {
                dst[K + i] = src[i];
                dst[K - 1 - i] = s * src[i];
            }
        }
    }
    return w;
}

WholeField extend_reflect(const Field& f) {
    if (f.ncomp == 1) return extend_reflect(f, all_parity(Parity::Even, 1));
    return extend_reflect(f, vector_parity(f.ncomp));
}

Field restrict_half(const WholeField& w) {
    if (w.rep == Rep::Spectral)
        throw std::invalid_argument("restrict_half: physical or tan-spectral input");
    const Grid& g = *w.grid;
    Field f(w.grid, w.ncomp, w.rep);
    const int K = g.nz();
    for (int c = 0; c < w.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            const cplx* src = w.comp(c) + static_cast<std::size_t>(t) * 2 * K;
            cplx* dst = f.comp(c) + static_cast<std::size_t>(t) * K;
            for (int i = 0; i < K; ++i) dst[i] = src[K + i];
        }
    return f;
}

namespace {

template <class F>
void check_same(const F& x, const F& y) {
    if (x.grid != y.grid || x.ncomp != y.ncomp || x.rep != y.rep ||
        x.data.size() != y.data.size())
        throw std::invalid_argument("field algebra: shape/rep mismatch");
}

}  // namespace

void axpy(cplx a, const Field& x, Field& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.data.size(); ++i) y.data[i] += a * x.data[i];
}
void axpy(cplx a, const WholeField& x, WholeField& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.data.size(); ++i) y.data[i] += a * x.data[i];
}
void scale(Field& f, cplx a) {
    for (auto& v : f.data) v *= a;
}
void scale(WholeField& f, cplx a) {
    for (auto& v : f.data) v *= a;
}

// ---- whole-box spectral derivatives ----------------------------------------

WholeField differentiate_gradient(const WholeField& f) {
    if (f.ncomp != 1)
        throw std::invalid_argument("gradient: scalar input expected");
    const WholeField s = to_rep(f, Rep::Spectral);
    const Grid& g = *f.grid;
    const int dim = g.dim();
    WholeField out(f.grid, dim, Rep::Spectral);
    const int nzw = g.nz_whole();
    for (int t = 0; t < g.nt(); ++t)
        for (int n = 0; n < nzw; ++n) {
            const cplx v = s.at(0, t, n);
            for (int d = 0; d < dim - 1; ++d)
                out.at(d, t, n) = cplx(0.0, g.xi_comp(t, d)) * v;
            out.at(dim - 1, t, n) = cplx(0.0, g.kappa(n)) * v;
        }
    return out;
}

WholeField differentiate_divergence(const WholeField& f) {
    const Grid& g = *f.grid;
    const int dim = g.dim();
    if (f.ncomp != dim)
        throw std::invalid_argument("divergence: N-component input expected");
    const WholeField s = to_rep(f, Rep::Spectral);
    WholeField out(f.grid, 1, Rep::Spectral);
    const int nzw = g.nz_whole();
    for (int t = 0; t < g.nt(); ++t)
        for (int n = 0; n < nzw; ++n) {
            cplx acc = 0.0;
            for (int d = 0; d < dim - 1; ++d)
                acc += cplx(0.0, g.xi_comp(t, d)) * s.at(d, t, n);
            acc += cplx(0.0, g.kappa(n)) * s.at(dim - 1, t, n);
            out.at(0, t, n) = acc;
        }
    return out;
}

WholeField differentiate_laplacian(const WholeField& f) {
    const WholeField s = to_rep(f, Rep::Spectral);
    const Grid& g = *f.grid;
    WholeField out = s;
    const int nzw = g.nz_whole();
    for (int c = 0; c < out.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            const double xs = g.xi_sq(t);
            cplx* row = out.comp(c) + static_cast<std::size_t>(t) * nzw;
            for (int n = 0; n < nzw; ++n)
                row[n] *= -(xs + g.kappa(n) * g.kappa(n));
        }
    return out;
}

WholeField differentiate_dN(const WholeField& f, int order) {
    const WholeField s = to_rep(f, Rep::Spectral);
    const Grid& g = *f.grid;
    WholeField out = s;
    const int nzw = g.nz_whole();
    for (int c = 0; c < out.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            cplx* row = out.comp(c) + static_cast<std::size_t>(t) * nzw;
            for (int n = 0; n < nzw; ++n)
                row[n] *= std::pow(cplx(0.0, g.kappa(n)), order);
        }
    return out;
}

// ---- half-space derivatives -------------------------------------------------

namespace {

void fd_column(const Grid& g, const cplx* in, cplx* out, const double* rows) {
    const int K = g.nz();
    for (int i = 0; i < K; ++i) {
        const int off = g.fd_offset(i);
        const double* w = rows + 7 * i;
        cplx acc = 0.0;
        for (int j = 0; j < 7; ++j) acc += w[j] * in[off + j];
        out[i] = acc;
    }
}

Field fd_normal(const Field& f, int order) {
    const Grid& g = *f.grid;
    Field out(f.grid, f.ncomp, Rep::TanSpectral);
    std::vector<cplx> tmp_in(g.nz()), tmp_out(g.nz());
    for (int c = 0; c < f.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            const cplx* in = f.comp(c) + static_cast<std::size_t>(t) * g.nz();
            cplx* dst = out.comp(c) + static_cast<std::size_t>(t) * g.nz();
            if (order == 1) {
                fd_column(g, in, dst, g.fd_row_d1(0));
            } else if (order == 2) {
                fd_column(g, in, dst, g.fd_row_d2(0));
            } else {
                throw std::invalid_argument("fd_normal: order 1 or 2");
            }
        }
    return out;
}

void require_tan_spectral(const Field& f, const char* who) {
    if (f.rep != Rep::TanSpectral)
        throw std::invalid_argument(std::string(who) +
                                    ": tangential-spectral input expected");
}

}  // namespace

Field differentiate_gradient(const Field& f) {
    require_tan_spectral(f, "gradient");
    if (f.ncomp != 1)
        throw std::invalid_argument("gradient: scalar input expected");
    const Grid& g = *f.grid;
    const int dim = g.dim();
    Field out(f.grid, dim, Rep::TanSpectral);
    const Field dn = fd_normal(f, 1);
    for (int t = 0; t < g.nt(); ++t)
        for (int z = 0; z < g.nz(); ++z) {
            const cplx v = f.at(0, t, z);
            for (int d = 0; d < dim - 1; ++d)
                out.at(d, t, z) = cplx(0.0, g.xi_comp(t, d)) * v;
            out.at(dim - 1, t, z) = dn.at(0, t, z);
        }
    return out;
}

Field differentiate_divergence(const Field& f) {
    require_tan_spectral(f, "divergence");
    const Grid& g = *f.grid;
    const int dim = g.dim();
    if (f.ncomp != dim)
        throw std::invalid_argument("divergence: N-component input expected");
    Field out(f.grid, 1, Rep::TanSpectral);
    Field fn(f.grid, 1, Rep::TanSpectral);
    std::copy(f.comp(dim - 1), f.comp(dim - 1) + fn.slice(), fn.comp(0));
    const Field dn = fd_normal(fn, 1);
    for (int t = 0; t < g.nt(); ++t)
        for (int z = 0; z < g.nz(); ++z) {
            cplx acc = dn.at(0, t, z);
            for (int d = 0; d < dim - 1; ++d)
                acc += cplx(0.0, g.xi_comp(t, d)) * f.at(d, t, z);
            out.at(0, t, z) = acc;
        }
    return out;
}

Field differentiate_laplacian(const Field& f) {
    require_tan_spectral(f, "laplacian");
    const Grid& g = *f.grid;
    Field out = fd_normal(f, 2);
    for (int c = 0; c < f.ncomp; ++c)
        for (int t = 0; t < g.nt(); ++t) {
            const double xs = g.xi_sq(t);
            for (int z = 0; z < g.nz(); ++z)
                out.at(c, t, z) -= xs * f.at(c, t, z);
        }
    return out;
}

Field differentiate_dN(const Field& f, int order) {
    require_tan_spectral(f, "dN");
    return fd_normal(f, order);
}

// ---- norms -------------------------------------------------------------------

namespace {

template <class F>
double lq_norm_impl(const F& f, double q, double cell) {
    const std::size_t n = f.slice();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < f.ncomp; ++c) m2 += std::norm(f.comp(c)[i]);
        acc += std::pow(m2, 0.5 * q);
    }
    return std::pow(acc * cell, 1.0 / q);
}

}  // namespace

double lq_norm(const Field& f, double q) {
    if (f.rep != Rep::Physical)
        return lq_norm(inverse_fourier_tangential(f), q);
    return lq_norm_impl(f, q, f.grid->cell_volume_half());
}

double lq_norm(const WholeField& f, double q) {
    if (f.rep != Rep::Physical)
        return lq_norm(to_rep(f, Rep::Physical), q);
    return lq_norm_impl(f, q, f.grid->cell_volume_whole());
}

double l2_norm(const Field& f) { return lq_norm(f, 2.0); }
double l2_norm(const WholeField& f) { return lq_norm(f, 2.0); }

double imag_residue(const Field& f) {
    const Field p = (f.rep == Rep::Physical) ? f : inverse_fourier_tangential(f);
    double max_im = 0.0, max_abs = 0.0;
    for (const auto& v : p.data) {
        max_im = std::max(max_im, std::abs(v.imag()));
        max_abs = std::max(max_abs, std::abs(v));
    }
    return max_abs > 0.0 ? max_im / max_abs : 0.0;
}

// ---- serialization ------------------------------------------------------------

namespace {

nlohmann::json grid_to_json(const Grid& g) {
    return {{"L", g.tangential().L},
            {"M", g.tangential().M},
            {"dim", g.dim()},
            {"y_max", g.y_max()},
            {"normal_count", g.nz()},
            {"quad_nodes", static_cast<int>(g.normal_quadrature().size())}};
}

}  // namespace

std::string field_to_json(const Field& f) {
    nlohmann::json j;
    j["schema"] = "cstokes-field/1";
    j["grid"] = grid_to_json(*f.grid);
    j["components"] = f.ncomp;
    j["representation"] =
        (f.rep == Rep::Physical) ? "physical" : "tangential-spectral";
    std::vector<double> flat;
    flat.reserve(2 * f.data.size());
    for (const auto& v : f.data) {
        flat.push_back(v.real());
        flat.push_back(v.imag());
    }
    j["data"] = std::move(flat);
    return j.dump();
}

Field field_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema") != "cstokes-field/1")
        throw std::runtime_error("field_from_json: unknown schema");
    const auto& jg = j.at("grid");
    GridPtr g = make_grid(jg.at("L"), jg.at("M"), jg.at("y_max"),
                          jg.at("normal_count"), jg.at("dim"),
                          jg.at("quad_nodes"));
    const std::string reps = j.at("representation");
    Field f(g, j.at("components"),
            reps == "physical" ? Rep::Physical : Rep::TanSpectral);
    const auto& flat = j.at("data");
    if (flat.size() != 2 * f.data.size())
        throw std::runtime_error("field_from_json: sample count mismatch");
    for (std::size_t i = 0; i < f.data.size(); ++i)
        f.data[i] = cplx(flat[2 * i], flat[2 * i + 1]);
    return f;
}

void write_field(const Field& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_field: cannot open " + path);
    out << field_to_json(f);
}

Field read_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_field: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return field_from_json(text);
}

}  // namespace cstokes
