#include "cstokes/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace cstokes {

TangentialGrid::TangentialGrid(double half_period, int modes, int dt)
    : L(half_period), M(modes), dim_t(dt) {
    if (!(L > 0.0)) throw std::invalid_argument("TangentialGrid: L > 0 required");
    if (M < 4 || (M & (M - 1)) != 0)
        throw std::invalid_argument("TangentialGrid: M must be a power of two >= 4");
    if (dim_t != 1 && dim_t != 2)
        throw std::invalid_argument("TangentialGrid: dim_t must be 1 or 2");
}

Grid::Grid(const TangentialGrid& tg, int normal_count, double y_max,
           int quad_nodes)
    : tg_(tg), k_(normal_count), y_max_(y_max) {
    if (k_ < 8) throw std::invalid_argument("Grid: normal_count >= 8 required");
    if (!(y_max_ > 0.0)) throw std::invalid_argument("Grid: y_max > 0 required");
    n_t_ = tg_.point_count();

    xi_sq_.resize(n_t_);
    xi_comp_[0].assign(n_t_, 0.0);
    xi_comp_[1].assign(n_t_, 0.0);
    for (int t = 0; t < n_t_; ++t) {
        if (tg_.dim_t == 1) {
            xi_comp_[0][t] = tg_.freq_of_index(t);
        } else {
            xi_comp_[0][t] = tg_.freq_of_index(t / tg_.M);
            xi_comp_[1][t] = tg_.freq_of_index(t % tg_.M);
        }
        xi_sq_[t] = xi_comp_[0][t] * xi_comp_[0][t] +
                    xi_comp_[1][t] * xi_comp_[1][t];
    }

    quad_ = NormalGrid::with_node_count(y_max_, quad_nodes > 0 ? quad_nodes : 96);

    // Trig-evaluation table at the graded nodes.
    const int nzw = nz_whole();
    const double dkappa = pi / y_max_;
    graded_eval_.resize(quad_.size() * nzw);
    for (std::size_t g = 0; g < quad_.size(); ++g) {
        const double y = quad_.nodes[g];
        for (int n = 0; n < nzw; ++n)
            graded_eval_[g * nzw + n] =
                dkappa / (2.0 * pi) * std::exp(cplx(0.0, y * kappa(n)));
    }

    // Normal finite-difference rows.
    fd_d1_.resize(7 * static_cast<std::size_t>(k_));
    fd_d2_.resize(7 * static_cast<std::size_t>(k_));
    std::vector<double> xs(7), w(7);
    for (int i = 0; i < k_; ++i) {
        const int off = fd_offset(i);
        for (int j = 0; j < 7; ++j) xs[j] = znode(off + j);
        fd_weights(znode(i), xs, 1, w);
        for (int j = 0; j < 7; ++j) fd_d1_[7 * i + j] = w[j];
        fd_weights(znode(i), xs, 2, w);
        for (int j = 0; j < 7; ++j) fd_d2_[7 * i + j] = w[j];
    }

    // FFT plans (complex in-place, unnormalized). Planning uses a scratch
    // buffer; execution happens on field arrays via the new-array interface.
    std::vector<cplx> scratch(static_cast<std::size_t>(n_t_) * nzw);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;

    int n_tan[2] = {tg_.M, tg_.M};
    const int rank = tg_.dim_t;
    plan_tan_fwd_half_ =
        fftw_plan_many_dft(rank, n_tan, k_, buf, nullptr, k_, 1, buf, nullptr,
                           k_, 1, FFTW_FORWARD, flags);
    plan_tan_bwd_half_ =
        fftw_plan_many_dft(rank, n_tan, k_, buf, nullptr, k_, 1, buf, nullptr,
                           k_, 1, FFTW_BACKWARD, flags);
    plan_tan_fwd_whole_ =
        fftw_plan_many_dft(rank, n_tan, nzw, buf, nullptr, nzw, 1, buf, nullptr,
                           nzw, 1, FFTW_FORWARD, flags);
    plan_tan_bwd_whole_ =
        fftw_plan_many_dft(rank, n_tan, nzw, buf, nullptr, nzw, 1, buf, nullptr,
                           nzw, 1, FFTW_BACKWARD, flags);
    int n_norm[1] = {nzw};
    plan_norm_fwd_ =
        fftw_plan_many_dft(1, n_norm, n_t_, buf, nullptr, 1, nzw, buf, nullptr,
                           1, nzw, FFTW_FORWARD, flags);
    plan_norm_bwd_ =
        fftw_plan_many_dft(1, n_norm, n_t_, buf, nullptr, 1, nzw, buf, nullptr,
                           1, nzw, FFTW_BACKWARD, flags);
}

Grid::~Grid() {
    fftw_destroy_plan(plan_tan_fwd_half_);
    fftw_destroy_plan(plan_tan_bwd_half_);
    fftw_destroy_plan(plan_tan_fwd_whole_);
    fftw_destroy_plan(plan_tan_bwd_whole_);
    fftw_destroy_plan(plan_norm_fwd_);
    fftw_destroy_plan(plan_norm_bwd_);
}

double Grid::lattice_freq_max() const {
    double s = 0.0;
    for (int d = 0; d < tg_.dim_t; ++d) s += tg_.nyquist() * tg_.nyquist();
    const double kn = pi / y_max_ * k_;
    return std::sqrt(s + kn * kn);
}

double Grid::cell_volume_half() const {
    double v = dz();
    for (int d = 0; d < tg_.dim_t; ++d) v *= tg_.spacing();
    return v;
}

double Grid::cell_volume_whole() const { return cell_volume_half(); }

int Grid::fd_offset(int i) const {
    int off = i - 3;
    if (off < 0) off = 0;
    if (off > k_ - 7) off = k_ - 7;
    return off;
}

void Grid::fft_tangential(cplx* data, int normal_len, bool forward) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    const fftw_plan_s* plan;
    if (normal_len == k_)
        plan = forward ? plan_tan_fwd_half_ : plan_tan_bwd_half_;
    else if (normal_len == nz_whole())
        plan = forward ? plan_tan_fwd_whole_ : plan_tan_bwd_whole_;
    else
        throw std::invalid_argument("fft_tangential: bad normal length");
    fftw_execute_dft(const_cast<fftw_plan>(plan), buf, buf);
}

void Grid::fft_normal_whole(cplx* data, bool forward) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(const_cast<fftw_plan>(forward ? plan_norm_fwd_ : plan_norm_bwd_),
                     buf, buf);
}

GridPtr make_grid(double L, int M, double y_max, int normal_count, int dim,
                  int quad_nodes) {
    TangentialGrid tg(L, M, dim - 1);
    return std::make_shared<const Grid>(tg, normal_count, y_max, quad_nodes);
}

}  // namespace cstokes
