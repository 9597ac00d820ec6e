#pragma once

#include <memory>
#include <vector>

#include "cstokes/quadrature.hpp"
#include "cstokes/types.hpp"

struct fftw_plan_s;

namespace cstokes {

/// Periodic tangential truncation of R^{N-1}: physical nodes
/// x_m = -L + 2L m / M per axis, frequency set xi_k = (pi/L) k for
/// k in [-M/2, M/2).
struct TangentialGrid {
    double L = 8.0;       // half period
    int M = 128;          // modes per axis, power of two
    int dim_t = 1;        // N - 1

    TangentialGrid() = default;
    TangentialGrid(double half_period, int modes, int dt);

    int point_count() const {
        int n = 1;
        for (int d = 0; d < dim_t; ++d) n *= M;
        return n;
    }
    double spacing() const { return 2.0 * L / M; }
    double node(int m) const { return -L + spacing() * m; }
    double freq_of_index(int k) const {
        const int kk = (k < M / 2) ? k : k - M;  // FFTW storage order
        return pi / L * kk;
    }
    double nyquist() const { return pi / L * (M / 2); }
};

/// Full discretization bundle for the half space: the tangential grid, a
/// uniform cell-centered normal grid with K nodes on (0, Y_max) (the whole
/// box doubles it to 2K nodes on (-Y_max, Y_max)), and the graded quadrature
/// rule for semi-infinite normal integrals. Immutable after construction;
/// fields hold shared handles.
class Grid {
  public:
    Grid(const TangentialGrid& tg, int normal_count, double y_max,
         int quad_nodes = 0);
    ~Grid();
    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    const TangentialGrid& tangential() const { return tg_; }
    int dim() const { return tg_.dim_t + 1; }
    int nt() const { return n_t_; }          // tangential point count
    int nz() const { return k_; }            // half-space normal count K
    int nz_whole() const { return 2 * k_; }  // whole-box normal count
    double y_max() const { return y_max_; }
    double dz() const { return y_max_ / k_; }

    /// Half-space normal node x_i = (i + 1/2) dz, i in [0, K).
    double znode(int i) const { return (i + 0.5) * dz(); }
    /// Whole-box normal node y_m = -Y_max + (m + 1/2) dz, m in [0, 2K).
    double znode_whole(int m) const { return -y_max_ + (m + 0.5) * dz(); }
    /// Normal frequency kappa_n = (pi / Y_max) * n, FFTW index order.
    double kappa(int n) const {
        const int nn = (n < k_) ? n : n - 2 * k_;
        return pi / y_max_ * nn;
    }

    /// Tangential frequency component d at flattened tangential index t.
    double xi_comp(int t, int d) const { return xi_comp_[d][t]; }
    double xi_sq(int t) const { return xi_sq_[t]; }
    double xi_norm(int t) const { return std::sqrt(xi_sq_[t]); }

    /// Largest |xi| representable on the full lattice.
    double lattice_freq_max() const;

    const NormalGrid& normal_quadrature() const { return quad_; }

    /// Values of the normal-spectral basis at the graded quadrature nodes:
    /// eval_row(g)[n] = (dkappa / 2 pi) e^{i y_g kappa_n}; multiplying the
    /// normal-spectral coefficients of a column by this row evaluates the
    /// band-limited interpolant at graded node g.
    const cplx* graded_eval_row(int g) const {
        return graded_eval_.data() + static_cast<std::size_t>(g) * nz_whole();
    }

    /// Cell volumes for discrete L_q norms.
    double cell_volume_half() const;
    double cell_volume_whole() const;

    /// 6th-order finite-difference weights in the normal direction
    /// (one-sided near edges): 7-point stencil starting at offset_d?(i).
    static constexpr int fd_stencil = 7;
    int fd_offset(int i) const;
    const double* fd_row_d1(int i) const { return fd_d1_.data() + 7 * i; }
    const double* fd_row_d2(int i) const { return fd_d2_.data() + 7 * i; }

    // In-place unnormalized FFTs along grid axes (phases/scales applied by
    // the Field layer). `data` is one component, layout [t * nz + z].
    void fft_tangential(cplx* data, int normal_len, bool forward) const;
    void fft_normal_whole(cplx* data, bool forward) const;

  private:
    TangentialGrid tg_;
    int k_;
    double y_max_;
    int n_t_;
    std::vector<double> xi_sq_;
    std::vector<double> xi_comp_[2];
    NormalGrid quad_;
    std::vector<cplx> graded_eval_;
    std::vector<double> fd_d1_, fd_d2_;

    fftw_plan_s* plan_tan_fwd_half_ = nullptr;
    fftw_plan_s* plan_tan_bwd_half_ = nullptr;
    fftw_plan_s* plan_tan_fwd_whole_ = nullptr;
    fftw_plan_s* plan_tan_bwd_whole_ = nullptr;
    fftw_plan_s* plan_norm_fwd_ = nullptr;
    fftw_plan_s* plan_norm_bwd_ = nullptr;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(double L, int M, double y_max, int normal_count, int dim = 2,
                  int quad_nodes = 0);

}  // namespace cstokes
