#pragma once

#include <span>
#include <vector>

#include "cstokes/field.hpp"

namespace cstokes {

/// Littlewood-Paley family on the discrete frequency lattice. Built from the
/// smooth cutoff Phi (1 on |xi|<=1, 0 on |xi|>=2, exp(-1/t) gluing):
///   psi_hat = Phi(|xi|),  phi_k_hat = Phi(2^-k |xi|) - Phi(2^-(k-1)... )
/// so the family telescopes to 1 at every lattice frequency up to block
/// j_cover. j_usable is the highest block whose support is fully below the
/// grid Nyquist.
class DyadicPartition {
  public:
    int j_cover = 0;
    int j_usable = 0;
    GridPtr grid;

    /// Multiplier values of block k (k = 0 is the low-frequency part) on the
    /// flattened whole-box lattice [t * nz_whole + n].
    const std::vector<double>& block_multiplier(int k) const {
        return mult_[k];
    }

    /// The smooth cutoff profile used to build everything.
    static double profile(double r);

    friend DyadicPartition build_partition(GridPtr grid);

  private:
    std::vector<std::vector<double>> mult_;
};

DyadicPartition build_partition(GridPtr grid);

/// Frequency blocks of f: element k is the inverse transform of
/// block-multiplier_k * f_hat. Block 0 is the low-frequency part.
std::vector<WholeField> lp_blocks(const WholeField& f, const DyadicPartition& P);

/// Inhomogeneous Besov norm: ||psi*f||_q + ell^r sum of 2^{sk} ||phi_k*f||_q.
double besov_norm(const WholeField& f, const BesovParams& bp,
                  const DyadicPartition& P);

struct HalfspaceNorm {
    double value = 0.0;
    bool equivalent = true;  // false when bp.s leaves the equivalence range
    operator double() const { return value; }
};

/// Reflection-extension surrogate for the half-space Besov norm.
HalfspaceNorm besov_norm_halfspace(const Field& f, const BesovParams& bp,
                                   std::span<const Parity> parity,
                                   const DyadicPartition& P);

/// || (f, g) || = ||f||_{B^{s+1}} + ||g||_{B^s} with the standard data
/// parities (f even; g even-tangential/odd-normal).
double pair_norm_halfspace(const Field& f_scalar, const Field& g_vector,
                           const BesovParams& bp, const DyadicPartition& P);

/// <D>^sigma: multiplier (1+|xi|^2)^{sigma/2}.
WholeField bessel_lift(const WholeField& f, double sigma);

/// (sum_nu (2^{nu s} |a_nu|)^q)^{1/q}, or sup for q = infinity. a[i] is the
/// entry at index nu_first + i.
double sequence_norm(std::span<const double> a, int nu_first, double s,
                     double q, bool q_inf = false);

}  // namespace cstokes
