#pragma once

#include "cstokes/halfspace.hpp"

namespace cstokes {

/// State of the evolution problem at one time.
struct EvolutionState {
    Field rho;  // scalar
    Field u;    // vector
    double t = 0.0;
};

/// Discretized integration path: two rays gamma + r e^{+-i(pi-eps)},
/// r in [r_min, r_max] with trapezoidal weights in log r, closed at the
/// vertex by an arc of radius r_min. Nodes come in conjugate pairs (weights
/// anti-conjugate), so real data evolve to real states.
struct Contour {
    double gamma_shift = 0.0;
    double epsilon = pi / 4.0;
    double r_min = 0.0, r_max = 0.0;
    struct Node {
        cplx lambda;
        cplx weight;  // includes d-lambda direction; apply with 1/(2 pi i)
    };
    std::vector<Node> nodes;
};

struct ContourSpec {
    double epsilon = pi / 4.0;
    double lambda0 = 1.0;      // admissibility floor for node checks
    double gamma_shift = 0.0;  // 0 = auto: 2*lambda0, bumped until admissible
    double r_min_factor = 1e-3;
    double r_max = 0.0;        // 0 = auto from evaluation time
    double h_log = 0.2;        // trapezoid step in log r
};

/// Builds the contour; throws std::domain_error if a node fails the
/// admissibility check (after auto-bumping the shift when gamma_shift = 0).
Contour build_contour(const ContourSpec& spec, const FluidParams& p);

/// r_max rule for an evaluation at time t: max(50/t, 10*lambda0).
double contour_rmax_for_time(double t, const ContourSpec& spec);

/// T(t) state0 by contour quadrature of the resolvent.
EvolutionState apply_T(double t, const EvolutionState& state0,
                       const Contour& contour, const FluidParams& p);

struct EvolutionParts {
    Field t1_u;      // from the lambda-uniform velocity block
    Field t2_u;      // from the lambda^{-1}-weighted velocity block
    Field t3_rho;    // density part
    double t = 0.0;
};

/// Three-part split of T(t); t3 + (t1 + t2) recomposes T(t).
EvolutionParts apply_T_parts(double t, const EvolutionState& state0,
                             const Contour& contour, const FluidParams& p);

/// The generator action (gamma div u, -alpha Lap u - beta grad div u +
/// gamma grad rho) in the discrete derivative realization.
EvolutionState apply_generator(const EvolutionState& s, const FluidParams& p);

/// Caches per-node resolvent outputs for one initial state so that
/// trajectory evaluations at many times cost one weighted sum each.
class Propagator {
  public:
    Propagator(const EvolutionState& state0, const Contour& contour,
               const FluidParams& p, bool with_parts = false);

    EvolutionState eval(double t) const;
    EvolutionParts eval_parts(double t) const;
    const Contour& contour() const { return contour_; }

  private:
    Contour contour_;
    GridPtr grid_;
    int dim_;
    std::vector<ResolventSolution> vals_;
    std::vector<SplitOperators> split_vals_;
};

struct L1Report {
    double integral = 0.0;   // int e^{-gamma t} (|rho|_{B^{s+1}} + |u|_{B^{s+2}}) dt
    double data_norm = 0.0;  // |(rho0, u0)|_{H^s}
    double ratio = 0.0;
    std::vector<double> t_grid;
    std::vector<double> integrand;  // e^{-gamma t} norm values
};

/// Geometric-in-t quadrature of the weighted trajectory norm.
L1Report l1_maximal_integral(const EvolutionState& state0, double t_min,
                             double t_end, const Contour& contour,
                             const FluidParams& p, const BesovParams& bp,
                             const DyadicPartition& P,
                             int points_per_decade = 12);

}  // namespace cstokes
