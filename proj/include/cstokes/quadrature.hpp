#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "cstokes/types.hpp"

namespace cstokes {

/// Gauss-Legendre nodes/weights on [a, b]. n in {4, 8, 16}.
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Quadrature rule for integrals over (0, infinity) of exponentially decaying
/// integrands, truncated at y_max. Nodes follow geometrically graded panels
/// (finest near 0) with a fixed-order Gauss-Legendre rule per panel, so
/// kernels exp(-c y) are resolved for c up to roughly 1/(finest panel width).
struct NormalGrid {
    std::vector<double> nodes;    // ascending, all in (0, y_max)
    std::vector<double> weights;  // positive
    double y_max = 8.0;
    double c_min = 0.25;  // metadata: smallest decay rate the rule is meant for

    /// Builds the default graded rule: `panels` geometric levels, ratio 2,
    /// `per_panel`-point Gauss-Legendre each. node_count = panels * per_panel.
    static NormalGrid graded(double y_max, int panels, int per_panel);

    /// Graded rule with approximately `target_nodes` nodes (multiple of 8).
    static NormalGrid with_node_count(double y_max, int target_nodes);

    std::size_t size() const { return nodes.size(); }

    /// Stated tolerance of the rule for integrands ~ exp(-c y): the
    /// truncation term at y_max plus the panel quadrature floor.
    double tolerance_for(double c) const;
};

/// Sum(w_i * values_i); lengths must match.
cplx quadrature_normal(const NormalGrid& grid, std::span<const cplx> values);
double quadrature_normal(const NormalGrid& grid, std::span<const double> values);

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_depth = 48);

/// Fornberg finite-difference weights: for derivative order m at point z
/// given stencil nodes x[0..n-1], fills w[0..n-1].
/// (B. Fornberg, "Generation of finite difference formulas on arbitrarily
/// spaced grids".)
void fd_weights(double z, std::span<const double> x, int m, std::span<double> w);

/// Least-squares line fit of y against x; returns {slope, intercept}.
std::pair<double, double> fit_line(std::span<const double> x,
                                   std::span<const double> y);

}  // namespace cstokes
