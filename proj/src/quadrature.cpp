#include "cstokes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cstokes {

namespace {

// Abscissae/weights on [-1, 1], positive half; mirrored below.
const double gl4_x[] = {0.3399810435848563, 0.8611363115940526};
const double gl4_w[] = {0.6521451548625461, 0.3478548451374538};

const double gl8_x[] = {0.1834346424956498, 0.5255324099163290,
                        0.7966664774136267, 0.9602898564975363};
const double gl8_w[] = {0.3626837833783620, 0.3137066458778873,
                        0.2223810344533745, 0.1012285362903763};

const double gl16_x[] = {0.0950125098376374, 0.2816035507792589,
                         0.4580167776572274, 0.6178762444026438,
                         0.7554044083550030, 0.8656312023878318,
                         0.9445750230732326, 0.9894009349916499};
const double gl16_w[] = {0.1894506104550685, 0.1826034150449236,
                         0.1691565193950025, 0.1495959888165767,
                         0.1246289712555339, 0.0951585116824928,
                         0.0622535239386479, 0.0271524594117541};

}  // namespace

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    const double* x = nullptr;
    const double* w = nullptr;
    switch (n) {
        case 4: x = gl4_x; w = gl4_w; break;
        case 8: x = gl8_x; w = gl8_w; break;
        case 16: x = gl16_x; w = gl16_w; break;
        default: throw std::invalid_argument("gauss_legendre: n must be 4, 8 or 16");
    }
    nodes.clear();
    weights.clear();
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    for (int i = n / 2 - 1; i >= 0; --i) {
        nodes.push_back(mid - rad * x[i]);
        weights.push_back(rad * w[i]);
    }
    for (int i = 0; i < n / 2; ++i) {
        nodes.push_back(mid + rad * x[i]);
        weights.push_back(rad * w[i]);
    }
}

NormalGrid NormalGrid::graded(double y_max, int panels, int per_panel) {
    if (!(y_max > 0.0) || panels < 2)
        throw std::invalid_argument("NormalGrid::graded: bad parameters");
    NormalGrid g;
    g.y_max = y_max;
    // Breakpoints y_max * 2^{-panels+1} ... y_max, plus 0 at the bottom.
    std::vector<double> edges(panels + 1);
    edges[0] = 0.0;
    for (int k = 1; k <= panels; ++k)
        edges[k] = y_max * std::ldexp(1.0, k - panels);
    std::vector<double> pn, pw;
    for (int k = 0; k < panels; ++k) {
        gauss_legendre(per_panel, edges[k], edges[k + 1], pn, pw);
        g.nodes.insert(g.nodes.end(), pn.begin(), pn.end());
        g.weights.insert(g.weights.end(), pw.begin(), pw.end());
    }
    g.c_min = 0.25;
    return g;
}

NormalGrid NormalGrid::with_node_count(double y_max, int target_nodes) {
    int per_panel = 8;
    int panels = std::max(2, target_nodes / per_panel);
    return graded(y_max, panels, per_panel);
}

double NormalGrid::tolerance_for(double c) const {
    // Truncation of int_{y_max}^inf for integrands up to y*exp(-c y), plus the
    // panel-rule floor.
    const double trunc = (y_max + 1.0 / c) * std::exp(-c * y_max);
    return 2.0 * trunc + 1e-11;
}

cplx quadrature_normal(const NormalGrid& grid, std::span<const cplx> values) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("quadrature_normal: length mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += grid.weights[i] * values[i];
    return acc;
}

double quadrature_normal(const NormalGrid& grid, std::span<const double> values) {
    if (values.size() != grid.nodes.size())
        throw std::invalid_argument("quadrature_normal: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += grid.weights[i] * values[i];
    return acc;
}

namespace {

cplx simpson(const std::function<cplx(double)>& f, double a, double m, double b,
             cplx fa, cplx fm, cplx fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

cplx adapt(const std::function<cplx(double)>& f, double a, double m, double b,
           cplx fa, cplx fm, cplx fb, cplx whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const cplx flm = f(lm);
    const cplx frm = f(rm);
    const cplx left = simpson(f, a, lm, m, fa, flm, fm);
    const cplx right = simpson(f, m, rm, b, fm, frm, fb);
    const cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

cplx integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const cplx fa = f(a), fm = f(m), fb = f(b);
    const cplx whole = simpson(f, a, m, b, fa, fm, fb);
    return adapt(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

void fd_weights(double z, std::span<const double> x, int m, std::span<double> w) {
    const int n = static_cast<int>(x.size()) - 1;
    if (w.size() != x.size())
        throw std::invalid_argument("fd_weights: w/x length mismatch");
    // Fornberg's recurrence, specialized to return only the order-m row.
    std::vector<double> c(static_cast<std::size_t>(n + 1) * (m + 1), 0.0);
    auto C = [&](int i, int j) -> double& { return c[i * (m + 1) + j]; };
    double c1 = 1.0;
    double c4 = x[0] - z;
    C(0, 0) = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    for (int i = 0; i <= n; ++i) w[i] = C(i, m);
}

std::pair<double, double> fit_line(std::span<const double> x,
                                   std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need matching inputs, >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

}  // namespace cstokes
