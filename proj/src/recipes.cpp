#include "cstokes/recipes.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cstokes {

namespace {

struct Bump {
    double ct[2] = {0.0, 0.0};
    double cn = 2.5;
    double width = 0.4;
    double amp = 1.0;
};

Bump draw_bump(std::mt19937_64& rng, const Grid& g) {
    std::uniform_real_distribution<double> uc(-2.0, 2.0);
    std::uniform_real_distribution<double> un(2.2, 3.2);
    std::uniform_real_distribution<double> uw(0.3, 0.5);
    std::uniform_real_distribution<double> ua(0.5, 1.5);
    std::bernoulli_distribution sign(0.5);
    Bump b;
    for (int d = 0; d < g.tangential().dim_t; ++d) b.ct[d] = uc(rng);
    b.cn = un(rng);
    b.width = uw(rng);
    b.amp = ua(rng) * (sign(rng) ? 1.0 : -1.0);
    return b;
}

double bump_value(const Bump& b, const Grid& g, int t, double xn) {
    double r2 = (xn - b.cn) * (xn - b.cn);
    const auto& tg = g.tangential();
    if (tg.dim_t == 1) {
        const double x = tg.node(t);
        r2 += (x - b.ct[0]) * (x - b.ct[0]);
    } else {
        const double x0 = tg.node(t / tg.M);
        const double x1 = tg.node(t % tg.M);
        r2 += (x0 - b.ct[0]) * (x0 - b.ct[0]) + (x1 - b.ct[1]) * (x1 - b.ct[1]);
    }
    return b.amp * std::exp(-r2 / (2.0 * b.width * b.width));
}

void fill_component(Field& f, int c, std::mt19937_64& rng) {
    const Grid& g = *f.grid;
    const Bump b1 = draw_bump(rng, g);
    const Bump b2 = draw_bump(rng, g);
    for (int t = 0; t < g.nt(); ++t)
        for (int z = 0; z < g.nz(); ++z) {
            const double xn = g.znode(z);
            f.at(c, t, z) = bump_value(b1, g, t, xn) + bump_value(b2, g, t, xn);
        }
}

}  // namespace

Field gaussian_scalar(GridPtr g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Field f(g, 1, Rep::Physical);
    fill_component(f, 0, rng);
    return f;
}

Field gaussian_vector(GridPtr g, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    Field f(g, g->dim(), Rep::Physical);
    for (int c = 0; c < f.ncomp; ++c) fill_component(f, c, rng);
    return f;
}

std::pair<Field, Field> gaussian_pair(GridPtr g, std::uint64_t seed) {
    return {gaussian_scalar(g, seed), gaussian_vector(g, seed + 1)};
}

EvolutionState gaussian_state(GridPtr g, std::uint64_t seed) {
    EvolutionState s;
    s.rho = gaussian_scalar(g, seed);
    s.u = gaussian_vector(g, seed + 1);
    s.t = 0.0;
    return s;
}

EvolutionState gaussian_state_normalized(GridPtr g, std::uint64_t seed,
                                         const BesovParams& bp,
                                         const DyadicPartition& P) {
    EvolutionState s = gaussian_state(g, seed);
    const double n = pair_norm_halfspace(s.rho, s.u, bp, P);
    if (n > 0.0) {
        scale(s.rho, 1.0 / n);
        scale(s.u, 1.0 / n);
    }
    return s;
}

WholeField gaussian_whole_vector(GridPtr g, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    WholeField f(g, g->dim(), Rep::Physical);
    const Grid& gr = *g;
    for (int c = 0; c < f.ncomp; ++c) {
        const Bump b = draw_bump(rng, gr);
        // Center the whole-box bump near the middle of (-Y, Y).
        std::uniform_real_distribution<double> un(-1.5, 1.5);
        const double cn = un(rng);
        for (int t = 0; t < gr.nt(); ++t)
            for (int m = 0; m < gr.nz_whole(); ++m) {
                Bump bb = b;
                bb.cn = cn;
                f.at(c, t, m) = bump_value(bb, gr, t, gr.znode_whole(m));
            }
    }
    return f;
}

namespace {

std::uint64_t recipe_seed(const std::string& name) {
    if (name.rfind("gauss-", 0) != 0)
        throw std::invalid_argument("unknown recipe: " + name);
    return std::stoull(name.substr(6));
}

}  // namespace

std::pair<Field, Field> recipe_pair(GridPtr g, const std::string& name) {
    if (name == "zero")
        return {Field(g, 1, Rep::Physical), Field(g, g->dim(), Rep::Physical)};
    return gaussian_pair(g, recipe_seed(name));
}

EvolutionState recipe_state(GridPtr g, const std::string& name) {
    if (name == "zero") {
        EvolutionState s;
        s.rho = Field(g, 1, Rep::Physical);
        s.u = Field(g, g->dim(), Rep::Physical);
        return s;
    }
    return gaussian_state(g, recipe_seed(name));
}

std::vector<cplx> sample_admissible(const SectorSpec& sector,
                                    const FluidParams& p, int count,
                                    std::uint64_t seed, double lo_mag,
                                    double hi_mag, double max_arg) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> umag(std::log(lo_mag),
                                                std::log(hi_mag));
    std::uniform_real_distribution<double> uarg(-max_arg, max_arg);
    std::vector<cplx> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard++ < 100000) {
        const cplx lam = std::polar(std::exp(umag(rng)), uarg(rng));
        if (in_sector(lam, sector, p)) out.push_back(lam);
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("sample_admissible: rejection sampling failed");
    return out;
}

}  // namespace cstokes
