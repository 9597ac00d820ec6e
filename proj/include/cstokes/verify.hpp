#pragma once

#include <string>
#include <vector>

#include "cstokes/recipes.hpp"

namespace cstokes {

/// One fitted ray of a lambda sweep.
struct SweepReport {
    std::string target;
    double angle = 0.0;
    std::vector<double> lambda_mag;
    std::vector<double> ratio;
    double fitted_exponent = 0.0;
    double empirical_constant = 0.0;  // max ratio after removing the power
    double budget = 0.0;
    double slack = 0.1;
    bool two_sided = false;  // pass iff |fit| <= slack (the lambda-S target)
    bool pass = false;
};

/// One symbol-bound audit.
struct AuditReport {
    std::string lemma;
    std::string region;
    std::vector<std::pair<std::string, double>> constants;
    cplx worst_lambda;
    double worst_xi = 0.0;
    bool pass = false;
};

/// One named check with a value and a threshold.
struct CheckRow {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool higher_is_better = false;
    bool pass = false;
};

/// Residual norms of a resolvent solve (independent derivative realization).
ResidualNorms residual_resolvent(cplx lambda, const Field& f, const Field& g,
                                 const ResolventSolution& sol,
                                 const FluidParams& p);

/// Residue-theorem oracle: compares adaptive xi_N-line quadrature of the
/// trace integrals with their closed forms at one (lambda, xi', y) point.
struct ResidueRow {
    std::string name;
    cplx closed;
    cplx quadrature;
    double deviation = 0.0;
};
std::vector<ResidueRow> residue_oracle(cplx lambda, double xi, double yN,
                                       const FluidParams& p);

/// Symbol-bound audits; lemma in {"3.1.1","3.1.2","3.3","3.4","6.1","6.1.4",
/// "6.2"}. Sample counts double internally for the stability check.
AuditReport symbol_bound_audit(const std::string& lemma, const FluidParams& p,
                               double epsilon, double nu0, double xi_max,
                               std::uint64_t seed, int samples = 10000);

/// Decay-exponent sweep along one ray for a named operator quantity.
/// target in {"lambdaS","grad2S1","dS1","S2","dS2","R","dR",
///            "T02","grad2T01","dT01"}.
SweepReport decay_sweep(const std::string& target, double angle,
                        int points_per_ray, double lambda_lo, double lambda_hi,
                        int corpus_size, std::uint64_t seed,
                        const BesovParams& bp, double sigma,
                        const FluidParams& p, GridPtr grid,
                        const DyadicPartition& P);

/// Aggregated semigroup checks (strong continuity, semigroup law, generator
/// consistency, realness, part slopes, L1 ratios).
struct SemigroupSuiteReport {
    std::vector<CheckRow> checks;
    std::vector<double> l1_ratios;
    bool pass = false;
};
SemigroupSuiteReport semigroup_suite(int corpus_size, std::uint64_t seed,
                                     const ContourSpec& cspec,
                                     const FluidParams& p,
                                     const BesovParams& bp, double sigma,
                                     GridPtr grid, const DyadicPartition& P);

/// Helper: ||grad^2 f||-style Besov norm of a half-space field through its
/// reflected extension.
double grad2_besov_norm(const Field& f, std::span<const Parity> par,
                        const BesovParams& bp, const DyadicPartition& P);

// ---- suite runner (shared by the CLI and the acceptance harness) ----------

struct VerifyOptions {
    FluidParams params;
    double epsilon = pi / 4.0;
    double sigma = 0.25;
    BesovParams besov{0.0, 2.0, 1.0};
    std::uint64_t seed = 1234;
    double grid_L = 8.0;
    int grid_M = 128;
    double grid_ymax = 8.0;
    int grid_nz = 96;
    int sweep_points = 16;
    int corpus = 3;
    int semigroup_corpus = 5;
};

struct SuiteResult {
    std::string suite;
    bool pass = false;
    std::string json;                                   // full report
    std::vector<std::pair<std::string, std::string>> csv;  // name -> content
};

/// Runs one of {symbols, residue, wholespace, halfspace, semigroup};
/// "all" runs every suite. Deterministic for fixed options.
std::vector<SuiteResult> run_verify(const std::string& suite,
                                    const VerifyOptions& opt);

/// Writes results under out_dir (<suite>.json and the CSV files); returns
/// overall pass.
bool write_verify_results(const std::vector<SuiteResult>& results,
                          const std::string& out_dir);

}  // namespace cstokes
