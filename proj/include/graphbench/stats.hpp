// Statistics used by the analysis layer: closed-form OLS with a
// t-distribution p-value, bootstrap resampling with per-resample RNG
// streams, leave-one-out slope ranges, rank correlations, and the
// practical-significance sign band.
#pragma once

#include <cstdint>
#include <vector>

namespace graphbench {

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double p_value = 1.0;  // two-sided, t-distribution with n-2 dof
    int n = 0;
};

// Throws std::invalid_argument on size mismatch, n < 3, or zero x-variance.
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// Regularized incomplete beta I_x(a, b) (continued-fraction evaluation).
double regularized_incomplete_beta(double a, double b, double x);
// Two-sided p of a t statistic with `dof` degrees of freedom.
double t_two_sided_p(double t_stat, int dof);

struct BootstrapSlope {
    double ci_lo = 0.0;  // 2.5th percentile
    double ci_hi = 0.0;  // 97.5th percentile
    double median = 0.0;
    double prob_negative = 0.0;  // P(slope < 0) over resamples
};

// Case-resampling bootstrap of the OLS slope; degenerate resamples (zero
// x-variance) are redrawn from the next RNG stream state.
BootstrapSlope bootstrap_slope(const std::vector<double>& x, const std::vector<double>& y,
                               int resamples = 10000, std::uint64_t seed = 42);

struct LooRange {
    double lo = 0.0;
    double hi = 0.0;
};

// Slope range over all leave-one-out refits.
LooRange loo_slope_range(const std::vector<double>& x, const std::vector<double>& y);

struct BootstrapMean {
    double mean = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

// Percentile bootstrap CI of the mean (paired-difference use case).
BootstrapMean bootstrap_mean(const std::vector<double>& values, int resamples = 1000,
                             std::uint64_t seed = 42);

// Spearman rank correlation (average ranks on ties).
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);
// Kendall tau-b (tie-corrected; equals tau-a without ties).
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

// -1 / 0 / +1 with the practical-stability tie band (|delta| <= band is 0).
int sign_with_band(double delta, double band = 0.005);

}  // namespace graphbench
