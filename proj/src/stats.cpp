// Statistical primitives for the analysis layer.
#include "graphbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphbench/rng.hpp"

namespace graphbench {

namespace {

struct SlopeOnly {
    bool ok = false;
    double slope = 0.0;
    double intercept = 0.0;
};

SlopeOnly slope_of(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx <= 0.0) return {};
    return {true, sxy / sxx, mean_y - (sxy / sxx) * mean_x};
}

double percentile(std::vector<double>& sorted_values, double q) {
    // Linear interpolation between closest ranks; the values must be sorted.
    const std::size_t n = sorted_values.size();
    if (n == 1) return sorted_values.front();
    const double pos = q * (n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - lo;
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double beta_continued_fraction(double a, double b, double x) {
    // Lentz's method on the standard continued-fraction expansion.
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-14;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("beta parameters must be > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = a * std::log(x) + b * std::log1p(-x) -
                            (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double t_two_sided_p(double t_stat, int dof) {
    if (dof < 1) throw std::invalid_argument("t-distribution needs dof >= 1");
    const double t2 = t_stat * t_stat;
    return regularized_incomplete_beta(dof / 2.0, 0.5, dof / (dof + t2));
}

OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("x/y size mismatch");
    const std::size_t n = x.size();
    if (n < 3) throw std::invalid_argument("OLS needs at least 3 points");
    const SlopeOnly fit = slope_of(x, y);
    if (!fit.ok) throw std::invalid_argument("x has zero variance");

    OlsFit result;
    result.slope = fit.slope;
    result.intercept = fit.intercept;
    result.n = static_cast<int>(n);

    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double ss_res = 0.0, ss_tot = 0.0, sxx = 0.0;
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double fitted = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - fitted) * (y[i] - fitted);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
    }
    result.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

    const int dof = static_cast<int>(n) - 2;
    if (ss_res <= 0.0) {
        result.p_value = 0.0;  // exact fit
    } else {
        const double se = std::sqrt(ss_res / dof / sxx);
        result.p_value = t_two_sided_p(result.slope / se, dof);
    }
    return result;
}

BootstrapSlope bootstrap_slope(const std::vector<double>& x, const std::vector<double>& y,
                               int resamples, std::uint64_t seed) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("bootstrap_slope needs >= 3 paired points");
    if (resamples < 1) throw std::invalid_argument("resamples must be >= 1");
    const std::size_t n = x.size();
    std::vector<double> slopes;
    slopes.reserve(resamples);
    int negative = 0;
    for (int r = 0; r < resamples; ++r) {
        RngStream rng(seed, "bootstrap-slope:" + std::to_string(r));
        std::vector<double> bx(n), by(n);
        SlopeOnly fit;
        // Degenerate resamples (all identical x) are redrawn from the same
        // stream's continued state, keeping the draw deterministic.
        for (int tries = 0; tries < 100 && !fit.ok; ++tries) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t pick = static_cast<std::size_t>(rng.uniform(n));
                bx[i] = x[pick];
                by[i] = y[pick];
            }
            fit = slope_of(bx, by);
        }
        if (!fit.ok) fit.slope = 0.0;
        slopes.push_back(fit.slope);
        if (fit.slope < 0.0) ++negative;
    }
    std::sort(slopes.begin(), slopes.end());
    BootstrapSlope result;
    result.ci_lo = percentile(slopes, 0.025);
    result.ci_hi = percentile(slopes, 0.975);
    result.median = percentile(slopes, 0.5);
    result.prob_negative = static_cast<double>(negative) / resamples;
    return result;
}

LooRange loo_slope_range(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("leave-one-out needs >= 3 paired points");
    LooRange range{1e300, -1e300};
    for (std::size_t drop = 0; drop < x.size(); ++drop) {
        std::vector<double> rx, ry;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i == drop) continue;
            rx.push_back(x[i]);
            ry.push_back(y[i]);
        }
        const SlopeOnly fit = slope_of(rx, ry);
        if (!fit.ok) throw std::invalid_argument("leave-one-out fit degenerate");
        range.lo = std::min(range.lo, fit.slope);
        range.hi = std::max(range.hi, fit.slope);
    }
    return range;
}

BootstrapMean bootstrap_mean(const std::vector<double>& values, int resamples,
                             std::uint64_t seed) {
    if (values.empty()) throw std::invalid_argument("bootstrap_mean needs data");
    if (resamples < 1) throw std::invalid_argument("resamples must be >= 1");
    const std::size_t n = values.size();
    BootstrapMean result;
    result.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    std::vector<double> means;
    means.reserve(resamples);
    for (int r = 0; r < resamples; ++r) {
        RngStream rng(seed, "bootstrap-mean:" + std::to_string(r));
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sum += values[static_cast<std::size_t>(rng.uniform(n))];
        means.push_back(sum / n);
    }
    std::sort(means.begin(), means.end());
    result.ci_lo = percentile(means, 0.025);
    result.ci_hi = percentile(means, 0.975);
    return result;
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman needs >= 2 paired points");
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const std::size_t n = rx.size();
    const double mean_rx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double mean_ry = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (rx[i] - mean_rx) * (ry[i] - mean_ry);
        sxx += (rx[i] - mean_rx) * (rx[i] - mean_rx);
        syy += (ry[i] - mean_ry) * (ry[i] - mean_ry);
    }
    if (sxx <= 0.0 || syy <= 0.0)
        throw std::invalid_argument("spearman undefined for constant input");
    return sxy / std::sqrt(sxx * syy);
}

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("kendall needs >= 2 paired points");
    const std::size_t n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    // Tau-b: pairs tied on both variables count toward both tie tallies.
    const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
    const long long joint = n0 - ties_x - ties_y - concordant - discordant;
    const double tx = static_cast<double>(ties_x + joint);
    const double ty = static_cast<double>(ties_y + joint);
    const double d = std::sqrt((n0 - tx) * (n0 - ty));
    if (d <= 0.0) throw std::invalid_argument("kendall undefined for constant input");
    return (concordant - discordant) / d;
}

int sign_with_band(double delta, double band) {
    if (delta > band) return 1;
    if (delta < -band) return -1;
    return 0;
}

}  // namespace graphbench
