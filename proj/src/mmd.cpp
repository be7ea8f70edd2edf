#include "graphbench/mmd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphbench {

namespace {

double rbf(const FeatureHistogram& a, const FeatureHistogram& b, double sigma) {
    double d = histogram_distance(a, b);
    return std::exp(-(d * d) / (2.0 * sigma * sigma));
}

double mean_kernel(const std::vector<FeatureHistogram>& xs,
                   const std::vector<FeatureHistogram>& ys, double sigma) {
    double sum = 0.0;
    for (const auto& x : xs)
        for (const auto& y : ys) sum += rbf(x, y, sigma);
    return sum / (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

}  // namespace

double median_heuristic_bandwidth(const std::vector<FeatureHistogram>& sample,
                                  const std::vector<FeatureHistogram>& pool) {
    std::vector<const FeatureHistogram*> all;
    all.reserve(sample.size() + pool.size());
    for (const auto& h : sample) all.push_back(&h);
    for (const auto& h : pool) all.push_back(&h);
    std::vector<double> distances;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            distances.push_back(histogram_distance(*all[i], *all[j]));
    if (distances.empty()) return 1.0;
    std::size_t mid = distances.size() / 2;
    std::nth_element(distances.begin(), distances.begin() + mid, distances.end());
    double median = distances[mid];
    return median > 1e-12 ? median : 1.0;
}

MmdResult mmd_histograms(const std::vector<FeatureHistogram>& sample,
                         const std::vector<FeatureHistogram>& pool, FeatureKind feature,
                         const MmdConfig& config) {
    if (sample.empty() || pool.empty())
        throw std::invalid_argument("mmd requires non-empty sample and pool");
    if (static_cast<int>(pool.size()) < config.min_pool)
        throw std::invalid_argument(
            "pool holds " + std::to_string(pool.size()) + " graphs, below the minimum " +
            std::to_string(config.min_pool) +
            "; use the constraint-driven fidelity fallback instead");

    MmdResult r;
    r.feature = feature;
    r.sample_size = static_cast<int>(sample.size());
    r.pool_size = static_cast<int>(pool.size());
    r.bandwidth = config.bandwidth ? *config.bandwidth
                                   : median_heuristic_bandwidth(sample, pool);
    double xx = mean_kernel(sample, sample, r.bandwidth);
    double yy = mean_kernel(pool, pool, r.bandwidth);
    double xy = mean_kernel(sample, pool, r.bandwidth);
    r.value = std::max(0.0, xx + yy - 2.0 * xy);
    return r;
}

MmdResult mmd(const std::vector<PropertyReport>& sample,
              const std::vector<PropertyReport>& pool, FeatureKind feature,
              const MmdConfig& config) {
    auto build = [&](const std::vector<PropertyReport>& reports) {
        std::vector<FeatureHistogram> out;
        out.reserve(reports.size());
        for (const auto& rep : reports) out.push_back(feature_histogram(rep, feature));
        return out;
    };
    return mmd_histograms(build(sample), build(pool), feature, config);
}

}  // namespace graphbench
