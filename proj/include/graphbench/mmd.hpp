// Maximum mean discrepancy between two graph samples over a feature
// histogram. Biased squared-MMD estimator with a Gaussian RBF kernel; the
// bandwidth follows the median heuristic over the pooled set unless
// overridden.
#pragma once

#include <optional>
#include <vector>

#include "graphbench/histograms.hpp"

namespace graphbench {

struct MmdConfig {
    int min_pool = 20;  // below this the caller should fall back to the
                        // constraint-driven fidelity formula
    std::optional<double> bandwidth;  // fixed sigma instead of the median heuristic
};

struct MmdResult {
    FeatureKind feature = FeatureKind::degree;
    double value = 0.0;      // biased MMD^2 estimate, clamped at 0
    double bandwidth = 1.0;  // sigma actually used
    int sample_size = 0;
    int pool_size = 0;
};

// Throws std::invalid_argument when either list is empty or the pool is
// smaller than config.min_pool.
MmdResult mmd(const std::vector<PropertyReport>& sample,
              const std::vector<PropertyReport>& pool, FeatureKind feature,
              const MmdConfig& config = {});

// The same estimator on prebuilt histograms (exposed for tests).
MmdResult mmd_histograms(const std::vector<FeatureHistogram>& sample,
                         const std::vector<FeatureHistogram>& pool, FeatureKind feature,
                         const MmdConfig& config = {});

// Median pairwise distance over the union of both lists; 1.0 when fewer than
// two points or when the median vanishes.
double median_heuristic_bandwidth(const std::vector<FeatureHistogram>& sample,
                                  const std::vector<FeatureHistogram>& pool);

}  // namespace graphbench
