// Fixed-width feature histograms over structural property reports. Every
// feature maps a graph to a normalized 64-bin mass vector; these are the
// points the MMD kernel operates on.
#pragma once

#include <string>
#include <vector>

#include "graphbench/properties.hpp"

namespace graphbench {

enum class FeatureKind { degree, clustering, spectral, orbit4 };

std::string to_string(FeatureKind f);

inline constexpr int kHistogramBins = 64;

struct FeatureHistogram {
    FeatureKind feature = FeatureKind::degree;
    std::vector<double> edges;  // bin edges, size bins+1 (orbit4: per 16-bin block)
    std::vector<double> mass;   // non-negative, sums to 1 (all-zero for empty graphs)
};

// degree: integer degrees binned 0..63 (clamped above).
// clustering: per-node local clustering in [0,1], 64 equal bins.
// spectral: normalized-Laplacian eigenvalues in [0,2], 64 equal bins.
// orbit4: four 16-bin blocks (edges, centered 2-paths, triangles, 4-cycles),
//         per-node counts clamped to 0..15; the 64-vector is normalized jointly.
FeatureHistogram feature_histogram(const PropertyReport& report, FeatureKind feature);

// Euclidean distance between mass vectors (sizes must match).
double histogram_distance(const FeatureHistogram& a, const FeatureHistogram& b);

}  // namespace graphbench
