#include "graphbench/histograms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphbench {

namespace {

void normalize(std::vector<double>& mass) {
    double total = 0.0;
    for (double v : mass) total += v;
    if (total <= 0.0) return;  // empty graph: all-zero mass stays all-zero
    for (double& v : mass) v /= total;
}

std::vector<double> uniform_edges(double lo, double hi, int bins) {
    std::vector<double> edges(bins + 1);
    for (int i = 0; i <= bins; ++i)
        edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
    return edges;
}

int value_bin(double v, double lo, double hi, int bins) {
    if (v <= lo) return 0;
    if (v >= hi) return bins - 1;
    int b = static_cast<int>((v - lo) / (hi - lo) * bins);
    return std::clamp(b, 0, bins - 1);
}

}  // namespace

std::string to_string(FeatureKind f) {
    switch (f) {
        case FeatureKind::degree: return "degree";
        case FeatureKind::clustering: return "clustering";
        case FeatureKind::spectral: return "spectral";
        case FeatureKind::orbit4: return "orbit4";
    }
    return "degree";
}

FeatureHistogram feature_histogram(const PropertyReport& report, FeatureKind feature) {
    FeatureHistogram h;
    h.feature = feature;
    h.mass.assign(kHistogramBins, 0.0);
    switch (feature) {
        case FeatureKind::degree:
            h.edges = uniform_edges(0.0, kHistogramBins, kHistogramBins);
            for (int d : report.degree_sequence)
                h.mass[std::clamp(d, 0, kHistogramBins - 1)] += 1.0;
            break;
        case FeatureKind::clustering:
            h.edges = uniform_edges(0.0, 1.0, kHistogramBins);
            for (double c : report.local_clustering_values)
                h.mass[value_bin(c, 0.0, 1.0, kHistogramBins)] += 1.0;
            break;
        case FeatureKind::spectral:
            h.edges = uniform_edges(0.0, 2.0, kHistogramBins);
            for (double v : report.laplacian_eigenvalues)
                h.mass[value_bin(v, 0.0, 2.0, kHistogramBins)] += 1.0;
            break;
        case FeatureKind::orbit4:
            h.edges = uniform_edges(0.0, 16.0, 16);
            for (const auto& counts : report.orbit4_counts_per_node)
                for (int k = 0; k < 4; ++k)
                    h.mass[16 * k + std::clamp(counts[k], 0, 15)] += 1.0;
            break;
    }
    normalize(h.mass);
    return h;
}

double histogram_distance(const FeatureHistogram& a, const FeatureHistogram& b) {
    if (a.mass.size() != b.mass.size())
        throw std::invalid_argument("histogram size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.mass.size(); ++i) {
        double d = a.mass[i] - b.mass[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace graphbench
