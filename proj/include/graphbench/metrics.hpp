// Dimension metrics over a cell's samples for one instruction: valid rate,
// uniqueness, structural fidelity (D1), textual similarity (D2), and
// embedding proximity (D3). Pure functions over parsed documents and
// reference pools.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphbench/dsl.hpp"
#include "graphbench/mmd.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

struct DimScores {
    std::optional<double> d1, d2, d3, d4, d5;
    // Sub-metrics (present when their dimension was computed).
    std::optional<double> vr, uniqueness;
    std::optional<double> mmd_d, mmd_c, mmd_s;
    std::optional<double> mmd_o;  // diagnostic only, never enters a score
    std::optional<double> text_presence, text_similarity;
    std::optional<double> grassmann_coherence, embedding_mmd;
};

// Fraction of samples that parse AND pass structural lint. Constraint
// satisfaction is deliberately not part of validity (it lives in the
// instruction-match dimension).
double valid_rate(const std::vector<ParseResult>& samples);

// Isomorphism classes among parseable samples / total samples; 0 when none
// parse. Pairs beyond the isomorphism node cap count as distinct.
double uniqueness(const std::vector<ParseResult>& samples, int node_cap = 256);

// Mean of the degree/clustering/spectral MMD values (the distribution-fit
// summary). Throws like mmd() when the pool is too small.
double mmd_bar(const std::vector<PropertyReport>& sample,
               const std::vector<PropertyReport>& pool, const MmdConfig& config = {});

// Constraint-driven levels (0,1,2,5): 0.7*vr + 0.3*uniqueness.
// Distribution-driven levels (3,4) with a pool: 0.3*vr + 0.5*exp(-mmd_bar)
// + 0.2*uniqueness; without a big-enough pool they fall back to the
// constraint-driven formula.
double score_d1(int level, double vr, double uniqueness,
                std::optional<double> mmd_bar = std::nullopt);

struct D2Score {
    double text_presence = 0.0;
    double text_similarity = 0.0;
    double value = 0.0;  // 0.5*presence + 0.5*similarity
};

// Empty reference list -> absent (the dimension does not apply).
std::optional<D2Score> score_d2(const GraphDoc& doc,
                                const std::vector<GraphDoc>& references);

// Maximal alphanumeric runs; everything else is a separator.
std::vector<std::string> tokenize_text(const std::string& text);
// Multiset token F1 (SQuAD convention); 1.0 when both token lists are empty.
double token_f1(const std::string& a, const std::string& b);

struct D3Score {
    double grassmann_coherence = 0.0;
    std::optional<double> embedding_mmd;  // absent when the pool is too small
    double value = 0.0;
};

// Coherence: mean over sample pairs of the mean principal-angle cosine
// between the spectral-embedding subspaces (eigenvectors of the k smallest
// normalized-Laplacian eigenvalues, k = min(4, n-1)), compared in node-index
// space after padding to a common dimension; 1.0 with fewer than two parsed
// samples. Embedding MMD: RBF MMD^2 between per-graph 16-point spectral
// summary vectors and the pool's. d3 = 0.5*coherence + 0.5*exp(-mmd) when the
// pool qualifies, else coherence alone.
D3Score score_d3(const std::vector<GraphDoc>& sample_docs,
                 const std::vector<GraphDoc>& reference_pool,
                 const MmdConfig& config = {});

// Sorted spectrum resampled at 16 evenly spaced quantile positions by linear
// interpolation (single-node graphs give a constant vector).
std::vector<double> spectral_summary_vector(const PropertyReport& report);

// Biased RBF MMD^2 between generic point sets (median-heuristic bandwidth,
// sigma fallback 1); used for the embedding term.
double vector_mmd(const std::vector<std::vector<double>>& sample,
                  const std::vector<std::vector<double>>& pool);

}  // namespace graphbench
