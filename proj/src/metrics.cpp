#include "graphbench/metrics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "graphbench/iso.hpp"

namespace graphbench {

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

// Orthonormal basis (n x k) of the spectral embedding: eigenvectors of the k
// smallest normalized-Laplacian eigenvalues.
Eigen::MatrixXd spectral_basis(const Graph& g, int k) {
    Graph u = g.directed() ? g.undirected_view() : g;
    int n = u.num_nodes();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> inv_sqrt(n, 0.0);
    for (int v = 0; v < n; ++v) {
        int d = static_cast<int>(u.neighbors(v).size());
        if (d > 0) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(d));
        lap(v, v) = d > 0 ? 1.0 : 0.0;
    }
    for (int v = 0; v < n; ++v)
        for (int w : u.neighbors(v))
            if (v < w) {
                double val = -inv_sqrt[v] * inv_sqrt[w];
                lap(v, w) = val;
                lap(w, v) = val;
            }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    return solver.eigenvectors().leftCols(std::min(k, n));
}

// Mean cosine of the principal angles between the two column spaces, after
// zero-padding the shorter basis to a common row dimension.
double subspace_similarity(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    long rows = std::max(a.rows(), b.rows());
    Eigen::MatrixXd pa = Eigen::MatrixXd::Zero(rows, a.cols());
    Eigen::MatrixXd pb = Eigen::MatrixXd::Zero(rows, b.cols());
    pa.topRows(a.rows()) = a;
    pb.topRows(b.rows()) = b;
    Eigen::MatrixXd m = pa.transpose() * pb;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 1.0;
    double sum = 0.0;
    for (long i = 0; i < sv.size(); ++i) sum += std::clamp(sv(i), 0.0, 1.0);
    return sum / static_cast<double>(sv.size());
}

}  // namespace

double valid_rate(const std::vector<ParseResult>& samples) {
    if (samples.empty()) return 0.0;
    int valid = 0;
    for (const auto& r : samples)
        if (r.ok() && lint_structure(*r.doc).clear()) ++valid;
    return static_cast<double>(valid) / static_cast<double>(samples.size());
}

double uniqueness(const std::vector<ParseResult>& samples, int node_cap) {
    if (samples.empty()) return 0.0;
    std::vector<Graph> parsed;
    for (const auto& r : samples)
        if (r.ok()) parsed.push_back(Graph::from_doc(*r.doc));
    if (parsed.empty()) return 0.0;
    std::vector<std::size_t> class_reps;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        bool found = false;
        for (std::size_t rep : class_reps)
            if (is_isomorphic(parsed[i], parsed[rep], node_cap) == IsoResult::yes) {
                found = true;
                break;
            }
        if (!found) class_reps.push_back(i);
    }
    return static_cast<double>(class_reps.size()) / static_cast<double>(samples.size());
}

double mmd_bar(const std::vector<PropertyReport>& sample,
               const std::vector<PropertyReport>& pool, const MmdConfig& config) {
    double sum = 0.0;
    for (FeatureKind f :
         {FeatureKind::degree, FeatureKind::clustering, FeatureKind::spectral})
        sum += mmd(sample, pool, f, config).value;
    return sum / 3.0;
}

double score_d1(int level, double vr, double uniqueness,
                std::optional<double> mmd_bar) {
    bool distribution_driven = level == 3 || level == 4;
    if (distribution_driven && mmd_bar)
        return 0.3 * vr + 0.5 * std::exp(-*mmd_bar) + 0.2 * uniqueness;
    return 0.7 * vr + 0.3 * uniqueness;
}

std::vector<std::string> tokenize_text(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (unsigned char c : text) {
        if (std::isalnum(c)) {
            cur.push_back(static_cast<char>(c));
        } else if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

double token_f1(const std::string& a, const std::string& b) {
    std::vector<std::string> ta = tokenize_text(a);
    std::vector<std::string> tb = tokenize_text(b);
    if (ta.empty() && tb.empty()) return 1.0;
    if (ta.empty() || tb.empty()) return 0.0;
    std::map<std::string, int> counts;
    for (const auto& t : ta) ++counts[t];
    int overlap = 0;
    for (const auto& t : tb) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) return 0.0;
    double precision = static_cast<double>(overlap) / static_cast<double>(tb.size());
    double recall = static_cast<double>(overlap) / static_cast<double>(ta.size());
    return 2.0 * precision * recall / (precision + recall);
}

std::optional<D2Score> score_d2(const GraphDoc& doc,
                                const std::vector<GraphDoc>& references) {
    if (references.empty()) return std::nullopt;
    D2Score s;
    if (!doc.nodes.empty()) {
        int labeled = 0;
        for (const auto& node : doc.nodes) {
            auto it = doc.node_attrs.find(node);
            if (it == doc.node_attrs.end()) continue;
            auto attr = it->second.find("label");
            if (attr != it->second.end() &&
                std::holds_alternative<std::string>(attr->second) &&
                !std::get<std::string>(attr->second).empty())
                ++labeled;
        }
        s.text_presence = std::min(
            1.0, static_cast<double>(labeled) / static_cast<double>(doc.nodes.size()));
    }
    std::string candidate = serialize_name_stripped(doc);
    for (const auto& ref : references)
        s.text_similarity =
            std::max(s.text_similarity, token_f1(serialize_name_stripped(ref), candidate));
    s.value = 0.5 * s.text_presence + 0.5 * s.text_similarity;
    return s;
}

std::vector<double> spectral_summary_vector(const PropertyReport& report) {
    constexpr int kPoints = 16;
    std::vector<double> out(kPoints, 0.0);
    const auto& eig = report.laplacian_eigenvalues;
    if (eig.empty()) return out;
    if (eig.size() == 1) return std::vector<double>(kPoints, eig[0]);
    for (int j = 0; j < kPoints; ++j) {
        double pos = static_cast<double>(j) * (eig.size() - 1) / (kPoints - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, eig.size() - 1);
        double frac = pos - static_cast<double>(lo);
        out[j] = eig[lo] * (1.0 - frac) + eig[hi] * frac;
    }
    return out;
}

double vector_mmd(const std::vector<std::vector<double>>& sample,
                  const std::vector<std::vector<double>>& pool) {
    std::vector<const std::vector<double>*> all;
    for (const auto& v : sample) all.push_back(&v);
    for (const auto& v : pool) all.push_back(&v);
    std::vector<double> distances;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            distances.push_back(euclidean(*all[i], *all[j]));
    double sigma = 1.0;
    if (!distances.empty()) {
        std::size_t mid = distances.size() / 2;
        std::nth_element(distances.begin(), distances.begin() + mid, distances.end());
        if (distances[mid] > 1e-12) sigma = distances[mid];
    }
    auto kernel = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double d = euclidean(x, y);
        return std::exp(-(d * d) / (2.0 * sigma * sigma));
    };
    auto mean_k = [&](const std::vector<std::vector<double>>& xs,
                      const std::vector<std::vector<double>>& ys) {
        double sum = 0.0;
        for (const auto& x : xs)
            for (const auto& y : ys) sum += kernel(x, y);
        return sum / (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
    };
    double value = mean_k(sample, sample) + mean_k(pool, pool) - 2.0 * mean_k(sample, pool);
    return std::max(0.0, value);
}

D3Score score_d3(const std::vector<GraphDoc>& sample_docs,
                 const std::vector<GraphDoc>& reference_pool, const MmdConfig& config) {
    D3Score s;
    std::vector<Graph> graphs;
    graphs.reserve(sample_docs.size());
    for (const auto& doc : sample_docs) graphs.push_back(Graph::from_doc(doc));

    std::vector<Eigen::MatrixXd> bases;
    bases.reserve(graphs.size());
    for (const auto& g : graphs) {
        int k = std::min(4, g.num_nodes() - 1);
        bases.emplace_back(k >= 1 ? spectral_basis(g, k) : Eigen::MatrixXd());
    }
    double sum = 0.0;
    int pairs = 0;
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            ++pairs;
            if (bases[i].cols() == 0 || bases[j].cols() == 0) {
                sum += 1.0;  // degenerate single-node graphs
                continue;
            }
            long k = std::min(bases[i].cols(), bases[j].cols());
            sum += subspace_similarity(bases[i].leftCols(k), bases[j].leftCols(k));
        }
    s.grassmann_coherence = pairs == 0 ? 1.0 : sum / pairs;

    if (static_cast<int>(reference_pool.size()) >= config.min_pool &&
        !sample_docs.empty()) {
        auto summaries = [](const std::vector<GraphDoc>& docs) {
            std::vector<std::vector<double>> out;
            out.reserve(docs.size());
            for (const auto& d : docs)
                out.push_back(spectral_summary_vector(compute_properties(d)));
            return out;
        };
        s.embedding_mmd = vector_mmd(summaries(sample_docs), summaries(reference_pool));
        s.value = 0.5 * s.grassmann_coherence + 0.5 * std::exp(-*s.embedding_mmd);
    } else {
        s.value = s.grassmann_coherence;
    }
    return s;
}

}  // namespace graphbench
