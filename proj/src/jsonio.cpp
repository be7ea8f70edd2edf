// JSON persistence for suites, generation caches, and quality summaries.
// Writers use ordered JSON so files are byte-stable run to run.
#include "graphbench/jsonio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphbench {

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

ojson spec_to_node(const InstructionSpec& spec) {
    ojson node;
    node["id"] = spec.id;
    node["level"] = spec.level;
    node["instruction"] = spec.instruction;
    node["explicit_constraints"] = spec.explicit_constraints;
    node["implicit_constraints"] = spec.implicit_constraints;
    node["graph_sizes"] = spec.graph_sizes;
    node["reference_solutions"] = spec.reference_solutions;
    node["feasible"] = spec.feasible;
    if (spec.domain) node["domain"] = *spec.domain;
    if (spec.base_graph) node["base_graph"] = *spec.base_graph;
    return node;
}

InstructionSpec spec_from_node(const njson& node) {
    InstructionSpec spec;
    spec.id = node.at("id").get<std::string>();
    spec.level = node.at("level").get<int>();
    spec.instruction = node.at("instruction").get<std::string>();
    spec.explicit_constraints = node.at("explicit_constraints").get<std::vector<std::string>>();
    spec.implicit_constraints = node.at("implicit_constraints").get<std::vector<std::string>>();
    spec.graph_sizes = node.at("graph_sizes").get<std::vector<std::string>>();
    spec.reference_solutions = node.at("reference_solutions").get<std::vector<std::string>>();
    spec.feasible = node.at("feasible").get<bool>();
    if (node.contains("domain")) spec.domain = node["domain"].get<std::string>();
    if (node.contains("base_graph")) spec.base_graph = node["base_graph"].get<std::string>();
    return spec;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void dims_to_node(const DimScores& dims, ojson& node) {
    auto put = [&](const char* key, const std::optional<double>& value) {
        if (value) node[key] = *value;
    };
    put("d1", dims.d1);
    put("d2", dims.d2);
    put("d3", dims.d3);
    put("d4", dims.d4);
    put("d5", dims.d5);
    put("vr", dims.vr);
    put("uniqueness", dims.uniqueness);
    put("mmd_degree", dims.mmd_d);
    put("mmd_clustering", dims.mmd_c);
    put("mmd_spectral", dims.mmd_s);
    put("mmd_orbit", dims.mmd_o);
    put("text_presence", dims.text_presence);
    put("text_similarity", dims.text_similarity);
    put("grassmann_coherence", dims.grassmann_coherence);
    put("embedding_mmd", dims.embedding_mmd);
}

DimScores dims_from_node(const njson& node) {
    DimScores dims;
    auto get = [&](const char* key, std::optional<double>& value) {
        if (node.contains(key)) value = node[key].get<double>();
    };
    get("d1", dims.d1);
    get("d2", dims.d2);
    get("d3", dims.d3);
    get("d4", dims.d4);
    get("d5", dims.d5);
    get("vr", dims.vr);
    get("uniqueness", dims.uniqueness);
    get("mmd_degree", dims.mmd_d);
    get("mmd_clustering", dims.mmd_c);
    get("mmd_spectral", dims.mmd_s);
    get("mmd_orbit", dims.mmd_o);
    get("text_presence", dims.text_presence);
    get("text_similarity", dims.text_similarity);
    get("grassmann_coherence", dims.grassmann_coherence);
    get("embedding_mmd", dims.embedding_mmd);
    return dims;
}

}  // namespace

void save_suite(const std::vector<InstructionSpec>& suite, const std::string& directory) {
    std::filesystem::create_directories(directory);
    for (int level = 0; level < kNumLevels; ++level) {
        ojson array = ojson::array();
        for (const InstructionSpec& spec : suite)
            if (spec.level == level) array.push_back(spec_to_node(spec));
        const std::string path =
            (std::filesystem::path(directory) / ("level_" + std::to_string(level) + ".json"))
                .string();
        write_text(path, array.dump(2) + "\n");
    }
}

std::vector<InstructionSpec> load_suite(const std::string& directory) {
    std::vector<InstructionSpec> suite;
    bool any = false;
    for (int level = 0; level < kNumLevels; ++level) {
        const std::filesystem::path path =
            std::filesystem::path(directory) / ("level_" + std::to_string(level) + ".json");
        if (!std::filesystem::exists(path)) continue;
        any = true;
        njson array = njson::parse(read_text(path.string()));
        for (const njson& node : array) suite.push_back(spec_from_node(node));
    }
    if (!any)
        throw std::runtime_error("no level_<k>.json files under " + directory);
    return suite;
}

std::string spec_to_json(const InstructionSpec& spec) {
    return spec_to_node(spec).dump(2);
}

InstructionSpec spec_from_json(const std::string& text) {
    return spec_from_node(njson::parse(text));
}

std::string record_to_json(const GenerationRecord& record) {
    ojson node;
    node["instruction_id"] = record.instruction_id;
    node["sample_index"] = record.sample_index;
    node["model"] = record.model;
    node["strategy"] = record.strategy;
    node["response"] = record.response;
    node["prompt_tokens"] = record.prompt_tokens;
    node["completion_tokens"] = record.completion_tokens;
    node["latency_ms"] = record.latency_ms;
    node["timestamp"] = record.timestamp;
    node["truncated"] = record.truncated;
    node["parse_ok"] = record.parse_ok;
    node["round"] = record.round;
    node["attempts"] = record.attempts;
    return node.dump();
}

GenerationRecord record_from_json(const std::string& line) {
    njson node = njson::parse(line);
    GenerationRecord record;
    record.instruction_id = node.at("instruction_id").get<std::string>();
    record.sample_index = node.at("sample_index").get<int>();
    record.model = node.at("model").get<std::string>();
    record.strategy = node.at("strategy").get<std::string>();
    record.response = node.at("response").get<std::string>();
    record.prompt_tokens = node.at("prompt_tokens").get<std::int64_t>();
    record.completion_tokens = node.at("completion_tokens").get<std::int64_t>();
    record.latency_ms = node.at("latency_ms").get<double>();
    record.timestamp = node.at("timestamp").get<std::string>();
    record.truncated = node.at("truncated").get<bool>();
    record.parse_ok = node.at("parse_ok").get<bool>();
    record.round = node.at("round").get<int>();
    record.attempts = node.value("attempts", 1);
    return record;
}

void append_records(const std::string& path, const std::vector<GenerationRecord>& records) {
    if (records.empty()) return;
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + path);
    for (const GenerationRecord& record : records) out << record_to_json(record) << "\n";
    if (!out) throw std::runtime_error("append failed for " + path);
}

std::vector<GenerationRecord> load_records(const std::string& path) {
    std::vector<GenerationRecord> records;
    if (!std::filesystem::exists(path)) return records;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        try {
            records.push_back(record_from_json(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                     ": bad cache record: " + e.what());
        }
    }
    return records;
}

void save_quality(const QualitySummary& summary, const std::string& path) {
    ojson node;
    node["model"] = summary.model;
    node["strategy"] = summary.strategy;
    ojson levels = ojson::object();
    for (const auto& [level, quality] : summary.levels) {
        ojson entry;
        entry["level_score"] = quality.level_score;
        entry["instructions"] = quality.instructions;
        dims_to_node(quality.dims, entry);
        levels[std::to_string(level)] = std::move(entry);
    }
    node["levels"] = std::move(levels);
    node["level_scores"] = summary.level_scores;
    node["s_total"] = summary.s_total;
    if (summary.tpv)
        node["tpv"] = *summary.tpv;
    else
        node["tpv"] = nullptr;
    node["mean_api_calls"] = summary.mean_api_calls;
    node["completion_tokens"] = summary.completion_tokens;
    node["valid_graphs"] = summary.valid_graphs;
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    write_text(path, node.dump(2) + "\n");
}

QualitySummary load_quality(const std::string& path) {
    njson node = njson::parse(read_text(path));
    QualitySummary summary;
    summary.model = node.at("model").get<std::string>();
    summary.strategy = node.at("strategy").get<std::string>();
    for (const auto& [key, entry] : node.at("levels").items()) {
        LevelQuality quality;
        quality.level_score = entry.at("level_score").get<double>();
        quality.instructions = entry.at("instructions").get<int>();
        quality.dims = dims_from_node(entry);
        summary.levels[std::stoi(key)] = std::move(quality);
    }
    auto scores = node.at("level_scores").get<std::vector<double>>();
    if (static_cast<int>(scores.size()) != kNumLevels)
        throw std::runtime_error(path + ": level_scores must have six entries");
    for (int i = 0; i < kNumLevels; ++i) summary.level_scores[i] = scores[i];
    summary.s_total = node.at("s_total").get<double>();
    if (!node.at("tpv").is_null()) summary.tpv = node["tpv"].get<double>();
    summary.mean_api_calls = node.at("mean_api_calls").get<double>();
    summary.completion_tokens = node.at("completion_tokens").get<std::int64_t>();
    summary.valid_graphs = node.at("valid_graphs").get<int>();
    return summary;
}

}  // namespace graphbench
