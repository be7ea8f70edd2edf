// Command-line front end: suite generation, cached cell runs, evaluation,
// report emission, and the refinement pipelines.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphbench/analysis.hpp"
#include "graphbench/caap.hpp"
#include "graphbench/jsonio.hpp"
#include "graphbench/report.hpp"
#include "graphbench/runner.hpp"
#include "graphbench/templates.hpp"
#include "graphbench/vgig.hpp"

namespace {

using namespace graphbench;

struct CommonRunOptions {
    std::string model;
    std::string strategy_text = "ZS";
    std::string suite_dir;
    std::string cache_dir = "results";
    std::string endpoint = "https://api.openai.com/v1/chat/completions";
    std::string auth_env = "OPENAI_API_KEY";
    double temperature = 0.7;
    int seed_tag = 42;
    int max_tokens = 0;  // 0 = provider default
    bool mock = false;
    std::vector<std::string> ids;
    int level = -1;
    int limit = 0;
};

void add_selection_options(CLI::App* cmd, CommonRunOptions& opts) {
    cmd->add_option("--id", opts.ids, "Run only these instruction ids (repeatable)");
    cmd->add_option("--level", opts.level, "Run only instructions of this level")
        ->check(CLI::Range(0, 5));
    cmd->add_option("--limit", opts.limit,
                    "Run only the first N instructions after filtering");
}

void add_client_options(CLI::App* cmd, CommonRunOptions& opts) {
    cmd->add_option("--model", opts.model, "Model identifier")->required();
    cmd->add_option("--suite", opts.suite_dir, "Suite directory (level_*.json)")
        ->required();
    cmd->add_option("--cache-dir", opts.cache_dir, "Cache directory")
        ->capture_default_str();
    cmd->add_option("--endpoint", opts.endpoint, "Chat-completions endpoint")
        ->capture_default_str();
    cmd->add_option("--auth-env", opts.auth_env,
                    "Environment variable holding the bearer token")
        ->capture_default_str();
    cmd->add_option("--temperature", opts.temperature, "Sampling temperature")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed_tag,
                    "Seed tag recorded in run metadata (never sent to the provider)")
        ->capture_default_str();
    cmd->add_option("--max-tokens", opts.max_tokens,
                    "Completion-token cap (0 = provider default)");
    cmd->add_flag("--mock", opts.mock,
                  "Use the deterministic offline suite-echo client");
}

Strategy parse_strategy(const std::string& text) {
    const std::optional<Strategy> strategy = strategy_from_string(text);
    if (!strategy) throw CLI::ValidationError("--strategy", "unknown strategy: " + text);
    return *strategy;
}

std::vector<InstructionSpec> select_instructions(
    const std::vector<InstructionSpec>& suite, const CommonRunOptions& opts) {
    std::vector<InstructionSpec> picked;
    const std::set<std::string> wanted(opts.ids.begin(), opts.ids.end());
    for (const InstructionSpec& spec : suite) {
        if (!wanted.empty() && !wanted.count(spec.id)) continue;
        if (opts.level >= 0 && spec.level != opts.level) continue;
        picked.push_back(spec);
        if (opts.limit > 0 && static_cast<int>(picked.size()) >= opts.limit) break;
    }
    return picked;
}

std::unique_ptr<ChatClient> make_client(const CommonRunOptions& opts,
                                        const std::vector<InstructionSpec>& suite) {
    if (opts.mock) return std::make_unique<MockClient>(suite_echo_script(suite));
    if (!std::getenv(opts.auth_env.c_str()))
        throw std::runtime_error("auth token not set: export " + opts.auth_env +
                                 " (or pass --mock for the offline client)");
    ClientContract contract;
    contract.endpoint = opts.endpoint;
    contract.auth_env = opts.auth_env;
    return std::make_unique<HttpChatClient>(contract);
}

RunConfig make_run_config(const CommonRunOptions& opts, Strategy strategy) {
    RunConfig config;
    config.model = opts.model;
    config.strategy = strategy;
    config.temperature = opts.temperature;
    config.seed_tag = opts.seed_tag;
    config.cache_dir = opts.cache_dir;
    if (opts.max_tokens > 0) config.max_tokens = opts.max_tokens;
    return config;
}

void print_seed_note(const CommonRunOptions& opts) {
    std::printf("seed tag %d recorded in run metadata; not sent to the provider\n",
                opts.seed_tag);
}

void print_quality(const QualitySummary& summary) {
    std::printf("%-14s %-3s", summary.model.c_str(), summary.strategy.c_str());
    for (int level = 0; level < kNumLevels; ++level)
        std::printf("  L%d %.3f", level, summary.level_scores[level]);
    std::printf("  S_total %.4f", summary.s_total);
    if (summary.tpv)
        std::printf("  TPV %.1f", *summary.tpv);
    else
        std::printf("  TPV -");
    std::printf("  calls %.2f  valid %d\n", summary.mean_api_calls,
                summary.valid_graphs);
}

// Instruction ids already present in a refinement cache, to keep re-runs
// append-only without duplicating chains.
std::set<std::string> cached_instruction_ids(const std::string& path) {
    std::set<std::string> ids;
    if (std::filesystem::exists(path))
        for (const GenerationRecord& record : load_records(path))
            ids.insert(record.instruction_id);
    return ids;
}

int cmd_gen_data(std::uint64_t seed, const std::string& out_dir,
                 const std::string& counts_text) {
    SuiteConfig config;
    config.seed = seed;
    if (!counts_text.empty()) {
        std::stringstream stream(counts_text);
        std::string field;
        std::vector<int> counts;
        while (std::getline(stream, field, ',')) counts.push_back(std::stoi(field));
        if (counts.size() != 6)
            throw std::runtime_error("--counts needs 6 comma-separated values");
        std::copy(counts.begin(), counts.end(), config.level_counts.begin());
    }
    const std::vector<InstructionSpec> suite = generate_instructions(config);
    save_suite(suite, out_dir);
    int infeasible = 0, references = 0;
    for (const InstructionSpec& spec : suite) {
        infeasible += spec.feasible ? 0 : 1;
        references += static_cast<int>(spec.reference_solutions.size());
    }
    std::printf("wrote %zu instructions to %s (%d infeasible, %d references)\n",
                suite.size(), out_dir.c_str(), infeasible, references);
    return 0;
}

int cmd_run(const CommonRunOptions& opts, const std::string& strategy_text,
            int samples, int concurrency) {
    const Strategy strategy = parse_strategy(strategy_text);
    const std::vector<InstructionSpec> suite = load_suite(opts.suite_dir);
    const std::vector<InstructionSpec> picked = select_instructions(suite, opts);
    if (picked.empty()) throw std::runtime_error("no instructions selected");
    RunConfig config = make_run_config(opts, strategy);
    config.samples = samples;
    config.concurrency = concurrency;
    // Few-shot prompts draw exemplars from the full suite, so build prompts
    // against it even when running a filtered slice.
    const std::unique_ptr<ChatClient> client = make_client(opts, suite);
    print_seed_note(opts);
    const CellTally tally = run_cell(picked, config, *client);
    std::printf(
        "cell %s-%s: %d requested, %d cached, %d generated, %d failed, "
        "%d parse failures, %d truncated\n",
        config.model.c_str(), strategy_code(strategy).c_str(), tally.requested,
        tally.skipped, tally.generated, tally.failed, tally.parse_failed,
        tally.truncated);
    std::printf("cache: %s\n", config.cache_path().c_str());
    return 0;
}

int cmd_eval(const CommonRunOptions& opts, const std::string& strategy_text,
             bool quality_only) {
    const Strategy strategy = parse_strategy(strategy_text);
    const std::vector<InstructionSpec> suite = load_suite(opts.suite_dir);
    RunConfig config = make_run_config(opts, strategy);
    const std::vector<GenerationRecord> records = load_records(config.cache_path());
    if (records.empty())
        throw std::runtime_error("no cache records at " + config.cache_path());
    LevelWeights weights;
    weights.quality_only = quality_only;
    const QualitySummary summary = evaluate_cell(
        suite, records, config.model, strategy_code(strategy), weights);
    save_quality(summary, config.quality_path());
    print_quality(summary);
    std::printf("quality: %s\n", config.quality_path().c_str());
    return 0;
}

int cmd_report(const std::string& cells_path, const std::string& tpv_path,
               const std::string& tiers_path, const std::string& quality_dir,
               const std::string& out_dir, double threshold) {
    ReportInputs inputs;
    inputs.cells = load_cells_csv(cells_path);
    if (!tpv_path.empty()) apply_tpv(inputs.cells, load_tpv_csv(tpv_path));
    if (!tiers_path.empty()) inputs.tier_map = load_tier_map_csv(tiers_path);
    if (!quality_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(quality_dir))
            if (entry.path().string().ends_with(".quality.json"))
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files)
            inputs.quality_cells.push_back(load_quality(path.string()));
    }
    inputs.cost_threshold = threshold;
    const std::vector<std::string> written = emit_report(inputs, out_dir);
    for (const std::string& path : written) std::printf("wrote %s\n", path.c_str());
    return 0;
}

int cmd_vgig(const CommonRunOptions& opts, const std::string& strategy_text,
             int rounds, int chains, const std::string& feedback_text) {
    const Strategy strategy = parse_strategy(strategy_text);
    const std::optional<FeedbackLevel> feedback = feedback_from_string(feedback_text);
    if (!feedback)
        throw CLI::ValidationError("--feedback", "unknown level: " + feedback_text);
    const std::vector<InstructionSpec> suite = load_suite(opts.suite_dir);
    const std::vector<InstructionSpec> picked = select_instructions(suite, opts);
    if (picked.empty()) throw std::runtime_error("no instructions selected");
    const std::unique_ptr<ChatClient> client = make_client(opts, suite);
    RunConfig config = make_run_config(opts, strategy);
    VgigConfig vgig;
    vgig.max_rounds = rounds;
    vgig.chains = chains;
    vgig.feedback = *feedback;
    vgig.base_temperature = opts.temperature;
    const std::string path = opts.cache_dir + "/" + opts.model + "-" +
                             strategy_code(strategy) + "-vgig" +
                             std::to_string(rounds) + "-" + to_string(*feedback) +
                             ".jsonl";
    print_seed_note(opts);
    const std::set<std::string> done = cached_instruction_ids(path);
    int ran = 0, skipped = 0;
    double satisfaction_sum = 0.0;
    std::int64_t generations = 0;
    for (const InstructionSpec& instr : picked) {
        if (done.count(instr.id)) {
            ++skipped;
            continue;
        }
        std::vector<const InstructionSpec*> exemplars;
        if (strategy == Strategy::few_shot || strategy == Strategy::few_cot)
            exemplars = select_exemplars(suite, instr);
        const std::vector<Message> prompt = build_prompt(instr, strategy, exemplars);
        const VgigResult result = run_vgig(instr, *client, vgig, config, prompt);
        append_records(path, result.records);
        double best = 0.0;
        for (const VgigChain& chain : result.chains)
            best = std::max(best, chain.final_satisfaction);
        satisfaction_sum += best;
        generations += static_cast<std::int64_t>(result.records.size());
        ++ran;
    }
    if (ran > 0)
        std::printf("refined %d instructions (%d cached): mean best satisfaction "
                    "%.3f, %.2f generations/instruction\n",
                    ran, skipped, satisfaction_sum / ran,
                    static_cast<double>(generations) / ran);
    else
        std::printf("nothing to do: all %d instructions cached\n", skipped);
    std::printf("cache: %s\n", path.c_str());
    return 0;
}

int cmd_combined(const CommonRunOptions& opts, int rounds, int chains,
                 const std::string& feedback_text) {
    const std::optional<FeedbackLevel> feedback = feedback_from_string(feedback_text);
    if (!feedback)
        throw CLI::ValidationError("--feedback", "unknown level: " + feedback_text);
    const std::vector<InstructionSpec> suite = load_suite(opts.suite_dir);
    const std::vector<InstructionSpec> picked = select_instructions(suite, opts);
    if (picked.empty()) throw std::runtime_error("no instructions selected");
    const std::unique_ptr<ChatClient> client = make_client(opts, suite);
    RunConfig config = make_run_config(opts, Strategy::zero_shot);
    VgigConfig vgig;
    vgig.max_rounds = rounds;
    vgig.chains = chains;
    vgig.feedback = *feedback;
    vgig.base_temperature = opts.temperature;
    const std::string path = opts.cache_dir + "/" + opts.model + "-combined" +
                             std::to_string(rounds) + "-" + to_string(*feedback) +
                             ".jsonl";
    print_seed_note(opts);
    const std::set<std::string> done = cached_instruction_ids(path);
    int ran = 0, skipped = 0;
    double satisfaction_sum = 0.0;
    for (const InstructionSpec& instr : picked) {
        if (done.count(instr.id)) {
            ++skipped;
            continue;
        }
        const CaapDecision decision = caap_select(instr, opts.model);
        const VgigResult result = run_combined(instr, *client, vgig, config, suite);
        append_records(path, result.records);
        double best = 0.0;
        for (const VgigChain& chain : result.chains)
            best = std::max(best, chain.final_satisfaction);
        satisfaction_sum += best;
        ++ran;
        std::printf("%s: %s%s%s%s best %.3f\n", instr.id.c_str(),
                    strategy_code(decision.strategy).c_str(),
                    decision.checklist ? "+checklist" : "",
                    decision.formula ? "+formula" : "",
                    decision.domain ? "+domain" : "", best);
    }
    if (ran > 0)
        std::printf("combined pipeline over %d instructions (%d cached): mean best "
                    "satisfaction %.3f\n",
                    ran, skipped, satisfaction_sum / ran);
    else
        std::printf("nothing to do: all %d instructions cached\n", skipped);
    std::printf("cache: %s\n", path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-driven graph-generation benchmark toolkit"};
    app.require_subcommand(1);

    // gen-data ---------------------------------------------------------------
    std::uint64_t gen_seed = 42;
    std::string gen_out = "data/suite";
    std::string gen_counts;
    CLI::App* gen = app.add_subcommand("gen-data", "Generate the instruction suite");
    gen->add_option("--seed", gen_seed, "Suite RNG seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output directory")->capture_default_str();
    gen->add_option("--counts", gen_counts,
                    "Per-level instruction counts (6 comma-separated values)");

    // run --------------------------------------------------------------------
    CommonRunOptions run_opts;
    int run_samples = 5;
    int run_concurrency = 1;
    CLI::App* run = app.add_subcommand("run", "Run one (model, strategy) cell");
    add_client_options(run, run_opts);
    run->add_option("--strategy", run_opts.strategy_text,
                    "Prompt strategy (ZS/FS/ZC/FC or long names)")
        ->capture_default_str();
    run->add_option("--samples", run_samples, "Samples per instruction")
        ->capture_default_str();
    run->add_option("--concurrency", run_concurrency, "Worker threads")
        ->capture_default_str();
    add_selection_options(run, run_opts);

    // eval -------------------------------------------------------------------
    CommonRunOptions eval_opts;
    bool eval_quality_only = false;
    CLI::App* eval = app.add_subcommand("eval", "Score a cached cell");
    add_client_options(eval, eval_opts);
    eval->add_option("--strategy", eval_opts.strategy_text, "Prompt strategy")
        ->capture_default_str();
    eval->add_flag("--quality-only", eval_quality_only,
                   "Drop the efficiency dimension and renormalize");

    // report -----------------------------------------------------------------
    std::string rep_cells, rep_tpv, rep_tiers, rep_quality_dir, rep_out = "report";
    double rep_threshold = 0.8;
    CLI::App* report = app.add_subcommand("report", "Emit analysis tables");
    report->add_option("--cells", rep_cells, "Cell table CSV")->required();
    report->add_option("--tpv", rep_tpv, "TPV table CSV");
    report->add_option("--tiers", rep_tiers, "Tier map CSV");
    report->add_option("--quality-dir", rep_quality_dir,
                       "Directory of *.quality.json files for the ablations");
    report->add_option("--out", rep_out, "Output directory")->capture_default_str();
    report->add_option("--threshold", rep_threshold, "Cost@Q quality threshold")
        ->capture_default_str();

    // vgig -------------------------------------------------------------------
    CommonRunOptions vgig_opts;
    int vgig_rounds = 3, vgig_chains = 3;
    std::string vgig_feedback = "fine";
    CLI::App* vgig = app.add_subcommand("vgig", "Verification-guided refinement");
    add_client_options(vgig, vgig_opts);
    vgig->add_option("--strategy", vgig_opts.strategy_text, "Round-0 strategy")
        ->capture_default_str();
    vgig->add_option("--rounds", vgig_rounds, "Max refinement rounds T")
        ->capture_default_str();
    vgig->add_option("--chains", vgig_chains, "Parallel chains K")
        ->capture_default_str();
    vgig->add_option("--feedback", vgig_feedback, "none | coarse | fine")
        ->capture_default_str();
    add_selection_options(vgig, vgig_opts);

    // combined ---------------------------------------------------------------
    CommonRunOptions comb_opts;
    int comb_rounds = 3, comb_chains = 3;
    std::string comb_feedback = "fine";
    CLI::App* combined = app.add_subcommand(
        "combined", "Adaptive strategy selection plus refinement");
    add_client_options(combined, comb_opts);
    combined->add_option("--rounds", comb_rounds, "Max refinement rounds T")
        ->capture_default_str();
    combined->add_option("--chains", comb_chains, "Parallel chains K")
        ->capture_default_str();
    combined->add_option("--feedback", comb_feedback, "none | coarse | fine")
        ->capture_default_str();
    add_selection_options(combined, comb_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen_data(gen_seed, gen_out, gen_counts);
        if (run->parsed())
            return cmd_run(run_opts, run_opts.strategy_text, run_samples,
                           run_concurrency);
        if (eval->parsed())
            return cmd_eval(eval_opts, eval_opts.strategy_text, eval_quality_only);
        if (report->parsed())
            return cmd_report(rep_cells, rep_tpv, rep_tiers, rep_quality_dir, rep_out,
                              rep_threshold);
        if (vgig->parsed())
            return cmd_vgig(vgig_opts, vgig_opts.strategy_text, vgig_rounds,
                            vgig_chains, vgig_feedback);
        if (combined->parsed())
            return cmd_combined(comb_opts, comb_rounds, comb_chains, comb_feedback);
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 1;
    }
    return 0;
}
