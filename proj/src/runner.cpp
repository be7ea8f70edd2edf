// Resumable cell runs (bounded worker pool, ordered single-writer commits),
// cell evaluation into quality summaries, and the retry / self-consistency
// baselines.
#include "graphbench/runner.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "graphbench/constraints.hpp"
#include "graphbench/metrics.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

int RunConfig::effective_max_tokens() const {
    if (max_tokens) return *max_tokens;
    return provider_max_tokens(model);
}

std::string RunConfig::cache_path() const {
    return cache_dir + "/" + model + "-" + strategy_code(strategy) + ".jsonl";
}

std::string RunConfig::quality_path() const {
    return cache_dir + "/" + model + "-" + strategy_code(strategy) + ".quality.json";
}

bool is_truncated(std::int64_t completion_tokens, int max_tokens) {
    return static_cast<double>(completion_tokens) >= 0.99 * max_tokens;
}

GenerationRecord make_generation_record(const InstructionSpec& instr, int sample,
                                        const RunConfig& config,
                                        const GenerationRequest& request,
                                        const ChatResult& result, int round) {
    GenerationRecord record;
    record.instruction_id = instr.id;
    record.sample_index = sample;
    record.model = config.model;
    record.strategy = strategy_code(config.strategy);
    record.response = result.ok ? result.text : std::string();
    record.prompt_tokens = result.prompt_tokens;
    record.completion_tokens = result.completion_tokens;
    record.latency_ms = result.latency_ms;
    record.timestamp = result.timestamp;
    record.truncated = result.ok && is_truncated(result.completion_tokens, request.max_tokens);
    record.parse_ok = result.ok && parse_response(result.text).ok();
    record.round = round;
    record.attempts = result.attempts;
    return record;
}

CellTally run_cell(const std::vector<InstructionSpec>& suite, const RunConfig& config,
                   ChatClient& client) {
    CellTally tally;
    const std::string path = config.cache_path();
    std::set<std::pair<std::string, int>> existing;
    for (const GenerationRecord& record : load_records(path))
        existing.insert({record.instruction_id, record.sample_index});

    struct Task {
        const InstructionSpec* instr;
        int sample;
    };
    std::vector<Task> tasks;
    const bool few = config.strategy == Strategy::few_shot ||
                     config.strategy == Strategy::few_cot;
    std::map<std::string, std::vector<Message>> prompts;
    for (const InstructionSpec& instr : suite) {
        std::vector<const InstructionSpec*> exemplars;
        if (few) exemplars = select_exemplars(suite, instr, 3);
        prompts[instr.id] = build_prompt(instr, config.strategy, exemplars);
        for (int sample = 0; sample < config.samples; ++sample) {
            ++tally.requested;
            if (existing.count({instr.id, sample})) {
                ++tally.skipped;
                continue;
            }
            tasks.push_back({&instr, sample});
        }
    }
    if (tasks.empty()) return tally;

    // Workers fill slots; the committing loop appends strictly in task order
    // so identical runs produce byte-identical caches.
    struct Slot {
        GenerationRecord record;
        bool ok = false;
    };
    std::vector<std::optional<Slot>> slots(tasks.size());
    std::mutex mutex;
    std::condition_variable slot_ready;
    std::atomic<std::size_t> next_task{0};

    auto worker = [&] {
        while (true) {
            const std::size_t index = next_task.fetch_add(1);
            if (index >= tasks.size()) return;
            const Task& task = tasks[index];
            GenerationRequest request;
            request.model = config.model;
            request.messages = prompts[task.instr->id];
            request.temperature = config.temperature;
            request.top_p = config.top_p;
            request.max_tokens = config.effective_max_tokens();
            request.seed_tag = config.seed_tag;
            request.sample_index = task.sample;
            request.instruction_id = task.instr->id;
            const ChatResult result = client.complete(request);
            Slot slot{make_generation_record(*task.instr, task.sample, config, request, result, 0),
                      result.ok};
            {
                std::lock_guard lock(mutex);
                slots[index] = std::move(slot);
            }
            slot_ready.notify_one();
        }
    };

    const int threads = std::max(1, config.concurrency);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

    for (std::size_t commit = 0; commit < tasks.size(); ++commit) {
        std::unique_lock lock(mutex);
        slot_ready.wait(lock, [&] { return slots[commit].has_value(); });
        Slot slot = std::move(*slots[commit]);
        slots[commit].reset();
        lock.unlock();
        append_records(path, {slot.record});
        if (slot.ok)
            ++tally.generated;
        else
            ++tally.failed;
        if (!slot.record.parse_ok) ++tally.parse_failed;
        if (slot.record.truncated) ++tally.truncated;
    }
    for (std::thread& t : pool) t.join();
    return tally;
}

QualitySummary evaluate_cell(const std::vector<InstructionSpec>& suite,
                             const std::vector<GenerationRecord>& records,
                             const std::string& model, const std::string& strategy,
                             const LevelWeights& weights) {
    QualitySummary summary;
    summary.model = model;
    summary.strategy = strategy;

    std::map<std::string, const InstructionSpec*> specs;
    for (const InstructionSpec& instr : suite) specs[instr.id] = &instr;

    // Final record per (id, sample) = highest round, later record on ties;
    // token and API-call accounting covers every record (all rounds).
    std::map<std::pair<std::string, int>, const GenerationRecord*> finals;
    std::map<std::pair<std::string, int>, int> api_calls;
    for (const GenerationRecord& record : records) {
        if (!specs.count(record.instruction_id))
            throw std::invalid_argument("record for unknown instruction " +
                                        record.instruction_id);
        const auto key = std::make_pair(record.instruction_id, record.sample_index);
        auto [it, inserted] = finals.insert({key, &record});
        if (!inserted && record.round >= it->second->round) it->second = &record;
        api_calls[key] += std::max(1, record.attempts);
        summary.completion_tokens += record.completion_tokens;
    }
    if (finals.empty()) throw std::invalid_argument("evaluate_cell: no records");

    double call_sum = 0.0;
    for (const auto& [key, calls] : api_calls) call_sum += calls;
    summary.mean_api_calls = call_sum / static_cast<double>(api_calls.size());

    // Reference pools per level (parsed once, with cached property reports).
    std::map<int, std::vector<GraphDoc>> ref_pool;
    std::map<int, std::vector<PropertyReport>> ref_reports;
    for (const InstructionSpec& instr : suite) {
        for (const std::string& ref : instr.reference_solutions) {
            ParseResult parsed = parse_document(ref);
            if (!parsed.ok())
                throw std::invalid_argument("unparseable reference in " + instr.id);
            ref_pool[instr.level].push_back(*parsed.doc);
            ref_reports[instr.level].push_back(compute_properties(*parsed.doc));
        }
    }

    struct InstructionEval {
        const InstructionSpec* instr;
        std::vector<ParseResult> parses;          // final record per sample
        std::vector<const GenerationRecord*> recs;
        std::vector<GraphDoc> docs;               // parsed subset
    };
    std::map<int, std::vector<InstructionEval>> by_level;
    for (const InstructionSpec& instr : suite) {
        InstructionEval eval;
        eval.instr = &instr;
        for (const auto& [key, record] : finals) {
            if (key.first != instr.id) continue;
            eval.recs.push_back(record);
            eval.parses.push_back(parse_response(record->response));
            if (eval.parses.back().ok()) eval.docs.push_back(*eval.parses.back().doc);
        }
        if (!eval.recs.empty()) by_level[instr.level].push_back(std::move(eval));
    }

    // Cell-level validity and cost: a valid graph parses and lints clean.
    int valid = 0;
    for (const auto& [level, evals] : by_level)
        for (const InstructionEval& eval : evals)
            for (const ParseResult& parsed : eval.parses)
                if (parsed.ok() && lint_structure(*parsed.doc).clear()) ++valid;
    summary.valid_graphs = valid;
    if (valid > 0)
        summary.tpv = static_cast<double>(summary.completion_tokens) / valid;

    double d5 = 0.0;  // no valid graphs: the infinite-TPV efficiency limit
    if (summary.tpv) d5 = score_d5(*summary.tpv, summary.mean_api_calls, weights);

    for (int level = 0; level < kNumLevels; ++level) {
        LevelQuality quality;
        auto it = by_level.find(level);
        if (it == by_level.end()) {
            summary.levels[level] = quality;
            summary.level_scores[level] = 0.0;
            continue;
        }
        const std::vector<InstructionEval>& evals = it->second;
        quality.instructions = static_cast<int>(evals.size());
        const std::array<double, 5> row = weights.effective_dim_row(level);

        std::vector<ParseResult> pooled;
        std::vector<PropertyReport> sample_reports;
        double uniq_sum = 0.0, d4_sum = 0.0;
        int record_count = 0;
        for (const InstructionEval& eval : evals) {
            const ConstraintSet set = eval.instr->constraint_set();
            for (std::size_t i = 0; i < eval.recs.size(); ++i) {
                const ParseResult& parsed = eval.parses[i];
                pooled.push_back(parsed);
                StructuralLint lint;
                if (parsed.ok()) {
                    lint = lint_structure(*parsed.doc);
                    sample_reports.push_back(compute_properties(*parsed.doc));
                }
                d4_sum += score_d4(eval.recs[i]->response, parsed, set, lint).aggregate;
                ++record_count;
            }
            uniq_sum += uniqueness(eval.parses);
        }
        const double vr = valid_rate(pooled);
        const double uniq = uniq_sum / evals.size();
        quality.dims.vr = vr;
        quality.dims.uniqueness = uniq;
        quality.dims.d4 = d4_sum / record_count;
        quality.dims.d5 = d5;

        std::optional<double> mmd_level;
        if ((level == 3 || level == 4) && !sample_reports.empty()) {
            try {
                MmdConfig mmd_config;
                mmd_level = mmd_bar(sample_reports, ref_reports[level], mmd_config);
            } catch (const std::invalid_argument&) {
                mmd_level.reset();  // pool below minimum: constraint-formula fallback
            }
        }
        quality.dims.d1 = score_d1(level, vr, uniq, mmd_level);

        if (row[1] > 0.0) {  // D2: text similarity vs the instruction's references
            double d2_sum = 0.0;
            int d2_count = 0;
            for (const InstructionEval& eval : evals) {
                std::vector<GraphDoc> refs;
                for (const std::string& text : eval.instr->reference_solutions) {
                    ParseResult parsed = parse_document(text);
                    refs.push_back(*parsed.doc);
                }
                for (std::size_t i = 0; i < eval.recs.size(); ++i) {
                    if (!eval.parses[i].ok()) {
                        d2_sum += 0.0;
                        ++d2_count;
                        continue;
                    }
                    if (auto d2 = score_d2(*eval.parses[i].doc, refs)) {
                        d2_sum += d2->value;
                        ++d2_count;
                        if (!quality.dims.text_presence) {
                            quality.dims.text_presence = 0.0;
                            quality.dims.text_similarity = 0.0;
                        }
                        *quality.dims.text_presence += d2->text_presence;
                        *quality.dims.text_similarity += d2->text_similarity;
                    }
                }
            }
            if (d2_count > 0) quality.dims.d2 = d2_sum / d2_count;
            if (quality.dims.text_presence) {
                *quality.dims.text_presence /= d2_count;
                *quality.dims.text_similarity /= d2_count;
            }
        }

        if (row[2] > 0.0) {  // D3: spectral coherence + embedding proximity
            double d3_sum = 0.0, coh_sum = 0.0, emb_sum = 0.0;
            int emb_count = 0;
            for (const InstructionEval& eval : evals) {
                const D3Score d3 = score_d3(eval.docs, ref_pool[level]);
                d3_sum += d3.value;
                coh_sum += d3.grassmann_coherence;
                if (d3.embedding_mmd) {
                    emb_sum += *d3.embedding_mmd;
                    ++emb_count;
                }
            }
            quality.dims.d3 = d3_sum / evals.size();
            quality.dims.grassmann_coherence = coh_sum / evals.size();
            if (emb_count > 0) quality.dims.embedding_mmd = emb_sum / emb_count;
        }

        quality.level_score = aggregate_level(level, quality.dims, weights);
        summary.level_scores[level] = quality.level_score;
        summary.levels[level] = quality;
    }

    summary.s_total = aggregate_quality(summary.level_scores, weights);
    return summary;
}

CellSummary summary_to_cell(const QualitySummary& summary) {
    CellSummary cell;
    cell.model = summary.model;
    const std::optional<Strategy> strategy = strategy_from_string(summary.strategy);
    if (!strategy)
        throw std::invalid_argument("unknown strategy label: " + summary.strategy);
    cell.strategy = *strategy;
    cell.level_scores = summary.level_scores;
    cell.s_total = summary.s_total;
    cell.tpv = summary.tpv;
    cell.mean_api_calls = summary.mean_api_calls;
    cell.s_final = summary.s_total;  // bonus assigned by annotate_cells
    return cell;
}

namespace {

BaselineOutcome sample_candidates(const InstructionSpec& instr,
                                  const std::vector<Message>& prompt, ChatClient& client,
                                  const RunConfig& config, int candidates) {
    if (candidates < 1) throw std::invalid_argument("need at least one candidate");
    BaselineOutcome outcome;
    for (int i = 0; i < candidates; ++i) {
        GenerationRequest request;
        request.model = config.model;
        request.messages = prompt;
        request.temperature = config.temperature;
        request.top_p = config.top_p;
        request.max_tokens = config.effective_max_tokens();
        request.seed_tag = config.seed_tag;
        request.sample_index = i;
        request.instruction_id = instr.id;
        const ChatResult result = client.complete(request);
        GenerationRecord record =
            make_generation_record(instr, i, config, request, result, i);
        outcome.records.push_back(std::move(record));
    }
    return outcome;
}

}  // namespace

BaselineOutcome retry_baseline(const InstructionSpec& instr,
                               const std::vector<Message>& prompt, ChatClient& client,
                               const RunConfig& config, int candidates) {
    BaselineOutcome outcome = sample_candidates(instr, prompt, client, config, candidates);
    const ConstraintSet set = instr.constraint_set();
    // Retry keeps the last candidate regardless of earlier ones.
    const int last = static_cast<int>(outcome.records.size()) - 1;
    const ParseResult parsed = parse_response(outcome.records[last].response);
    outcome.chosen_index = parsed.ok() ? last : -1;
    outcome.final_response = outcome.records[last].response;
    outcome.satisfaction = satisfaction_rate(parsed, set);
    return outcome;
}

BaselineOutcome self_consistency_baseline(const InstructionSpec& instr,
                                          const std::vector<Message>& prompt,
                                          ChatClient& client, const RunConfig& config,
                                          int candidates) {
    BaselineOutcome outcome = sample_candidates(instr, prompt, client, config, candidates);
    const ConstraintSet set = instr.constraint_set();
    int best = -1;
    double best_rate = -1.0;
    for (std::size_t i = 0; i < outcome.records.size(); ++i) {
        const ParseResult parsed = parse_response(outcome.records[i].response);
        if (!parsed.ok()) continue;
        const double rate = satisfaction_rate(parsed, set);
        if (rate > best_rate) {  // strict: ties keep the lowest index
            best_rate = rate;
            best = static_cast<int>(i);
        }
    }
    outcome.chosen_index = best;
    if (best >= 0) {
        outcome.final_response = outcome.records[best].response;
        outcome.satisfaction = best_rate;
    }
    return outcome;
}

MockClient::Script suite_echo_script(const std::vector<InstructionSpec>& suite) {
    auto by_id = std::make_shared<std::map<std::string, const InstructionSpec*>>();
    auto owned = std::make_shared<std::vector<InstructionSpec>>(suite);
    for (const InstructionSpec& instr : *owned) (*by_id)[instr.id] = &instr;
    return [by_id, owned](const GenerationRequest& request) -> std::string {
        auto it = by_id->find(request.instruction_id);
        if (it == by_id->end())
            return "I cannot find that instruction.";
        const InstructionSpec& instr = *it->second;
        if (!instr.feasible || instr.reference_solutions.empty())
            return "This request is infeasible: the constraints are contradictory, "
                   "so no such graph exists.";
        const std::size_t pick =
            static_cast<std::size_t>(request.sample_index) % instr.reference_solutions.size();
        return instr.reference_solutions[pick];
    };
}

}  // namespace graphbench
