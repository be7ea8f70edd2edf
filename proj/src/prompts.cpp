// Prompt assembly for the four prompting strategies.
#include "graphbench/prompts.hpp"

#include <sstream>
#include <stdexcept>

namespace graphbench {

namespace {

std::string relation_phrase(Relation r) {
    switch (r) {
        case Relation::eq: return "equals";
        case Relation::le: return "is at most";
        case Relation::ge: return "is at least";
    }
    return "equals";
}

}  // namespace

const std::string& code_style_prefix() {
    static const std::string prefix =
        "You are a graph generator. Answer with exactly one graph block in the\n"
        "code-style format below and no prose after it.\n"
        "\n"
        "Graph[name='example', nodes=3] {\n"
        "    node_list = [0, 1, 2];\n"
        "    edge_list = [(0, 1), (1, 2)];\n"
        "}\n"
        "\n"
        "Node identifiers are integers or quoted strings. Optional statements set\n"
        "node attributes (0.label='a';), graph attributes (k = 2;), directedness\n"
        "(directed = true;), and a partition (partition = {{0}, {1, 2}};).";
    return prefix;
}

const std::string& cot_trigger() {
    static const std::string trigger = "Let's think step by step.";
    return trigger;
}

const std::string& demo_marker() {
    static const std::string marker = "### Example";
    return marker;
}

std::string reasoning_scaffold(const InstructionSpec& exemplar) {
    std::ostringstream out;
    out << "Reasoning: to satisfy the request,";
    bool first = true;
    for (const std::string& text : exemplar.explicit_constraints) {
        const ConstraintAtom atom = parse_constraint(text);
        out << (first ? " " : " then ") << "check that " << atom.property << ' '
            << relation_phrase(atom.relation) << ' ' << atom.value_text() << ';';
        first = false;
    }
    out << " finally write out the complete graph block.";
    return out.str();
}

std::vector<const InstructionSpec*> select_exemplars(
    const std::vector<InstructionSpec>& suite, const InstructionSpec& instr, int count) {
    std::vector<const InstructionSpec*> picked;
    for (const InstructionSpec& candidate : suite) {
        if (static_cast<int>(picked.size()) >= count) break;
        if (candidate.level != instr.level) continue;
        if (candidate.id == instr.id) continue;
        if (candidate.reference_solutions.empty()) continue;
        picked.push_back(&candidate);
    }
    if (static_cast<int>(picked.size()) < count)
        throw std::invalid_argument("select_exemplars: only " +
                                    std::to_string(picked.size()) + " level-" +
                                    std::to_string(instr.level) + " exemplars available, need " +
                                    std::to_string(count));
    return picked;
}

std::vector<Message> build_prompt(const InstructionSpec& instr, Strategy strategy,
                                  const std::vector<const InstructionSpec*>& exemplars,
                                  const std::string& extra) {
    const bool few = strategy == Strategy::few_shot || strategy == Strategy::few_cot;
    const bool scaffolded = strategy == Strategy::few_cot;

    std::ostringstream user;
    if (few) {
        if (static_cast<int>(exemplars.size()) < 3)
            throw std::invalid_argument("few-shot prompts need 3 exemplars, got " +
                                        std::to_string(exemplars.size()));
        for (int i = 0; i < 3; ++i) {
            const InstructionSpec& demo = *exemplars[i];
            user << demo_marker() << ' ' << (i + 1) << '\n'
                 << "Instruction: " << demo.instruction << '\n';
            if (scaffolded) user << reasoning_scaffold(demo) << '\n';
            user << "Answer:\n" << demo.reference_solutions.front() << "\n\n";
        }
    }
    user << "Instruction: " << instr.instruction;
    if (!extra.empty()) user << "\n\n" << extra;
    if (strategy == Strategy::zero_cot)
        user << "\n\n" << cot_trigger();
    else
        user << "\n\nAnswer:";

    return {{"system", code_style_prefix()}, {"user", user.str()}};
}

}  // namespace graphbench
