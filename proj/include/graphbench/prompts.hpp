// Prompt construction for the four prompting strategies: the code-style
// system prefix, few-shot demonstration blocks (with mechanical reasoning
// scaffolds for the CoT variant), the chain-of-thought trigger, and
// deterministic exemplar selection.
#pragma once

#include <string>
#include <vector>

#include "graphbench/client.hpp"
#include "graphbench/scoring.hpp"
#include "graphbench/synthesis.hpp"

namespace graphbench {

// The fixed code-style system prompt shared by every strategy.
const std::string& code_style_prefix();

// The trigger appended (as the final line) by the zero-CoT strategy.
const std::string& cot_trigger();

// Marker line that opens each few-shot demonstration block (countable).
const std::string& demo_marker();

// Mechanical reasoning scaffold for a few-CoT demonstration: one check
// sentence per explicit constraint of the exemplar.
std::string reasoning_scaffold(const InstructionSpec& exemplar);

// The first `count` same-level specs in suite order that are not `instr`
// itself and carry at least one reference. Throws when fewer exist.
std::vector<const InstructionSpec*> select_exemplars(
    const std::vector<InstructionSpec>& suite, const InstructionSpec& instr,
    int count = 3);

// System + single user message. Few-shot strategies require exactly the
// exemplars from select_exemplars (or any 3 same-level stand-ins in tests);
// zero-shot strategies ignore them. `extra` (domain prior, checklist,
// formula sheet) is inserted between the instruction and the trailer.
std::vector<Message> build_prompt(const InstructionSpec& instr, Strategy strategy,
                                  const std::vector<const InstructionSpec*>& exemplars = {},
                                  const std::string& extra = "");

}  // namespace graphbench
