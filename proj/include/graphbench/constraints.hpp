// Constraint atoms (`name=value`, `name<=value`, `name>=value`), implicit
// inference, feasibility checking, graph validation, and the instruction-match
// (D4) score. Atoms are the shared currency between instruction synthesis,
// scoring, and refinement feedback.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphbench/dsl.hpp"

namespace graphbench {

enum class Relation { eq, le, ge };

std::string to_string(Relation r);

struct ConstraintAtom {
    std::string property;
    Relation relation = Relation::eq;
    AttrValue value;

    bool numeric() const;
    double number() const;       // value as double (0 for non-numeric)
    std::string value_text() const;  // bare rendering (no quotes on strings)
    std::string text() const;        // canonical "property<op>value"
};

// Throws std::invalid_argument naming the offending token.
ConstraintAtom parse_constraint(const std::string& text);

struct ConstraintSet {
    std::vector<ConstraintAtom> explicit_atoms;
    std::vector<ConstraintAtom> implicit_atoms;
    bool feasible = true;
    std::string infeasibility_reason;

    std::vector<ConstraintAtom> all() const;
    const ConstraintAtom* find(const std::string& property,
                               std::optional<Relation> rel = std::nullopt) const;
    bool has(const std::string& property) const { return find(property) != nullptr; }
};

ConstraintSet make_constraint_set(const std::vector<std::string>& explicit_texts);

// Adds every atom derivable from the rule registry (tree/cycle/star/path/
// complete edge counts, regular-degree edge count, grid node count) without
// duplicating existing atoms. Idempotent. A derived atom that directly
// contradicts an explicit one marks the set infeasible.
ConstraintSet infer_implicit(ConstraintSet set);

// Runs the registered impossibility rules; infeasibility is a value, not an
// error. Expects implicit inference to have run.
ConstraintSet check_feasibility(ConstraintSet set);

enum class ViolationCategory {
    count, type, degree, numeric_attribute, connectivity, direction, edit
};

std::string to_string(ViolationCategory c);

struct Violation {
    ConstraintAtom atom;
    std::string expected;
    std::string observed;
    std::optional<double> delta;  // observed - expected, numeric atoms only
    ViolationCategory category = ViolationCategory::type;
    std::string note;  // e.g. "no evaluator registered"
};

// One violation per unsatisfied atom over explicit ∪ implicit; empty list iff
// full satisfaction. Atoms whose property has no evaluator yield a violation
// with a diagnostic note (never a silent pass).
std::vector<Violation> validate(const GraphDoc& doc, const ConstraintSet& set);

// satisfied / total over explicit ∪ implicit; parse failures score 0.
double satisfaction_rate(const GraphDoc& doc, const ConstraintSet& set);
double satisfaction_rate(const ParseResult& parsed, const ConstraintSet& set);

struct D4Score {
    double explicit_satisfaction = 0.0;
    double implicit_satisfaction = 0.0;
    int no_contradiction = 0;
    double aggregate = 0.0;
};

// Feasible sets: 0.5·explicit + 0.3·implicit + 0.2·no-contradiction, where
// no-contradiction is the structural lint verdict. Infeasible sets: 1 iff the
// response declares infeasibility (registered phrase list) and emits no graph
// block, else 0.
D4Score score_d4(const std::string& response, const ParseResult& parsed,
                 const ConstraintSet& set, const StructuralLint& lint);

// The registered infeasibility phrase list ("infeasible", "impossible", ...).
const std::vector<std::string>& infeasibility_phrases();
bool declares_infeasibility(const std::string& response);

// Properties with evaluators (used by the exhaustive oracle tests).
std::vector<std::string> evaluable_properties();
std::vector<std::string> evaluable_graph_types();

// Numeric comparison tolerances shared by validation and tests:
// eq on reals holds within 1e-6 absolute; le/ge carry 1e-9 slack.
bool numeric_satisfied(Relation rel, double observed, double target);

}  // namespace graphbench
