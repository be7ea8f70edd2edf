#include "graphbench/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "graphbench/iso.hpp"
#include "graphbench/properties.hpp"

namespace graphbench {

namespace {

constexpr double kEqTolerance = 1e-6;  // eq on reals
constexpr double kBoundSlack = 1e-9;   // le/ge slack

const std::vector<std::string> kInfeasibilityPhrases = {
    "infeasible", "impossible", "no such graph", "cannot exist", "contradiction",
};

const std::vector<std::string> kEvaluableProperties = {
    "num_nodes", "num_edges", "density", "modularity", "clustering_coefficient",
    "average_path_length", "diameter", "degree", "min_degree", "max_degree",
    "connected", "directed", "acyclic", "graph_type", "rows", "cols",
    "partition_a", "partition_b", "task_type", "domain",
};

const std::vector<std::string> kEvaluableGraphTypes = {
    "tree", "cycle", "star", "path", "complete", "bipartite", "regular", "grid", "dag",
};

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

bool is_real_text(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::string fmt_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

ViolationCategory category_for(const std::string& property) {
    if (property == "num_nodes" || property == "num_edges") return ViolationCategory::count;
    if (property == "degree" || property == "min_degree" || property == "max_degree")
        return ViolationCategory::degree;
    if (property == "connected" || property == "acyclic")
        return ViolationCategory::connectivity;
    if (property == "directed") return ViolationCategory::direction;
    if (property == "task_type") return ViolationCategory::edit;
    if (property == "graph_type" || property == "domain") return ViolationCategory::type;
    return ViolationCategory::numeric_attribute;
}

struct NumericBounds {
    std::vector<double> eq;
    double ge = -std::numeric_limits<double>::infinity();
    double le = std::numeric_limits<double>::infinity();
    bool any = false;

    double lower() const {
        double lo = ge;
        for (double v : eq) lo = std::max(lo, v);
        return lo;
    }
    double upper() const {
        double hi = le;
        for (double v : eq) hi = std::min(hi, v);
        return hi;
    }
};

NumericBounds bounds_for(const ConstraintSet& set, const std::string& property) {
    NumericBounds b;
    for (const auto& atom : set.all()) {
        if (atom.property != property || !atom.numeric()) continue;
        b.any = true;
        switch (atom.relation) {
            case Relation::eq: b.eq.push_back(atom.number()); break;
            case Relation::ge: b.ge = std::max(b.ge, atom.number()); break;
            case Relation::le: b.le = std::min(b.le, atom.number()); break;
        }
    }
    return b;
}

std::optional<long long> int_value(const ConstraintSet& set, const std::string& property) {
    const ConstraintAtom* atom = set.find(property, Relation::eq);
    if (!atom || !atom->numeric()) return std::nullopt;
    double v = atom->number();
    if (v != std::floor(v)) return std::nullopt;
    return static_cast<long long>(v);
}

bool set_directed(const ConstraintSet& set) {
    const ConstraintAtom* atom = set.find("directed", Relation::eq);
    return atom && std::holds_alternative<bool>(atom->value) && std::get<bool>(atom->value);
}

std::string lowercase(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

struct EvalOutcome {
    bool known = true;       // false when no evaluator exists
    bool satisfied = false;
    std::string observed;
    std::optional<double> delta;
    std::string note;
};

EvalOutcome eval_numeric(const ConstraintAtom& atom, double observed, bool integral) {
    EvalOutcome out;
    out.satisfied = numeric_satisfied(atom.relation, observed, atom.number());
    out.observed = integral ? std::to_string(static_cast<long long>(observed))
                            : fmt_number(observed);
    out.delta = observed - atom.number();
    return out;
}

EvalOutcome eval_bool(const ConstraintAtom& atom, bool observed) {
    EvalOutcome out;
    bool expected = std::holds_alternative<bool>(atom.value)
                        ? std::get<bool>(atom.value)
                        : lowercase(atom.value_text()) == "true";
    out.satisfied = observed == expected;
    out.observed = observed ? "true" : "false";
    return out;
}

// Grid check: the graph must be isomorphic to the rows x cols lattice. When
// one side is missing from the constraint set the other is inferred from the
// node count.
bool grid_satisfied(const Graph& g, const ConstraintSet& set, std::string* note) {
    auto rows = int_value(set, "rows");
    auto cols = int_value(set, "cols");
    long long n = g.num_nodes();
    std::vector<std::pair<long long, long long>> candidates;
    if (rows && cols) {
        candidates.push_back({*rows, *cols});
    } else if (rows) {
        if (*rows > 0 && n % *rows == 0) candidates.push_back({*rows, n / *rows});
    } else if (cols) {
        if (*cols > 0 && n % *cols == 0) candidates.push_back({n / *cols, *cols});
    } else {
        for (long long r = 1; r * r <= n; ++r)
            if (n % r == 0) {
                candidates.push_back({r, n / r});
                candidates.push_back({n / r, r});
            }
    }
    for (auto [r, c] : candidates) {
        if (r <= 0 || c <= 0 || r * c != n) continue;
        Graph grid = make_grid_graph(static_cast<int>(r), static_cast<int>(c));
        IsoResult iso = is_isomorphic(g, grid);
        if (iso == IsoResult::too_large) {
            if (note) *note = "grid check skipped: graph exceeds the isomorphism cap";
            return false;
        }
        if (iso == IsoResult::yes) return true;
    }
    return false;
}

EvalOutcome eval_graph_type(const ConstraintAtom& atom, const GraphDoc& doc,
                            const Graph& g, const PropertyReport& rep,
                            const ConstraintSet& set) {
    EvalOutcome out;
    std::string want = lowercase(atom.value_text());
    auto shape_name = [&]() -> std::string {
        if (rep.is_tree) return "tree";
        if (rep.is_cycle) return "cycle";
        if (rep.is_complete) return "complete";
        return "other";
    };
    if (want == "tree") out.satisfied = rep.is_tree;
    else if (want == "cycle") out.satisfied = rep.is_cycle;
    else if (want == "star") out.satisfied = rep.is_star;
    else if (want == "path") out.satisfied = rep.is_path;
    else if (want == "complete") out.satisfied = rep.is_complete;
    else if (want == "bipartite") out.satisfied = rep.bipartite;
    else if (want == "regular") out.satisfied = rep.is_regular && rep.num_nodes > 0;
    else if (want == "dag") out.satisfied = doc.directed && rep.acyclic;
    else if (want == "grid") out.satisfied = grid_satisfied(g, set, &out.note);
    else {
        out.known = false;
        out.note = "no evaluator registered for graph_type '" + want + "'";
    }
    out.observed = out.satisfied ? want : shape_name();
    return out;
}

EvalOutcome eval_atom(const ConstraintAtom& atom, const GraphDoc& doc, const Graph& g,
                      const PropertyReport& rep, const ConstraintSet& set) {
    const std::string& p = atom.property;
    if (p == "num_nodes") return eval_numeric(atom, rep.num_nodes, true);
    if (p == "num_edges") return eval_numeric(atom, rep.num_edges, true);
    if (p == "density") return eval_numeric(atom, rep.density, false);
    if (p == "modularity") return eval_numeric(atom, rep.modularity, false);
    if (p == "clustering_coefficient")
        return eval_numeric(atom, rep.mean_local_clustering, false);
    if (p == "average_path_length")
        return eval_numeric(atom, rep.average_path_length, false);
    if (p == "diameter") return eval_numeric(atom, rep.diameter, true);
    if (p == "min_degree") return eval_numeric(atom, rep.min_degree, true);
    if (p == "max_degree") return eval_numeric(atom, rep.max_degree, true);
    if (p == "degree") {
        // A degree atom constrains every node: eq means d-regular, le bounds
        // the maximum, ge bounds the minimum.
        EvalOutcome out;
        double target = atom.number();
        switch (atom.relation) {
            case Relation::eq:
                out.satisfied = rep.num_nodes > 0 && rep.is_regular &&
                                numeric_satisfied(Relation::eq, rep.min_degree, target);
                break;
            case Relation::le:
                out.satisfied = numeric_satisfied(Relation::le, rep.max_degree, target);
                break;
            case Relation::ge:
                out.satisfied = numeric_satisfied(Relation::ge, rep.min_degree, target);
                break;
        }
        if (rep.min_degree == rep.max_degree) {
            out.observed = std::to_string(rep.min_degree);
            out.delta = rep.min_degree - target;
        } else {
            out.observed = "[" + std::to_string(rep.min_degree) + ", " +
                           std::to_string(rep.max_degree) + "]";
        }
        return out;
    }
    if (p == "connected") return eval_bool(atom, rep.connected);
    if (p == "acyclic") return eval_bool(atom, rep.acyclic);
    if (p == "directed") return eval_bool(atom, doc.directed);
    if (p == "graph_type") return eval_graph_type(atom, doc, g, rep, set);
    if (p == "rows" || p == "cols") {
        EvalOutcome out;
        out.satisfied = grid_satisfied(g, set, &out.note);
        out.observed = out.satisfied ? atom.value_text() : "not the requested lattice";
        return out;
    }
    if (p == "partition_a" || p == "partition_b") {
        EvalOutcome out;
        if (!rep.bipartite) {
            out.satisfied = false;
            out.observed = "not bipartite";
            return out;
        }
        int side = p == "partition_a" ? rep.bipartite_small_side : rep.bipartite_large_side;
        return eval_numeric(atom, side, true);
    }
    if (p == "task_type") {
        // Metadata atom: names the edit recipe; the structural outcome is
        // expressed by the other atoms, so it cannot be violated by a graph.
        EvalOutcome out;
        out.satisfied = true;
        out.observed = atom.value_text();
        return out;
    }
    if (p == "domain") {
        EvalOutcome out;
        auto attr = doc.graph_attr("domain");
        if (!attr) {
            auto it = doc.header_attrs.find("domain");
            if (it != doc.header_attrs.end()) attr = it->second;
        }
        std::string observed =
            attr && std::holds_alternative<std::string>(*attr) ? std::get<std::string>(*attr) : "";
        out.satisfied = observed == atom.value_text();
        out.observed = observed.empty() ? "(absent)" : observed;
        return out;
    }
    EvalOutcome out;
    out.known = false;
    out.note = "no evaluator registered for property '" + p + "'";
    return out;
}

}  // namespace

bool numeric_satisfied(Relation rel, double observed, double target) {
    switch (rel) {
        case Relation::eq:
            if (observed == target) return true;
            return std::abs(observed - target) <= kEqTolerance;
        case Relation::le: return observed <= target + kBoundSlack;
        case Relation::ge: return observed >= target - kBoundSlack;
    }
    return false;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::eq: return "=";
        case Relation::le: return "<=";
        case Relation::ge: return ">=";
    }
    return "=";
}

std::string to_string(ViolationCategory c) {
    switch (c) {
        case ViolationCategory::count: return "count";
        case ViolationCategory::type: return "type";
        case ViolationCategory::degree: return "degree";
        case ViolationCategory::numeric_attribute: return "numeric_attribute";
        case ViolationCategory::connectivity: return "connectivity";
        case ViolationCategory::direction: return "direction";
        case ViolationCategory::edit: return "edit";
    }
    return "type";
}

bool ConstraintAtom::numeric() const {
    return std::holds_alternative<std::int64_t>(value) || std::holds_alternative<double>(value);
}

double ConstraintAtom::number() const {
    if (std::holds_alternative<std::int64_t>(value))
        return static_cast<double>(std::get<std::int64_t>(value));
    if (std::holds_alternative<double>(value)) return std::get<double>(value);
    return 0.0;
}

std::string ConstraintAtom::value_text() const {
    if (std::holds_alternative<std::string>(value)) return std::get<std::string>(value);
    return attr_to_text(value);
}

std::string ConstraintAtom::text() const {
    return property + to_string(relation) + value_text();
}

ConstraintAtom parse_constraint(const std::string& text) {
    std::size_t op_pos = std::string::npos;
    Relation rel = Relation::eq;
    std::size_t op_len = 1;
    if (auto p = text.find("<="); p != std::string::npos) {
        op_pos = p;
        rel = Relation::le;
        op_len = 2;
    } else if (auto q = text.find(">="); q != std::string::npos) {
        op_pos = q;
        rel = Relation::ge;
        op_len = 2;
    } else if (auto r = text.find('='); r != std::string::npos) {
        op_pos = r;
        rel = Relation::eq;
    }
    if (op_pos == std::string::npos)
        throw std::invalid_argument("constraint '" + text + "' has no relation operator");

    auto trim = [](std::string s) {
        auto is_space = [](unsigned char c) { return std::isspace(c); };
        while (!s.empty() && is_space(s.front())) s.erase(s.begin());
        while (!s.empty() && is_space(s.back())) s.pop_back();
        return s;
    };
    std::string prop = trim(text.substr(0, op_pos));
    std::string value = trim(text.substr(op_pos + op_len));
    if (prop.empty())
        throw std::invalid_argument("constraint '" + text + "' is missing a property name");
    if (value.empty())
        throw std::invalid_argument("constraint '" + text + "' is missing a value");
    for (char c : prop)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw std::invalid_argument("bad property token '" + prop + "'");

    ConstraintAtom atom;
    atom.property = prop;
    atom.relation = rel;
    if (value == "true" || value == "false") {
        atom.value = value == "true";
    } else if (is_integer_text(value)) {
        atom.value = static_cast<std::int64_t>(std::stoll(value));
    } else if (is_real_text(value)) {
        atom.value = std::stod(value);
    } else {
        atom.value = value;
    }
    if (rel != Relation::eq && !atom.numeric())
        throw std::invalid_argument("relation '" + to_string(rel) +
                                    "' requires a numeric value in '" + text + "'");
    return atom;
}

std::vector<ConstraintAtom> ConstraintSet::all() const {
    std::vector<ConstraintAtom> out = explicit_atoms;
    out.insert(out.end(), implicit_atoms.begin(), implicit_atoms.end());
    return out;
}

const ConstraintAtom* ConstraintSet::find(const std::string& property,
                                          std::optional<Relation> rel) const {
    for (const auto& a : explicit_atoms)
        if (a.property == property && (!rel || a.relation == *rel)) return &a;
    for (const auto& a : implicit_atoms)
        if (a.property == property && (!rel || a.relation == *rel)) return &a;
    return nullptr;
}

ConstraintSet make_constraint_set(const std::vector<std::string>& explicit_texts) {
    ConstraintSet set;
    for (const auto& text : explicit_texts) set.explicit_atoms.push_back(parse_constraint(text));
    return set;
}

ConstraintSet infer_implicit(ConstraintSet set) {
    auto same_atom = [](const ConstraintAtom& a, const ConstraintAtom& b) {
        return a.property == b.property && a.relation == b.relation &&
               attr_equal(a.value, b.value);
    };
    auto add = [&](const std::string& property, AttrValue value) {
        ConstraintAtom atom;
        atom.property = property;
        atom.value = std::move(value);
        for (const auto& e : set.explicit_atoms) {
            if (same_atom(e, atom)) return;
            if (e.property == atom.property && e.relation == Relation::eq &&
                atom.numeric() && e.numeric() &&
                std::abs(e.number() - atom.number()) > kEqTolerance) {
                set.feasible = false;
                set.infeasibility_reason = "derived " + atom.text() +
                                           " contradicts explicit " + e.text();
                return;
            }
        }
        for (const auto& i : set.implicit_atoms)
            if (same_atom(i, atom)) return;
        set.implicit_atoms.push_back(std::move(atom));
    };

    auto n_opt = int_value(set, "num_nodes");
    const ConstraintAtom* type_atom = set.find("graph_type", Relation::eq);
    std::string type = type_atom ? lowercase(type_atom->value_text()) : "";

    if (n_opt) {
        std::int64_t n = *n_opt;
        if (type == "tree") {
            add("num_edges", std::int64_t{n - 1});
            add("acyclic", true);
            add("connected", true);
        } else if (type == "cycle") {
            add("num_edges", std::int64_t{n});
        } else if (type == "star" || type == "path") {
            add("num_edges", std::int64_t{n - 1});
        } else if (type == "complete") {
            add("num_edges", std::int64_t{n * (n - 1) / 2});
        }
        auto d_opt = int_value(set, "degree");
        if (d_opt && !set_directed(set)) {
            std::int64_t product = n * *d_opt;
            if (product % 2 == 0) add("num_edges", std::int64_t{product / 2});
        }
    }
    auto rows = int_value(set, "rows");
    auto cols = int_value(set, "cols");
    if (rows && cols) add("num_nodes", std::int64_t{*rows * *cols});

    return set;
}

ConstraintSet check_feasibility(ConstraintSet set) {
    if (!set.feasible) return set;
    auto fail = [&](const std::string& reason) {
        set.feasible = false;
        set.infeasibility_reason = reason;
    };

    // Numeric interval consistency per property.
    std::vector<std::string> props;
    for (const auto& atom : set.all())
        if (atom.numeric() &&
            std::find(props.begin(), props.end(), atom.property) == props.end())
            props.push_back(atom.property);
    for (const auto& prop : props) {
        NumericBounds b = bounds_for(set, prop);
        for (std::size_t i = 0; i + 1 < b.eq.size(); ++i)
            if (std::abs(b.eq[i] - b.eq[i + 1]) > kEqTolerance)
                return fail("conflicting exact values for " + prop), set;
        if (b.ge > b.le + kBoundSlack)
            return fail("empty interval for " + prop), set;
        for (double v : b.eq)
            if (v < b.ge - kBoundSlack || v > b.le + kBoundSlack)
                return fail(prop + " exact value falls outside its bounds"), set;
    }

    NumericBounds density = bounds_for(set, "density");
    if (density.any) {
        if (density.lower() > 1.0 + kBoundSlack)
            return fail("density cannot exceed 1"), set;
        if (density.upper() < -kBoundSlack) return fail("density cannot be negative"), set;
    }

    bool directed = set_directed(set);
    auto n_opt = int_value(set, "num_nodes");
    auto d_opt = int_value(set, "degree");
    auto pa = int_value(set, "partition_a");
    auto pb = int_value(set, "partition_b");

    if (d_opt && *d_opt < 0) return fail("negative degree"), set;
    if (n_opt && d_opt) {
        std::int64_t n = *n_opt, d = *d_opt;
        if (d > n - 1)
            return fail(std::to_string(d) + "-regular needs degree <= n-1 = " +
                        std::to_string(n - 1)),
                   set;
        if (!directed && (n * d) % 2 == 1)
            return fail("sum of degrees n*d = " + std::to_string(n * d) +
                        " is odd, so no undirected " + std::to_string(d) +
                        "-regular graph on " + std::to_string(n) + " nodes exists"),
                   set;
    }
    if (pa && pb) {
        if (d_opt && *d_opt > 0 && *pa != *pb)
            return fail("regular bipartite requires equal sides: d*|A| = d*|B| forces |A| = |B|"),
                   set;
        if (d_opt && *d_opt > std::min(*pa, *pb))
            return fail("bipartite degree bounded by the smaller side"), set;
        if (n_opt && *pa + *pb != *n_opt)
            return fail("partition sides must cover all nodes"), set;
    }

    if (n_opt) {
        std::int64_t n = *n_opt;
        double cap = directed ? static_cast<double>(n) * (n - 1)
                              : static_cast<double>(n) * (n - 1) / 2.0;
        NumericBounds edges = bounds_for(set, "num_edges");
        if (edges.any && edges.lower() > cap + kBoundSlack)
            return fail("edge count exceeds the simple-graph maximum " +
                        std::to_string(static_cast<long long>(cap))),
                   set;
        const ConstraintAtom* conn = set.find("connected", Relation::eq);
        bool want_connected =
            conn && std::holds_alternative<bool>(conn->value) && std::get<bool>(conn->value);
        if (want_connected && edges.any && edges.upper() < static_cast<double>(n - 1) - kBoundSlack)
            return fail("connectivity needs at least n-1 edges"), set;
        const ConstraintAtom* acyc = set.find("acyclic", Relation::eq);
        bool want_acyclic =
            acyc && std::holds_alternative<bool>(acyc->value) && std::get<bool>(acyc->value);
        if (want_acyclic && !directed && edges.any &&
            edges.lower() > static_cast<double>(n - 1) + kBoundSlack)
            return fail("an acyclic undirected graph has at most n-1 edges"), set;
        const ConstraintAtom* type_atom = set.find("graph_type", Relation::eq);
        if (type_atom && lowercase(type_atom->value_text()) == "tree") {
            auto m = int_value(set, "num_edges");
            if (m && *m != n - 1) return fail("a tree on n nodes has exactly n-1 edges"), set;
        }
    }
    return set;
}

std::vector<Violation> validate(const GraphDoc& doc, const ConstraintSet& set) {
    Graph g = Graph::from_doc(doc);
    PropertyReport rep = compute_properties(g);
    rep.modularity = modularity(g, partition_for_modularity(doc, g));

    std::vector<Violation> out;
    for (const auto& atom : set.all()) {
        EvalOutcome o = eval_atom(atom, doc, g, rep, set);
        if (o.known && o.satisfied) continue;
        Violation v;
        v.atom = atom;
        v.expected = to_string(atom.relation) == "=" ? atom.value_text()
                                                     : to_string(atom.relation) + atom.value_text();
        v.observed = o.observed.empty() ? "(unknown)" : o.observed;
        if (atom.numeric()) v.delta = o.delta;
        v.category = category_for(atom.property);
        v.note = o.note;
        out.push_back(std::move(v));
    }
    return out;
}

double satisfaction_rate(const GraphDoc& doc, const ConstraintSet& set) {
    std::size_t total = set.explicit_atoms.size() + set.implicit_atoms.size();
    if (total == 0) return 1.0;
    std::size_t violated = validate(doc, set).size();
    return static_cast<double>(total - violated) / static_cast<double>(total);
}

double satisfaction_rate(const ParseResult& parsed, const ConstraintSet& set) {
    if (!parsed.ok()) return 0.0;
    return satisfaction_rate(*parsed.doc, set);
}

const std::vector<std::string>& infeasibility_phrases() { return kInfeasibilityPhrases; }

bool declares_infeasibility(const std::string& response) {
    std::string lower = lowercase(response);
    for (const auto& phrase : kInfeasibilityPhrases)
        if (lower.find(phrase) != std::string::npos) return true;
    return false;
}

D4Score score_d4(const std::string& response, const ParseResult& parsed,
                 const ConstraintSet& set, const StructuralLint& lint) {
    D4Score score;
    if (!set.feasible) {
        bool declared = declares_infeasibility(response);
        bool emitted = extract_graph_block(response).has_value();
        double v = (declared && !emitted) ? 1.0 : 0.0;
        score.explicit_satisfaction = v;
        score.implicit_satisfaction = v;
        score.no_contradiction = static_cast<int>(v);
        score.aggregate = v;
        return score;
    }
    if (!parsed.ok()) return score;  // all-zero

    auto violations = validate(*parsed.doc, set);
    auto violated = [&](const ConstraintAtom& atom) {
        for (const auto& v : violations)
            if (v.atom.property == atom.property && v.atom.relation == atom.relation &&
                attr_equal(v.atom.value, atom.value))
                return true;
        return false;
    };
    auto fraction = [&](const std::vector<ConstraintAtom>& atoms) {
        if (atoms.empty()) return 1.0;
        std::size_t sat = 0;
        for (const auto& a : atoms)
            if (!violated(a)) ++sat;
        return static_cast<double>(sat) / static_cast<double>(atoms.size());
    };
    score.explicit_satisfaction = fraction(set.explicit_atoms);
    score.implicit_satisfaction = fraction(set.implicit_atoms);
    score.no_contradiction = lint.clear() ? 1 : 0;
    score.aggregate = 0.5 * score.explicit_satisfaction + 0.3 * score.implicit_satisfaction +
                      0.2 * score.no_contradiction;
    return score;
}

std::vector<std::string> evaluable_properties() { return kEvaluableProperties; }

std::vector<std::string> evaluable_graph_types() { return kEvaluableGraphTypes; }

}  // namespace graphbench
