// Suite-generation tests: deterministic output, level counts and size-bucket
// coverage, reference validity, the deliberately infeasible designs,
// template keys, reference-pair classification, constraint-directed
// synthesis, and the document-level edit operations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphbench/jsonio.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/synthesis.hpp"
#include "graphbench/templates.hpp"

using namespace graphbench;

namespace {

const std::vector<InstructionSpec>& suite() {
    static const std::vector<InstructionSpec> s = generate_instructions();
    return s;
}

std::string suite_fingerprint(const std::vector<InstructionSpec>& specs) {
    std::string all;
    for (const auto& spec : specs) all += spec_to_json(spec) + "\n";
    return all;
}

}  // namespace

TEST_CASE("default suite has the published shape") {
    const auto& s = suite();
    CHECK(s.size() == 800);
    std::array<int, 6> counts{};
    int infeasible = 0;
    for (const auto& spec : s) {
        REQUIRE(spec.level >= 0);
        REQUIRE(spec.level <= 5);
        ++counts[spec.level];
        if (!spec.feasible) {
            ++infeasible;
            CHECK(spec.level == 2);
            CHECK(spec.reference_solutions.empty());
        } else {
            CHECK(spec.reference_solutions.size() == 2);
        }
    }
    CHECK(counts == std::array<int, 6>{100, 200, 200, 150, 100, 50});
    CHECK(infeasible == 9);
    int refs = 0;
    for (const auto& spec : s) refs += static_cast<int>(spec.reference_solutions.size());
    CHECK(refs == 1582);  // (800 - 9) * 2
}

TEST_CASE("ids are level-prefixed and sequential") {
    const auto& s = suite();
    std::map<int, int> next;
    for (const auto& spec : s) {
        char expected[16];
        std::snprintf(expected, sizeof(expected), "L%d-%03d", spec.level,
                      ++next[spec.level]);
        CHECK(spec.id == expected);
    }
}

TEST_CASE("generation is deterministic and seed-sensitive") {
    const std::string base = suite_fingerprint(suite());
    const std::string again = suite_fingerprint(generate_instructions());
    CHECK(base == again);

    SuiteConfig other;
    other.seed = 43;
    other.level_counts = {10, 10, 10, 10, 10, 10};
    const auto small_a = generate_instructions(other);
    const auto small_b = generate_instructions(other);
    CHECK(suite_fingerprint(small_a) == suite_fingerprint(small_b));
}

TEST_CASE("size buckets cover every level with at least 15 instructions") {
    std::map<std::pair<int, std::string>, int> cells;
    for (const auto& spec : suite())
        for (const auto& size : spec.graph_sizes) ++cells[{spec.level, size}];
    for (int level = 0; level < 6; ++level)
        for (const char* size : {"small", "medium", "large"}) {
            CAPTURE(level);
            CAPTURE(size);
            CHECK(cells[{level, size}] >= 15);
        }
}

TEST_CASE("sampled references validate against their own constraints") {
    // The full 800-spec sweep runs in the acceptance gate; here every 13th.
    const auto& s = suite();
    for (std::size_t i = 0; i < s.size(); i += 13) {
        const InstructionSpec& spec = s[i];
        if (!spec.feasible) continue;
        const ConstraintSet set = spec.constraint_set();
        REQUIRE(set.feasible);
        for (const std::string& text : spec.reference_solutions) {
            const ParseResult parsed = parse_document(text);
            CAPTURE(spec.id);
            REQUIRE(parsed.ok());
            CHECK(validate(*parsed.doc, set).empty());
            CHECK(serialize_document(*parsed.doc) == text);
        }
    }
}

TEST_CASE("level-4 specs carry domains, level-5 specs carry base graphs") {
    for (const auto& spec : suite()) {
        if (spec.level == 4) {
            REQUIRE(spec.domain.has_value());
        } else if (spec.level == 5) {
            REQUIRE(spec.base_graph.has_value());
            CHECK(parse_document(*spec.base_graph).ok());
        } else {
            CHECK(!spec.domain.has_value());
            CHECK(!spec.base_graph.has_value());
        }
        CHECK(!spec.instruction.empty());
        CHECK(!spec.explicit_constraints.empty());
    }
}

TEST_CASE("template keys partition the suite into the registered families") {
    std::set<std::string> keys;
    for (const auto& spec : suite()) keys.insert(template_key(spec));
    CHECK(keys.size() == 61);
    // Registry family counts per level: 6/3/23/15/8/6.
    CHECK(registry_family_ids().size() == 61);
    // Key format: "L{level}|" + sorted unique property names.
    const InstructionSpec& first = suite().front();
    const std::string key = template_key(first);
    CHECK(key.rfind("L0|", 0) == 0);
}

TEST_CASE("infeasible designs reuse existing constraint shapes") {
    for (const auto& spec : suite()) {
        if (spec.feasible) continue;
        const ConstraintSet set = spec.constraint_set();
        CHECK(!set.feasible);
        CHECK(!set.infeasibility_reason.empty());
    }
}

TEST_CASE("reference pairs classify as distinct, exact, or isomorphic") {
    RngStream rng(1, "cls");
    const GraphDoc tri = doc_from_graph(
        Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), "r1");
    GraphDoc tri_renamed = tri;
    tri_renamed.name = "r2";
    CHECK(classify_pair(serialize_document(tri), serialize_document(tri_renamed)) ==
          DedupClass::exact_dup);

    // Same structure, different node labels: isomorphic but not textual.
    GraphDoc relabeled;
    relabeled.name = "r3";
    relabeled.declared_nodes = 3;
    relabeled.nodes = {"5", "6", "7"};
    relabeled.edges = {{"5", "6"}, {"6", "7"}, {"5", "7"}};
    CHECK(classify_pair(serialize_document(tri), serialize_document(relabeled)) ==
          DedupClass::iso_only);

    const GraphDoc path = doc_from_graph(Graph::from_edges(3, {{0, 1}, {1, 2}}), "r4");
    CHECK(classify_pair(serialize_document(tri), serialize_document(path)) ==
          DedupClass::distinct);

    // Mixed directedness is distinct by definition.
    GraphDoc directed = tri;
    directed.name = "r5";
    directed.directed = true;
    CHECK(classify_pair(serialize_document(tri), serialize_document(directed)) ==
          DedupClass::distinct);

    CHECK_THROWS_AS(classify_pair("garbage", serialize_document(tri)), std::exception);
}

TEST_CASE("suite reference pairs are never exact duplicates") {
    for (std::size_t i = 0; i < suite().size(); i += 13) {
        const InstructionSpec& spec = suite()[i];
        if (spec.reference_solutions.size() != 2) continue;
        CAPTURE(spec.id);
        CHECK(classify_pair(spec.reference_solutions[0], spec.reference_solutions[1]) !=
              DedupClass::exact_dup);
    }
}

TEST_CASE("constraint-directed synthesis satisfies the requested set") {
    auto make = [](const std::vector<std::string>& texts, std::uint64_t seed) {
        ConstraintSet set = check_feasibility(infer_implicit(make_constraint_set(texts)));
        REQUIRE(set.feasible);
        const GraphDoc doc = synthesize_reference(set, 1, seed);
        CHECK(validate(doc, set).empty());
        return doc;
    };
    make({"graph_type=tree", "num_nodes=9"}, 7);
    make({"graph_type=cycle", "num_nodes=6"}, 8);
    make({"graph_type=star", "num_nodes=7"}, 9);
    make({"graph_type=complete", "num_nodes=5"}, 10);
    make({"graph_type=regular", "degree=4", "num_nodes=9"}, 11);
    make({"graph_type=bipartite", "partition_a=3", "partition_b=4"}, 12);
    make({"graph_type=grid", "rows=3", "cols=4"}, 13);
    make({"num_nodes=10", "num_edges=14", "connected=true"}, 14);

    // Determinism: same seed, same bytes.
    ConstraintSet set = check_feasibility(
        infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=9"})));
    CHECK(serialize_document(synthesize_reference(set, 1, 7)) ==
          serialize_document(synthesize_reference(set, 1, 7)));

    // Infeasible sets refuse.
    ConstraintSet bad = check_feasibility(
        infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=5",
                                            "num_edges=5"})));
    CHECK_THROWS_AS(synthesize_reference(bad, 1, 1), std::exception);
}

TEST_CASE("regular completion adds the minimum edges or reports impossibility") {
    // Empty 4-node base, target degree 3: the only completion is K4.
    const auto k4 = make_regular_completion(Graph::from_edges(4, {}), 3);
    REQUIRE(k4.has_value());
    CHECK(k4->num_edges() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4->degree(v) == 3);

    // Odd degree sum: impossible.
    CHECK(!make_regular_completion(Graph::from_edges(5, {}), 3).has_value());

    // Alternative completion differs from the first when one exists.
    const Graph base = Graph::from_edges(6, {});
    const auto first = make_regular_completion(base, 2);
    REQUIRE(first.has_value());
    const auto second = alternative_regular_completion(base, 2, *first);
    if (second.has_value()) {
        bool differs = false;
        for (const auto& [u, v] : second->edges())
            if (!first->has_edge(u, v)) differs = true;
        CHECK(differs);
        for (int v = 0; v < 6; ++v) CHECK(second->degree(v) == 2);
    }
}

TEST_CASE("document edits preserve untouched content verbatim") {
    GraphDoc base;
    base.name = "edit-base";
    base.declared_nodes = 4;
    base.nodes = {"0", "1", "2", "3"};
    base.edges = {{"0", "1"}, {"1", "2"}};
    base.node_attrs["0"]["label"] = std::string("root");
    base.graph_attrs["k"] = std::int64_t{2};

    SUBCASE("add edge") {
        const GraphDoc out = doc_add_edge(base, "2", "3");
        CHECK(out.edges.size() == 3);
        CHECK(attr_equal(*out.node_attr("0", "label"), AttrValue{std::string("root")}));
        CHECK(out.declared_nodes == 4);
        CHECK_THROWS_AS(doc_add_edge(base, "0", "1"), std::invalid_argument);  // present
        CHECK_THROWS_AS(doc_add_edge(base, "0", "9"), std::invalid_argument);  // missing
    }
    SUBCASE("remove edge") {
        const GraphDoc out = doc_remove_edge(base, "1", "0");  // orientation-insensitive
        CHECK(out.edges.size() == 1);
        CHECK_THROWS_AS(doc_remove_edge(base, "0", "3"), std::invalid_argument);
    }
    SUBCASE("add node") {
        const GraphDoc out = doc_add_node(base, "4", {"0", "2"});
        CHECK(out.nodes.size() == 5);
        CHECK(out.declared_nodes == 5);
        CHECK(out.edges.size() == 4);
        CHECK_THROWS_AS(doc_add_node(base, "0", {}), std::invalid_argument);
    }
    SUBCASE("remove node drops incident edges") {
        const GraphDoc out = doc_remove_node(base, "1");
        CHECK(out.nodes.size() == 3);
        CHECK(out.declared_nodes == 3);
        CHECK(out.edges.empty());
        CHECK_THROWS_AS(doc_remove_node(base, "9"), std::invalid_argument);
    }
}

TEST_CASE("level-5 instructions name edits from the published vocabulary") {
    const std::set<std::string> vocabulary{"add_edge",    "remove_edge", "add_node",
                                           "remove_node", "make_regular", "form_cycle"};
    bool any = false;
    for (const auto& spec : suite()) {
        if (spec.level != 5) continue;
        bool mentions = false;
        for (const auto& text : spec.explicit_constraints)
            for (const auto& verb : vocabulary)
                if (text.find(verb) != std::string::npos) mentions = true;
        if (mentions) any = true;
    }
    CHECK(any);
}
