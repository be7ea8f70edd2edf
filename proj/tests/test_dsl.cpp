// Parser/serializer tests: golden canonical output, round-trip stability,
// typed parse failures, block extraction, lint verdicts, and parser totality
// under fuzzed input.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "graphbench/dsl.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/rng.hpp"

using namespace graphbench;

namespace {

GraphDoc small_doc() {
    GraphDoc doc;
    doc.name = "L1-001-ref1";
    doc.declared_nodes = 5;
    doc.nodes = {"0", "1", "2", "3", "4"};
    doc.edges = {{"0", "3"}, {"0", "2"}, {"1", "2"}, {"1", "4"}};
    doc.node_attrs["0"]["label"] = std::string("Alice");
    doc.graph_attrs["k"] = std::int64_t{2};
    doc.partition = {{std::vector<std::string>{"0", "1"}},
                     {std::vector<std::string>{"2", "3", "4"}}};
    return doc;
}

}  // namespace

TEST_CASE("canonical serialization golden text") {
    const std::string text = serialize_document(small_doc());
    const std::string expected =
        "Graph[name='L1-001-ref1', nodes=5] {\n"
        "    node_list = ['0', '1', '2', '3', '4'];\n"
        "    edge_list = [('0','3'), ('0','2'), ('1','2'), ('1','4')];\n"
        "    0.label='Alice';\n"
        "    k = 2;\n"
        "    partition = [{0, 1}, {2, 3, 4}];\n"
        "}";
    CHECK(text == expected);
}

TEST_CASE("round-trip: parse(serialize(doc)) preserves content and bytes") {
    const GraphDoc doc = small_doc();
    const std::string text = serialize_document(doc);
    const ParseResult parsed = parse_document(text);
    REQUIRE(parsed.ok());
    CHECK(graph_equal(doc, *parsed.doc, /*compare_names=*/true));
    CHECK(serialize_document(*parsed.doc) == text);
}

TEST_CASE("stored order is preserved but does not affect content equality") {
    GraphDoc a = small_doc();
    GraphDoc b = small_doc();
    b.nodes = {"4", "2", "0", "3", "1"};
    b.edges = {{"1", "4"}, {"0", "2"}, {"1", "2"}, {"0", "3"}};
    CHECK(graph_equal(a, b));
    // Different stored orders serialize differently (statement order and
    // spacing are canonical, element order is the author's), but each text
    // round-trips byte-stably.
    const std::string tb = serialize_document(b);
    const ParseResult pb = parse_document(tb);
    REQUIRE(pb.ok());
    CHECK(serialize_document(*pb.doc) == tb);
    CHECK(graph_equal(a, *pb.doc));
}

TEST_CASE("directed flag serializes as a graph attribute and round-trips") {
    GraphDoc doc;
    doc.name = "d";
    doc.declared_nodes = 3;
    doc.directed = true;
    doc.nodes = {"0", "1", "2"};
    doc.edges = {{"0", "1"}, {"1", "2"}};
    const std::string text = serialize_document(doc);
    CHECK(text.find("directed = true;") != std::string::npos);
    const ParseResult parsed = parse_document(text);
    REQUIRE(parsed.ok());
    CHECK(parsed.doc->directed);
    CHECK(serialize_document(*parsed.doc) == text);
}

TEST_CASE("attribute value types round-trip") {
    GraphDoc doc;
    doc.name = "attrs";
    doc.declared_nodes = 2;
    doc.nodes = {"0", "1"};
    doc.edges = {{"0", "1"}};
    doc.node_attrs["0"]["weight"] = 2.5;
    doc.node_attrs["0"]["count"] = std::int64_t{7};
    doc.node_attrs["1"]["active"] = true;
    doc.node_attrs["1"]["tag"] = std::string("hub node");
    doc.graph_attrs["p"] = 0.25;
    const std::string text = serialize_document(doc);
    const ParseResult parsed = parse_document(text);
    REQUIRE(parsed.ok());
    CHECK(attr_equal(*parsed.doc->node_attr("0", "weight"), AttrValue{2.5}));
    CHECK(attr_equal(*parsed.doc->node_attr("0", "count"), AttrValue{std::int64_t{7}}));
    CHECK(attr_equal(*parsed.doc->node_attr("1", "active"), AttrValue{true}));
    CHECK(attr_equal(*parsed.doc->node_attr("1", "tag"), AttrValue{std::string("hub node")}));
    CHECK(attr_equal(*parsed.doc->graph_attr("p"), AttrValue{0.25}));
    CHECK(serialize_document(*parsed.doc) == text);
}

TEST_CASE("node references quote non-numeric ids") {
    GraphDoc doc;
    doc.name = "named";
    doc.declared_nodes = 3;
    doc.nodes = {"alpha", "beta", "7"};
    doc.edges = {{"alpha", "beta"}, {"7", "alpha"}};
    doc.node_attrs["alpha"]["deg"] = std::int64_t{2};
    const std::string text = serialize_document(doc);
    CHECK(text.find("'alpha'") != std::string::npos);
    const ParseResult parsed = parse_document(text);
    REQUIRE(parsed.ok());
    CHECK(graph_equal(doc, *parsed.doc));
    CHECK(serialize_document(*parsed.doc) == text);
}

TEST_CASE("parse failures carry typed kinds") {
    SUBCASE("no block at all") {
        const ParseResult r = parse_response("Sure! Here's a description with no graph.");
        CHECK(!r.ok());
        CHECK(r.failure == ParseFailureKind::no_block_found);
    }
    SUBCASE("syntax error inside the block") {
        const ParseResult r = parse_response(
            "Graph[name='x', nodes=2] {\n    node_list = ['0', '1';\n}");
        CHECK(!r.ok());
        CHECK(r.failure == ParseFailureKind::syntax_error);
    }
    SUBCASE("duplicate node declaration") {
        const ParseResult r = parse_response(
            "Graph[name='x', nodes=2] {\n    node_list = ['0', '0'];\n}");
        CHECK(!r.ok());
        CHECK(r.failure == ParseFailureKind::duplicate_node);
    }
    SUBCASE("edge endpoint not declared") {
        const ParseResult r = parse_response(
            "Graph[name='x', nodes=2] {\n    node_list = ['0', '1'];\n"
            "    edge_list = [('0', '9')];\n}");
        CHECK(!r.ok());
        CHECK(r.failure == ParseFailureKind::dangling_edge);
    }
}

TEST_CASE("extract_graph_block takes the last well-bracketed block") {
    const std::string text =
        "First attempt:\nGraph[name='a', nodes=1] {\n    node_list = ['0'];\n}\n"
        "Wait, I can do better:\nGraph[name='b', nodes=2] {\n"
        "    node_list = ['0', '1'];\n    edge_list = [('0', '1')];\n}\nDone.";
    const auto block = extract_graph_block(text);
    REQUIRE(block.has_value());
    CHECK(block->find("name='b'") != std::string::npos);
    const ParseResult parsed = parse_response(text);
    REQUIRE(parsed.ok());
    CHECK(parsed.doc->name == "b");
    CHECK(parsed.doc->nodes.size() == 2);
}

TEST_CASE("extraction survives surrounding prose and code fences") {
    const std::string text =
        "Here's my answer:\n```\nGraph[name='f', nodes=2] {\n"
        "    node_list = ['0', '1'];\n    edge_list = [('0', '1')];\n}\n```\nHope it helps!";
    const ParseResult parsed = parse_response(text);
    REQUIRE(parsed.ok());
    CHECK(parsed.doc->name == "f");
}

TEST_CASE("structural lint verdicts") {
    SUBCASE("clean document") {
        const StructuralLint lint = lint_structure(small_doc());
        CHECK(!lint.header_mismatch);
        CHECK(lint.duplicate_edges == 0);
        CHECK(lint.clear());
    }
    SUBCASE("header count mismatch") {
        GraphDoc doc = small_doc();
        doc.declared_nodes = 7;
        const StructuralLint lint = lint_structure(doc);
        CHECK(lint.header_mismatch);
        CHECK(!lint.clear());
    }
    SUBCASE("duplicate edges counted, orientation-insensitive") {
        // The parser canonicalizes undirected endpoints, so ('3','0') lands
        // on the already-present ('0','3').
        const ParseResult parsed = parse_document(
            "Graph[name='dup', nodes=2] {\n"
            "    node_list = ['0', '3'];\n"
            "    edge_list = [('0','3'), ('3','0')];\n"
            "}");
        REQUIRE(parsed.ok());
        const StructuralLint lint = lint_structure(*parsed.doc);
        CHECK(lint.duplicate_edges == 1);
        CHECK(!lint.clear());
    }
    SUBCASE("isolated declared nodes are informational only") {
        GraphDoc doc;
        doc.name = "iso";
        doc.declared_nodes = 3;
        doc.nodes = {"0", "1", "2"};
        doc.edges = {{"0", "1"}};
        const StructuralLint lint = lint_structure(doc);
        CHECK(lint.isolated_declared_nodes == 1);
        CHECK(lint.clear());
    }
}

TEST_CASE("name stripping makes reference pairs comparable") {
    GraphDoc a = small_doc();
    GraphDoc b = small_doc();
    b.name = "L1-001-ref2";
    CHECK(serialize_document(a) != serialize_document(b));
    CHECK(serialize_name_stripped(a) == serialize_name_stripped(b));
}

TEST_CASE("node_id_less orders digits numerically and the rest lexicographically") {
    CHECK(node_id_less("2", "10"));
    CHECK(!node_id_less("10", "2"));
    CHECK(node_id_less("a", "b"));
    CHECK(!node_id_less("b", "a"));
    CHECK(node_id_less("0", "0") == false);
}

TEST_CASE("canonical_edge orients undirected endpoints") {
    CHECK(canonical_edge("5", "2", false) == Edge{"2", "5"});
    CHECK(canonical_edge("2", "5", false) == Edge{"2", "5"});
    CHECK(canonical_edge("5", "2", true) == Edge{"5", "2"});
}

TEST_CASE("sampled documents serialize idempotently") {
    RngStream rng(7, "dsl-roundtrip");
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform(8));
        const Graph g = gnp(n, 0.4, rng);
        const GraphDoc doc = doc_from_graph(g, "t" + std::to_string(trial));
        const std::string once = serialize_document(doc);
        const ParseResult parsed = parse_document(once);
        REQUIRE(parsed.ok());
        CHECK(serialize_document(*parsed.doc) == once);
        CHECK(graph_equal(doc, *parsed.doc, true));
    }
}

TEST_CASE("parsing is total over fuzzed byte strings") {
    RngStream rng(11, "dsl-fuzz");
    const std::string alphabet =
        "Graph[]{}()=',;.\n 0123456789abcnodelist_edge\t\"\\";
    for (int trial = 0; trial < 400; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng.uniform(120));
        for (int i = 0; i < len; ++i)
            text.push_back(alphabet[rng.uniform(alphabet.size())]);
        const ParseResult r = parse_response(text);  // must not throw
        if (!r.ok()) CHECK(!to_string(r.failure).empty());
    }
    // Mutations of a valid document must also parse or fail cleanly.
    const std::string base = serialize_document(small_doc());
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = base;
        const int edits = 1 + static_cast<int>(rng.uniform(4));
        for (int e = 0; e < edits; ++e) {
            const std::size_t pos = rng.uniform(text.size());
            text[pos] = alphabet[rng.uniform(alphabet.size())];
        }
        parse_response(text);  // totality: no exception, any verdict
    }
}
