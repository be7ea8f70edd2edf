// Graph DSL document model, parser, canonical serializer, and structural lint.
//
// The text format is a single block of the shape
//
//   Graph[name='L1-001-ref1', nodes=5] {
//       node_list = ['0', '1', '2', '3', '4'];
//       edge_list = [('0','3'), ('0','2'), ('1','2'), ('1','4')];
//       0.label='Alice';
//       k = 2;
//       partition = [{0, 1}, {2, 3, 4}];
//   }
//
// Parsing is total: any byte string maps to a document or a typed failure,
// never an exception. Serialization is canonical (stable statement order and
// spacing) so reserialized text is byte-reproducible.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace graphbench {

using AttrValue = std::variant<std::int64_t, double, std::string, bool>;

std::string attr_to_text(const AttrValue& v);  // DSL rendering ('quoted' strings)
bool attr_equal(const AttrValue& a, const AttrValue& b);

using Edge = std::pair<std::string, std::string>;

struct EdgeAttr {
    Edge edge;
    std::string name;
    AttrValue value;
};

struct GraphDoc {
    std::string name;
    std::optional<int> declared_nodes;  // header nodes=N; absent headers stay absent
    bool directed = false;
    std::vector<std::string> nodes;                                // stored order
    std::vector<Edge> edges;                                       // stored order, endpoints canonical
    std::map<std::string, std::map<std::string, AttrValue>> node_attrs;
    std::map<std::string, AttrValue> graph_attrs;                  // excludes 'directed'
    std::map<std::string, AttrValue> header_attrs;                 // extras beyond name/nodes
    std::vector<EdgeAttr> edge_attrs;                              // preserved, ignored by metrics
    std::optional<std::vector<std::vector<std::string>>> partition;

    bool has_node(const std::string& id) const;
    std::optional<AttrValue> node_attr(const std::string& id, const std::string& key) const;
    std::optional<AttrValue> graph_attr(const std::string& key) const;
};

enum class ParseFailureKind { no_block_found, syntax_error, duplicate_node, dangling_edge };

std::string to_string(ParseFailureKind k);

struct ParseResult {
    std::optional<GraphDoc> doc;
    ParseFailureKind failure = ParseFailureKind::no_block_found;
    std::string message;

    bool ok() const { return doc.has_value(); }
};

// Substring of the LAST well-bracketed `Graph[...] { ... }` block, if any.
std::optional<std::string> extract_graph_block(const std::string& text);

// Parse a bare DSL document (the text must itself be a block).
ParseResult parse_document(const std::string& text);

// extract_graph_block + parse_document; absence maps to no_block_found.
ParseResult parse_response(const std::string& text);

// Canonical serialization (see file header).
std::string serialize_document(const GraphDoc& doc);

// Serialization with the name field replaced by a fixed placeholder; used by
// reference-pair dedup ("identical after stripping the name").
std::string serialize_name_stripped(const GraphDoc& doc);

struct StructuralLint {
    bool header_mismatch = false;       // declared node count != |node_list|
    int isolated_declared_nodes = 0;    // informational only
    int duplicate_edges = 0;

    // All-clear = no header mismatch and no duplicate edges; isolated nodes
    // are legal (L0 references may be edgeless).
    bool clear() const { return !header_mismatch && duplicate_edges == 0; }
};

StructuralLint lint_structure(const GraphDoc& doc);

// Equality on graph content: node set, canonical edge set, directedness, and
// all attributes (names included only when compare_names is set). Stored-order
// differences do not matter.
bool graph_equal(const GraphDoc& a, const GraphDoc& b, bool compare_names = false);

// Numeric-aware comparison for node ids: all-digit ids order numerically,
// everything else lexicographically ('2' < '10', 'a' < 'b').
bool node_id_less(const std::string& a, const std::string& b);

// Endpoint-canonical form of an undirected edge under node_id_less.
Edge canonical_edge(const std::string& u, const std::string& v, bool directed);

}  // namespace graphbench
