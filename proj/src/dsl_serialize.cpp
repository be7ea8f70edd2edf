// Canonical serializer for graph DSL documents. Layout contract:
// one statement per line, four-space indent, statement order node_list /
// edge_list / node attributes / edge attributes / graph attributes /
// partition; node attributes sort by (node id, attribute name), graph
// attributes by name; undirected edges print with canonical endpoint order.
#include "graphbench/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <sstream>

namespace graphbench {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\'': out += "\\'"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c); break;
        }
    }
    return out;
}

std::string render_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    std::string s(buf, ptr);
    // Keep reals visually distinct from integers.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

bool bare_node_ref(const std::string& id) {
    return !id.empty() && id.size() <= 18 &&
           std::all_of(id.begin(), id.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::string node_ref(const std::string& id) {
    if (bare_node_ref(id)) return id;
    return "'" + escape(id) + "'";
}

std::string edge_tuple(const Edge& e) {
    return "('" + escape(e.first) + "','" + escape(e.second) + "')";
}

void serialize_into(const GraphDoc& doc, const std::string& name, std::ostream& os) {
    os << "Graph[name='" << escape(name) << "', nodes=" << doc.nodes.size();
    for (const auto& [k, v] : doc.header_attrs) os << ", " << k << "=" << attr_to_text(v);
    os << "] {\n";

    os << "    node_list = [";
    for (std::size_t i = 0; i < doc.nodes.size(); ++i) {
        if (i) os << ", ";
        os << "'" << escape(doc.nodes[i]) << "'";
    }
    os << "];\n";

    os << "    edge_list = [";
    for (std::size_t i = 0; i < doc.edges.size(); ++i) {
        if (i) os << ", ";
        os << edge_tuple(canonical_edge(doc.edges[i].first, doc.edges[i].second, doc.directed));
    }
    os << "];\n";

    std::vector<std::pair<std::string, std::pair<std::string, AttrValue>>> nattrs;
    for (const auto& [node, attrs] : doc.node_attrs)
        for (const auto& [key, value] : attrs) nattrs.push_back({node, {key, value}});
    std::sort(nattrs.begin(), nattrs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return node_id_less(a.first, b.first);
        return a.second.first < b.second.first;
    });
    for (const auto& [node, kv] : nattrs)
        os << "    " << node_ref(node) << "." << kv.first << "=" << attr_to_text(kv.second)
           << ";\n";

    for (const auto& ea : doc.edge_attrs)
        os << "    " << edge_tuple(canonical_edge(ea.edge.first, ea.edge.second, doc.directed))
           << "." << ea.name << "=" << attr_to_text(ea.value) << ";\n";

    std::vector<std::pair<std::string, std::string>> gattrs;
    for (const auto& [k, v] : doc.graph_attrs) gattrs.push_back({k, attr_to_text(v)});
    if (doc.directed) gattrs.push_back({"directed", "true"});
    std::sort(gattrs.begin(), gattrs.end());
    for (const auto& [k, v] : gattrs) os << "    " << k << " = " << v << ";\n";

    if (doc.partition) {
        auto parts = *doc.partition;
        for (auto& p : parts) std::sort(p.begin(), p.end(), node_id_less);
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            if (a.empty() || b.empty()) return a.size() < b.size();
            return node_id_less(a.front(), b.front());
        });
        os << "    partition = [";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ", ";
            os << "{";
            for (std::size_t j = 0; j < parts[i].size(); ++j) {
                if (j) os << ", ";
                os << node_ref(parts[i][j]);
            }
            os << "}";
        }
        os << "];\n";
    }

    os << "}";
}

}  // namespace

std::string attr_to_text(const AttrValue& v) {
    if (std::holds_alternative<std::int64_t>(v))
        return std::to_string(std::get<std::int64_t>(v));
    if (std::holds_alternative<double>(v)) return render_double(std::get<double>(v));
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    return "'" + escape(std::get<std::string>(v)) + "'";
}

std::string serialize_document(const GraphDoc& doc) {
    std::ostringstream os;
    serialize_into(doc, doc.name, os);
    return os.str();
}

std::string serialize_name_stripped(const GraphDoc& doc) {
    std::ostringstream os;
    serialize_into(doc, "_", os);
    return os.str();
}

}  // namespace graphbench
