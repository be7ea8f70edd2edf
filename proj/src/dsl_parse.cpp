// Tokenizer and recursive-descent parser for the graph DSL, block extraction
// from free-form LLM responses, structural lint, and document equality.
#include "graphbench/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace graphbench {

namespace {

enum class Tok {
    ident, integer, real, string, lbracket, rbracket, lbrace, rbrace,
    lparen, rparen, comma, semi, dot, equals, end, bad
};

struct Token {
    Tok kind = Tok::end;
    std::string text;     // lexeme (unescaped for strings)
    std::int64_t ival = 0;
    double rval = 0.0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        if (pos_ >= src_.size()) return {Tok::end, ""};
        char c = src_[pos_];
        switch (c) {
            case '[': ++pos_; return {Tok::lbracket, "["};
            case ']': ++pos_; return {Tok::rbracket, "]"};
            case '{': ++pos_; return {Tok::lbrace, "{"};
            case '}': ++pos_; return {Tok::rbrace, "}"};
            case '(': ++pos_; return {Tok::lparen, "("};
            case ')': ++pos_; return {Tok::rparen, ")"};
            case ',': ++pos_; return {Tok::comma, ","};
            case ';': ++pos_; return {Tok::semi, ";"};
            case '.': ++pos_; return {Tok::dot, "."};
            case '=': ++pos_; return {Tok::equals, "="};
            case '\'': return lex_string();
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
            return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        ++pos_;
        return {Tok::bad, std::string(1, c)};
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    Token lex_string() {
        ++pos_;  // opening quote
        std::string out;
        while (pos_ < src_.size() && src_[pos_] != '\'') {
            char c = src_[pos_++];
            if (c == '\\' && pos_ < src_.size()) {
                char e = src_[pos_++];
                switch (e) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    default: out.push_back(e); break;  // covers \' and backslash
                }
            } else {
                out.push_back(c);
            }
        }
        if (pos_ >= src_.size()) return {Tok::bad, "unterminated string"};
        ++pos_;  // closing quote
        Token t{Tok::string, out};
        return t;
    }

    Token lex_number() {
        std::size_t start = pos_;
        if (src_[pos_] == '-' || src_[pos_] == '+') ++pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            return {Tok::bad, src_.substr(start, pos_ - start + 1)};
        }
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        bool is_real = false;
        // Consume '.' only when a digit follows: keeps node-attr refs like
        // `0.block` lexing as INT DOT IDENT.
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            is_real = true;
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                is_real = true;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark;  // not an exponent; leave for the next token
            }
        }
        std::string text = src_.substr(start, pos_ - start);
        Token t;
        t.text = text;
        if (is_real) {
            t.kind = Tok::real;
            t.rval = std::stod(text);
        } else {
            t.kind = Tok::integer;
            try {
                t.ival = std::stoll(text);
            } catch (...) {
                t.kind = Tok::real;  // out of 64-bit range
                t.rval = std::stod(text);
            }
        }
        return t;
    }

    Token lex_ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return {Tok::ident, src_.substr(start, pos_ - start)};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) { advance(); }

    ParseResult run() {
        GraphDoc doc;
        if (!expect_ident("Graph")) return fail(ParseFailureKind::syntax_error, "expected 'Graph'");
        if (!expect(Tok::lbracket)) return fail(ParseFailureKind::syntax_error, "expected '[' after Graph");
        if (!parse_header(doc)) return error_;
        if (!expect(Tok::lbrace)) return fail(ParseFailureKind::syntax_error, "expected '{'");
        while (cur_.kind != Tok::rbrace && cur_.kind != Tok::end) {
            if (!parse_statement(doc)) return error_;
        }
        if (!expect(Tok::rbrace)) return fail(ParseFailureKind::syntax_error, "expected '}'");
        return finalize(doc);
    }

private:
    void advance() { cur_ = lex_.next(); }

    bool expect(Tok k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    bool expect_ident(const std::string& word) {
        if (cur_.kind != Tok::ident || cur_.text != word) return false;
        advance();
        return true;
    }

    ParseResult fail(ParseFailureKind kind, const std::string& msg) {
        error_.doc.reset();
        error_.failure = kind;
        error_.message = msg + (cur_.text.empty() ? "" : " (near '" + cur_.text + "')");
        return error_;
    }

    bool fail_b(ParseFailureKind kind, const std::string& msg) {
        fail(kind, msg);
        return false;
    }

    bool parse_value(AttrValue& out) {
        switch (cur_.kind) {
            case Tok::string: out = cur_.text; advance(); return true;
            case Tok::integer: out = cur_.ival; advance(); return true;
            case Tok::real: out = cur_.rval; advance(); return true;
            case Tok::ident:
                if (cur_.text == "true") { out = true; advance(); return true; }
                if (cur_.text == "false") { out = false; advance(); return true; }
                out = cur_.text;  // bare word, tolerated as a string
                advance();
                return true;
            default:
                return fail_b(ParseFailureKind::syntax_error, "expected a value");
        }
    }

    bool parse_header(GraphDoc& doc) {
        while (cur_.kind != Tok::rbracket) {
            if (cur_.kind != Tok::ident)
                return fail_b(ParseFailureKind::syntax_error, "expected header attribute name");
            std::string key = cur_.text;
            advance();
            if (!expect(Tok::equals))
                return fail_b(ParseFailureKind::syntax_error, "expected '=' in header");
            AttrValue v;
            if (!parse_value(v)) return false;
            if (key == "name") {
                doc.name = std::holds_alternative<std::string>(v) ? std::get<std::string>(v)
                                                                  : attr_to_text(v);
            } else if (key == "nodes") {
                if (std::holds_alternative<std::int64_t>(v))
                    doc.declared_nodes = static_cast<int>(std::get<std::int64_t>(v));
                else
                    return fail_b(ParseFailureKind::syntax_error, "nodes= expects an integer");
            } else if (key == "directed") {
                if (std::holds_alternative<bool>(v)) doc.directed = std::get<bool>(v);
            } else {
                doc.header_attrs[key] = v;
            }
            if (cur_.kind == Tok::comma) advance();
        }
        advance();  // ']'
        return true;
    }

    // One node reference: bare integer, bare identifier, or quoted string.
    bool parse_node_ref(std::string& out) {
        if (cur_.kind == Tok::integer || cur_.kind == Tok::ident || cur_.kind == Tok::string) {
            out = cur_.text;
            advance();
            return true;
        }
        return fail_b(ParseFailureKind::syntax_error, "expected a node id");
    }

    bool parse_edge_tuple(Edge& out) {
        if (!expect(Tok::lparen))
            return fail_b(ParseFailureKind::syntax_error, "expected '(' in edge tuple");
        if (!parse_node_ref(out.first)) return false;
        if (!expect(Tok::comma))
            return fail_b(ParseFailureKind::syntax_error, "expected ',' in edge tuple");
        if (!parse_node_ref(out.second)) return false;
        if (!expect(Tok::rparen))
            return fail_b(ParseFailureKind::syntax_error, "expected ')' in edge tuple");
        return true;
    }

    bool parse_statement(GraphDoc& doc) {
        if (cur_.kind == Tok::lparen) return parse_edge_attr(doc);
        if (cur_.kind == Tok::integer || cur_.kind == Tok::string)
            return parse_node_attr(doc);
        if (cur_.kind != Tok::ident)
            return fail_b(ParseFailureKind::syntax_error, "expected a statement");

        std::string head = cur_.text;
        advance();
        if (cur_.kind == Tok::dot) {  // ident-named node with an attribute
            advance();
            return parse_node_attr_tail(doc, head);
        }
        if (!expect(Tok::equals))
            return fail_b(ParseFailureKind::syntax_error, "expected '=' after '" + head + "'");

        if (head == "node_list") return parse_node_list(doc);
        if (head == "edge_list") return parse_edge_list(doc);
        if (head == "partition") return parse_partition(doc);

        AttrValue v;
        if (!parse_value(v)) return false;
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after '" + head + "'");
        if (head == "directed") {
            if (std::holds_alternative<bool>(v)) doc.directed = std::get<bool>(v);
            else return fail_b(ParseFailureKind::syntax_error, "directed expects true/false");
        } else {
            doc.graph_attrs[head] = v;
        }
        return true;
    }

    bool parse_node_list(GraphDoc& doc) {
        if (!expect(Tok::lbracket))
            return fail_b(ParseFailureKind::syntax_error, "expected '[' after node_list =");
        while (cur_.kind != Tok::rbracket) {
            std::string id;
            if (!parse_node_ref(id)) return false;
            doc.nodes.push_back(id);
            if (cur_.kind == Tok::comma) advance();
        }
        advance();  // ']'
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after node_list");
        return true;
    }

    bool parse_edge_list(GraphDoc& doc) {
        if (!expect(Tok::lbracket))
            return fail_b(ParseFailureKind::syntax_error, "expected '[' after edge_list =");
        while (cur_.kind != Tok::rbracket) {
            Edge e;
            if (!parse_edge_tuple(e)) return false;
            doc.edges.push_back(e);
            if (cur_.kind == Tok::comma) advance();
        }
        advance();  // ']'
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after edge_list");
        return true;
    }

    bool parse_partition(GraphDoc& doc) {
        if (!expect(Tok::lbracket))
            return fail_b(ParseFailureKind::syntax_error, "expected '[' after partition =");
        std::vector<std::vector<std::string>> parts;
        while (cur_.kind != Tok::rbracket) {
            if (!expect(Tok::lbrace))
                return fail_b(ParseFailureKind::syntax_error, "expected '{' in partition");
            std::vector<std::string> part;
            while (cur_.kind != Tok::rbrace) {
                std::string id;
                if (!parse_node_ref(id)) return false;
                part.push_back(id);
                if (cur_.kind == Tok::comma) advance();
            }
            advance();  // '}'
            parts.push_back(std::move(part));
            if (cur_.kind == Tok::comma) advance();
        }
        advance();  // ']'
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after partition");
        doc.partition = std::move(parts);
        return true;
    }

    bool parse_node_attr(GraphDoc& doc) {
        std::string node = cur_.text;
        advance();
        if (!expect(Tok::dot))
            return fail_b(ParseFailureKind::syntax_error, "expected '.' in node attribute");
        return parse_node_attr_tail(doc, node);
    }

    bool parse_node_attr_tail(GraphDoc& doc, const std::string& node) {
        if (cur_.kind != Tok::ident)
            return fail_b(ParseFailureKind::syntax_error, "expected attribute name after '.'");
        std::string key = cur_.text;
        advance();
        if (!expect(Tok::equals))
            return fail_b(ParseFailureKind::syntax_error, "expected '=' in node attribute");
        AttrValue v;
        if (!parse_value(v)) return false;
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after node attribute");
        doc.node_attrs[node][key] = v;
        return true;
    }

    bool parse_edge_attr(GraphDoc& doc) {
        Edge e;
        if (!parse_edge_tuple(e)) return false;
        if (!expect(Tok::dot))
            return fail_b(ParseFailureKind::syntax_error, "expected '.' after edge tuple");
        if (cur_.kind != Tok::ident)
            return fail_b(ParseFailureKind::syntax_error, "expected attribute name after '.'");
        std::string key = cur_.text;
        advance();
        if (!expect(Tok::equals))
            return fail_b(ParseFailureKind::syntax_error, "expected '=' in edge attribute");
        AttrValue v;
        if (!parse_value(v)) return false;
        if (!expect(Tok::semi))
            return fail_b(ParseFailureKind::syntax_error, "expected ';' after edge attribute");
        doc.edge_attrs.push_back({e, key, v});
        return true;
    }

    ParseResult finalize(GraphDoc doc) {
        std::set<std::string> seen;
        for (const auto& id : doc.nodes) {
            if (!seen.insert(id).second) {
                return fail(ParseFailureKind::duplicate_node,
                            "node '" + id + "' declared twice");
            }
        }
        for (auto& e : doc.edges) {
            if (!seen.count(e.first) || !seen.count(e.second)) {
                return fail(ParseFailureKind::dangling_edge,
                            "edge (" + e.first + "," + e.second + ") references an undeclared node");
            }
            e = canonical_edge(e.first, e.second, doc.directed);
        }
        for (auto& ea : doc.edge_attrs)
            ea.edge = canonical_edge(ea.edge.first, ea.edge.second, doc.directed);
        ParseResult r;
        r.doc = std::move(doc);
        r.message.clear();
        return r;
    }

    Lexer lex_;
    Token cur_;
    ParseResult error_;
};

// Scan one candidate block starting at `pos` (which points at "Graph").
// Returns one-past-the-end offset of a complete block, or npos.
std::size_t scan_block(const std::string& text, std::size_t pos) {
    std::size_t i = pos + 5;  // past "Graph"
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') return std::string::npos;
    // Match the header brackets, respecting quoted strings.
    int depth = 0;
    bool in_str = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (in_str) {
            if (c == '\\') ++i;
            else if (c == '\'') in_str = false;
            continue;
        }
        if (c == '\'') in_str = true;
        else if (c == '[') ++depth;
        else if (c == ']' && --depth == 0) { ++i; break; }
    }
    if (depth != 0) return std::string::npos;
    skip_ws();
    if (i >= text.size() || text[i] != '{') return std::string::npos;
    depth = 0;
    in_str = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (in_str) {
            if (c == '\\') ++i;
            else if (c == '\'') in_str = false;
            continue;
        }
        if (c == '\'') in_str = true;
        else if (c == '{') ++depth;
        else if (c == '}' && --depth == 0) return i + 1;
    }
    return std::string::npos;
}

}  // namespace

std::string to_string(ParseFailureKind k) {
    switch (k) {
        case ParseFailureKind::no_block_found: return "no_block_found";
        case ParseFailureKind::syntax_error: return "syntax_error";
        case ParseFailureKind::duplicate_node: return "duplicate_node";
        case ParseFailureKind::dangling_edge: return "dangling_edge";
    }
    return "unknown";
}

bool node_id_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && s.size() <= 18 &&
               std::all_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    bool na = numeric(a), nb = numeric(b);
    if (na && nb) {
        long long va = std::stoll(a), vb = std::stoll(b);
        if (va != vb) return va < vb;
        return a < b;
    }
    if (na != nb) return na;  // numeric ids sort before symbolic ids
    return a < b;
}

Edge canonical_edge(const std::string& u, const std::string& v, bool directed) {
    if (!directed && node_id_less(v, u)) return {v, u};
    return {u, v};
}

bool GraphDoc::has_node(const std::string& id) const {
    return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

std::optional<AttrValue> GraphDoc::node_attr(const std::string& id,
                                             const std::string& key) const {
    auto it = node_attrs.find(id);
    if (it == node_attrs.end()) return std::nullopt;
    auto jt = it->second.find(key);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

std::optional<AttrValue> GraphDoc::graph_attr(const std::string& key) const {
    auto it = graph_attrs.find(key);
    if (it == graph_attrs.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> extract_graph_block(const std::string& text) {
    std::optional<std::string> best;
    std::size_t pos = 0;
    while ((pos = text.find("Graph", pos)) != std::string::npos) {
        bool boundary = pos == 0 || !(std::isalnum(static_cast<unsigned char>(text[pos - 1])) ||
                                      text[pos - 1] == '_');
        if (boundary) {
            std::size_t end = scan_block(text, pos);
            if (end != std::string::npos) {
                best = text.substr(pos, end - pos);
                pos = end;
                continue;
            }
        }
        pos += 5;
    }
    return best;
}

ParseResult parse_document(const std::string& text) { return Parser(text).run(); }

ParseResult parse_response(const std::string& text) {
    auto block = extract_graph_block(text);
    if (!block) {
        ParseResult r;
        r.failure = ParseFailureKind::no_block_found;
        r.message = "response contains no graph block";
        return r;
    }
    return parse_document(*block);
}

StructuralLint lint_structure(const GraphDoc& doc) {
    StructuralLint lint;
    lint.header_mismatch =
        doc.declared_nodes && *doc.declared_nodes != static_cast<int>(doc.nodes.size());

    std::set<std::string> touched;
    std::map<Edge, int> edge_count;
    for (const auto& e : doc.edges) {
        touched.insert(e.first);
        touched.insert(e.second);
        ++edge_count[e];
    }
    for (const auto& [e, count] : edge_count)
        if (count > 1) lint.duplicate_edges += count - 1;
    for (const auto& id : doc.nodes)
        if (!touched.count(id)) ++lint.isolated_declared_nodes;
    return lint;
}

bool attr_equal(const AttrValue& a, const AttrValue& b) {
    if (a.index() == b.index()) return a == b;
    // Integer / real cross-comparison is by numeric value.
    auto as_num = [](const AttrValue& v, double& out) {
        if (std::holds_alternative<std::int64_t>(v)) {
            out = static_cast<double>(std::get<std::int64_t>(v));
            return true;
        }
        if (std::holds_alternative<double>(v)) {
            out = std::get<double>(v);
            return true;
        }
        return false;
    };
    double x, y;
    return as_num(a, x) && as_num(b, y) && x == y;
}

bool graph_equal(const GraphDoc& a, const GraphDoc& b, bool compare_names) {
    if (compare_names && a.name != b.name) return false;
    if (a.directed != b.directed) return false;

    std::set<std::string> na(a.nodes.begin(), a.nodes.end());
    std::set<std::string> nb(b.nodes.begin(), b.nodes.end());
    if (na != nb) return false;

    std::multiset<Edge> ea, eb;
    for (const auto& e : a.edges) ea.insert(canonical_edge(e.first, e.second, a.directed));
    for (const auto& e : b.edges) eb.insert(canonical_edge(e.first, e.second, b.directed));
    if (ea != eb) return false;

    auto attrs_equal = [](const std::map<std::string, AttrValue>& x,
                          const std::map<std::string, AttrValue>& y) {
        if (x.size() != y.size()) return false;
        for (const auto& [k, v] : x) {
            auto it = y.find(k);
            if (it == y.end() || !attr_equal(v, it->second)) return false;
        }
        return true;
    };
    if (!attrs_equal(a.graph_attrs, b.graph_attrs)) return false;
    if (!attrs_equal(a.header_attrs, b.header_attrs)) return false;
    if (a.node_attrs.size() != b.node_attrs.size()) return false;
    for (const auto& [node, attrs] : a.node_attrs) {
        auto it = b.node_attrs.find(node);
        if (it == b.node_attrs.end() || !attrs_equal(attrs, it->second)) return false;
    }

    auto norm_partition = [](const GraphDoc& d) {
        std::vector<std::vector<std::string>> parts;
        if (d.partition) {
            parts = *d.partition;
            for (auto& p : parts) std::sort(p.begin(), p.end(), node_id_less);
            std::sort(parts.begin(), parts.end());
        }
        return parts;
    };
    if (a.partition.has_value() != b.partition.has_value()) return false;
    if (a.partition && norm_partition(a) != norm_partition(b)) return false;

    auto norm_edge_attrs = [](const GraphDoc& d) {
        std::vector<std::pair<Edge, std::pair<std::string, std::string>>> v;
        for (const auto& ea_ : d.edge_attrs)
            v.push_back({canonical_edge(ea_.edge.first, ea_.edge.second, d.directed),
                         {ea_.name, attr_to_text(ea_.value)}});
        std::sort(v.begin(), v.end());
        return v;
    };
    return norm_edge_attrs(a) == norm_edge_attrs(b);
}

}  // namespace graphbench
