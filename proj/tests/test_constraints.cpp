// Constraint-engine tests: atom parsing, implicit inference, the ordered
// feasibility rules, validation verdicts versus independently computed
// properties, numeric tolerances, and the instruction-match score.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "graphbench/constraints.hpp"
#include "graphbench/pools.hpp"
#include "graphbench/properties.hpp"
#include "graphbench/rng.hpp"

using namespace graphbench;

namespace {

GraphDoc doc_of(int n, const std::vector<std::pair<int, int>>& edges,
                bool directed = false) {
    return doc_from_graph(Graph::from_edges(n, edges, directed), "t");
}

bool satisfies(const GraphDoc& doc, const std::vector<std::string>& texts) {
    ConstraintSet set = make_constraint_set(texts);
    set = check_feasibility(infer_implicit(set));
    return validate(doc, set).empty();
}

const ConstraintAtom* find_atom(const ConstraintSet& set, const std::string& prop,
                                Relation rel) {
    return set.find(prop, rel);
}

}  // namespace

TEST_CASE("atom parsing covers the three relations and value kinds") {
    ConstraintAtom a = parse_constraint("num_nodes=12");
    CHECK(a.property == "num_nodes");
    CHECK(a.relation == Relation::eq);
    CHECK(a.number() == 12.0);

    a = parse_constraint("density<=0.3");
    CHECK(a.relation == Relation::le);
    CHECK(a.number() == doctest::Approx(0.3));

    a = parse_constraint("min_degree>=2");
    CHECK(a.relation == Relation::ge);

    a = parse_constraint("graph_type=tree");
    CHECK(!a.numeric());
    CHECK(a.value_text() == "tree");

    a = parse_constraint("connected=true");
    CHECK(a.value_text() == "true");

    a = parse_constraint("domain=social");
    CHECK(a.property == "domain");

    CHECK(parse_constraint("num_edges >= 4").relation == Relation::ge);  // spaces ok
    CHECK_THROWS_AS(parse_constraint("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_constraint("=5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_constraint("x<5"), std::invalid_argument);  // strict < unsupported
}

TEST_CASE("atom text renders canonically") {
    CHECK(parse_constraint("num_nodes=12").text() == "num_nodes=12");
    CHECK(parse_constraint("density<=0.3").text() == "density<=0.3");
    CHECK(parse_constraint("min_degree >= 2").text() == "min_degree>=2");
}

TEST_CASE("implicit inference derives edge counts from shape constraints") {
    SUBCASE("tree") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=8"}));
        REQUIRE(find_atom(set, "num_edges", Relation::eq) != nullptr);
        CHECK(find_atom(set, "num_edges", Relation::eq)->number() == 7.0);
        CHECK(set.find("acyclic") != nullptr);
        CHECK(set.find("connected") != nullptr);
    }
    SUBCASE("cycle") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"graph_type=cycle", "num_nodes=6"}));
        CHECK(find_atom(set, "num_edges", Relation::eq)->number() == 6.0);
    }
    SUBCASE("star and path") {
        for (const char* type : {"star", "path"}) {
            ConstraintSet set = infer_implicit(make_constraint_set(
                {std::string("graph_type=") + type, "num_nodes=5"}));
            CHECK(find_atom(set, "num_edges", Relation::eq)->number() == 4.0);
        }
    }
    SUBCASE("complete") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"graph_type=complete", "num_nodes=6"}));
        CHECK(find_atom(set, "num_edges", Relation::eq)->number() == 15.0);
    }
    SUBCASE("regular degree with even product") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"degree=3", "num_nodes=8"}));
        CHECK(find_atom(set, "num_edges", Relation::eq)->number() == 12.0);
    }
    SUBCASE("odd degree product adds no edge count") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"degree=3", "num_nodes=7"}));
        CHECK(find_atom(set, "num_edges", Relation::eq) == nullptr);
    }
    SUBCASE("grid dimensions give the node count") {
        ConstraintSet set =
            infer_implicit(make_constraint_set({"graph_type=grid", "rows=3", "cols=4"}));
        CHECK(find_atom(set, "num_nodes", Relation::eq)->number() == 12.0);
    }
    SUBCASE("idempotent") {
        ConstraintSet once =
            infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=8"}));
        ConstraintSet twice = infer_implicit(once);
        CHECK(once.implicit_atoms.size() == twice.implicit_atoms.size());
    }
    SUBCASE("derived value conflicting with an explicit eq marks infeasible") {
        ConstraintSet set = infer_implicit(
            make_constraint_set({"graph_type=tree", "num_nodes=8", "num_edges=9"}));
        CHECK(!set.feasible);
        CHECK(!set.infeasibility_reason.empty());
    }
}

TEST_CASE("feasibility rules fire on the registered impossibilities") {
    auto infeasible = [](const std::vector<std::string>& texts) {
        return !check_feasibility(infer_implicit(make_constraint_set(texts))).feasible;
    };
    CHECK(infeasible({"num_edges>=7", "num_edges<=3"}));          // empty interval
    CHECK(infeasible({"density=1.4", "num_nodes=5"}));            // density out of range
    CHECK(infeasible({"degree=-2", "num_nodes=5"}));              // negative degree
    CHECK(infeasible({"degree=7", "num_nodes=5"}));               // d > n-1
    CHECK(infeasible({"degree=3", "num_nodes=5", "connected=true"}));  // odd n*d
    CHECK(infeasible({"num_edges>=20", "num_nodes=5"}));          // above the simple cap
    CHECK(infeasible({"connected=true", "num_nodes=6", "num_edges<=4"}));
    CHECK(infeasible({"acyclic=true", "directed=false", "num_nodes=5", "num_edges>=5"}));
    CHECK(infeasible({"graph_type=tree", "num_nodes=6", "num_edges>=6"}));
    // The bipartite regular pair with an oversized degree.
    CHECK(infeasible({"graph_type=bipartite", "partition_a=3", "partition_b=7",
                      "degree=5"}));
    // Control: satisfiable sets stay feasible.
    CHECK(!infeasible({"graph_type=tree", "num_nodes=6"}));
    CHECK(!infeasible({"num_nodes=5", "num_edges=7", "connected=true"}));
}

TEST_CASE("validation agrees with independently computed properties") {
    const GraphDoc tri = doc_of(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(satisfies(tri, {"num_nodes=3"}));
    CHECK(satisfies(tri, {"num_edges=3"}));
    CHECK(satisfies(tri, {"graph_type=cycle"}));
    CHECK(satisfies(tri, {"connected=true"}));
    CHECK(satisfies(tri, {"degree=2"}));
    CHECK(satisfies(tri, {"clustering_coefficient=1.0"}));
    CHECK(satisfies(tri, {"density=1.0"}));
    CHECK(!satisfies(tri, {"graph_type=tree"}));
    CHECK(!satisfies(tri, {"num_nodes=4"}));
    CHECK(!satisfies(tri, {"acyclic=true"}));

    const GraphDoc star = doc_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(satisfies(star, {"graph_type=star"}));
    CHECK(satisfies(star, {"graph_type=tree"}));
    CHECK(satisfies(star, {"max_degree=4", "min_degree=1"}));
    CHECK(satisfies(star, {"diameter=2"}));
    CHECK(!satisfies(star, {"graph_type=cycle"}));

    const GraphDoc p4 = doc_of(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(satisfies(p4, {"graph_type=path"}));
    CHECK(satisfies(p4, {"average_path_length<=2"}));
    CHECK(satisfies(p4, {"diameter=3"}));
    CHECK(satisfies(p4, {"graph_type=bipartite"}));

    const GraphDoc dag = doc_of(4, {{0, 1}, {0, 2}, {1, 3}}, /*directed=*/true);
    CHECK(satisfies(dag, {"directed=true"}));
    CHECK(satisfies(dag, {"graph_type=dag"}));
    const GraphDoc dirloop = doc_of(3, {{0, 1}, {1, 2}, {2, 0}}, true);
    CHECK(!satisfies(dirloop, {"graph_type=dag"}));
}

TEST_CASE("grid type checks rows and cols against the document") {
    RngStream rng(1, "grid");
    const Graph g = make_grid_graph(3, 4);
    GraphDoc doc = doc_from_graph(g, "grid");
    doc.graph_attrs["rows"] = std::int64_t{3};
    doc.graph_attrs["cols"] = std::int64_t{4};
    CHECK(satisfies(doc, {"graph_type=grid", "rows=3", "cols=4"}));
    CHECK(!satisfies(doc, {"graph_type=grid", "rows=4", "cols=4"}));
}

TEST_CASE("properties without evaluators violate with a diagnostic note") {
    const GraphDoc tri = doc_of(3, {{0, 1}, {1, 2}, {2, 0}});
    ConstraintSet set = make_constraint_set({"graph_type=planar"});
    const auto violations = validate(tri, set);
    REQUIRE(violations.size() == 1);
    CHECK(!violations[0].note.empty());
}

TEST_CASE("numeric tolerances: 1e-6 absolute on eq, 1e-9 slack on bounds") {
    const GraphDoc tri = doc_of(3, {{0, 1}, {1, 2}, {2, 0}});
    // density exactly 1.0
    CHECK(satisfies(tri, {"density=1.0000005"}));   // inside 1e-6
    CHECK(!satisfies(tri, {"density=1.00001"}));    // outside
    CHECK(numeric_satisfied(Relation::eq, 1.0, 1.0 + 5e-7));
    CHECK(!numeric_satisfied(Relation::eq, 1.0, 1.0 + 2e-6));
    CHECK(numeric_satisfied(Relation::le, 1.0 + 5e-10, 1.0));
    CHECK(!numeric_satisfied(Relation::le, 1.0 + 1e-6, 1.0));
    CHECK(numeric_satisfied(Relation::ge, 1.0 - 5e-10, 1.0));
    // Integer-valued properties compare exactly through the same path.
    CHECK(numeric_satisfied(Relation::eq, 7.0, 7.0));
    CHECK(!numeric_satisfied(Relation::eq, 7.0, 8.0));
}

TEST_CASE("violations carry expected/observed/delta and a category") {
    const GraphDoc tri = doc_of(3, {{0, 1}, {1, 2}, {2, 0}});
    ConstraintSet set = make_constraint_set({"num_edges=5"});
    const auto violations = validate(tri, set);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].category == ViolationCategory::count);
    CHECK(violations[0].expected == "5");
    CHECK(violations[0].observed == "3");
    REQUIRE(violations[0].delta.has_value());
    CHECK(*violations[0].delta == doctest::Approx(-2.0));
}

TEST_CASE("satisfaction_rate counts explicit and implicit atoms") {
    const GraphDoc star = doc_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    ConstraintSet set = check_feasibility(
        infer_implicit(make_constraint_set({"graph_type=star", "num_nodes=5"})));
    CHECK(satisfaction_rate(star, set) == doctest::Approx(1.0));

    // Break one explicit atom: 1 of (explicit+implicit) fails.
    const GraphDoc p4 = doc_of(4, {{0, 1}, {1, 2}, {2, 3}});
    const int total = static_cast<int>(set.all().size());
    const auto violations = validate(p4, set);
    CHECK(satisfaction_rate(p4, set) ==
          doctest::Approx(1.0 - static_cast<double>(violations.size()) / total));

    // Parse failures score zero; empty sets score one.
    ParseResult failed = parse_response("no graph here");
    CHECK(satisfaction_rate(failed, set) == 0.0);
    CHECK(satisfaction_rate(star, make_constraint_set({})) == 1.0);
}

TEST_CASE("instruction-match aggregates 0.5 explicit + 0.3 implicit + 0.2 lint") {
    ConstraintSet set = check_feasibility(
        infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=5"})));
    const GraphDoc tree = doc_of(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    const std::string text = serialize_document(tree);
    const ParseResult parsed = parse_response(text);
    REQUIRE(parsed.ok());
    const StructuralLint lint = lint_structure(*parsed.doc);
    const D4Score d4 = score_d4(text, parsed, set, lint);
    CHECK(d4.explicit_satisfaction == doctest::Approx(1.0));
    CHECK(d4.implicit_satisfaction == doctest::Approx(1.0));
    CHECK(d4.no_contradiction == 1);
    CHECK(d4.aggregate == doctest::Approx(1.0));

    // A wrong graph: explicit fraction drops, lint still clean.
    const GraphDoc wrong = doc_of(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    const std::string wtext = serialize_document(wrong);
    const ParseResult wparsed = parse_response(wtext);
    const D4Score wd4 = score_d4(wtext, wparsed, set, lint_structure(*wparsed.doc));
    CHECK(wd4.aggregate < 1.0);
    CHECK(wd4.aggregate ==
          doctest::Approx(0.5 * wd4.explicit_satisfaction +
                          0.3 * wd4.implicit_satisfaction + 0.2 * wd4.no_contradiction));

    // Parse failure zeroes everything.
    const ParseResult nope = parse_response("I drew it on paper.");
    const D4Score zd4 = score_d4("I drew it on paper.", nope, set, StructuralLint{});
    CHECK(zd4.aggregate == 0.0);
    CHECK(zd4.explicit_satisfaction == 0.0);
    CHECK(zd4.no_contradiction == 0);
}

TEST_CASE("infeasible sets reward a declared refusal without a graph block") {
    ConstraintSet set = check_feasibility(
        infer_implicit(make_constraint_set({"graph_type=tree", "num_nodes=6",
                                            "num_edges=6"})));
    REQUIRE(!set.feasible);

    const std::string refusal =
        "These requirements contradict each other: a tree on 6 nodes has exactly 5 "
        "edges, so the request is infeasible.";
    const ParseResult none = parse_response(refusal);
    CHECK(score_d4(refusal, none, set, StructuralLint{}).aggregate == 1.0);

    // Declaring infeasibility but emitting a graph anyway earns nothing.
    const std::string hedged =
        refusal + "\n" + serialize_document(doc_of(3, {{0, 1}, {1, 2}}));
    const ParseResult parsed = parse_response(hedged);
    CHECK(score_d4(hedged, parsed, set, lint_structure(*parsed.doc)).aggregate == 0.0);

    // Emitting a graph with no declaration also earns nothing.
    const std::string plain = serialize_document(doc_of(3, {{0, 1}, {1, 2}}));
    const ParseResult pp = parse_response(plain);
    CHECK(score_d4(plain, pp, set, lint_structure(*pp.doc)).aggregate == 0.0);
}

TEST_CASE("infeasibility phrases are matched case-insensitively") {
    CHECK(declares_infeasibility("This is IMPOSSIBLE."));
    CHECK(declares_infeasibility("no such graph can be drawn"));
    CHECK(declares_infeasibility("the constraints form a Contradiction"));
    CHECK(declares_infeasibility("such a graph cannot exist"));
    CHECK(!declares_infeasibility("here you go"));
    CHECK(infeasibility_phrases().size() >= 5);
}

TEST_CASE("evaluable property listing is honest") {
    const auto props = evaluable_properties();
    for (const char* name :
         {"num_nodes", "num_edges", "density", "clustering_coefficient",
          "average_path_length", "diameter", "min_degree", "max_degree", "degree",
          "connected", "directed", "acyclic", "graph_type", "modularity"}) {
        CAPTURE(name);
        CHECK(std::find(props.begin(), props.end(), name) != props.end());
    }
    const auto types = evaluable_graph_types();
    for (const char* name :
         {"tree", "cycle", "star", "path", "complete", "bipartite", "regular",
          "grid", "dag"}) {
        CAPTURE(name);
        CHECK(std::find(types.begin(), types.end(), name) != types.end());
    }
    CHECK(std::find(types.begin(), types.end(), "planar") == types.end());
}

TEST_CASE("degree atoms map to regularity and degree bounds") {
    const GraphDoc cyc = doc_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(satisfies(cyc, {"degree=2"}));       // regular with degree 2
    CHECK(satisfies(cyc, {"degree<=2"}));      // max degree bound
    CHECK(satisfies(cyc, {"degree>=2"}));      // min degree bound
    const GraphDoc star = doc_of(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!satisfies(star, {"degree=2"}));
    CHECK(satisfies(star, {"degree<=3"}));
    CHECK(!satisfies(star, {"degree>=2"}));
}
