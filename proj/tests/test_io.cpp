#include "doctest.h"

#include "frobrw/io.hpp"
#include "frobrw/strategies.hpp"

using namespace frobrw;

TEST_CASE("signature text format") {
    Signature sig = parse_signature_text(
        "colours: b r\n"
        "frobenius: b r\n"
        "chg : b -> r\n"
        "chg : r -> b\n"
        "f : b b -> r  # a generator\n");
    CHECK(sig.colours.size() == 2);
    CHECK(sig.is_frobenius(0));
    CHECK(sig.is_frobenius(1));
    CHECK(sig.generator_by_name("chg[b,r]").has_value());
    CHECK(sig.generator_by_name("chg[r,b]").has_value());
    const Generator& f = sig.generator(*sig.generator_by_name("f"));
    CHECK(f.arity == Word({0, 0}));
    CHECK(f.coarity == Word{1});
}

TEST_CASE("monochrome defaults and integer arities") {
    Signature sig = parse_signature_text(
        "m : 2 -> 1\n"
        "i : 1 -> 1\n"
        "u : 0 -> 1\n");
    CHECK(sig.colours.size() == 1);
    CHECK(sig.colours[0].name == "w");
    CHECK(sig.is_frobenius(0));
    CHECK(sig.generator(*sig.generator_by_name("m")).arity == Word({0, 0}));
    CHECK(sig.generator(*sig.generator_by_name("u")).arity == Word{});
}

TEST_CASE("graph and cospan JSON round trips") {
    Signature sig = make_ib_signature();
    Cospan c;
    c.graph = Hypergraph(sig);
    NodeId x = c.graph.add_node(0);
    NodeId p = c.graph.add_node(1);
    c.graph.add_edge(*sig.generator_by_name("chg[b,r]"), {x}, {p});
    c.inputs = {x};
    c.outputs = {x};

    Cospan back = cospan_from_json(sig, cospan_to_json(c));
    CHECK(back.graph.num_nodes() == 2);
    CHECK(back.graph.num_edges() == 1);
    CHECK(back.inputs == c.inputs);
    CHECK(back.outputs == c.outputs);
    CHECK(back.graph.node_colour == c.graph.node_colour);
    CHECK(cospan_iso(back, c));

    InterfacedGraph ig{c.graph, {x, p}};
    InterfacedGraph ig_back = interfaced_from_json(sig, interfaced_to_json(ig));
    CHECK(interfaced_iso(ig, ig_back));

    Hypergraph g_back = graph_from_json(sig, graph_to_json(c.graph));
    CHECK(are_isomorphic(c.graph, g_back).has_value());
}

TEST_CASE("malformed JSON is rejected") {
    Signature sig = make_ib_signature();
    CHECK_THROWS_AS(cospan_from_json(sig, "{"), Error);
    CHECK_THROWS_AS(
        cospan_from_json(sig,
                         R"({"nodes":[{"id":1,"colour":"b"}],"edges":[],)"
                         R"("inputs":[],"outputs":[]})"),
        Error);  // ids must be dense from 0
    CHECK_THROWS_AS(
        cospan_from_json(sig,
                         R"({"nodes":[{"id":0,"colour":"purple"}],"edges":[],)"
                         R"("inputs":[],"outputs":[]})"),
        Error);
}

TEST_CASE("rule files parse into checked rules") {
    Signature sig = parse_signature_text("f : 1 -> 1\ng : 1 -> 1\n");
    std::vector<Rule> rules = parse_rules_text(
        sig,
        "# comments are skipped\n"
        "swap : f ; g => g ; f\n"
        "fuse : f ; g => id[1]\n");
    REQUIRE(rules.size() == 2);
    CHECK(rules[0].name == "swap");
    CHECK(rules[1].boundary() == Word({0, 0}));
    CHECK_THROWS_AS(parse_rules_text(sig, "broken f => g\n"), Error);
}

TEST_CASE("graphviz export mentions every element") {
    Signature sig = make_ib_signature();
    Cospan c;
    c.graph = Hypergraph(sig);
    NodeId x = c.graph.add_node(0);
    NodeId p = c.graph.add_node(1);
    c.graph.add_edge(*sig.generator_by_name("chg[b,r]"), {x}, {p});
    c.inputs = {x};
    c.outputs = {p};
    std::string dot = to_dot(c);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("chg[b,r]") != std::string::npos);
    CHECK(dot.find("diamond") != std::string::npos);
}
