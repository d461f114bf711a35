#include "doctest.h"

#include "frobrw/semantics.hpp"
#include "frobrw/strategies.hpp"

using namespace frobrw;

TEST_CASE("group model satisfies the group axioms compositionally") {
    Signature sig = make_group_signature();
    for (int n : {2, 3, 5}) {
        FiniteModel zn = make_group_model(sig, n);
        auto ev = [&](const char* src) {
            return eval_term(zn, *parse_term(sig, src));
        };
        CHECK(ev("(m + id[1]) ; m") == ev("(id[1] + m) ; m"));
        CHECK(ev("(u + id[1]) ; m") == ev("id[1]"));
        CHECK(ev("(id[1] + u) ; m") == ev("id[1]"));
        CHECK(ev("frob.comult[w] ; (id[1] + i) ; m") == ev("frob.counit[w] ; u"));
        CHECK(ev("sym[1,1] ; m") == ev("m"));
    }
}

TEST_CASE("graph evaluation agrees with term evaluation") {
    Signature sig = make_group_signature();
    FiniteModel z3 = make_group_model(sig, 3);
    for (const char* src :
         {"m", "m ; i", "frob.comult[w] ; m", "(m + m) ; m", "u ; frob.comult[w]",
          "m ; frob.counit[w]", "u ; i", "id[0]", "frob.unit[w] ; frob.counit[w]"}) {
        TermPtr t = parse_term(sig, src);
        CHECK(eval_term(z3, *t) == eval_graph(z3, interp(sig, *t)));
    }
}

TEST_CASE("frobenius nodes evaluate as all-equal relations") {
    Signature sig = make_group_signature();
    FiniteModel z2 = make_group_model(sig, 2);
    Relation r = eval_term(z2, *parse_term(sig, "frob.comult[w]"));
    REQUIRE(r.pairs.size() == 2);
    for (const auto& [x, y] : r.pairs) {
        CHECK(y == std::vector<int>({x[0], x[0]}));
    }
    // the scalar unit;counit is the nonempty 0 -> 0 relation
    Relation s = eval_term(z2, *parse_term(sig, "frob.unit[w] ; frob.counit[w]"));
    CHECK(s.pairs.size() == 1);
}

TEST_CASE("evaluation space guard trips on oversized products") {
    Signature sig = make_group_signature();
    FiniteModel z5 = make_group_model(sig, 5);
    Cospan big;
    big.graph = Hypergraph(sig);
    for (int i = 0; i < 12; ++i) big.graph.add_node(0);
    CHECK_THROWS_AS(eval_graph(z5, big, 1e6), Error);
}

TEST_CASE("subspace arithmetic over GF(2)") {
    Subspace2 s = span2(3, {0b011, 0b110, 0b101});
    CHECK(s.basis.size() == 2);
    CHECK(s.contains(0b000));
    CHECK(s.contains(0b101));
    CHECK_FALSE(s.contains(0b001));
    CHECK(subspace_equal(s, span2(3, {0b110, 0b011})));

    Subspace2 n = nullspace2(3, {0b011});  // x0 + x1 = 0
    CHECK(n.basis.size() == 2);
    CHECK(n.contains(0b011));
    CHECK(n.contains(0b100));
    CHECK_FALSE(n.contains(0b001));

    // S = span{(1,1,0)} differs from its orthogonal complement
    Subspace2 line = span2(3, {0b011});
    Subspace2 perp = orthogonal_complement(line);
    CHECK(perp.basis.size() == 2);
    CHECK(perp.contains(0b011));
    CHECK(perp.contains(0b100));
    CHECK_FALSE(subspace_equal(line, perp));
    CHECK(subspace_equal(orthogonal_complement(perp), line));
}

TEST_CASE("canonical form is independent of generator order") {
    Subspace2 a = span2(4, {0b0110, 0b1010, 0b0001});
    Subspace2 b = span2(4, {0b1100, 0b1010, 0b0111, 0b1011});
    CHECK(subspace_equal(a, b));
    CHECK(a.basis == b.basis);
}

TEST_CASE("changer graph semantics: identities and a parity constraint") {
    Signature sig = make_ib_signature();
    // single wire through a parity node: x0 + y0 = 0, i.e. equality
    Cospan c;
    c.graph = Hypergraph(sig);
    NodeId x = c.graph.add_node(0);
    NodeId p = c.graph.add_node(1);
    NodeId y = c.graph.add_node(0);
    GenId br = *sig.generator_by_name("chg[b,r]");
    GenId rb = *sig.generator_by_name("chg[r,b]");
    c.graph.add_edge(br, {x}, {p});
    c.graph.add_edge(rb, {p}, {y});
    c.inputs = {x};
    c.outputs = {y};
    Subspace2 s = ib_subspace(c);
    CHECK(subspace_equal(s, span2(2, {0b11})));

    // a parity node with three boundary wires: x0 + x1 + y0 = 0
    Cospan d;
    d.graph = Hypergraph(sig);
    NodeId a0 = d.graph.add_node(0);
    NodeId a1 = d.graph.add_node(0);
    NodeId q = d.graph.add_node(1);
    NodeId b0 = d.graph.add_node(0);
    d.graph.add_edge(br, {a0}, {q});
    d.graph.add_edge(br, {a1}, {q});
    d.graph.add_edge(rb, {q}, {b0});
    d.inputs = {a0, a1};
    d.outputs = {b0};
    CHECK(subspace_equal(ib_subspace(d), nullspace2(3, {0b111})));
    CHECK(subspace_equal(readoff_reduced(d), ib_subspace(d)));
    CHECK(reduced_equations(d) == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("span read-off lists one basis vector per interior copy node") {
    Signature sig = make_ib_signature();
    // two parity legs x0, x1; one interior copy node wired to both:
    // the subspace spanned by (1,1)
    Cospan c;
    c.graph = Hypergraph(sig);
    NodeId p0 = c.graph.add_node(1);
    NodeId p1 = c.graph.add_node(1);
    NodeId v = c.graph.add_node(0);
    GenId br = *sig.generator_by_name("chg[b,r]");
    c.graph.add_edge(br, {v}, {p0});
    c.graph.add_edge(br, {v}, {p1});
    c.inputs = {p0};
    c.outputs = {p1};
    Subspace2 s = readoff_span(c);
    CHECK(subspace_equal(s, span2(2, {0b11})));
    CHECK(subspace_equal(s, ib_subspace(c)));
}
