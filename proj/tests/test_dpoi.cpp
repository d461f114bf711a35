#include "doctest.h"

#include "frobrw/dpoi.hpp"

using namespace frobrw;

namespace {

Signature fg_sig() {
    Signature sig;
    ColourId w = sig.add_colour("w");
    sig.mark_frobenius(w);
    sig.add_generator("f", {w}, {w});
    sig.add_generator("g", {w}, {w});
    return sig;
}

InterfacedGraph chain(const Signature& sig, const std::vector<GenId>& labels,
                      std::vector<int> iface) {
    InterfacedGraph h;
    h.graph = Hypergraph(sig);
    NodeId prev = h.graph.add_node(0);
    for (GenId l : labels) {
        NodeId next = h.graph.add_node(0);
        h.graph.add_edge(l, {prev}, {next});
        prev = next;
    }
    h.interface = std::move(iface);
    return h;
}

}  // namespace

TEST_CASE("rules built from terms expose their boundary") {
    Signature sig = fg_sig();
    Rule r = rule_from_terms(sig, "swap", "f ; g", "g ; f");
    CHECK(r.name == "swap");
    CHECK(r.boundary() == Word({0, 0}));
    CHECK(r.k_size() == 2);
    r.check();

    CHECK_THROWS_AS(rule_from_terms(sig, "bad", "f", "f + f"), Error);
}

TEST_CASE("gluing conditions catch dangling edges and bad identifications") {
    Signature sig = fg_sig();
    // rule deleting an f edge together with its endpoints' middle: f => id
    Rule del = rule_from_terms(sig, "del", "f", "id[1]");

    // host f;g: the f match would leave the g edge dangling at the deleted
    // middle node only if the node were deleted; here both f endpoints are
    // boundary, so conditions hold.
    InterfacedGraph host = chain(sig, {0, 1}, {0, 2});
    std::vector<Homomorphism> homs =
        find_homomorphisms(del.lhs.graph, host.graph);
    REQUIRE(homs.size() == 1);
    CHECK(check_conditions(del, homs[0], host.graph).ok);

    // a rule whose lhs interior node is deleted: f;g => id, host with an
    // extra f edge hanging off the middle node.
    Rule fg = rule_from_terms(sig, "fg", "f ; g", "id[1]");
    InterfacedGraph host2;
    host2.graph = Hypergraph(sig);
    for (int i = 0; i < 4; ++i) host2.graph.add_node(0);
    host2.graph.add_edge(0, {0}, {1});
    host2.graph.add_edge(1, {1}, {2});
    host2.graph.add_edge(0, {1}, {3});
    std::vector<Homomorphism> homs2 =
        find_homomorphisms(fg.lhs.graph, host2.graph);
    REQUIRE(homs2.size() == 1);
    ConditionReport rep = check_conditions(fg, homs2[0], host2.graph);
    CHECK_FALSE(rep.ok);  // the extra f edge dangles at the deleted node
    CHECK(rep.reason.find("dangling") != std::string::npos);

    // identification: a non-injective occurrence merging an interior node
    // with a boundary node (f;f matched onto an f loop)
    Rule two = rule_from_terms(sig, "two", "f ; f", "id[1]");
    InterfacedGraph loopish;
    loopish.graph = Hypergraph(sig);
    loopish.graph.add_node(0);
    loopish.graph.add_edge(0, {0}, {0});
    std::vector<Homomorphism> h3 =
        find_homomorphisms(two.lhs.graph, loopish.graph);
    bool saw_identification = false;
    for (const Homomorphism& m : h3) {
        ConditionReport cr = check_conditions(two, m, loopish.graph);
        if (!cr.ok && cr.reason.find("identification") != std::string::npos)
            saw_identification = true;
    }
    CHECK(saw_identification);
}

TEST_CASE("mono complements are verified exactly") {
    Signature sig = fg_sig();
    Rule swap = rule_from_terms(sig, "swap", "f ; g", "g ; f");
    InterfacedGraph host = chain(sig, {0, 1, 0}, {0, 3});
    std::vector<Homomorphism> homs =
        find_homomorphisms(swap.lhs.graph, host.graph);
    REQUIRE(homs.size() == 1);
    Complement c = complement_mono(swap, homs[0], host.graph);
    CHECK(verify_complement(swap, homs[0], host.graph, c));
    CHECK(c.graph.num_edges() == 1);   // only the trailing f survives
    CHECK(c.graph.num_nodes() == 3);   // middle node of the lhs is deleted
}

TEST_CASE("rewriting a chain host swaps the segment") {
    Signature sig = fg_sig();
    Rule swap = rule_from_terms(sig, "swap", "f ; g", "g ; f");
    InterfacedGraph host = chain(sig, {0, 1, 0}, {0, 3});

    std::vector<Match> ms = find_matches(swap, host);
    REQUIRE(ms.size() == 1);
    InterfacedGraph out = rewrite_step(swap, host, ms[0]);
    InterfacedGraph expected = chain(sig, {1, 0, 0}, {0, 3});
    CHECK(interfaced_iso(out, expected));
}

TEST_CASE("interface legs must factor through the complement") {
    Signature sig = fg_sig();
    Rule fg = rule_from_terms(sig, "fg", "f ; g", "id[1]");
    // host f;g with both interface legs on the middle node, which every
    // complement deletes: no admissible match.
    InterfacedGraph host = chain(sig, {0, 1}, {1, 1});
    CHECK(find_matches(fg, host).empty());
    // with the legs on the outer nodes the rule applies
    host.interface = {0, 2};
    CHECK(find_matches(fg, host).size() == 1);
}

TEST_CASE("non-mono boundaries enumerate every pushout complement") {
    Signature sig = fg_sig();
    // identity-like rule whose lhs is a single node carrying both boundary
    // legs: occurrences sit at a single host node, and complements split
    // its context edges among the two boundary copies.
    Rule grow = rule_from_terms(sig, "grow", "frob.comult[w] ; frob.mult[w]",
                                "f ; g");
    REQUIRE(grow.lhs.graph.num_nodes() == 1);

    InterfacedGraph host = chain(sig, {0, 1}, {0, 2});
    // the fibre over the middle node has 4 elements (two boundary copies,
    // one f target, one g source): 15 set partitions, 5 of which re-glue
    // to the host.
    std::vector<Homomorphism> homs =
        find_homomorphisms(grow.lhs.graph, host.graph);
    REQUIRE(homs.size() == 3);
    ComplementEnumeration en = complements_enumerate(grow, homs[1], host.graph);
    CHECK(en.partitions_examined == 15);
    CHECK(en.complements.size() == 5);
    for (const Complement& c : en.complements)
        CHECK(verify_complement(grow, homs[1], host.graph, c));
}

TEST_CASE("closure applies rules in order and records a log") {
    Signature sig = fg_sig();
    Rule swap = rule_from_terms(sig, "swap", "f ; g", "g ; f");
    InterfacedGraph host = chain(sig, {0, 1, 0, 1}, {0, 4});
    ClosureResult res = rewrite_closure({swap}, host, 10);
    CHECK(res.budget_exhausted == false);
    CHECK(!res.log.empty());
    for (const StepRecord& s : res.log) CHECK(s.rule == "swap");
    // every f;g segment is eventually swapped: g;g;f;f
    CHECK(interfaced_iso(res.graph, chain(sig, {1, 1, 0, 0}, {0, 4})));

    ClosureResult stop = rewrite_closure(
        {swap}, host, 10,
        [](const Rule&, const InterfacedGraph&, const std::vector<Match>&) {
            return -1;
        });
    CHECK(stop.log.empty());
    CHECK(interfaced_iso(stop.graph, host));
}
