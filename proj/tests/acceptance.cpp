// Acceptance checks for the rewrite engine, one criterion per function.
// Each prints a single pass/fail line; the exit code is the number of
// failures. Time limits and tolerances are pinned in the table at the
// bottom.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frobrw/gen.hpp"
#include "frobrw/multifrob.hpp"
#include "frobrw/semantics.hpp"
#include "frobrw/strategies.hpp"

using namespace frobrw;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void req(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Transpose of a generator-free term: reverses compositions and swaps each
// Frobenius piece for its mirror, so dagger(t) : cod(t) -> dom(t).
TermPtr dagger(const Signature& sig, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Id:
            return t_id(sig, t.w1);
        case Term::Kind::Sym:
            return t_sym(sig, t.w2, t.w1);
        case Term::Kind::Frob: {
            FrobKind k = t.frob == FrobKind::Mult     ? FrobKind::Comult
                         : t.frob == FrobKind::Comult ? FrobKind::Mult
                         : t.frob == FrobKind::Unit   ? FrobKind::Counit
                                                      : FrobKind::Unit;
            return t_frob(sig, t.colour, k);
        }
        case Term::Kind::Seq:
            return t_seq(sig, dagger(sig, *t.b), dagger(sig, *t.a));
        case Term::Kind::Par:
            return t_par(sig, dagger(sig, *t.a), dagger(sig, *t.b));
        default:
            throw Failure("dagger applied to a generator");
    }
}

// A copy of the signature's colours without its generators, for generating
// contexts out of wires, symmetries and Frobenius pieces only.
Signature colours_only(const Signature& sig) {
    Signature out;
    for (const Colour& c : sig.colours) out.add_colour(c.name);
    for (ColourId c : sig.frobenius_colours) out.mark_frobenius(c);
    return out;
}

// Wraps both sides of a law in one shared random context
//   pre ; (id_p + side + id_q) ; post
// where pre is the transpose of a random generator-free term and post is an
// arbitrary random term.
std::pair<TermPtr, TermPtr> wrap_law(const Signature& sig, const Signature& ctx,
                                     TermPtr l, TermPtr r, Rng& rng) {
    Word p = random_word(sig, 2, rng);
    Word q = random_word(sig, 2, rng);
    Word mdom = cat(cat(p, l->dom), q);
    Word mcod = cat(cat(p, l->cod), q);
    TermPtr pre = dagger(
        sig, *random_layered_term(ctx, mdom, 1 + static_cast<int>(rng() % 2), rng));
    TermPtr post =
        random_layered_term(sig, mcod, 1 + static_cast<int>(rng() % 2), rng);
    auto wrap = [&](TermPtr s) {
        TermPtr mid = t_par(sig, t_par(sig, t_id(sig, p), s), t_id(sig, q));
        return t_seq(sig, t_seq(sig, pre, mid), post);
    };
    return {wrap(l), wrap(r)};
}

// --------------------------------------------------------------- criterion 1

void criterion_axiom_soundness() {
    Signature mono = make_group_signature();
    Signature mono_ctx = colours_only(mono);

    Signature two;
    ColourId tw = two.add_colour("w");
    ColourId tr = two.add_colour("r");
    two.mark_frobenius(tw);
    two.mark_frobenius(tr);
    two.add_generator("f", {tw}, {tr});
    two.add_changer(tw, tr);
    two.add_changer(tr, tw);
    Signature two_ctx = colours_only(two);

    const std::vector<std::pair<const char*, const char*>> mono_laws = {
        {"frob.comult[w] ; frob.mult[w]", "id[1]"},
        {"(frob.mult[w] + id[1]) ; frob.mult[w]",
         "(id[1] + frob.mult[w]) ; frob.mult[w]"},
        {"(frob.unit[w] + id[1]) ; frob.mult[w]", "id[1]"},
        {"frob.comult[w] ; (frob.counit[w] + id[1])", "id[1]"},
        {"(frob.comult[w] + id[1]) ; (id[1] + frob.mult[w])",
         "frob.mult[w] ; frob.comult[w]"},
        {"sym[1,1] ; frob.mult[w]", "frob.mult[w]"},
        {"frob.comult[w] ; sym[1,1]", "frob.comult[w]"},
        {"sym[1,1] ; sym[1,1]", "id[2]"},
        {"(m + i) ; sym[1,1]", "sym[2,1] ; (i + m)"},
        {"(u + id[1]) ; sym[1,1]", "id[1] + u"},
        {"(m ; i) + (i ; i)", "(m + i) ; (i + i)"},
        {"id[1] ; i ; id[1]", "i"},
    };
    const std::vector<std::pair<const char*, const char*>> two_laws = {
        {"frob.comult[r] ; frob.mult[r]", "id[r]"},
        {"(frob.mult[r] + id[r]) ; frob.mult[r]",
         "(id[r] + frob.mult[r]) ; frob.mult[r]"},
        {"(frob.comult[w] + id[w]) ; (id[w] + frob.mult[w])",
         "frob.mult[w] ; frob.comult[w]"},
        {"sym[w,r] ; sym[r,w]", "id[w r]"},
        {"f ; frob.comult[r] ; (id[r] + frob.counit[r])", "f"},
        {"(f + chg[w,r]) ; sym[r,r]", "sym[w,w] ; (chg[w,r] + f)"},
    };

    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        bool coloured = i % 2 == 1;
        const Signature& sig = coloured ? two : mono;
        const Signature& ctx = coloured ? two_ctx : mono_ctx;
        const auto& laws = coloured ? two_laws : mono_laws;
        const auto& law = laws[rng() % laws.size()];
        TermPtr l = parse_term(sig, law.first);
        TermPtr r = parse_term(sig, law.second);
        auto [wl, wr] = wrap_law(sig, ctx, l, r, rng);
        req(term_equal_mod_frobenius(sig, *wl, *wr),
            std::string("law broke under a context: ") + law.first + "  vs  " +
                law.second);
        // and a negative control every now and then: adding a generator to
        // one side must be detected
        if (i % 25 == 0 && !coloured) {
            TermPtr broken = t_par(sig, wl, t_gen(sig, "u"));
            TermPtr same = t_par(sig, wr, t_frob(sig, 0, FrobKind::Unit));
            req(!term_equal_mod_frobenius(sig, *broken, *same),
                "iso check failed to separate distinct diagrams");
        }
    }
}

// --------------------------------------------------------------- criterion 2

void criterion_complement_counts() {
    Signature sig;
    ColourId w = sig.add_colour("w");
    sig.mark_frobenius(w);
    sig.add_generator("f", {w}, {w});
    sig.add_generator("g", {w}, {w});

    InterfacedGraph host = fold(interp(
        sig, *parse_term(sig, "frob.comult[w] ; (f + f) ; (g + g) ; frob.mult[w]"))).ig;

    Rule erase = rule_from_terms(sig, "erase", "f ; g",
                                 "frob.comult[w] ; frob.mult[w]");
    std::vector<Match> ms = find_matches(erase, host);
    req(ms.size() == 2, "expected exactly 2 matches of f;g, got " +
                            std::to_string(ms.size()));

    Rule grow = rule_from_terms(sig, "grow", "frob.comult[w] ; frob.mult[w]",
                                "f ; g");
    std::vector<Homomorphism> homs = find_homomorphisms(grow.lhs.graph, host.graph);
    req(homs.size() == 4, "single-node pattern should match all 4 nodes");
    // locate the occurrence at a middle node: interior, one f in, one g out
    int middle = -1;
    for (size_t i = 0; i < homs.size(); ++i) {
        NodeId v = homs[i].node_map[0];
        if (degree(host.graph, v) == 2 && v != host.interface[0] &&
            v != host.interface[1]) {
            middle = static_cast<int>(i);
            break;
        }
    }
    req(middle >= 0, "no interior middle node found");
    ComplementEnumeration en =
        complements_enumerate(grow, homs[middle], host.graph);
    req(en.partitions_examined == 15,
        "expected 15 boundary partitions, got " +
            std::to_string(en.partitions_examined));
    req(en.complements.size() == 5,
        "expected 5 pushout complements, got " +
            std::to_string(en.complements.size()));

    // the five derivations at that node are pairwise non-isomorphic
    std::vector<Match> at_middle;
    for (const Match& m : find_matches(grow, host))
        if (m.hom.node_map[0] == homs[middle].node_map[0]) at_middle.push_back(m);
    req(at_middle.size() == 5, "expected 5 matches at the middle node");
    std::vector<InterfacedGraph> results;
    for (const Match& m : at_middle) results.push_back(rewrite_step(grow, host, m));
    for (size_t i = 0; i < results.size(); ++i)
        for (size_t j = i + 1; j < results.size(); ++j)
            req(!interfaced_iso(results[i], results[j]),
                "two derivations coincide up to isomorphism");
}

// --------------------------------------------------------------- criterion 3

void criterion_upsilon_confluence() {
    Signature sig = make_ib_signature();
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        InterfacedGraph g = random_changer_graph(sig, rng);
        InterfacedGraph ref = upsilon_normalize(g);
        for (int k = 0; k < 4; ++k) {
            Rng prng(1000 * i + k);
            InterfacedGraph alt = upsilon_normalize(
                g, [&prng](const std::vector<NodeId>& cand) {
                    return static_cast<int>(prng() % cand.size());
                });
            req(interfaced_iso(ref, alt),
                "changer cancellation produced non-isomorphic normal forms");
        }
    }
}

// --------------------------------------------------------------- criterion 4

PolySignature counterexample_poly() {
    Signature base;
    ColourId w = base.add_colour("w");
    base.mark_frobenius(w);
    base.add_generator("o", {}, {w});
    base.add_generator("rm", {w, w}, {w});
    base.add_generator("ru", {}, {w});
    base.add_generator("rcm", {w}, {w, w});
    base.add_generator("rcu", {w}, {});
    return PolySignature::make(base, {{"r", "rm", "ru", "rcm", "rcu"}});
}

void criterion_boundary_transform() {
    PolySignature ps = counterexample_poly();
    TermPtr host = parse_term(ps.base, "ru ; rcu");

    // untransformed rules get stuck on the normalized host
    auto naive_side = [&](const char* src) {
        return upsilon_normalize_cospan(
            interp(ps.poly, *chrome(ps, *parse_term(ps.base, src))));
    };
    Rule beta_naive{"beta", naive_side("o ; rcu"), naive_side("id[0]")};
    Rule alpha_naive{"alpha", naive_side("ru"), naive_side("o")};
    InterfacedGraph nf =
        upsilon_normalize(fold(interp(ps.poly, *chrome(ps, *host))).ig);
    req(nf.graph.num_nodes() == 1, "normalized host should be a single node");
    ClosureResult naive = rewrite_closure({beta_naive, alpha_naive}, nf, 20);
    req(naive.log.empty(), "untransformed rules unexpectedly applied");
    req(naive.graph.graph.num_nodes() == 1, "stuck host changed anyway");

    // transformed rules complete the derivation to the empty diagram
    std::vector<Rule> rules = prepare_rules(
        ps,
        {{parse_term(ps.base, "o ; rcu"), parse_term(ps.base, "id[0]")},
         {parse_term(ps.base, "ru"), parse_term(ps.base, "o")}},
        {"beta", "alpha"});
    MultifrobResult res = multifrob_rewrite(ps, rules, *host, 20);
    req(!res.budget_exhausted, "transformed rewriting ran out of budget");
    req(res.graph.graph.num_nodes() == 0 && res.graph.graph.num_edges() == 0,
        "transformed rewriting did not reach the empty diagram");
    req(res.log.size() == 2, "expected a two-step derivation");
}

// --------------------------------------------------------------- criterion 5

void criterion_group_strategy() {
    Signature sig = make_group_signature();
    GroupRules rules = make_group_rules(sig);
    FiniteModel z3 = make_group_model(sig, 3);
    Rng rng(20240517);
    for (int i = 0; i < 100; ++i) {
        InterfacedGraph host = random_group_host(sig, rng, 8, 6);
        int budget = 10 * host.graph.num_edges();
        GroupReduceResult res = group_reduce(sig, rules, host, budget);
        req(!res.budget_exhausted,
            "host " + std::to_string(i) + " needed more than 10|E| steps");
        for (const GroupStep& s : res.log)
            if (s.naturality)
                req(revlex_less(s.profile_after, s.profile_before),
                    "a naturality step did not decrease the depth profile");
        req(eval_graph(z3, host, 1e8) == eval_graph(z3, res.graph, 1e8),
            "host " + std::to_string(i) + ": Z3 interpretation changed");
    }
}

// --------------------------------------------------------------- criterion 6

void criterion_ib_strategy() {
    Signature sig = make_ib_signature();
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Cospan host = random_ib_cospan(sig, 0, rng);
        int interior = 0;
        std::vector<char> has_leg(host.graph.num_nodes(), 0);
        for (NodeId v : host.inputs) has_leg[v] = 1;
        for (NodeId v : host.outputs) has_leg[v] = 1;
        for (NodeId v = 0; v < host.graph.num_nodes(); ++v)
            if (host.graph.node_colour[v] == 0 && !has_leg[v]) ++interior;

        Subspace2 expected = ib_subspace(host);
        IbReduceResult res = ib_reduce(host, 0, [&](const Cospan& snap) {
            req(subspace_equal(ib_subspace(snap), expected),
                "an elimination step changed the GF(2) subspace");
        });
        req(!res.budget_exhausted, "reduction ran out of budget");
        req(res.eliminations == interior,
            "host " + std::to_string(i) + ": expected " + std::to_string(interior) +
                " eliminations, got " + std::to_string(res.eliminations));
        IbReducedReport rep = ib_is_reduced(res.graph, 0);
        req(rep.reduced, "result not reduced: " + rep.reason);
        req(subspace_equal(readoff_reduced(res.graph), expected),
            "read-off of the reduced form disagrees with the semantics");
    }
}

// --------------------------------------------------------------- criterion 7

Cospan homogeneous_system_host(const Signature& sig) {
    Cospan c;
    c.graph = Hypergraph(sig);
    NodeId x0 = c.graph.add_node(0);
    NodeId x1 = c.graph.add_node(0);
    NodeId z = c.graph.add_node(0);
    NodeId y = c.graph.add_node(0);
    NodeId d = c.graph.add_node(1);
    NodeId e0 = c.graph.add_node(1);
    NodeId e1 = c.graph.add_node(1);
    NodeId e2 = c.graph.add_node(1);
    GenId br = *sig.generator_by_name("chg[b,r]");
    GenId rb = *sig.generator_by_name("chg[r,b]");
    c.graph.add_edge(br, {x0}, {d});
    c.graph.add_edge(br, {x1}, {d});
    c.graph.add_edge(rb, {d}, {z});
    c.graph.add_edge(br, {z}, {e0});
    c.graph.add_edge(rb, {e0}, {y});
    c.graph.add_edge(rb, {e1}, {y});
    c.graph.add_edge(br, {z}, {e2});
    c.inputs = {x0, x1};
    c.outputs = {y};
    return c;
}

void criterion_both_directions() {
    Signature sig = make_ib_signature();
    Cospan host = homogeneous_system_host(sig);
    Subspace2 expected = span2(3, {0b011});
    req(subspace_equal(ib_subspace(host), expected),
        "host subspace is not span{(1,1,0)}");

    IbReduceResult cform = ib_reduce(host, 0);
    req(cform.eliminations == 1, "cospan direction: expected 1 elimination");
    req(ib_is_reduced(cform.graph, 0).reduced, "cospan direction not reduced");
    req(reduced_equations(cform.graph) ==
            std::vector<std::vector<int>>({{0, 1}, {0, 1, 2}, {2}}),
        "cospan direction produced the wrong equation set");
    req(subspace_equal(readoff_reduced(cform.graph), expected),
        "cospan read-off disagrees");

    Cospan swapped = ib_colour_swap(host);
    req(subspace_equal(ib_subspace(swapped), expected),
        "colour swap changed the subspace");
    IbReduceResult sform = ib_reduce(swapped, 1);
    req(sform.eliminations == 4, "span direction: expected 4 eliminations, got " +
                                     std::to_string(sform.eliminations));
    req(ib_is_reduced(sform.graph, 1).reduced, "span direction not reduced");
    req(subspace_equal(readoff_span(sform.graph, 0), expected),
        "span read-off disagrees");
}

// --------------------------------------------------------------- criterion 8

void criterion_random_rules() {
    Signature sig;
    ColourId w = sig.add_colour("w");
    sig.mark_frobenius(w);
    sig.add_generator("f", {w}, {w});
    sig.add_generator("k", {w, w}, {w});

    FiniteModel m2(sig, {2});
    m2.set_relation("f", {{0, 1}, {1, 0}});
    m2.set_relation("k", {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});

    // seed pairs that are equal in this model, then search for more
    std::vector<std::pair<TermPtr, TermPtr>> pairs;
    auto add = [&](const char* l, const char* r) {
        pairs.push_back({parse_term(sig, l), parse_term(sig, r)});
    };
    add("frob.comult[w] ; frob.mult[w]", "id[1]");
    add("f ; f", "id[1]");
    add("sym[1,1] ; k", "k");
    add("(f + f) ; k", "k");
    add("k ; f", "(f + id[1]) ; k");
    add("frob.comult[w] ; k", "frob.counit[w] ; frob.unit[w]");

    Rng rng(99);
    int attempts = 0;
    while (pairs.size() < 50 && attempts < 20000) {
        ++attempts;
        Word dom = random_word(sig, 2, rng);
        TermPtr l = random_layered_term(sig, dom, 1 + static_cast<int>(rng() % 2), rng);
        TermPtr r = random_layered_term(sig, dom, 1 + static_cast<int>(rng() % 2), rng);
        if (l->cod != r->cod) continue;
        Cospan cl = interp(sig, *l);
        Cospan cr = interp(sig, *r);
        if (cl.graph.num_nodes() > 6 || cl.graph.num_edges() > 4) continue;
        if (cr.graph.num_nodes() > 8) continue;
        if (cospan_iso(cl, cr)) continue;  // trivially equal, not interesting
        if (eval_term(m2, *l) != eval_term(m2, *r)) continue;
        pairs.push_back({l, r});
    }
    req(pairs.size() == 50, "could not assemble 50 model-equal rules (got " +
                                std::to_string(pairs.size()) + ")");

    int applications = 0;
    for (size_t ri = 0; ri < pairs.size(); ++ri) {
        Rule rule = rule_from_terms(sig, "r" + std::to_string(ri), *pairs[ri].first,
                                    *pairs[ri].second);
        for (int h = 0; h < 20; ++h) {
            Word dom = random_word(sig, 3, rng);
            TermPtr t =
                random_layered_term(sig, dom, 1 + static_cast<int>(rng() % 3), rng);
            Cospan c = interp(sig, *t);
            if (c.graph.num_nodes() > 12) continue;
            InterfacedGraph host = fold(c).ig;
            std::vector<Match> ms;
            try {
                ms = find_matches(rule, host);
            } catch (const Error&) {
                continue;  // boundary fibre beyond the enumeration limit
            }
            if (ms.empty()) continue;
            InterfacedGraph out = rewrite_step(rule, host, ms[0]);
            req(eval_graph(m2, host) == eval_graph(m2, out),
                "rule " + rule.name + " changed the carrier-2 interpretation");
            ++applications;
        }
    }
    req(applications >= 100, "too few rule applications exercised (" +
                                 std::to_string(applications) + ")");
}

// --------------------------------------------------------------- criterion 9

void criterion_order_and_oracles() {
    // (a) the revlex comparison is a strict total order
    Rng rng(123);
    auto rand_profile = [&]() {
        std::vector<int> v(rng() % 5);
        for (int& x : v) x = static_cast<int>(rng() % 4);
        return v;
    };
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> a = rand_profile(), b = rand_profile(), c = rand_profile();
        req(!revlex_less(a, a), "revlex is not irreflexive");
        if (revlex_less(a, b)) req(!revlex_less(b, a), "revlex is not asymmetric");
        if (a != b)
            req(revlex_less(a, b) || revlex_less(b, a), "revlex is not total");
        if (revlex_less(a, b) && revlex_less(b, c))
            req(revlex_less(a, c), "revlex is not transitive");
    }

    // (b) compositional and graph evaluation agree on random terms
    Signature gsig = make_group_signature();
    FiniteModel z3 = make_group_model(gsig, 3);
    int done = 0;
    for (int i = 0; i < 2000 && done < 200; ++i) {
        Word dom = random_word(gsig, 3, rng);
        TermPtr t =
            random_layered_term(gsig, dom, 1 + static_cast<int>(rng() % 3), rng);
        Cospan c = interp(gsig, *t);
        if (c.graph.num_nodes() > 13) continue;
        req(eval_term(z3, *t) == eval_graph(z3, c),
            "term and graph evaluation disagree on: " + term_str(gsig, *t));
        ++done;
    }
    req(done == 200, "could not draw 200 small random terms");

    // (c) the reduced read-off matches the subspace semantics
    Signature ib = make_ib_signature();
    for (int i = 0; i < 100; ++i) {
        Cospan host = random_ib_cospan(ib, 0, rng);
        IbReduceResult res = ib_reduce(host, 0);
        req(!res.budget_exhausted, "reduction ran out of budget");
        req(subspace_equal(readoff_reduced(res.graph), ib_subspace(host)),
            "read-off oracle mismatch on host " + std::to_string(i));
    }
}

struct Criterion {
    int id;
    const char* title;
    void (*run)();
    double limit_secs;  // 0 means no individual limit
};

const Criterion kCriteria[] = {
    {1, "frobenius and smc axioms hold under 100 random contexts",
     criterion_axiom_soundness, 0},
    {2, "match and pushout-complement counts on the double-wire host",
     criterion_complement_counts, 1.0},
    {3, "changer cancellation is confluent on 200 random graphs, 5 orders",
     criterion_upsilon_confluence, 30.0},
    {4, "boundary transform unsticks the counterexample derivation",
     criterion_boundary_transform, 0},
    {5, "group strategy terminates in 10|E| steps and preserves Z3",
     criterion_group_strategy, 120.0},
    {6, "bialgebra strategy counts eliminations and preserves GF(2)",
     criterion_ib_strategy, 120.0},
    {7, "the system host reduces in both colour directions",
     criterion_both_directions, 0},
    {8, "random model-equal rules preserve the carrier-2 interpretation",
     criterion_random_rules, 60.0},
    {9, "order laws and oracle agreement on random inputs",
     criterion_order_and_oracles, 0},
};

}  // namespace

int main() {
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (error.empty() && c.limit_secs > 0 && secs > c.limit_secs) {
            std::ostringstream os;
            os << "time limit exceeded (" << secs << "s > " << c.limit_secs << "s)";
            error = os.str();
        }
        if (error.empty()) {
            std::printf("[PASS] criterion %d: %s (%.2fs)\n", c.id, c.title, secs);
        } else {
            std::printf("[FAIL] criterion %d: %s (%.2fs): %s\n", c.id, c.title, secs,
                        error.c_str());
            ++failures;
        }
    }
    return failures;
}
