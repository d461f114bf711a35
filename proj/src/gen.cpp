#include "frobrw/gen.hpp"

#include <algorithm>

#include "frobrw/cospan.hpp"

namespace frobrw {

Word random_word(const Signature& sig, int max_len, Rng& rng) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> col(0, static_cast<int>(sig.colours.size()) - 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(col(rng));
    return w;
}

namespace {

// One layer: consume the boundary word left to right, emitting a parallel
// composition of pieces; occasionally insert an arity-0 piece.
TermPtr random_layer(const Signature& sig, const Word& w, Rng& rng, bool allow_frob) {
    std::uniform_int_distribution<int> coin(0, 99);
    std::vector<TermPtr> pieces;
    auto starters = [&]() {
        std::vector<TermPtr> zs;
        for (const Generator& g : sig.generators)
            if (g.arity.empty()) zs.push_back(t_gen(sig, g.id));
        if (allow_frob)
            for (ColourId c : sig.frobenius_colours)
                zs.push_back(t_frob(sig, c, FrobKind::Unit));
        return zs;
    }();

    size_t i = 0;
    while (i < w.size()) {
        if (!starters.empty() && coin(rng) < 8) {
            pieces.push_back(starters[rng() % starters.size()]);
            continue;
        }
        std::vector<TermPtr> opts;
        opts.push_back(t_id(sig, {w[i]}));
        if (i + 1 < w.size()) {
            opts.push_back(t_sym(sig, {w[i]}, {w[i + 1]}));
            if (allow_frob && w[i] == w[i + 1] && sig.is_frobenius(w[i]))
                opts.push_back(t_frob(sig, w[i], FrobKind::Mult));
        }
        if (allow_frob && sig.is_frobenius(w[i])) {
            opts.push_back(t_frob(sig, w[i], FrobKind::Comult));
            opts.push_back(t_frob(sig, w[i], FrobKind::Counit));
        }
        for (const Generator& g : sig.generators) {
            if (g.arity.empty() || i + g.arity.size() > w.size()) continue;
            if (std::equal(g.arity.begin(), g.arity.end(), w.begin() + i))
                opts.push_back(t_gen(sig, g.id));
        }
        TermPtr pick = opts[rng() % opts.size()];
        i += pick->dom.size();
        pieces.push_back(pick);
    }
    if (pieces.empty()) {
        if (!starters.empty() && coin(rng) < 20)
            return starters[rng() % starters.size()];
        return t_id(sig, {});
    }
    TermPtr layer = pieces[0];
    for (size_t k = 1; k < pieces.size(); ++k) layer = t_par(sig, layer, pieces[k]);
    return layer;
}

}  // namespace

TermPtr random_layered_term(const Signature& sig, const Word& dom, int layers, Rng& rng,
                           bool allow_frobenius) {
    TermPtr t = t_id(sig, dom);
    Word w = dom;
    for (int l = 0; l < layers; ++l) {
        TermPtr layer = random_layer(sig, w, rng, allow_frobenius);
        t = t_seq(sig, t, layer);
        w = layer->cod;
    }
    return t;
}

InterfacedGraph random_group_host(const Signature& sig, Rng& rng, int max_nodes,
                                  int max_edges) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Word dom = random_word(sig, 3, rng);
        TermPtr t = random_layered_term(sig, dom, 1 + static_cast<int>(rng() % 4), rng);
        Cospan c = interp(sig, *t);
        if (c.graph.num_edges() < 1 || c.graph.num_edges() > max_edges) continue;
        if (c.graph.num_nodes() > max_nodes) continue;
        if (!is_acyclic(c.graph)) continue;
        return fold(c).ig;
    }
    throw Error("failed to generate an acyclic host");
}

InterfacedGraph random_changer_graph(const Signature& sig, Rng& rng, int max_nodes,
                                     int max_edges) {
    InterfacedGraph g;
    g.graph = Hypergraph(sig);
    int n = 2 + static_cast<int>(rng() % (max_nodes - 1));
    for (int i = 0; i < n; ++i) g.graph.add_node(static_cast<ColourId>(rng() % 2));
    std::vector<NodeId> by_colour[2];
    for (NodeId v = 0; v < g.graph.num_nodes(); ++v)
        by_colour[g.graph.node_colour[v]].push_back(v);
    if (by_colour[0].empty() || by_colour[1].empty()) return g;
    GenId fwd = *sig.generator_by_name(changer_name(sig, 0, 1));
    GenId bwd = *sig.generator_by_name(changer_name(sig, 1, 0));
    int e = static_cast<int>(rng() % (max_edges + 1));
    for (int k = 0; k < e; ++k) {
        NodeId a = by_colour[0][rng() % by_colour[0].size()];
        NodeId b = by_colour[1][rng() % by_colour[1].size()];
        if (rng() % 2)
            g.graph.add_edge(fwd, {a}, {b});
        else
            g.graph.add_edge(bwd, {b}, {a});
    }
    int legs = static_cast<int>(rng() % 4);
    for (int k = 0; k < legs; ++k)
        g.interface.push_back(static_cast<NodeId>(rng() % g.graph.num_nodes()));
    return g;
}

Cospan random_ib_cospan(const Signature& sig, ColourId interface_colour, Rng& rng,
                        int max_each_colour, int max_edges, int max_legs) {
    ColourId other = 1 - interface_colour;
    Cospan c;
    c.graph = Hypergraph(sig);
    int ni = 1 + static_cast<int>(rng() % max_each_colour);
    int no = 1 + static_cast<int>(rng() % max_each_colour);
    std::vector<NodeId> ivs, ovs;
    for (int k = 0; k < ni; ++k) ivs.push_back(c.graph.add_node(interface_colour));
    for (int k = 0; k < no; ++k) ovs.push_back(c.graph.add_node(other));
    GenId fwd = *sig.generator_by_name(changer_name(sig, interface_colour, other));
    GenId bwd = *sig.generator_by_name(changer_name(sig, other, interface_colour));
    int e = static_cast<int>(rng() % (max_edges + 1));
    for (int k = 0; k < e; ++k) {
        NodeId a = ivs[rng() % ivs.size()];
        NodeId b = ovs[rng() % ovs.size()];
        if (rng() % 2)
            c.graph.add_edge(fwd, {a}, {b});
        else
            c.graph.add_edge(bwd, {b}, {a});
    }
    int li = static_cast<int>(rng() % (max_legs + 1));
    int lo = static_cast<int>(rng() % (max_legs + 1));
    for (int k = 0; k < li; ++k) c.inputs.push_back(ivs[rng() % ivs.size()]);
    for (int k = 0; k < lo; ++k) c.outputs.push_back(ivs[rng() % ivs.size()]);
    return c;
}

}  // namespace frobrw
