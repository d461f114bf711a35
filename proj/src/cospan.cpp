#include "frobrw/cospan.hpp"

namespace frobrw {

Word Cospan::dom() const {
    Word w;
    for (NodeId v : inputs) w.push_back(graph.colour_of(v));
    return w;
}

Word Cospan::cod() const {
    Word w;
    for (NodeId v : outputs) w.push_back(graph.colour_of(v));
    return w;
}

void Cospan::check() const {
    graph.check_labelled();
    for (NodeId v : inputs)
        if (v < 0 || v >= graph.num_nodes()) throw Error("input leg out of range");
    for (NodeId v : outputs)
        if (v < 0 || v >= graph.num_nodes()) throw Error("output leg out of range");
}

Cospan identity_cospan(const Signature& sig, const Word& w) {
    Cospan c{Hypergraph(sig), {}, {}};
    for (ColourId col : w) {
        NodeId v = c.graph.add_node(col);
        c.inputs.push_back(v);
        c.outputs.push_back(v);
    }
    return c;
}

Cospan symmetry_cospan(const Signature& sig, const Word& v, const Word& w) {
    Cospan c{Hypergraph(sig), {}, {}};
    std::vector<NodeId> vs, ws;
    for (ColourId col : v) vs.push_back(c.graph.add_node(col));
    for (ColourId col : w) ws.push_back(c.graph.add_node(col));
    c.inputs = vs;
    c.inputs.insert(c.inputs.end(), ws.begin(), ws.end());
    c.outputs = ws;
    c.outputs.insert(c.outputs.end(), vs.begin(), vs.end());
    return c;
}

Cospan generator_cospan(const Signature& sig, GenId g) {
    const Generator& gen = sig.generator(g);
    Cospan c{Hypergraph(sig), {}, {}};
    for (ColourId col : gen.arity) c.inputs.push_back(c.graph.add_node(col));
    for (ColourId col : gen.coarity) c.outputs.push_back(c.graph.add_node(col));
    c.graph.add_edge(g, c.inputs, c.outputs);
    return c;
}

Cospan frobenius_cospan(const Signature& sig, ColourId c, FrobKind kind) {
    if (!sig.is_frobenius(c))
        throw Error("colour " + sig.colour(c).name + " carries no Frobenius structure");
    Cospan cs{Hypergraph(sig), {}, {}};
    NodeId v = cs.graph.add_node(c);
    switch (kind) {
        case FrobKind::Mult: cs.inputs = {v, v}; cs.outputs = {v}; break;
        case FrobKind::Unit: cs.outputs = {v}; break;
        case FrobKind::Comult: cs.inputs = {v}; cs.outputs = {v, v}; break;
        case FrobKind::Counit: cs.inputs = {v}; break;
    }
    return cs;
}

Cospan compose(const Cospan& a, const Cospan& b) {
    Word mid = a.cod();
    if (mid != b.dom())
        throw Error("composition boundary mismatch: " + a.graph.sig->word_str(mid) +
                    " vs " + b.graph.sig->word_str(b.dom()));
    PushoutResult po = pushout_discrete(mid, a.outputs, b.inputs, a.graph, b.graph);
    Cospan c{std::move(po.graph), {}, {}};
    for (NodeId v : a.inputs) c.inputs.push_back(po.g_nodes[v]);
    for (NodeId v : b.outputs) c.outputs.push_back(po.h_nodes[v]);
    return c;
}

Cospan tensor(const Cospan& a, const Cospan& b) {
    Cospan c = a;
    int off = c.graph.num_nodes();
    for (ColourId col : b.graph.node_colour) c.graph.add_node(col);
    for (const auto& ed : b.graph.edges) {
        std::vector<NodeId> ss, ts;
        for (NodeId v : ed.sources) ss.push_back(v + off);
        for (NodeId v : ed.targets) ts.push_back(v + off);
        c.graph.add_edge(ed.label, std::move(ss), std::move(ts));
    }
    for (NodeId v : b.inputs) c.inputs.push_back(v + off);
    for (NodeId v : b.outputs) c.outputs.push_back(v + off);
    return c;
}

bool cospan_iso(const Cospan& a, const Cospan& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) return false;
    std::vector<NodeId> forced(a.graph.num_nodes(), -1);
    auto add = [&](const std::vector<NodeId>& xs, const std::vector<NodeId>& ys) {
        for (size_t i = 0; i < xs.size(); ++i) {
            if (forced[xs[i]] >= 0 && forced[xs[i]] != ys[i]) return false;
            forced[xs[i]] = ys[i];
        }
        return true;
    };
    if (!add(a.inputs, b.inputs) || !add(a.outputs, b.outputs)) return false;
    return find_isomorphism(a.graph, b.graph, forced).has_value();
}

FoldedCospan fold(const Cospan& c) {
    FoldedCospan f;
    f.ig.graph = c.graph;
    f.ig.interface = c.inputs;
    f.ig.interface.insert(f.ig.interface.end(), c.outputs.begin(), c.outputs.end());
    f.n_inputs = c.inputs.size();
    f.n_outputs = c.outputs.size();
    return f;
}

Cospan FoldedCospan::unfold() const {
    if (ig.interface.size() != n_inputs + n_outputs)
        throw Error("folded interface does not match recorded split");
    Cospan c;
    c.graph = ig.graph;
    c.inputs.assign(ig.interface.begin(), ig.interface.begin() + n_inputs);
    c.outputs.assign(ig.interface.begin() + n_inputs, ig.interface.end());
    return c;
}

}  // namespace frobrw
