#include "frobrw/strategies.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frobrw {

Signature make_group_signature() {
    Signature sig;
    ColourId w = sig.add_colour("w");
    sig.mark_frobenius(w);
    sig.add_generator("m", {w, w}, {w});
    sig.add_generator("i", {w}, {w});
    sig.add_generator("u", {}, {w});
    sig.require_valid();
    return sig;
}

int branching_degree(const InterfacedGraph& g, NodeId v) {
    int legs = static_cast<int>(std::count(g.interface.begin(), g.interface.end(), v));
    return std::max(0, degree(g.graph, v) + legs - 2);
}

int branching_depth(const InterfacedGraph& g, EdgeId e) {
    const Hypergraph& h = g.graph;
    if (!is_acyclic(h)) throw Error("branching depth needs an acyclic graph");
    if (e < 0 || e >= h.num_edges()) throw Error("edge id out of range");

    std::vector<char> is_source(h.num_nodes(), 0);
    for (const auto& ed : h.edges)
        for (NodeId v : ed.sources) is_source[v] = 1;

    const int INF = 1 << 28;
    std::vector<int> dist(h.num_nodes(), INF);
    for (NodeId v : h.edges[e].targets)
        dist[v] = std::min(dist[v], branching_degree(g, v));
    // Relax until fixed point; graphs are small and weights non-negative.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& ed : h.edges) {
            int best = INF;
            for (NodeId v : ed.sources) best = std::min(best, dist[v]);
            if (best >= INF) continue;
            for (NodeId v : ed.targets) {
                int cand = best + branching_degree(g, v);
                if (cand < dist[v]) {
                    dist[v] = cand;
                    changed = true;
                }
            }
        }
    }
    int best = INF;
    for (NodeId v = 0; v < h.num_nodes(); ++v)
        if (!is_source[v]) best = std::min(best, dist[v]);
    if (best >= INF)
        throw Error("edge " + std::to_string(e) + " reaches no sink node");
    return best;
}

std::vector<int> depth_profile(const InterfacedGraph& g) {
    std::vector<int> prof;
    for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
        int d = branching_depth(g, e);
        if (static_cast<int>(prof.size()) <= d) prof.resize(d + 1, 0);
        ++prof[d];
    }
    while (!prof.empty() && prof.back() == 0) prof.pop_back();
    return prof;
}

bool revlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

GroupRules make_group_rules(const Signature& sig) {
    GroupRules r;
    auto add = [&](std::vector<Rule>& v, const char* name, const char* l, const char* r2) {
        v.push_back(rule_from_terms(sig, name, std::string(l), std::string(r2)));
    };
    add(r.structural, "assoc", "(m + id[1]) ; m", "(id[1] + m) ; m");
    add(r.structural, "unit-left", "(u + id[1]) ; m", "id[1]");
    add(r.structural, "unit-right", "(id[1] + u) ; m", "id[1]");
    add(r.structural, "inverse", "frob.comult[w] ; (id[1] + i) ; m", "frob.counit[w] ; u");
    add(r.naturality, "nat-m-copy", "m ; frob.comult[w]",
        "(frob.comult[w] + frob.comult[w]) ; (id[1] + sym[1,1] + id[1]) ; (m + m)");
    add(r.naturality, "nat-m-delete", "m ; frob.counit[w]",
        "frob.counit[w] + frob.counit[w]");
    add(r.naturality, "nat-i-copy", "i ; frob.comult[w]", "frob.comult[w] ; (i + i)");
    add(r.naturality, "nat-i-delete", "i ; frob.counit[w]", "frob.counit[w]");
    add(r.naturality, "nat-u-copy", "u ; frob.comult[w]", "u + u");
    add(r.naturality, "nat-u-delete", "u ; frob.counit[w]", "id[0]");
    return r;
}

GroupReduceResult group_reduce(const Signature& sig, const GroupRules& rules,
                               InterfacedGraph host, int max_steps) {
    (void)sig;
    if (!is_acyclic(host.graph)) throw Error("group reduction needs an acyclic host");
    GroupReduceResult res;
    while (res.steps < max_steps) {
        bool applied = false;
        for (const Rule& rule : rules.structural) {
            std::vector<Match> matches;
            try {
                matches = find_matches(rule, host);
            } catch (const Error&) {
                continue;  // a boundary fibre grew past the enumeration limit
            }
            for (const Match& m : matches) {
                InterfacedGraph cand = rewrite_step(rule, host, m);
                // merging boundary nodes may close a cycle; keep such hosts out
                if (!is_acyclic(cand.graph)) continue;
                GroupStep step{rule.name, false, depth_profile(host), {}};
                host = std::move(cand);
                step.profile_after = depth_profile(host);
                res.log.push_back(std::move(step));
                ++res.steps;
                applied = true;
                break;
            }
            if (applied) break;
        }
        if (applied) continue;
        for (const Rule& rule : rules.naturality) {
            std::vector<Match> matches;
            try {
                matches = find_matches(rule, host);
            } catch (const Error&) {
                continue;  // a boundary fibre grew past the enumeration limit
            }
            std::vector<int> before = depth_profile(host);
            for (const Match& m : matches) {
                InterfacedGraph cand = rewrite_step(rule, host, m);
                if (!is_acyclic(cand.graph)) continue;
                std::vector<int> after = depth_profile(cand);
                if (!revlex_less(after, before)) continue;
                host = std::move(cand);
                res.log.push_back({rule.name, true, before, after});
                ++res.steps;
                applied = true;
                break;
            }
            if (applied) break;
        }
        if (!applied) {
            res.graph = std::move(host);
            return res;
        }
    }
    res.graph = std::move(host);
    res.budget_exhausted = true;
    return res;
}

// ---------------------------------------------------------------------------
// Interacting-bialgebra reduction
// ---------------------------------------------------------------------------

Signature make_ib_signature() {
    Signature sig;
    ColourId b = sig.add_colour("b");
    ColourId r = sig.add_colour("r");
    sig.mark_frobenius(b);
    sig.mark_frobenius(r);
    sig.add_changer(b, r);
    sig.add_changer(r, b);
    sig.require_valid();
    return sig;
}

namespace {

// Undirected working form: edges as (interface-colour node, other node)
// pairs with multiplicity already reduced mod 2 where noted.
struct IbWork {
    const Signature* sig = nullptr;
    ColourId icol = 0, ocol = 0;
    std::vector<ColourId> colour;
    std::vector<char> alive;
    std::vector<std::pair<NodeId, NodeId>> edges;  // (iface side, other side)
    std::vector<NodeId> inputs, outputs;

    int leg_count(NodeId v, bool input_side) const {
        const auto& legs = input_side ? inputs : outputs;
        return static_cast<int>(std::count(legs.begin(), legs.end(), v));
    }
    bool has_legs(NodeId v) const { return leg_count(v, true) + leg_count(v, false) > 0; }
};

IbWork ib_build(const Cospan& host, ColourId interface_colour) {
    const Hypergraph& g = host.graph;
    IbWork w;
    w.sig = g.sig;
    w.icol = interface_colour;
    if (g.sig->colours.size() != 2) throw Error("reduction needs a two-colour signature");
    w.ocol = 1 - interface_colour;
    w.colour = g.node_colour;
    w.alive.assign(g.num_nodes(), 1);
    w.inputs = host.inputs;
    w.outputs = host.outputs;
    for (NodeId v : w.inputs)
        if (g.node_colour[v] != interface_colour)
            throw Error("interface contains a node of the wrong colour");
    for (NodeId v : w.outputs)
        if (g.node_colour[v] != interface_colour)
            throw Error("interface contains a node of the wrong colour");
    for (const auto& ed : g.edges) {
        const Generator& gen = g.sig->generator(ed.label);
        if (!gen.changer || ed.sources.size() != 1 || ed.targets.size() != 1)
            throw Error("host is not a changer graph");
        NodeId s = ed.sources[0], t = ed.targets[0];
        if (g.node_colour[s] == interface_colour)
            w.edges.push_back({s, t});
        else
            w.edges.push_back({t, s});
    }
    return w;
}

void ib_cancel_parallel(IbWork& w) {
    std::map<std::pair<NodeId, NodeId>, int> mult;
    for (const auto& e : w.edges) ++mult[e];
    w.edges.clear();
    for (const auto& [e, n] : mult)
        if (n % 2) w.edges.push_back(e);
    std::sort(w.edges.begin(), w.edges.end());
}

void ib_drop_isolated_other(IbWork& w) {
    std::set<NodeId> incident;
    for (const auto& e : w.edges) incident.insert(e.second);
    for (NodeId v = 0; v < static_cast<NodeId>(w.colour.size()); ++v)
        if (w.alive[v] && w.colour[v] == w.ocol && !incident.count(v)) w.alive[v] = 0;
}

void ib_kmn(IbWork& w, NodeId v, NodeId ww) {
    std::vector<NodeId> others_v, others_w;
    for (const auto& e : w.edges) {
        if (e.first == v && e.second != ww) others_v.push_back(e.second);
        if (e.second == ww && e.first != v) others_w.push_back(e.first);
    }
    std::vector<std::pair<NodeId, NodeId>> kept;
    for (const auto& e : w.edges)
        if (e.first != v && e.second != ww) kept.push_back(e);
    w.edges = std::move(kept);
    for (NodeId b : others_w)
        for (NodeId r : others_v) w.edges.push_back({b, r});
    w.alive[v] = 0;
    w.alive[ww] = 0;
    ib_cancel_parallel(w);
}

// Splits interface-colour nodes with several legs on one side and none on
// the other into a chain of single-leg nodes linked by fresh parity nodes
// enforcing pairwise equality; existing edges stay on the first copy.
void ib_split_multilegs(IbWork& w) {
    for (NodeId v = 0; v < static_cast<NodeId>(w.colour.size()); ++v) {
        if (!w.alive[v] || w.colour[v] != w.icol) continue;
        for (bool input_side : {true, false}) {
            int same = w.leg_count(v, input_side);
            int other = w.leg_count(v, !input_side);
            if (same < 2 || other != 0) continue;
            auto& legs = input_side ? w.inputs : w.outputs;
            std::vector<NodeId> chain{v};
            for (int j = 1; j < same; ++j) {
                NodeId nv = static_cast<NodeId>(w.colour.size());
                w.colour.push_back(w.icol);
                w.alive.push_back(1);
                chain.push_back(nv);
                NodeId eq = static_cast<NodeId>(w.colour.size());
                w.colour.push_back(w.ocol);
                w.alive.push_back(1);
                w.edges.push_back({chain[j - 1], eq});
                w.edges.push_back({chain[j], eq});
            }
            int seen = 0;
            for (NodeId& l : legs)
                if (l == v) l = chain[seen++];
        }
    }
}

Cospan ib_emit(const IbWork& w, bool orient) {
    Cospan out;
    out.graph = Hypergraph(*w.sig);
    std::vector<NodeId> nm(w.colour.size(), -1);
    for (NodeId v = 0; v < static_cast<NodeId>(w.colour.size()); ++v)
        if (w.alive[v]) nm[v] = out.graph.add_node(w.colour[v]);
    GenId fwd = *w.sig->generator_by_name(changer_name(*w.sig, w.icol, w.ocol));
    GenId bwd = *w.sig->generator_by_name(changer_name(*w.sig, w.ocol, w.icol));
    for (const auto& [a, b] : w.edges) {
        bool forwards = !orient || w.leg_count(a, true) > 0;
        if (forwards)
            out.graph.add_edge(fwd, {nm[a]}, {nm[b]});
        else
            out.graph.add_edge(bwd, {nm[b]}, {nm[a]});
    }
    for (NodeId v : w.inputs) out.inputs.push_back(nm[v]);
    for (NodeId v : w.outputs) out.outputs.push_back(nm[v]);
    return out;
}

}  // namespace

IbReducedReport ib_is_reduced(const Cospan& host, ColourId interface_colour) {
    if (!is_acyclic(host.graph)) return {false, "graph has a directed cycle"};
    IbWork w;
    try {
        w = ib_build(host, interface_colour);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    const Hypergraph& g = host.graph;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.node_colour[v] != interface_colour) continue;
        int li = w.leg_count(v, true), lo = w.leg_count(v, false);
        int in_edges = 0, out_edges = 0;
        for (const auto& ed : g.edges) {
            if (ed.targets[0] == v) ++in_edges;
            if (ed.sources[0] == v) ++out_edges;
        }
        std::string at = "node " + std::to_string(v);
        if (li >= 1 && lo >= 1) continue;  // type (IO)
        if (li == 1 && lo == 0) {
            if (in_edges > 0) return {false, at + ": input-type node has in-edges"};
            continue;
        }
        if (lo == 1 && li == 0) {
            if (out_edges > 0) return {false, at + ": output-type node has out-edges"};
            continue;
        }
        if (li == 0 && lo == 0) return {false, at + ": interior interface-colour node"};
        return {false, at + ": several legs on one side only"};
    }
    return {true, ""};
}

Cospan apply_Kmn(const Cospan& host, NodeId v, NodeId ww, ColourId interface_colour) {
    IbWork w = ib_build(host, interface_colour);
    ib_cancel_parallel(w);
    if (w.colour[v] != w.icol || w.has_legs(v))
        throw Error("pivot node is not an interior interface-colour node");
    if (!std::count(w.edges.begin(), w.edges.end(), std::make_pair(v, ww)))
        throw Error("chosen neighbour is not connected with odd multiplicity");
    ib_kmn(w, v, ww);
    ib_drop_isolated_other(w);
    return ib_emit(w, false);
}

IbReduceResult ib_reduce(const Cospan& host, ColourId interface_colour,
                         const std::function<void(const Cospan&)>& after_step) {
    IbWork w = ib_build(host, interface_colour);
    IbReduceResult res;
    int guard = static_cast<int>(w.colour.size()) + 8;
    while (true) {
        if (--guard < 0) {
            res.budget_exhausted = true;
            break;
        }
        ib_cancel_parallel(w);
        ib_drop_isolated_other(w);
        NodeId v = -1;
        for (NodeId u = 0; u < static_cast<NodeId>(w.colour.size()); ++u)
            if (w.alive[u] && w.colour[u] == w.icol && !w.has_legs(u)) { v = u; break; }
        if (v < 0) break;
        NodeId ww = -1;
        for (const auto& e : w.edges)
            if (e.first == v) { ww = e.second; break; }
        if (ww < 0) {
            w.alive[v] = 0;  // isolated interior node, deleted outright
        } else {
            ib_kmn(w, v, ww);
        }
        ++res.eliminations;
        if (after_step) {
            IbWork snap = w;
            ib_drop_isolated_other(snap);
            after_step(ib_emit(snap, false));
        }
    }
    ib_cancel_parallel(w);
    ib_drop_isolated_other(w);
    ib_split_multilegs(w);
    res.graph = ib_emit(w, true);
    return res;
}

Cospan ib_colour_swap(const Cospan& host) {
    const Hypergraph& g = host.graph;
    if (g.sig->colours.size() != 2) throw Error("colour swap needs a two-colour signature");
    Cospan out;
    out.graph = g;
    out.inputs = host.inputs;
    out.outputs = host.outputs;
    auto swap_leg = [&](NodeId v, bool input_side) {
        ColourId c = out.graph.colour_of(v);
        ColourId oc = 1 - c;
        NodeId nv = out.graph.add_node(oc);
        GenId in_chg = *g.sig->generator_by_name(changer_name(*g.sig, oc, c));
        GenId out_chg = *g.sig->generator_by_name(changer_name(*g.sig, c, oc));
        if (input_side)
            out.graph.add_edge(in_chg, {nv}, {v});
        else
            out.graph.add_edge(out_chg, {v}, {nv});
        return nv;
    };
    for (NodeId& v : out.inputs) v = swap_leg(v, true);
    for (NodeId& v : out.outputs) v = swap_leg(v, false);
    return out;
}

}  // namespace frobrw
