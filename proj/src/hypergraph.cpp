#include "frobrw/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frobrw {

NodeId Hypergraph::add_node(ColourId c) {
    if (!sig) throw Error("hypergraph has no signature");
    sig->colour(c);
    node_colour.push_back(c);
    return static_cast<NodeId>(node_colour.size()) - 1;
}

EdgeId Hypergraph::add_edge(GenId label, std::vector<NodeId> sources,
                            std::vector<NodeId> targets) {
    if (!sig) throw Error("hypergraph has no signature");
    const Generator& g = sig->generator(label);
    auto check = [&](const std::vector<NodeId>& ns, const Word& w, const char* side) {
        if (ns.size() != w.size())
            throw Error("edge labelled " + g.name + " has wrong number of " + side + "s");
        for (size_t i = 0; i < ns.size(); ++i) {
            if (ns[i] < 0 || ns[i] >= num_nodes())
                throw Error("edge endpoint out of range");
            if (node_colour[ns[i]] != w[i])
                throw Error("edge labelled " + g.name + " has mis-coloured " + side);
        }
    };
    check(sources, g.arity, "source");
    check(targets, g.coarity, "target");
    edges.push_back({label, std::move(sources), std::move(targets)});
    return static_cast<EdgeId>(edges.size()) - 1;
}

ColourId Hypergraph::colour_of(NodeId v) const {
    if (v < 0 || v >= num_nodes()) throw Error("node id out of range");
    return node_colour[v];
}

const Hypergraph::Edge& Hypergraph::edge(EdgeId e) const {
    if (e < 0 || e >= num_edges()) throw Error("edge id out of range");
    return edges[e];
}

void Hypergraph::check_labelled() const {
    for (EdgeId e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges[e];
        const Generator& g = sig->generator(ed.label);
        if (ed.sources.size() != g.arity.size() || ed.targets.size() != g.coarity.size())
            throw Error("edge " + std::to_string(e) + " arity mismatch");
        for (size_t i = 0; i < ed.sources.size(); ++i)
            if (colour_of(ed.sources[i]) != g.arity[i])
                throw Error("edge " + std::to_string(e) + " source colour mismatch");
        for (size_t i = 0; i < ed.targets.size(); ++i)
            if (colour_of(ed.targets[i]) != g.coarity[i])
                throw Error("edge " + std::to_string(e) + " target colour mismatch");
    }
}

std::vector<Connection> connections(const Hypergraph& g, NodeId v) {
    std::vector<Connection> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges[e];
        for (size_t i = 0; i < ed.sources.size(); ++i)
            if (ed.sources[i] == v) out.push_back({false, e, static_cast<int>(i)});
        for (size_t i = 0; i < ed.targets.size(); ++i)
            if (ed.targets[i] == v) out.push_back({true, e, static_cast<int>(i)});
    }
    return out;
}

int degree(const Hypergraph& g, NodeId v) {
    return static_cast<int>(connections(g, v).size());
}

namespace {

// 0 = unvisited, 1 = on the current path, 2 = done.
bool acyclic_dfs(const Hypergraph& g, NodeId v, std::vector<int>& state) {
    state[v] = 1;
    for (const auto& ed : g.edges) {
        if (std::find(ed.sources.begin(), ed.sources.end(), v) == ed.sources.end())
            continue;
        for (NodeId t : ed.targets) {
            if (state[t] == 1) return false;
            if (state[t] == 0 && !acyclic_dfs(g, t, state)) return false;
        }
    }
    state[v] = 2;
    return true;
}

}  // namespace

bool is_acyclic(const Hypergraph& g) {
    std::vector<int> state(g.num_nodes(), 0);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (state[v] == 0 && !acyclic_dfs(g, v, state)) return false;
    return true;
}

namespace {

struct HomSearch {
    const Hypergraph& p;
    const Hypergraph& h;
    bool bijective;
    size_t max_results;
    std::vector<NodeId> node_map;
    std::vector<EdgeId> edge_map;
    std::vector<char> node_used;
    std::vector<char> edge_used;
    std::vector<Homomorphism> out;

    HomSearch(const Hypergraph& p_, const Hypergraph& h_, bool bij, size_t max_res)
        : p(p_), h(h_), bijective(bij), max_results(max_res),
          node_map(p_.num_nodes(), -1), edge_map(p_.num_edges(), -1),
          node_used(h_.num_nodes(), 0), edge_used(h_.num_edges(), 0) {}

    bool force(const std::vector<NodeId>& forced) {
        for (size_t v = 0; v < forced.size(); ++v) {
            if (forced[v] < 0) continue;
            if (!assign(static_cast<NodeId>(v), forced[v])) return false;
        }
        return true;
    }

    bool assign(NodeId pv, NodeId hv) {
        if (hv < 0 || hv >= h.num_nodes()) return false;
        if (p.node_colour[pv] != h.node_colour[hv]) return false;
        if (node_map[pv] >= 0) return node_map[pv] == hv;
        if (bijective && node_used[hv]) return false;
        node_map[pv] = hv;
        if (bijective) node_used[hv] = 1;
        return true;
    }

    void unassign(NodeId pv, NodeId prev) {
        if (node_map[pv] >= 0 && prev < 0) {
            if (bijective) node_used[node_map[pv]] = 0;
            node_map[pv] = -1;
        }
    }

    bool try_edge(EdgeId pe, EdgeId he) {
        const auto& a = p.edges[pe];
        const auto& b = h.edges[he];
        if (a.label != b.label) return false;
        if (bijective && edge_used[he]) return false;
        std::vector<std::pair<NodeId, NodeId>> trail;
        auto match_list = [&](const std::vector<NodeId>& xs, const std::vector<NodeId>& ys) {
            for (size_t i = 0; i < xs.size(); ++i) {
                NodeId prev = node_map[xs[i]];
                if (!assign(xs[i], ys[i])) return false;
                trail.push_back({xs[i], prev});
            }
            return true;
        };
        if (match_list(a.sources, b.sources) && match_list(a.targets, b.targets)) {
            edge_map[pe] = he;
            if (bijective) edge_used[he] = 1;
            search_edges(pe + 1);
            edge_map[pe] = -1;
            if (bijective) edge_used[he] = 0;
        }
        for (auto it = trail.rbegin(); it != trail.rend(); ++it)
            unassign(it->first, it->second);
        return out.size() >= max_results;
    }

    void search_edges(EdgeId pe) {
        if (out.size() >= max_results) return;
        if (pe >= p.num_edges()) {
            search_nodes(0);
            return;
        }
        for (EdgeId he = 0; he < h.num_edges(); ++he)
            if (try_edge(pe, he)) return;
    }

    void search_nodes(NodeId pv) {
        if (out.size() >= max_results) return;
        while (pv < p.num_nodes() && node_map[pv] >= 0) ++pv;
        if (pv >= p.num_nodes()) {
            emit();
            return;
        }
        for (NodeId hv = 0; hv < h.num_nodes(); ++hv) {
            NodeId prev = node_map[pv];
            if (assign(pv, hv)) {
                search_nodes(pv + 1);
                unassign(pv, prev);
            }
            if (out.size() >= max_results) return;
        }
    }

    void emit() {
        if (bijective) {
            if (p.num_nodes() != h.num_nodes() || p.num_edges() != h.num_edges()) return;
        }
        out.push_back({node_map, edge_map});
    }
};

bool iso_invariants_match(const Hypergraph& a, const Hypergraph& b) {
    if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
    auto node_inv = [](const Hypergraph& g) {
        std::vector<std::pair<ColourId, int>> inv;
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            inv.push_back({g.node_colour[v], degree(g, v)});
        std::sort(inv.begin(), inv.end());
        return inv;
    };
    auto label_inv = [](const Hypergraph& g) {
        std::vector<GenId> ls;
        for (const auto& e : g.edges) ls.push_back(e.label);
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    return node_inv(a) == node_inv(b) && label_inv(a) == label_inv(b);
}

}  // namespace

std::vector<Homomorphism> find_homomorphisms(const Hypergraph& pattern,
                                             const Hypergraph& host,
                                             size_t max_results) {
    HomSearch s(pattern, host, false, max_results);
    s.search_edges(0);
    return s.out;
}

std::optional<Homomorphism> find_isomorphism(const Hypergraph& a, const Hypergraph& b,
                                             const std::vector<NodeId>& forced_nodes) {
    if (!iso_invariants_match(a, b)) return std::nullopt;
    HomSearch s(a, b, true, 1);
    if (!s.force(forced_nodes)) return std::nullopt;
    s.search_edges(0);
    if (s.out.empty()) return std::nullopt;
    return s.out.front();
}

std::optional<Homomorphism> are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    return find_isomorphism(a, b, std::vector<NodeId>(a.num_nodes(), -1));
}

bool is_homomorphism(const Hypergraph& pattern, const Hypergraph& host,
                     const Homomorphism& hom) {
    if (hom.node_map.size() != static_cast<size_t>(pattern.num_nodes())) return false;
    if (hom.edge_map.size() != static_cast<size_t>(pattern.num_edges())) return false;
    for (NodeId v = 0; v < pattern.num_nodes(); ++v) {
        NodeId w = hom.node_map[v];
        if (w < 0 || w >= host.num_nodes()) return false;
        if (pattern.node_colour[v] != host.node_colour[w]) return false;
    }
    for (EdgeId e = 0; e < pattern.num_edges(); ++e) {
        EdgeId f = hom.edge_map[e];
        if (f < 0 || f >= host.num_edges()) return false;
        const auto& pe = pattern.edges[e];
        const auto& he = host.edges[f];
        if (pe.label != he.label) return false;
        for (size_t i = 0; i < pe.sources.size(); ++i)
            if (hom.node_map[pe.sources[i]] != he.sources[i]) return false;
        for (size_t i = 0; i < pe.targets.size(); ++i)
            if (hom.node_map[pe.targets[i]] != he.targets[i]) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // The smaller root stays representative.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

PushoutResult pushout_discrete(const Word& k, const std::vector<NodeId>& f_into_g,
                               const std::vector<NodeId>& h_into_h,
                               const Hypergraph& g, const Hypergraph& h) {
    if (f_into_g.size() != k.size() || h_into_h.size() != k.size())
        throw Error("pushout leg length mismatch");
    int ng = g.num_nodes(), nh = h.num_nodes();
    for (size_t i = 0; i < k.size(); ++i) {
        if (f_into_g[i] < 0 || f_into_g[i] >= ng || h_into_h[i] < 0 || h_into_h[i] >= nh)
            throw Error("pushout leg out of range");
        if (g.node_colour[f_into_g[i]] != k[i] || h.node_colour[h_into_h[i]] != k[i])
            throw Error("pushout leg colour mismatch");
    }
    UnionFind uf(ng + nh);
    for (size_t i = 0; i < k.size(); ++i) uf.unite(f_into_g[i], ng + h_into_h[i]);

    PushoutResult res;
    res.graph = Hypergraph(*g.sig);
    std::vector<NodeId> cls(ng + nh, -1);
    for (int v = 0; v < ng + nh; ++v) {
        int r = uf.find(v);
        if (cls[r] < 0) {
            ColourId c = r < ng ? g.node_colour[r] : h.node_colour[r - ng];
            cls[r] = res.graph.add_node(c);
        }
        cls[v] = cls[r];
    }
    res.g_nodes.assign(cls.begin(), cls.begin() + ng);
    res.h_nodes.assign(cls.begin() + ng, cls.end());
    auto map_edges = [&](const Hypergraph& src, const std::vector<NodeId>& nm,
                         std::vector<EdgeId>& em) {
        for (const auto& ed : src.edges) {
            std::vector<NodeId> ss, ts;
            for (NodeId v : ed.sources) ss.push_back(nm[v]);
            for (NodeId v : ed.targets) ts.push_back(nm[v]);
            em.push_back(res.graph.add_edge(ed.label, std::move(ss), std::move(ts)));
        }
    };
    map_edges(g, res.g_nodes, res.g_edges);
    map_edges(h, res.h_nodes, res.h_edges);
    return res;
}

Hypergraph signature_graph(const Signature& sig) {
    Hypergraph g(sig);
    for (const Colour& c : sig.colours) g.add_node(c.id);
    for (const Generator& gen : sig.generators) {
        std::vector<NodeId> ss(gen.arity.begin(), gen.arity.end());
        std::vector<NodeId> ts(gen.coarity.begin(), gen.coarity.end());
        g.add_edge(gen.id, std::move(ss), std::move(ts));
    }
    return g;
}

Homomorphism labelling_hom(const Hypergraph& g) {
    Homomorphism h;
    for (NodeId v = 0; v < g.num_nodes(); ++v) h.node_map.push_back(g.node_colour[v]);
    for (const auto& e : g.edges) h.edge_map.push_back(e.label);
    return h;
}

Word InterfacedGraph::interface_word() const {
    Word w;
    for (NodeId v : interface) w.push_back(graph.colour_of(v));
    return w;
}

bool interfaced_iso(const InterfacedGraph& a, const InterfacedGraph& b) {
    if (a.interface.size() != b.interface.size()) return false;
    std::vector<NodeId> forced(a.graph.num_nodes(), -1);
    for (size_t i = 0; i < a.interface.size(); ++i) {
        NodeId av = a.interface[i], bv = b.interface[i];
        if (forced[av] >= 0 && forced[av] != bv) return false;
        forced[av] = bv;
    }
    return find_isomorphism(a.graph, b.graph, forced).has_value();
}

}  // namespace frobrw
