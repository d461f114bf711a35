#include "frobrw/dpoi.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frobrw {

Word Rule::boundary() const {
    Word w = lhs.dom();
    Word c = lhs.cod();
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

std::vector<NodeId> Rule::k_in_lhs() const {
    std::vector<NodeId> ks = lhs.inputs;
    ks.insert(ks.end(), lhs.outputs.begin(), lhs.outputs.end());
    return ks;
}

std::vector<NodeId> Rule::k_in_rhs() const {
    std::vector<NodeId> ks = rhs.inputs;
    ks.insert(ks.end(), rhs.outputs.begin(), rhs.outputs.end());
    return ks;
}

void Rule::check() const {
    lhs.check();
    rhs.check();
    if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod())
        throw Error("rule " + name + ": sides have different boundary types");
}

Rule rule_from_terms(const Signature& sig, const std::string& name, const Term& l,
                     const Term& r) {
    Rule rule{name, interp(sig, l), interp(sig, r)};
    rule.check();
    return rule;
}

Rule rule_from_terms(const Signature& sig, const std::string& name, const std::string& l,
                     const std::string& r) {
    TermPtr lt = parse_term(sig, l);
    TermPtr rt = parse_term(sig, r);
    return rule_from_terms(sig, name, *lt, *rt);
}

ConditionReport check_conditions(const Rule& rule, const Homomorphism& m,
                                 const Hypergraph& host) {
    const Hypergraph& L = rule.lhs.graph;
    std::vector<NodeId> kl = rule.k_in_lhs();
    std::set<NodeId> k_img_l(kl.begin(), kl.end());
    std::set<NodeId> img_n(m.node_map.begin(), m.node_map.end());
    std::set<NodeId> k_img_g;
    for (NodeId v : kl) k_img_g.insert(m.node_map[v]);

    // No identification: elements merged by m must lie in the image of K.
    std::map<NodeId, NodeId> seen;
    for (NodeId v = 0; v < L.num_nodes(); ++v) {
        auto [it, fresh] = seen.insert({m.node_map[v], v});
        if (!fresh) {
            NodeId w = it->second;
            if (!k_img_l.count(v) || !k_img_l.count(w))
                return {false, "identification: nodes " + std::to_string(w) + " and " +
                                   std::to_string(v) + " merge outside the boundary"};
        }
    }
    std::set<EdgeId> img_e;
    for (EdgeId e = 0; e < L.num_edges(); ++e)
        if (!img_e.insert(m.edge_map[e]).second)
            return {false, "identification: edges merge"};

    // No dangling: edges outside the image may only touch image nodes that
    // are kept by the boundary.
    for (EdgeId e = 0; e < host.num_edges(); ++e) {
        if (img_e.count(e)) continue;
        const auto& ed = host.edges[e];
        auto touch = [&](NodeId v) { return img_n.count(v) && !k_img_g.count(v); };
        for (NodeId v : ed.sources)
            if (touch(v))
                return {false, "dangling: edge " + std::to_string(e) +
                                   " touches deleted node " + std::to_string(v)};
        for (NodeId v : ed.targets)
            if (touch(v))
                return {false, "dangling: edge " + std::to_string(e) +
                                   " touches deleted node " + std::to_string(v)};
    }
    return {};
}

bool verify_complement(const Rule& rule, const Homomorphism& m, const Hypergraph& host,
                       const Complement& comp) {
    const Hypergraph& L = rule.lhs.graph;
    std::vector<NodeId> kl = rule.k_in_lhs();
    PushoutResult po;
    try {
        po = pushout_discrete(rule.boundary(), comp.k_to_c, kl, comp.graph, L);
    } catch (const Error&) {
        return false;
    }
    // The canonical map to the host, forced by both squares, must be a
    // label-preserving bijection.
    std::vector<NodeId> to_g(po.graph.num_nodes(), -1);
    auto set_node = [&](NodeId p, NodeId g) {
        if (to_g[p] >= 0) return to_g[p] == g;
        to_g[p] = g;
        return true;
    };
    for (NodeId x = 0; x < comp.graph.num_nodes(); ++x)
        if (!set_node(po.g_nodes[x], comp.c_to_g_nodes[x])) return false;
    for (NodeId v = 0; v < L.num_nodes(); ++v)
        if (!set_node(po.h_nodes[v], m.node_map[v])) return false;
    if (po.graph.num_nodes() != host.num_nodes()) return false;
    std::vector<char> node_hit(host.num_nodes(), 0);
    for (NodeId p = 0; p < po.graph.num_nodes(); ++p) {
        if (to_g[p] < 0) return false;
        if (node_hit[to_g[p]]) return false;
        node_hit[to_g[p]] = 1;
        if (po.graph.node_colour[p] != host.node_colour[to_g[p]]) return false;
    }
    if (po.graph.num_edges() != host.num_edges()) return false;
    std::vector<EdgeId> edge_to_g;
    edge_to_g.insert(edge_to_g.end(), comp.c_to_g_edges.begin(), comp.c_to_g_edges.end());
    edge_to_g.insert(edge_to_g.end(), m.edge_map.begin(), m.edge_map.end());
    std::vector<char> edge_hit(host.num_edges(), 0);
    for (EdgeId e = 0; e < po.graph.num_edges(); ++e) {
        EdgeId ge = edge_to_g[e];
        if (ge < 0 || ge >= host.num_edges() || edge_hit[ge]) return false;
        edge_hit[ge] = 1;
        const auto& pe = po.graph.edges[e];
        const auto& he = host.edges[ge];
        if (pe.label != he.label) return false;
        for (size_t i = 0; i < pe.sources.size(); ++i)
            if (to_g[pe.sources[i]] != he.sources[i]) return false;
        for (size_t i = 0; i < pe.targets.size(); ++i)
            if (to_g[pe.targets[i]] != he.targets[i]) return false;
    }
    return true;
}

Complement complement_mono(const Rule& rule, const Homomorphism& m,
                           const Hypergraph& host) {
    std::vector<NodeId> kl = rule.k_in_lhs();
    std::set<NodeId> distinct(kl.begin(), kl.end());
    if (distinct.size() != kl.size())
        throw Error("rule " + rule.name + ": boundary is not mono; enumerate instead");
    const Hypergraph& L = rule.lhs.graph;
    std::set<NodeId> k_img_l(kl.begin(), kl.end());
    std::set<NodeId> deleted;
    for (NodeId v = 0; v < L.num_nodes(); ++v)
        if (!k_img_l.count(v)) deleted.insert(m.node_map[v]);
    std::set<EdgeId> img_e(m.edge_map.begin(), m.edge_map.end());

    Complement c;
    c.graph = Hypergraph(*host.sig);
    std::vector<NodeId> g_to_c(host.num_nodes(), -1);
    for (NodeId v = 0; v < host.num_nodes(); ++v) {
        if (deleted.count(v)) continue;
        g_to_c[v] = c.graph.add_node(host.node_colour[v]);
        c.c_to_g_nodes.push_back(v);
    }
    for (EdgeId e = 0; e < host.num_edges(); ++e) {
        if (img_e.count(e)) continue;
        const auto& ed = host.edges[e];
        std::vector<NodeId> ss, ts;
        for (NodeId v : ed.sources) ss.push_back(g_to_c[v]);
        for (NodeId v : ed.targets) ts.push_back(g_to_c[v]);
        c.graph.add_edge(ed.label, std::move(ss), std::move(ts));
        c.c_to_g_edges.push_back(e);
    }
    for (NodeId k : kl) c.k_to_c.push_back(g_to_c[m.node_map[k]]);
    if (!verify_complement(rule, m, host, c))
        throw Error("rule " + rule.name + ": mono complement failed the pushout check");
    return c;
}

namespace {

// Exploded context: kept host nodes, a fresh copy per occurrence of an
// image node in a non-image edge, and the boundary nodes, each with its
// projection back to the host.
struct Exploded {
    std::vector<ColourId> colour;
    std::vector<NodeId> q;         // projection to host nodes
    std::vector<int> kind;         // 0 kept, 1 fresh copy, 2 boundary
    std::vector<NodeId> kept_of_host;  // host node -> exploded id or -1
    struct Edge {
        GenId label;
        std::vector<int> sources, targets;
        EdgeId host_edge;
    };
    std::vector<Edge> edges;
    std::vector<int> k_nodes;      // exploded ids of the boundary nodes
};

Exploded explode(const Rule& rule, const Homomorphism& m, const Hypergraph& host) {
    std::set<NodeId> img_n(m.node_map.begin(), m.node_map.end());
    std::set<EdgeId> img_e(m.edge_map.begin(), m.edge_map.end());
    Exploded x;
    x.kept_of_host.assign(host.num_nodes(), -1);
    for (NodeId v = 0; v < host.num_nodes(); ++v) {
        if (img_n.count(v)) continue;
        x.kept_of_host[v] = static_cast<int>(x.colour.size());
        x.colour.push_back(host.node_colour[v]);
        x.q.push_back(v);
        x.kind.push_back(0);
    }
    for (EdgeId e = 0; e < host.num_edges(); ++e) {
        if (img_e.count(e)) continue;
        const auto& ed = host.edges[e];
        Exploded::Edge xe{ed.label, {}, {}, e};
        auto endpoint = [&](NodeId v) {
            if (!img_n.count(v)) return x.kept_of_host[v];
            int id = static_cast<int>(x.colour.size());
            x.colour.push_back(host.node_colour[v]);
            x.q.push_back(v);
            x.kind.push_back(1);
            return id;
        };
        for (NodeId v : ed.sources) xe.sources.push_back(endpoint(v));
        for (NodeId v : ed.targets) xe.targets.push_back(endpoint(v));
        x.edges.push_back(std::move(xe));
    }
    Word bw = rule.boundary();
    std::vector<NodeId> kl = rule.k_in_lhs();
    for (size_t k = 0; k < kl.size(); ++k) {
        x.k_nodes.push_back(static_cast<int>(x.colour.size()));
        x.colour.push_back(bw[k]);
        x.q.push_back(m.node_map[kl[k]]);
        x.kind.push_back(2);
    }
    return x;
}

// All set partitions of {0..n-1} as restricted growth strings, in
// lexicographic order; rgs[i] is the block of element i.
void enumerate_rgs(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            visit(rgs);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_used, b));
        }
    };
    if (n == 0) {
        visit(rgs);
        return;
    }
    rgs[0] = 0;
    rec(rec, 1, 0);
}

}  // namespace

ComplementEnumeration complements_enumerate(const Rule& rule, const Homomorphism& m,
                                            const Hypergraph& host) {
    Exploded x = explode(rule, m, host);
    int n = static_cast<int>(x.colour.size());

    // Fibres over host nodes in the image of the occurrence; kept nodes sit
    // in singleton fibres and are never merged.
    std::map<NodeId, std::vector<int>> fibre;
    for (int i = 0; i < n; ++i)
        if (x.kind[i] != 0) fibre[x.q[i]].push_back(i);
    std::vector<std::vector<int>> fibres;
    for (auto& [v, members] : fibre) {
        if (members.size() > 8)
            throw Error("boundary fibre of size " + std::to_string(members.size()) +
                        " exceeds the enumeration limit");
        fibres.push_back(members);
    }

    ComplementEnumeration out;
    // Current block id of each exploded node; kept nodes keep their own.
    std::vector<int> block(n);
    std::vector<std::vector<std::vector<int>>> fibre_partitions(fibres.size());
    for (size_t f = 0; f < fibres.size(); ++f)
        enumerate_rgs(static_cast<int>(fibres[f].size()),
                      [&](const std::vector<int>& rgs) { fibre_partitions[f].push_back(rgs); });

    std::vector<size_t> idx(fibres.size(), 0);
    int partition_counter = 0;
    while (true) {
        ++out.partitions_examined;
        // Materialise the combined partition into a complement candidate.
        for (int i = 0; i < n; ++i) block[i] = -1;
        Complement c;
        c.graph = Hypergraph(*host.sig);
        c.partition_index = partition_counter++;
        auto block_node = [&](int i) {
            if (block[i] >= 0) return block[i];
            // Find the first member of i's block to share its node.
            block[i] = c.graph.add_node(x.colour[i]);
            c.c_to_g_nodes.push_back(x.q[i]);
            return block[i];
        };
        // Kept nodes first, in host order, so ids are deterministic.
        for (int i = 0; i < n; ++i)
            if (x.kind[i] == 0) block_node(i);
        for (size_t f = 0; f < fibres.size(); ++f) {
            const std::vector<int>& members = fibres[f];
            const std::vector<int>& rgs = fibre_partitions[f][idx[f]];
            std::map<int, int> block_to_node;
            for (size_t j = 0; j < members.size(); ++j) {
                auto it = block_to_node.find(rgs[j]);
                if (it == block_to_node.end()) {
                    int nd = block_node(members[j]);
                    block_to_node[rgs[j]] = nd;
                } else {
                    block[members[j]] = it->second;
                }
            }
        }
        for (const auto& xe : x.edges) {
            std::vector<NodeId> ss, ts;
            for (int i : xe.sources) ss.push_back(block[i]);
            for (int i : xe.targets) ts.push_back(block[i]);
            c.graph.add_edge(xe.label, std::move(ss), std::move(ts));
            c.c_to_g_edges.push_back(xe.host_edge);
        }
        for (int k : x.k_nodes) c.k_to_c.push_back(block[k]);
        if (verify_complement(rule, m, host, c)) out.complements.push_back(std::move(c));

        // Advance the product of per-fibre partitions.
        size_t f = 0;
        while (f < fibres.size() && ++idx[f] == fibre_partitions[f].size()) {
            idx[f] = 0;
            ++f;
        }
        if (f == fibres.size()) break;
    }
    return out;
}

std::vector<Match> find_matches(const Rule& rule, const InterfacedGraph& host) {
    std::vector<Match> out;
    std::vector<NodeId> kl = rule.k_in_lhs();
    std::set<NodeId> distinct(kl.begin(), kl.end());
    bool mono = distinct.size() == kl.size();
    for (const Homomorphism& hom : find_homomorphisms(rule.lhs.graph, host.graph)) {
        if (!check_conditions(rule, hom, host.graph).ok) continue;
        std::vector<Complement> comps;
        if (mono) {
            comps.push_back(complement_mono(rule, hom, host.graph));
        } else {
            comps = complements_enumerate(rule, hom, host.graph).complements;
        }
        for (Complement& c : comps) {
            // The interface must factor through the complement. When the
            // complement maps onto the host non-injectively a leg can have
            // several preimages, and each choice is a distinct derivation:
            // enumerate the full product, legs varying fastest at the end.
            std::vector<std::vector<NodeId>> choices;
            bool ok = true;
            long total = 1;
            for (NodeId jv : host.interface) {
                std::vector<NodeId> pre;
                for (NodeId cv = 0; cv < c.graph.num_nodes(); ++cv)
                    if (c.c_to_g_nodes[cv] == jv) pre.push_back(cv);
                if (pre.empty()) { ok = false; break; }
                total *= static_cast<long>(pre.size());
                if (total > 4096)
                    throw Error("too many interface factorisations to enumerate");
                choices.push_back(std::move(pre));
            }
            if (!ok) continue;
            std::vector<size_t> idx(choices.size(), 0);
            while (true) {
                std::vector<NodeId> j_to_c;
                for (size_t i = 0; i < choices.size(); ++i)
                    j_to_c.push_back(choices[i][idx[i]]);
                out.push_back({hom, c, std::move(j_to_c)});
                size_t i = choices.size();
                while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) idx[--i] = 0;
                if (i == 0) break;
            }
        }
    }
    return out;
}

InterfacedGraph rewrite_step(const Rule& rule, const InterfacedGraph& host,
                             const Match& match) {
    (void)host;
    PushoutResult po = pushout_discrete(rule.boundary(), match.comp.k_to_c,
                                        rule.k_in_rhs(), match.comp.graph,
                                        rule.rhs.graph);
    InterfacedGraph out;
    out.graph = std::move(po.graph);
    for (NodeId cv : match.j_to_c) out.interface.push_back(po.g_nodes[cv]);
    return out;
}

ClosureResult rewrite_closure(const std::vector<Rule>& rules, InterfacedGraph host,
                              int max_steps, const MatchSelector& select) {
    ClosureResult res;
    int step = 0;
    while (true) {
        if (step >= max_steps) {
            res.budget_exhausted = true;
            break;
        }
        bool applied = false;
        for (const Rule& rule : rules) {
            std::vector<Match> matches = find_matches(rule, host);
            if (matches.empty()) continue;
            int idx = select ? select(rule, host, matches) : 0;
            if (idx < 0 || idx >= static_cast<int>(matches.size())) continue;
            host = rewrite_step(rule, host, matches[idx]);
            res.log.push_back({step, rule.name, idx, matches[idx].comp.partition_index,
                               host.graph.num_nodes(), host.graph.num_edges()});
            applied = true;
            ++step;
            break;
        }
        if (!applied) break;
    }
    res.graph = std::move(host);
    return res;
}

}  // namespace frobrw
