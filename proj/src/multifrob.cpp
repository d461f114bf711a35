#include "frobrw/multifrob.hpp"

#include <algorithm>
#include <set>

namespace frobrw {

PolySignature PolySignature::make(const Signature& base, std::vector<FrobFamily> families) {
    base.require_valid();
    if (!base.monochrome())
        throw Error("multi-Frobenius base signature must be monochrome");
    if (!base.is_frobenius(0))
        throw Error("base colour must carry the first Frobenius structure");

    PolySignature ps;
    ps.base = base;
    ps.families = std::move(families);

    std::set<GenId> family_members;
    for (const FrobFamily& f : ps.families) {
        auto need = [&](const std::string& gname, size_t ar, size_t coar) {
            auto g = base.generator_by_name(gname);
            if (!g) throw Error("family " + f.name + ": no generator " + gname);
            const Generator& gen = base.generator(*g);
            if (gen.arity.size() != ar || gen.coarity.size() != coar)
                throw Error("family " + f.name + ": " + gname + " has the wrong type");
            family_members.insert(*g);
            return *g;
        };
        need(f.mult, 2, 1);
        need(f.unit, 0, 1);
        need(f.comult, 1, 2);
        need(f.counit, 1, 0);
    }

    ps.poly.add_colour(base.colour(0).name);
    ps.poly.mark_frobenius(0);
    for (const FrobFamily& f : ps.families) {
        ColourId c = ps.poly.add_colour(f.name);
        ps.poly.mark_frobenius(c);
        ps.family_colour.push_back(c);
    }
    for (const Generator& g : base.generators) {
        if (family_members.count(g.id)) continue;
        ps.poly.add_generator(g.name, g.arity, g.coarity);
    }
    for (ColourId c : ps.family_colour) {
        GenId to = ps.poly.add_changer(0, c);
        GenId from = ps.poly.add_changer(c, 0);
        ps.changers.push_back({to, from});
    }
    ps.poly.require_valid();
    return ps;
}

bool PolySignature::is_family_member(GenId base_gen, size_t& family, FrobKind& kind) const {
    const std::string& n = base.generator(base_gen).name;
    for (size_t f = 0; f < families.size(); ++f) {
        if (n == families[f].mult) { family = f; kind = FrobKind::Mult; return true; }
        if (n == families[f].unit) { family = f; kind = FrobKind::Unit; return true; }
        if (n == families[f].comult) { family = f; kind = FrobKind::Comult; return true; }
        if (n == families[f].counit) { family = f; kind = FrobKind::Counit; return true; }
    }
    return false;
}

TermPtr chrome(const PolySignature& ps, const Term& t) {
    const Signature& poly = ps.poly;
    switch (t.kind) {
        case Term::Kind::Gen: {
            size_t f;
            FrobKind kind;
            if (!ps.is_family_member(t.gen, f, kind))
                return t_gen(poly, ps.base.generator(t.gen).name);
            ColourId c = ps.family_colour[f];
            TermPtr in = t_chg(poly, 0, c);
            TermPtr out = t_chg(poly, c, 0);
            TermPtr spider = t_frob(poly, c, kind);
            switch (kind) {
                case FrobKind::Mult:
                    return t_seq(poly, t_seq(poly, t_par(poly, in, in), spider), out);
                case FrobKind::Unit:
                    return t_seq(poly, spider, out);
                case FrobKind::Comult:
                    return t_seq(poly, t_seq(poly, in, spider), t_par(poly, out, out));
                case FrobKind::Counit:
                    return t_seq(poly, in, spider);
            }
            throw Error("corrupt family kind");
        }
        case Term::Kind::Id:
            return t_id(poly, t.w1);
        case Term::Kind::Sym:
            return t_sym(poly, t.w1, t.w2);
        case Term::Kind::Frob:
            if (t.colour != 0)
                throw Error("base terms may only use the first Frobenius structure");
            return t_frob(poly, 0, t.frob);
        case Term::Kind::Seq:
            return t_seq(poly, chrome(ps, *t.a), chrome(ps, *t.b));
        case Term::Kind::Par:
            return t_par(poly, chrome(ps, *t.a), chrome(ps, *t.b));
    }
    throw Error("corrupt term");
}

namespace {

struct UpsilonRedex {
    NodeId node;
    EdgeId in_edge;
    EdgeId out_edge;
};

std::vector<UpsilonRedex> upsilon_redexes(const InterfacedGraph& g) {
    std::set<NodeId> iface(g.interface.begin(), g.interface.end());
    std::vector<UpsilonRedex> out;
    for (NodeId v = 0; v < g.graph.num_nodes(); ++v) {
        if (iface.count(v)) continue;
        std::vector<Connection> cs = connections(g.graph, v);
        if (cs.size() != 2) continue;
        const Connection* in = nullptr;
        const Connection* src = nullptr;
        for (const Connection& c : cs)
            (c.target_side ? in : src) = &c;
        if (!in || !src || in->edge == src->edge) continue;
        const Generator& gi = g.graph.sig->generator(g.graph.edges[in->edge].label);
        const Generator& go = g.graph.sig->generator(g.graph.edges[src->edge].label);
        if (!gi.changer || !go.changer) continue;
        if (gi.changer->second != go.changer->first ||
            gi.changer->first != go.changer->second)
            continue;
        // Two-cycle critical pair: when both edges run between v and the
        // same partner node and the partner is itself contractible, the two
        // contractions leave single nodes of different colours. Break the
        // tie canonically by only contracting the higher-coloured end.
        NodeId s = g.graph.edges[in->edge].sources[0];
        NodeId t = g.graph.edges[src->edge].targets[0];
        if (s == t && !iface.count(s) && degree(g.graph, s) == 2 &&
            g.graph.node_colour[v] < g.graph.node_colour[s])
            continue;
        out.push_back({v, in->edge, src->edge});
    }
    return out;
}

InterfacedGraph contract(const InterfacedGraph& g, const UpsilonRedex& r) {
    NodeId s = g.graph.edges[r.in_edge].sources[0];
    NodeId t = g.graph.edges[r.out_edge].targets[0];
    NodeId keep = std::min(s, t), drop = std::max(s, t);
    InterfacedGraph out;
    out.graph = Hypergraph(*g.graph.sig);
    std::vector<NodeId> nm(g.graph.num_nodes(), -1);
    for (NodeId v = 0; v < g.graph.num_nodes(); ++v) {
        if (v == r.node) continue;
        if (v == drop && drop != keep) continue;
        nm[v] = out.graph.add_node(g.graph.node_colour[v]);
    }
    if (drop != keep) nm[drop] = nm[keep];
    for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
        if (e == r.in_edge || e == r.out_edge) continue;
        const auto& ed = g.graph.edges[e];
        std::vector<NodeId> ss, ts;
        for (NodeId v : ed.sources) ss.push_back(nm[v]);
        for (NodeId v : ed.targets) ts.push_back(nm[v]);
        out.graph.add_edge(ed.label, std::move(ss), std::move(ts));
    }
    for (NodeId v : g.interface) out.interface.push_back(nm[v]);
    return out;
}

}  // namespace

InterfacedGraph upsilon_normalize(const InterfacedGraph& g, const RedexPicker& pick) {
    InterfacedGraph cur = g;
    while (true) {
        std::vector<UpsilonRedex> rs = upsilon_redexes(cur);
        if (rs.empty()) return cur;
        int choice = 0;
        if (pick) {
            std::vector<NodeId> nodes;
            for (const UpsilonRedex& r : rs) nodes.push_back(r.node);
            choice = pick(nodes);
            if (choice < 0 || choice >= static_cast<int>(rs.size())) choice = 0;
        }
        cur = contract(cur, rs[choice]);
    }
}

Cospan upsilon_normalize_cospan(const Cospan& c, const RedexPicker& pick) {
    FoldedCospan f = fold(c);
    f.ig = upsilon_normalize(f.ig, pick);
    return f.unfold();
}

TransformReport transform_rule(const PolySignature& ps, const Rule& poly_rule) {
    TransformReport rep;
    Cospan lhs = poly_rule.lhs;
    Cospan rhs = poly_rule.rhs;
    const Signature& sig = ps.poly;

    if (!upsilon_redexes(fold(lhs).ig).empty())
        throw Error("rule " + poly_rule.name + ": LHS is not changer-normalized");

    std::set<NodeId> dead_nodes;
    std::set<EdgeId> dead_edges;
    // Occurrence count of each node across both leg lists.
    std::vector<int> leg_count(lhs.graph.num_nodes(), 0);
    for (NodeId v : lhs.inputs) ++leg_count[v];
    for (NodeId v : lhs.outputs) ++leg_count[v];

    int m = static_cast<int>(lhs.inputs.size());
    auto absorb = [&](int pos, bool is_input) {
        std::vector<NodeId>& legs = is_input ? lhs.inputs : lhs.outputs;
        NodeId x = legs[pos];
        std::vector<Connection> cs = connections(lhs.graph, x);
        bool near_changer = std::any_of(cs.begin(), cs.end(), [&](const Connection& c) {
            return sig.generator(lhs.graph.edges[c.edge].label).is_changer();
        });
        int report_pos = is_input ? pos : m + pos;
        if (cs.size() != 1 || leg_count[x] != 1) {
            if (near_changer) rep.untouched_legs.push_back(report_pos);
            return;
        }
        const Connection& c = cs[0];
        const auto& ed = lhs.graph.edges[c.edge];
        const Generator& gen = sig.generator(ed.label);
        if (!gen.is_changer()) return;
        // Input legs feed the changer; output legs are fed by it.
        if (c.target_side == is_input) {
            rep.untouched_legs.push_back(report_pos);
            return;
        }
        NodeId y = is_input ? ed.targets[0] : ed.sources[0];
        if (dead_nodes.count(y)) {
            rep.untouched_legs.push_back(report_pos);
            return;
        }
        dead_nodes.insert(x);
        dead_edges.insert(c.edge);
        legs[pos] = y;
        // Re-introduce the changer on the matching RHS leg.
        std::vector<NodeId>& rlegs = is_input ? rhs.inputs : rhs.outputs;
        NodeId z = rlegs[pos];
        ColourId cy = lhs.graph.colour_of(y);
        NodeId z2 = rhs.graph.add_node(cy);
        auto chg = is_input ? sig.generator_by_name(
                                  changer_name(sig, cy, rhs.graph.colour_of(z)))
                            : sig.generator_by_name(
                                  changer_name(sig, rhs.graph.colour_of(z), cy));
        if (!chg) throw Error("missing inverse changer in the signature");
        if (is_input)
            rhs.graph.add_edge(*chg, {z2}, {z});
        else
            rhs.graph.add_edge(*chg, {z}, {z2});
        rlegs[pos] = z2;
        rep.absorbed_legs.push_back(report_pos);
    };
    for (int i = 0; i < m; ++i) absorb(i, true);
    for (int i = 0; i < static_cast<int>(lhs.outputs.size()); ++i) absorb(i, false);

    // Compact the LHS.
    Cospan new_lhs;
    new_lhs.graph = Hypergraph(sig);
    std::vector<NodeId> nm(lhs.graph.num_nodes(), -1);
    for (NodeId v = 0; v < lhs.graph.num_nodes(); ++v)
        if (!dead_nodes.count(v)) nm[v] = new_lhs.graph.add_node(lhs.graph.node_colour[v]);
    for (EdgeId e = 0; e < lhs.graph.num_edges(); ++e) {
        if (dead_edges.count(e)) continue;
        const auto& ed = lhs.graph.edges[e];
        std::vector<NodeId> ss, ts;
        for (NodeId v : ed.sources) ss.push_back(nm[v]);
        for (NodeId v : ed.targets) ts.push_back(nm[v]);
        new_lhs.graph.add_edge(ed.label, std::move(ss), std::move(ts));
    }
    for (NodeId v : lhs.inputs) new_lhs.inputs.push_back(nm[v]);
    for (NodeId v : lhs.outputs) new_lhs.outputs.push_back(nm[v]);

    rep.rule = Rule{poly_rule.name, std::move(new_lhs), std::move(rhs)};
    rep.rule.check();
    return rep;
}

std::vector<Rule> prepare_rules(const PolySignature& ps,
                                const std::vector<std::pair<TermPtr, TermPtr>>& rules,
                                const std::vector<std::string>& names) {
    if (rules.size() != names.size()) throw Error("rule/name count mismatch");
    std::vector<Rule> out;
    for (size_t i = 0; i < rules.size(); ++i) {
        TermPtr l = chrome(ps, *rules[i].first);
        TermPtr r = chrome(ps, *rules[i].second);
        Rule rule{names[i], upsilon_normalize_cospan(interp(ps.poly, *l)),
                  upsilon_normalize_cospan(interp(ps.poly, *r))};
        rule.check();
        out.push_back(transform_rule(ps, rule).rule);
    }
    return out;
}

MultifrobResult multifrob_rewrite(const PolySignature& ps,
                                  const std::vector<Rule>& transformed_rules,
                                  const Term& base_host, int max_steps) {
    TermPtr h = chrome(ps, base_host);
    InterfacedGraph host = upsilon_normalize(fold(interp(ps.poly, *h)).ig);
    MultifrobResult res;
    int step = 0;
    while (step < max_steps) {
        bool applied = false;
        for (const Rule& rule : transformed_rules) {
            std::vector<Match> matches = find_matches(rule, host);
            if (matches.empty()) continue;
            host = upsilon_normalize(rewrite_step(rule, host, matches[0]));
            res.log.push_back({step, rule.name, 0, matches[0].comp.partition_index,
                               host.graph.num_nodes(), host.graph.num_edges()});
            applied = true;
            ++step;
            break;
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

}  // namespace frobrw
