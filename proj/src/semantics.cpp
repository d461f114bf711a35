#include "frobrw/semantics.hpp"

#include <algorithm>
#include <map>

namespace frobrw {

FiniteModel::FiniteModel(const Signature& s, std::vector<int> carrier_sizes)
    : sig(&s), carrier(std::move(carrier_sizes)) {
    if (carrier.size() != s.colours.size())
        throw Error("model carrier count does not match colour count");
    for (int n : carrier)
        if (n <= 0) throw Error("model carriers must be non-empty");
    rel.resize(s.generators.size());
    for (const Generator& g : s.generators) {
        if (!g.changer) continue;
        auto [from, to] = *g.changer;
        if (carrier[from] != carrier[to]) continue;
        for (int x = 0; x < carrier[from]; ++x) rel[g.id].insert({x, x});
    }
}

void FiniteModel::set_relation(GenId g, std::set<std::vector<int>> tuples) {
    const Generator& gen = sig->generator(g);
    size_t width = gen.arity.size() + gen.coarity.size();
    for (const auto& t : tuples) {
        if (t.size() != width)
            throw Error("relation tuple width mismatch for " + gen.name);
        for (size_t i = 0; i < t.size(); ++i) {
            ColourId c = i < gen.arity.size() ? gen.arity[i]
                                              : gen.coarity[i - gen.arity.size()];
            if (t[i] < 0 || t[i] >= carrier[c])
                throw Error("relation tuple value out of carrier for " + gen.name);
        }
    }
    rel[g] = std::move(tuples);
}

void FiniteModel::set_relation(const std::string& gen_name,
                               std::set<std::vector<int>> tuples) {
    auto g = sig->generator_by_name(gen_name);
    if (!g) throw Error("unknown generator: " + gen_name);
    set_relation(*g, std::move(tuples));
}

FiniteModel make_group_model(const Signature& sig, int n) {
    FiniteModel m(sig, std::vector<int>(sig.colours.size(), n));
    std::set<std::vector<int>> mult, inv, unit;
    for (int a = 0; a < n; ++a) {
        inv.insert({a, (n - a) % n});
        for (int b = 0; b < n; ++b) mult.insert({a, b, (a + b) % n});
    }
    unit.insert({0});
    m.set_relation("m", std::move(mult));
    m.set_relation("i", std::move(inv));
    m.set_relation("u", std::move(unit));
    return m;
}

namespace {

Relation eval_graph_impl(const FiniteModel& m, const Hypergraph& g,
                         const std::vector<NodeId>& ins, const std::vector<NodeId>& outs,
                         double max_space) {
    if (m.sig != g.sig) throw Error("model and graph signatures differ");
    double space = 1.0;
    for (ColourId c : g.node_colour) space *= m.carrier[c];
    if (space > max_space)
        throw Error("assignment space too large for brute-force evaluation");

    int n = g.num_nodes();
    // Edges become checkable once their last endpoint is assigned.
    std::vector<std::vector<EdgeId>> check_at(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        NodeId last = -1;
        const auto& ed = g.edges[e];
        for (NodeId v : ed.sources) last = std::max(last, v);
        for (NodeId v : ed.targets) last = std::max(last, v);
        // Edges with no endpoints (0 -> 0 generators) are handled below.
        if (last >= 0) check_at[last].push_back(e);
    }

    Relation out;
    for (NodeId v : ins) out.dom.push_back(g.colour_of(v));
    for (NodeId v : outs) out.cod.push_back(g.colour_of(v));

    bool empty_scalar_fails = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges[e];
        if (ed.sources.empty() && ed.targets.empty() && !m.rel[ed.label].count({}))
            empty_scalar_fails = true;
    }
    if (empty_scalar_fails) return out;

    std::vector<int> val(n, 0);
    auto edge_ok = [&](EdgeId e) {
        const auto& ed = g.edges[e];
        std::vector<int> tup;
        tup.reserve(ed.sources.size() + ed.targets.size());
        for (NodeId v : ed.sources) tup.push_back(val[v]);
        for (NodeId v : ed.targets) tup.push_back(val[v]);
        return m.rel[ed.label].count(tup) > 0;
    };
    auto rec = [&](auto&& self, NodeId v) -> void {
        if (v == n) {
            std::vector<int> xs, ys;
            for (NodeId w : ins) xs.push_back(val[w]);
            for (NodeId w : outs) ys.push_back(val[w]);
            out.pairs.insert({std::move(xs), std::move(ys)});
            return;
        }
        for (int x = 0; x < m.carrier[g.node_colour[v]]; ++x) {
            val[v] = x;
            bool ok = true;
            for (EdgeId e : check_at[v])
                if (!edge_ok(e)) { ok = false; break; }
            if (ok) self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

Relation eval_graph(const FiniteModel& m, const Cospan& c, double max_space) {
    return eval_graph_impl(m, c.graph, c.inputs, c.outputs, max_space);
}

Relation eval_graph(const FiniteModel& m, const InterfacedGraph& g, double max_space) {
    return eval_graph_impl(m, g.graph, {}, g.interface, max_space);
}

namespace {

std::vector<std::vector<int>> all_tuples(const FiniteModel& m, const Word& w) {
    std::vector<std::vector<int>> out{{}};
    for (ColourId c : w) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int x = 0; x < m.carrier[c]; ++x) {
                auto t2 = t;
                t2.push_back(x);
                next.push_back(std::move(t2));
            }
        out = std::move(next);
    }
    return out;
}

Relation rel_compose(const Relation& a, const Relation& b) {
    if (a.cod != b.dom) throw Error("relation composition type mismatch");
    Relation r;
    r.dom = a.dom;
    r.cod = b.cod;
    std::map<std::vector<int>, std::vector<const std::vector<int>*>> by_mid;
    for (const auto& [y, z] : b.pairs) by_mid[y].push_back(&z);
    for (const auto& [x, y] : a.pairs) {
        auto it = by_mid.find(y);
        if (it == by_mid.end()) continue;
        for (const auto* z : it->second) r.pairs.insert({x, *z});
    }
    return r;
}

Relation rel_tensor(const Relation& a, const Relation& b) {
    Relation r;
    r.dom = a.dom;
    r.dom.insert(r.dom.end(), b.dom.begin(), b.dom.end());
    r.cod = a.cod;
    r.cod.insert(r.cod.end(), b.cod.begin(), b.cod.end());
    for (const auto& [x1, y1] : a.pairs)
        for (const auto& [x2, y2] : b.pairs) {
            auto x = x1;
            x.insert(x.end(), x2.begin(), x2.end());
            auto y = y1;
            y.insert(y.end(), y2.begin(), y2.end());
            r.pairs.insert({std::move(x), std::move(y)});
        }
    return r;
}

}  // namespace

Relation eval_term(const FiniteModel& m, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Gen: {
            const Generator& g = m.sig->generator(t.gen);
            Relation r;
            r.dom = g.arity;
            r.cod = g.coarity;
            for (const auto& tup : m.rel[t.gen]) {
                std::vector<int> x(tup.begin(), tup.begin() + g.arity.size());
                std::vector<int> y(tup.begin() + g.arity.size(), tup.end());
                r.pairs.insert({std::move(x), std::move(y)});
            }
            return r;
        }
        case Term::Kind::Id: {
            Relation r;
            r.dom = r.cod = t.w1;
            for (const auto& tup : all_tuples(m, t.w1)) r.pairs.insert({tup, tup});
            return r;
        }
        case Term::Kind::Sym: {
            Relation r;
            r.dom = t.dom;
            r.cod = t.cod;
            for (const auto& xv : all_tuples(m, t.w1))
                for (const auto& xw : all_tuples(m, t.w2)) {
                    auto in = xv;
                    in.insert(in.end(), xw.begin(), xw.end());
                    auto out = xw;
                    out.insert(out.end(), xv.begin(), xv.end());
                    r.pairs.insert({std::move(in), std::move(out)});
                }
            return r;
        }
        case Term::Kind::Frob: {
            Relation r;
            r.dom = t.dom;
            r.cod = t.cod;
            for (int x = 0; x < m.carrier[t.colour]; ++x)
                r.pairs.insert({std::vector<int>(t.dom.size(), x),
                                std::vector<int>(t.cod.size(), x)});
            return r;
        }
        case Term::Kind::Seq:
            return rel_compose(eval_term(m, *t.a), eval_term(m, *t.b));
        case Term::Kind::Par:
            return rel_tensor(eval_term(m, *t.a), eval_term(m, *t.b));
    }
    throw Error("corrupt term");
}

namespace {

// Canonical RREF, rows sorted by pivot position (lowest bit first).
std::vector<uint64_t> rref(std::vector<uint64_t> rows) {
    std::vector<uint64_t> basis;
    for (uint64_t r : rows) {
        for (uint64_t b : basis) {
            uint64_t pivot = b & ~(b - 1);
            if (r & pivot) r ^= b;
        }
        if (r) basis.push_back(r);
    }
    // Back-substitute so each pivot appears in exactly one row.
    for (size_t i = 0; i < basis.size(); ++i) {
        uint64_t pivot = basis[i] & ~(basis[i] - 1);
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i && (basis[j] & pivot)) basis[j] ^= basis[i];
    }
    std::sort(basis.begin(), basis.end(),
              [](uint64_t a, uint64_t b) { return (a & ~(a - 1)) < (b & ~(b - 1)); });
    return basis;
}

}  // namespace

bool Subspace2::contains(uint64_t v) const {
    for (uint64_t b : basis) {
        uint64_t pivot = b & ~(b - 1);
        if (v & pivot) v ^= b;
    }
    return v == 0;
}

Subspace2 span2(int dim, std::vector<uint64_t> rows) {
    if (dim < 0 || dim > 64) throw Error("subspace dimension out of range");
    uint64_t mask = dim == 64 ? ~0ull : ((1ull << dim) - 1);
    for (uint64_t& r : rows) r &= mask;
    return {dim, rref(std::move(rows))};
}

Subspace2 nullspace2(int dim, const std::vector<uint64_t>& constraint_rows) {
    Subspace2 cs = span2(dim, constraint_rows);
    // Pivot columns of the constraint RREF; every other column is free.
    std::vector<int> pivot_col;
    for (uint64_t b : cs.basis) {
        uint64_t p = b & ~(b - 1);
        int col = 0;
        while (!(p & (1ull << col))) ++col;
        pivot_col.push_back(col);
    }
    std::vector<uint64_t> out;
    for (int col = 0; col < dim; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end())
            continue;
        uint64_t v = 1ull << col;
        for (size_t i = 0; i < cs.basis.size(); ++i)
            if (cs.basis[i] & (1ull << col)) v |= 1ull << pivot_col[i];
        out.push_back(v);
    }
    return span2(dim, std::move(out));
}

bool subspace_equal(const Subspace2& a, const Subspace2& b) {
    return a.dim == b.dim && a.basis == b.basis;
}

Subspace2 orthogonal_complement(const Subspace2& s) {
    return nullspace2(s.dim, s.basis);
}

namespace {

struct IbView {
    const Cospan& c;
    ColourId copy;
    int boundary;                       // m + n
    std::vector<int> var_index;         // copy node -> variable column, else -1
    int num_vars = 0;

    explicit IbView(const Cospan& cs, ColourId copy_colour)
        : c(cs), copy(copy_colour), boundary(static_cast<int>(cs.inputs.size() + cs.outputs.size())) {
        const Hypergraph& g = c.graph;
        var_index.assign(g.num_nodes(), -1);
        for (NodeId v = 0; v < g.num_nodes(); ++v)
            if (g.node_colour[v] == copy) var_index[v] = num_vars++;
        if (boundary + num_vars > 64)
            throw Error("too many variables for the GF(2) backend");
        for (const auto& ed : g.edges) {
            const Generator& gen = g.sig->generator(ed.label);
            if (!gen.changer || ed.sources.size() != 1 || ed.targets.size() != 1)
                throw Error("graph is not a two-coloured changer graph");
            bool s_copy = g.node_colour[ed.sources[0]] == copy;
            bool t_copy = g.node_colour[ed.targets[0]] == copy;
            if (s_copy == t_copy)
                throw Error("changer edge does not cross the two colours");
        }
    }

    std::vector<NodeId> legs() const {
        std::vector<NodeId> ls = c.inputs;
        ls.insert(ls.end(), c.outputs.begin(), c.outputs.end());
        return ls;
    }

    // One endpoint of each edge is a copy node, the other a parity node.
    std::pair<NodeId, NodeId> copy_parity(const Hypergraph::Edge& ed) const {
        NodeId s = ed.sources[0], t = ed.targets[0];
        return c.graph.node_colour[s] == copy ? std::make_pair(s, t)
                                              : std::make_pair(t, s);
    }
};

}  // namespace

Subspace2 ib_subspace(const Cospan& c, ColourId copy_colour) {
    IbView view(c, copy_colour);
    const Hypergraph& g = c.graph;
    int dim = view.boundary + view.num_vars;
    std::vector<uint64_t> rows;
    // Parity node equations: incident copy variables plus legs on the node.
    std::vector<uint64_t> parity_row(g.num_nodes(), 0);
    for (const auto& ed : g.edges) {
        auto [cv, pv] = view.copy_parity(ed);
        parity_row[pv] ^= 1ull << (view.boundary + view.var_index[cv]);
    }
    std::vector<NodeId> legs = view.legs();
    for (int i = 0; i < view.boundary; ++i) {
        NodeId v = legs[i];
        if (g.node_colour[v] == copy_colour)
            rows.push_back((1ull << i) | (1ull << (view.boundary + view.var_index[v])));
        else
            parity_row[v] ^= 1ull << i;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.node_colour[v] != copy_colour && parity_row[v])
            rows.push_back(parity_row[v]);
    Subspace2 sols = nullspace2(dim, rows);
    uint64_t mask = view.boundary == 64 ? ~0ull : ((1ull << view.boundary) - 1);
    std::vector<uint64_t> proj;
    for (uint64_t b : sols.basis) proj.push_back(b & mask);
    return span2(view.boundary, std::move(proj));
}

namespace {

// Representative boundary coordinate of each copy node carrying legs.
std::vector<int> rep_coord(const IbView& view) {
    std::vector<int> rep(view.c.graph.num_nodes(), -1);
    std::vector<NodeId> legs = view.legs();
    for (int i = view.boundary - 1; i >= 0; --i) rep[legs[i]] = i;
    return rep;
}

}  // namespace

Subspace2 readoff_reduced(const Cospan& c, ColourId copy_colour) {
    IbView view(c, copy_colour);
    const Hypergraph& g = c.graph;
    std::vector<int> rep = rep_coord(view);
    std::vector<NodeId> legs = view.legs();
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.node_colour[v] == copy_colour && rep[v] < 0)
            throw Error("interior copy-colour node; graph is not in cospan form");
        if (g.node_colour[v] != copy_colour && rep[v] >= 0)
            throw Error("interface touches a parity-colour node");
    }
    std::vector<uint64_t> rows;
    // Legs sharing a node are equal coordinates.
    for (int i = 0; i < view.boundary; ++i)
        if (rep[legs[i]] != i)
            rows.push_back((1ull << i) | (1ull << rep[legs[i]]));
    std::vector<uint64_t> parity_row(g.num_nodes(), 0);
    for (const auto& ed : g.edges) {
        auto [cv, pv] = view.copy_parity(ed);
        parity_row[pv] ^= 1ull << rep[cv];
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.node_colour[v] != copy_colour) rows.push_back(parity_row[v]);
    return nullspace2(view.boundary, rows);
}

Subspace2 readoff_span(const Cospan& c, ColourId copy_colour) {
    IbView view(c, copy_colour);
    const Hypergraph& g = c.graph;
    std::vector<int> coord(g.num_nodes(), -1);
    std::vector<NodeId> legs = view.legs();
    for (int i = 0; i < view.boundary; ++i) {
        NodeId v = legs[i];
        if (g.node_colour[v] == copy_colour)
            throw Error("interface touches a copy-colour node; graph is not in span form");
        if (coord[v] >= 0) throw Error("a parity node carries more than one leg");
        coord[v] = i;
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.node_colour[v] != copy_colour && coord[v] < 0)
            throw Error("interior parity-colour node; graph is not in span form");
    std::vector<uint64_t> vec(g.num_nodes(), 0);
    for (const auto& ed : g.edges) {
        auto [cv, pv] = view.copy_parity(ed);
        vec[cv] ^= 1ull << coord[pv];
    }
    std::vector<uint64_t> rows;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (g.node_colour[v] == copy_colour) rows.push_back(vec[v]);
    return span2(view.boundary, std::move(rows));
}

std::vector<std::vector<int>> reduced_equations(const Cospan& c, ColourId copy_colour) {
    IbView view(c, copy_colour);
    const Hypergraph& g = c.graph;
    std::vector<int> rep = rep_coord(view);
    std::vector<uint64_t> parity_row(g.num_nodes(), 0);
    for (const auto& ed : g.edges) {
        auto [cv, pv] = view.copy_parity(ed);
        if (rep[cv] < 0) throw Error("interior copy-colour node in reduced read-off");
        parity_row[pv] ^= 1ull << rep[cv];
    }
    std::vector<std::vector<int>> eqs;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (g.node_colour[v] == copy_colour) continue;
        std::vector<int> coords;
        for (int i = 0; i < view.boundary; ++i)
            if (parity_row[v] & (1ull << i)) coords.push_back(i);
        eqs.push_back(std::move(coords));
    }
    std::sort(eqs.begin(), eqs.end());
    return eqs;
}

}  // namespace frobrw
