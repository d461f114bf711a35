#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobrw/signature.hpp"

namespace frobrw {

/// A directed hypergraph with ordered source and target lists, labelled over
/// a signature. Node and edge ids are dense indices; graphs are built by
/// add_node/add_edge and treated as immutable afterwards. Rewriting
/// operations produce fresh compact graphs rather than mutating in place.
class Hypergraph {
public:
    struct Edge {
        GenId label = -1;
        std::vector<NodeId> sources;
        std::vector<NodeId> targets;
    };

    const Signature* sig = nullptr;
    std::vector<ColourId> node_colour;
    std::vector<Edge> edges;

    Hypergraph() = default;
    explicit Hypergraph(const Signature& s) : sig(&s) {}

    int num_nodes() const { return static_cast<int>(node_colour.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    NodeId add_node(ColourId c);
    EdgeId add_edge(GenId label, std::vector<NodeId> sources, std::vector<NodeId> targets);

    ColourId colour_of(NodeId v) const;
    const Edge& edge(EdgeId e) const;

    /// Throws unless every edge endpoint list matches its label's arity and
    /// coarity colour for colour (i.e. the labelling is a homomorphism into
    /// the signature graph).
    void check_labelled() const;
};

/// One attachment of a node to an edge: polarity (source or target side),
/// the edge, and the position within that endpoint list. Repeated
/// attachments of the same node are distinct connections.
struct Connection {
    bool target_side = false;
    EdgeId edge = -1;
    int index = -1;

    bool operator==(const Connection&) const = default;
};

std::vector<Connection> connections(const Hypergraph& g, NodeId v);
int degree(const Hypergraph& g, NodeId v);

/// True iff no directed path (alternating nodes and hyperedges, sources to
/// targets) visits a node twice.
bool is_acyclic(const Hypergraph& g);

struct Homomorphism {
    std::vector<NodeId> node_map;
    std::vector<EdgeId> edge_map;
};

/// All label- and colour-preserving homomorphisms pattern -> host, in a
/// deterministic order: backtracking over pattern edges by ascending id with
/// host candidates tried in ascending id order, then isolated pattern nodes
/// assigned in ascending order. Not required to be injective.
std::vector<Homomorphism> find_homomorphisms(const Hypergraph& pattern,
                                             const Hypergraph& host,
                                             size_t max_results = SIZE_MAX);

/// Isomorphism search, optionally constrained by a forced partial node map
/// (entries of -1 are unconstrained). Returns the first isomorphism found.
std::optional<Homomorphism> find_isomorphism(const Hypergraph& a, const Hypergraph& b,
                                             const std::vector<NodeId>& forced_nodes);
std::optional<Homomorphism> are_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Checks that h is a well-formed homomorphism g -> h_host.
bool is_homomorphism(const Hypergraph& pattern, const Hypergraph& host,
                     const Homomorphism& h);

/// Pushout of G <- K -> H where K is a discrete span of bare nodes given by
/// its colour word and the two leg maps. Nodes are glued with a union-find
/// whose class representative is the smallest id in the combined numbering
/// (G nodes first, then H nodes); result ids are dense in that order, and
/// result edges list all G edges followed by all H edges.
struct PushoutResult {
    Hypergraph graph;
    std::vector<NodeId> g_nodes;  // node injection G -> result
    std::vector<NodeId> h_nodes;  // node injection H -> result
    std::vector<EdgeId> g_edges;
    std::vector<EdgeId> h_edges;
};

PushoutResult pushout_discrete(const Word& k, const std::vector<NodeId>& f_into_g,
                               const std::vector<NodeId>& h_into_h,
                               const Hypergraph& g, const Hypergraph& h);

/// The signature graph: one node per colour, one hyperedge per generator,
/// with endpoints spelling out arity and coarity words.
Hypergraph signature_graph(const Signature& sig);

/// The labelling homomorphism of g into signature_graph(*g.sig).
Homomorphism labelling_hom(const Hypergraph& g);

/// A hypergraph together with a single interface leg list (a graph
/// 0 -> G <- J with J discrete, given positionally).
struct InterfacedGraph {
    Hypergraph graph;
    std::vector<NodeId> interface;

    Word interface_word() const;
};

/// Isomorphism of interfaced graphs: a graph isomorphism matching the
/// interfaces positionally.
bool interfaced_iso(const InterfacedGraph& a, const InterfacedGraph& b);

}  // namespace frobrw
