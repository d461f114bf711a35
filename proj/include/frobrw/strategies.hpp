#pragma once

#include "frobrw/dpoi.hpp"

namespace frobrw {

// ---------------------------------------------------------------------------
// Group-algebra normalisation: signature {m : 2 -> 1, i : 1 -> 1, u : 0 -> 1}
// over a single Frobenius colour, on acyclic hosts.
// ---------------------------------------------------------------------------

Signature make_group_signature();

/// Branching degree of a node: max(0, degree + interface legs - 2).
int branching_degree(const InterfacedGraph& g, NodeId v);

/// Branching depth of an edge: the minimum, over paths from the edge to a
/// node that is not a source of any edge, of the sum of branching degrees
/// of the nodes along the path. Requires an acyclic graph.
int branching_depth(const InterfacedGraph& g, EdgeId e);

/// The depth profile: entry k counts edges of branching depth k; trailing
/// zeros are trimmed, the empty graph has the empty profile.
std::vector<int> depth_profile(const InterfacedGraph& g);

/// Reverse-lexicographic order on natural number words: shorter wins; at
/// equal length the last letter decides, ties recurse on the prefix.
bool revlex_less(const std::vector<int>& a, const std::vector<int>& b);

struct GroupRules {
    std::vector<Rule> structural;  // associativity, unit laws, inverse law
    std::vector<Rule> naturality;  // pushing m, i, u through the comonoid
};

GroupRules make_group_rules(const Signature& sig);

struct GroupStep {
    std::string rule;
    bool naturality = false;
    std::vector<int> profile_before;
    std::vector<int> profile_after;
};

struct GroupReduceResult {
    InterfacedGraph graph;
    std::vector<GroupStep> log;
    int steps = 0;
    bool budget_exhausted = false;
};

/// Applies structural rules freely and naturality rules only when the
/// depth profile strictly decreases in revlex order (asserted on every
/// accepted naturality step). Requires an acyclic host.
GroupReduceResult group_reduce(const Signature& sig, const GroupRules& rules,
                               InterfacedGraph host, int max_steps);

// ---------------------------------------------------------------------------
// Interacting-bialgebra reduction: two-coloured changer graphs, interface on
// one colour, reduced to the canonical cospan (or span) form.
// ---------------------------------------------------------------------------

/// Two colours "b" (copy) and "r" (parity), both Frobenius, with the
/// changer pair between them.
Signature make_ib_signature();

struct IbReducedReport {
    bool reduced = false;
    std::string reason;
};

/// A host is reduced when it is acyclic and every node of the interface
/// colour is of type (I) (one input leg, nothing else incoming), (O) (one
/// output leg, nothing else outgoing) or (IO) (legs on both sides).
IbReducedReport ib_is_reduced(const Cospan& host, ColourId interface_colour);

/// Eliminates the interior node v by the complete bipartite step against
/// its odd neighbour w of the other colour: both disappear, every other
/// odd neighbour of v gains an edge to every other odd neighbour of w, and
/// parallel pairs cancel. Edges produced are oriented interface-colour to
/// other colour; callers re-orient at the end.
Cospan apply_Kmn(const Cospan& host, NodeId v, NodeId w, ColourId interface_colour);

struct IbReduceResult {
    Cospan graph;
    int eliminations = 0;    // interior interface-colour nodes removed
    bool budget_exhausted = false;
};

/// The reduction strategy: cancel parallel edges and isolated interior
/// nodes, eliminate interior interface-colour nodes one per iteration,
/// split nodes with several same-side legs, and orient edges from inputs
/// towards outputs. The callback, when set, sees the host after every
/// eliminating iteration.
IbReduceResult ib_reduce(const Cospan& host, ColourId interface_colour,
                         const std::function<void(const Cospan&)>& after_step = {});

/// Pre- and post-composes every leg with a changer so the interface moves
/// to the opposite colour.
Cospan ib_colour_swap(const Cospan& host);

}  // namespace frobrw
