#pragma once

#include "frobrw/hypergraph.hpp"

namespace frobrw {

/// A discrete cospan m -> G <- n: a hypergraph with positional input and
/// output leg lists. Legs may repeat nodes (the leg maps need not be
/// injective; this is what makes Frobenius structure representable).
struct Cospan {
    Hypergraph graph;
    std::vector<NodeId> inputs;
    std::vector<NodeId> outputs;

    Word dom() const;
    Word cod() const;
    void check() const;
};

enum class FrobKind { Mult, Unit, Comult, Counit };

Cospan identity_cospan(const Signature& sig, const Word& w);
Cospan symmetry_cospan(const Signature& sig, const Word& v, const Word& w);
Cospan generator_cospan(const Signature& sig, GenId g);
/// Single-node cospans for the chosen Frobenius structure on colour c:
/// mult 2 -> 1, unit 0 -> 1, comult 1 -> 2, counit 1 -> 0.
Cospan frobenius_cospan(const Signature& sig, ColourId c, FrobKind kind);

/// Composition along the shared boundary by pushout; throws on a colour
/// word mismatch.
Cospan compose(const Cospan& a, const Cospan& b);
/// Tensor by disjoint union (a's nodes and edges first).
Cospan tensor(const Cospan& a, const Cospan& b);

/// Cospan isomorphism: a graph isomorphism commuting with both legs
/// positionally.
bool cospan_iso(const Cospan& a, const Cospan& b);

/// Folding m -> G <- n into 0 -> G <- m+n by copairing the legs; the split
/// is recorded so the fold can be undone exactly.
struct FoldedCospan {
    InterfacedGraph ig;
    size_t n_inputs = 0;
    size_t n_outputs = 0;

    Cospan unfold() const;
};

FoldedCospan fold(const Cospan& c);

}  // namespace frobrw
