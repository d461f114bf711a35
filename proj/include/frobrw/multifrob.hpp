#pragma once

#include "frobrw/dpoi.hpp"

namespace frobrw {

/// A monochrome base signature in which some generator families are
/// declared to be extra Frobenius structures, together with the derived
/// polychrome signature: one fresh colour per extra family, the base
/// generators minus the family members, and a changer pair between the
/// base colour and each fresh colour (star topology).
struct FrobFamily {
    std::string name;       // colour name for the fresh colour
    std::string mult, unit, comult, counit;  // generator names in the base
};

struct PolySignature {
    Signature base;
    std::vector<FrobFamily> families;
    Signature poly;
    std::vector<ColourId> family_colour;           // per family, in poly
    std::vector<std::pair<GenId, GenId>> changers; // per family: (to, from), in poly

    static PolySignature make(const Signature& base, std::vector<FrobFamily> families);

    bool is_family_member(GenId base_gen, size_t& family, FrobKind& kind) const;
};

/// The colour-change translation: base generators and the first Frobenius
/// structure pass through unchanged; members of extra families become the
/// corresponding polychrome Frobenius generator wrapped in changers.
TermPtr chrome(const PolySignature& ps, const Term& base_term);

/// Normal form under changer cancellation: repeatedly contract any node
/// not on the interface whose only connections are one incoming and one
/// outgoing changer that are mutually inverse, merging the outer
/// endpoints. The redex chosen at each step is decided by `pick` (default:
/// smallest node id); the normal form is unique up to isomorphism
/// regardless.
using RedexPicker = std::function<int(const std::vector<NodeId>&)>;

InterfacedGraph upsilon_normalize(const InterfacedGraph& g, const RedexPicker& pick = {});
Cospan upsilon_normalize_cospan(const Cospan& c, const RedexPicker& pick = {});

/// The boundary-changer absorption transform. For every LHS leg whose node
/// has exactly one connection, that connection is an appropriately
/// oriented changer, and the node carries no other leg: drop the node and
/// the changer from the LHS, re-point the leg at the far endpoint, and
/// append the matching changer at the same RHS leg. Degenerate legs are
/// left untouched and reported.
struct TransformReport {
    Rule rule;
    std::vector<int> absorbed_legs;
    std::vector<int> untouched_legs;   // legs that met a changer but were degenerate
};

TransformReport transform_rule(const PolySignature& ps, const Rule& poly_rule);

/// Full pipeline for rewriting modulo several Frobenius structures: both
/// rule sides and the host are translated with chrome, interpreted,
/// normalized, the rules transformed, and rewriting interleaved with
/// normalization.
struct MultifrobResult {
    InterfacedGraph graph;
    std::vector<StepRecord> log;
    bool budget_exhausted = false;
};

std::vector<Rule> prepare_rules(const PolySignature& ps,
                                const std::vector<std::pair<TermPtr, TermPtr>>& rules,
                                const std::vector<std::string>& names);

MultifrobResult multifrob_rewrite(const PolySignature& ps,
                                  const std::vector<Rule>& transformed_rules,
                                  const Term& base_host, int max_steps);

}  // namespace frobrw
