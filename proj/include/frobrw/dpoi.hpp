#pragma once

#include <functional>

#include "frobrw/term.hpp"

namespace frobrw {

/// A rewriting rule L <= K => R given by two cospans with equal boundary
/// types. K is the discrete node sequence inputs-then-outputs; its images
/// in L and R are the corresponding leg nodes.
struct Rule {
    std::string name;
    Cospan lhs;
    Cospan rhs;

    Word boundary() const;
    int k_size() const { return static_cast<int>(lhs.inputs.size() + lhs.outputs.size()); }
    std::vector<NodeId> k_in_lhs() const;
    std::vector<NodeId> k_in_rhs() const;
    void check() const;
};

Rule rule_from_terms(const Signature& sig, const std::string& name, const Term& l,
                     const Term& r);
Rule rule_from_terms(const Signature& sig, const std::string& name, const std::string& l,
                     const std::string& r);

struct ConditionReport {
    bool ok = true;
    std::string reason;        // "dangling" or "identification" with a witness
};

/// Gluing conditions for a candidate occurrence m: L -> G with respect to
/// the boundary K -> L: no edge outside the image may touch a deleted node
/// (dangling), and nodes may only be merged by m if they lie in the image
/// of K (identification).
ConditionReport check_conditions(const Rule& rule, const Homomorphism& m,
                                 const Hypergraph& host);

/// A pushout complement C of K -> L -> G, with its maps K -> C and C -> G.
struct Complement {
    Hypergraph graph;
    std::vector<NodeId> k_to_c;
    std::vector<NodeId> c_to_g_nodes;
    std::vector<EdgeId> c_to_g_edges;
    int partition_index = 0;   // which boundary partition produced it
};

/// The unique pushout complement when K -> L is mono on nodes.
Complement complement_mono(const Rule& rule, const Homomorphism& m, const Hypergraph& host);

/// All pushout complements, enumerated by quotienting the exploded context
/// independently within each boundary fibre (set partitions generated as
/// restricted growth strings); candidates are kept when gluing back along
/// K -> L reproduces G over m. Fibres larger than 8 elements abort.
struct ComplementEnumeration {
    std::vector<Complement> complements;
    long partitions_examined = 0;
};

ComplementEnumeration complements_enumerate(const Rule& rule, const Homomorphism& m,
                                            const Hypergraph& host);

/// Verifies that gluing C and L along K reproduces (G, m, C -> G) exactly.
bool verify_complement(const Rule& rule, const Homomorphism& m, const Hypergraph& host,
                       const Complement& comp);

struct Match {
    Homomorphism hom;
    Complement comp;
    std::vector<NodeId> j_to_c;  // interface factorisation through the complement
};

/// All matches of the rule in the host with interface: every occurrence of
/// L passing the gluing conditions, paired with every pushout complement
/// through which the interface factors. Deterministic order: occurrences in
/// homomorphism search order, complements in partition order.
std::vector<Match> find_matches(const Rule& rule, const InterfacedGraph& host);

/// Applies one match: glues the complement with R along K and carries the
/// interface through. The result is freshly compacted.
InterfacedGraph rewrite_step(const Rule& rule, const InterfacedGraph& host,
                             const Match& match);

struct StepRecord {
    int step = 0;
    std::string rule;
    int match_index = 0;
    int partition_index = 0;
    int result_nodes = 0;
    int result_edges = 0;
};

struct ClosureResult {
    InterfacedGraph graph;
    std::vector<StepRecord> log;
    bool budget_exhausted = false;
};

/// Repeatedly applies the first applicable rule (by rule order, then match
/// order) until no rule applies or the step budget runs out. A selector
/// may override the default choice; returning -1 stops the closure.
using MatchSelector = std::function<int(const Rule&, const InterfacedGraph&,
                                        const std::vector<Match>&)>;

ClosureResult rewrite_closure(const std::vector<Rule>& rules, InterfacedGraph host,
                              int max_steps, const MatchSelector& select = {});

}  // namespace frobrw
