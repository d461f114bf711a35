#pragma once

#include <cstdint>
#include <set>

#include "frobrw/term.hpp"

namespace frobrw {

/// A finite relational model: a finite carrier per colour and a relation
/// per generator over arity-then-coarity tuples. Frobenius structure is
/// interpreted by the all-equal relation, changers by the identity (their
/// two carriers must then have equal size).
struct FiniteModel {
    const Signature* sig = nullptr;
    std::vector<int> carrier;                         // size per colour
    std::vector<std::set<std::vector<int>>> rel;      // per generator

    FiniteModel() = default;
    FiniteModel(const Signature& s, std::vector<int> carrier_sizes);

    void set_relation(GenId g, std::set<std::vector<int>> tuples);
    void set_relation(const std::string& gen_name, std::set<std::vector<int>> tuples);
};

/// A relation between value tuples typed by colour words.
struct Relation {
    Word dom, cod;
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;

    bool operator==(const Relation&) const = default;
};

/// The group Z_n as a model of the signature {m, i, u} (names looked up in
/// sig): m is the graph of addition, i of negation, u picks out 0.
FiniteModel make_group_model(const Signature& sig, int n);

/// Brute-force evaluation of a cospan: each node carries one value (so
/// Frobenius spiders are all-equal for free), every edge's endpoint tuple
/// must lie in its label's relation, and interior nodes are existentially
/// projected away. Throws when the assignment space exceeds max_space.
Relation eval_graph(const FiniteModel& m, const Cospan& c, double max_space = 1e7);
Relation eval_graph(const FiniteModel& m, const InterfacedGraph& g, double max_space = 1e7);

/// Compositional evaluation of a term; agrees with eval_graph after interp.
Relation eval_term(const FiniteModel& m, const Term& t);

/// A subspace of Z2^dim in reduced row echelon form; rows are bitmasks with
/// coordinate i at bit i, dim <= 64.
struct Subspace2 {
    int dim = 0;
    std::vector<uint64_t> basis;  // canonical RREF rows, sorted by pivot

    bool contains(uint64_t v) const;
};

Subspace2 span2(int dim, std::vector<uint64_t> rows);
Subspace2 nullspace2(int dim, const std::vector<uint64_t>& constraint_rows);
bool subspace_equal(const Subspace2& a, const Subspace2& b);
Subspace2 orthogonal_complement(const Subspace2& s);

/// GF(2) semantics of a two-coloured changer graph in the interacting
/// bialgebra style: copy-colour nodes are variables forced equal on all
/// their wires, parity-colour nodes impose that their incident wire values
/// sum to zero, boundary legs are the coordinates (inputs then outputs).
/// Returns the projection of the solution space onto the boundary.
Subspace2 ib_subspace(const Cospan& c, ColourId copy_colour = 0);

/// Read-off for a reduced cospan-form graph (interface on copy-colour
/// nodes, no interior copy-colour nodes): transcribes each parity node as a
/// linear equation over boundary coordinates and returns its solution
/// space. Agrees with ib_subspace.
Subspace2 readoff_reduced(const Cospan& c, ColourId copy_colour = 0);

/// Read-off for a span-form graph (interface entirely on parity-colour
/// nodes, each carrying exactly one leg; copy-colour nodes all interior):
/// each copy-colour node contributes a basis vector with a 1 wherever it
/// has an odd number of edges to the leg node of that coordinate.
Subspace2 readoff_span(const Cospan& c, ColourId copy_colour = 0);

/// The equations of a reduced cospan-form graph, one sorted coordinate set
/// per parity node (edge multiplicities taken mod 2).
std::vector<std::vector<int>> reduced_equations(const Cospan& c, ColourId copy_colour = 0);

}  // namespace frobrw
