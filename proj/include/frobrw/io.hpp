#pragma once

#include <iosfwd>

#include "frobrw/dpoi.hpp"

namespace frobrw {

/// Signature text format, one declaration per line:
///   colours: w r            (optional for monochrome; default colour "w")
///   frobenius: w r          (optional; defaults to every colour)
///   chg : w -> r            (a changer pair member)
///   f : w w -> r            (a generator; monochrome sugar: f : 2 -> 1)
/// '#' starts a comment.
Signature parse_signature_text(const std::string& text);
Signature load_signature(const std::string& path);

/// Graph JSON:
///   {"nodes":[{"id":0,"colour":"w"},...],
///    "edges":[{"id":0,"label":"f","sources":[0],"targets":[1,2]},...]}
/// Cospans add "inputs" and "outputs" arrays of node ids; interfaced
/// graphs add "interface".
std::string graph_to_json(const Hypergraph& g);
std::string cospan_to_json(const Cospan& c);
std::string interfaced_to_json(const InterfacedGraph& g);
Hypergraph graph_from_json(const Signature& sig, const std::string& json_text);
Cospan cospan_from_json(const Signature& sig, const std::string& json_text);
InterfacedGraph interfaced_from_json(const Signature& sig, const std::string& json_text);

/// Rule files: one rule per line, `name : lhs-term => rhs-term`.
std::vector<Rule> parse_rules_text(const Signature& sig, const std::string& text);
std::vector<Rule> load_rules(const Signature& sig, const std::string& path);

/// Graphviz rendering: round nodes per graph node, boxes per hyperedge
/// with numbered tentacles, diamond ports for interface legs.
std::string to_dot(const InterfacedGraph& g);
std::string to_dot(const Cospan& c);

std::string read_file(const std::string& path);

}  // namespace frobrw
