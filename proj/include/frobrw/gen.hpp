#pragma once

#include <random>

#include "frobrw/term.hpp"

namespace frobrw {

using Rng = std::mt19937_64;

/// A random well-typed term with the given domain, built layer by layer:
/// each layer tiles the current boundary word with identities, symmetries,
/// Frobenius pieces (when allowed) and matching generators.
TermPtr random_layered_term(const Signature& sig, const Word& dom, int layers, Rng& rng,
                            bool allow_frobenius = true);

/// A random domain word of length up to max_len.
Word random_word(const Signature& sig, int max_len, Rng& rng);

/// A random acyclic host over the group signature {m, i, u}, produced by
/// interpreting random terms and folding; bounded numbers of nodes and
/// edges so brute-force model checks stay cheap.
InterfacedGraph random_group_host(const Signature& sig, Rng& rng, int max_nodes = 12,
                                  int max_edges = 10);

/// A random two-coloured changer graph with a random interface, for
/// normalization experiments.
InterfacedGraph random_changer_graph(const Signature& sig, Rng& rng, int max_nodes = 8,
                                     int max_edges = 10);

/// A random changer cospan with every leg on the given interface colour.
Cospan random_ib_cospan(const Signature& sig, ColourId interface_colour, Rng& rng,
                        int max_each_colour = 8, int max_edges = 14, int max_legs = 3);

}  // namespace frobrw
