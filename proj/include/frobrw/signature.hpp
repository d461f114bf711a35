#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobrw {

using ColourId = int;
using GenId = int;
using NodeId = int;
using EdgeId = int;

/// A word over the colours of a signature; the empty word is a valid type.
using Word = std::vector<ColourId>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Colour {
    ColourId id = -1;
    std::string name;
};

struct Generator {
    GenId id = -1;
    std::string name;
    Word arity;
    Word coarity;
    // Set when this generator is a colour-change operation c1 -> c2.
    std::optional<std::pair<ColourId, ColourId>> changer;

    bool is_changer() const { return changer.has_value(); }
};

/// A coloured monoidal signature: colours, generators with arity/coarity
/// words, and the subset of colours carrying a chosen Frobenius algebra.
/// Frobenius generators are not members of the signature; they exist only
/// in term syntax and are absorbed by the cospan interpretation.
class Signature {
public:
    std::vector<Colour> colours;
    std::vector<Generator> generators;
    std::vector<ColourId> frobenius_colours;

    ColourId add_colour(const std::string& name);
    GenId add_generator(const std::string& name, Word arity, Word coarity);
    GenId add_changer(ColourId from, ColourId to);
    void mark_frobenius(ColourId c);

    bool is_frobenius(ColourId c) const;
    std::optional<ColourId> colour_by_name(const std::string& name) const;
    std::optional<GenId> generator_by_name(const std::string& name) const;
    const Colour& colour(ColourId c) const;
    const Generator& generator(GenId g) const;
    bool monochrome() const { return colours.size() == 1; }

    /// Returns every invariant violation; empty means the signature is valid.
    std::vector<std::string> validate() const;
    void require_valid() const;

    std::string word_str(const Word& w) const;
};

/// Conventional changer name, e.g. "chg[b,r]".
std::string changer_name(const Signature& sig, ColourId from, ColourId to);

}  // namespace frobrw
