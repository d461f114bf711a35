#include "frobrw/signature.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace frobrw {

ColourId Signature::add_colour(const std::string& name) {
    if (colour_by_name(name))
        throw Error("duplicate colour name: " + name);
    ColourId id = static_cast<ColourId>(colours.size());
    colours.push_back({id, name});
    return id;
}

GenId Signature::add_generator(const std::string& name, Word arity, Word coarity) {
    if (generator_by_name(name))
        throw Error("duplicate generator name: " + name);
    GenId id = static_cast<GenId>(generators.size());
    generators.push_back({id, name, std::move(arity), std::move(coarity), std::nullopt});
    return id;
}

GenId Signature::add_changer(ColourId from, ColourId to) {
    if (from == to)
        throw Error("changer endpoints must be distinct colours");
    std::string name = changer_name(*this, from, to);
    if (generator_by_name(name))
        throw Error("duplicate generator name: " + name);
    GenId id = static_cast<GenId>(generators.size());
    generators.push_back({id, name, Word{from}, Word{to}, std::make_pair(from, to)});
    return id;
}

void Signature::mark_frobenius(ColourId c) {
    colour(c);
    if (!is_frobenius(c)) frobenius_colours.push_back(c);
}

bool Signature::is_frobenius(ColourId c) const {
    return std::find(frobenius_colours.begin(), frobenius_colours.end(), c) !=
           frobenius_colours.end();
}

std::optional<ColourId> Signature::colour_by_name(const std::string& name) const {
    for (const Colour& c : colours)
        if (c.name == name) return c.id;
    return std::nullopt;
}

std::optional<GenId> Signature::generator_by_name(const std::string& name) const {
    for (const Generator& g : generators)
        if (g.name == name) return g.id;
    return std::nullopt;
}

const Colour& Signature::colour(ColourId c) const {
    if (c < 0 || c >= static_cast<ColourId>(colours.size()))
        throw Error("colour id out of range: " + std::to_string(c));
    return colours[c];
}

const Generator& Signature::generator(GenId g) const {
    if (g < 0 || g >= static_cast<GenId>(generators.size()))
        throw Error("generator id out of range: " + std::to_string(g));
    return generators[g];
}

std::vector<std::string> Signature::validate() const {
    std::vector<std::string> errs;
    std::set<std::string> names;
    for (size_t i = 0; i < colours.size(); ++i) {
        if (colours[i].id != static_cast<ColourId>(i))
            errs.push_back("colour id mismatch at index " + std::to_string(i));
        if (colours[i].name.empty())
            errs.push_back("colour " + std::to_string(i) + " has empty name");
        if (!names.insert(colours[i].name).second)
            errs.push_back("duplicate colour name: " + colours[i].name);
    }
    std::set<std::string> gnames;
    for (size_t i = 0; i < generators.size(); ++i) {
        const Generator& g = generators[i];
        if (g.id != static_cast<GenId>(i))
            errs.push_back("generator id mismatch at index " + std::to_string(i));
        if (g.name.empty())
            errs.push_back("generator " + std::to_string(i) + " has empty name");
        if (!gnames.insert(g.name).second)
            errs.push_back("duplicate generator name: " + g.name);
        for (ColourId c : g.arity)
            if (c < 0 || c >= static_cast<ColourId>(colours.size()))
                errs.push_back("generator " + g.name + " arity uses unknown colour " +
                               std::to_string(c));
        for (ColourId c : g.coarity)
            if (c < 0 || c >= static_cast<ColourId>(colours.size()))
                errs.push_back("generator " + g.name + " coarity uses unknown colour " +
                               std::to_string(c));
        if (g.changer) {
            auto [from, to] = *g.changer;
            if (from == to)
                errs.push_back("changer " + g.name + " endpoints coincide");
            if (g.arity != Word{from} || g.coarity != Word{to})
                errs.push_back("changer " + g.name + " type does not match its colours");
        }
    }
    for (ColourId c : frobenius_colours)
        if (c < 0 || c >= static_cast<ColourId>(colours.size()))
            errs.push_back("frobenius colour out of range: " + std::to_string(c));
    return errs;
}

void Signature::require_valid() const {
    std::vector<std::string> errs = validate();
    if (!errs.empty()) {
        std::ostringstream os;
        os << "invalid signature:";
        for (const std::string& e : errs) os << "\n  " << e;
        throw Error(os.str());
    }
}

std::string Signature::word_str(const Word& w) const {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << colour(w[i]).name;
    }
    return os.str();
}

std::string changer_name(const Signature& sig, ColourId from, ColourId to) {
    return "chg[" + sig.colour(from).name + "," + sig.colour(to).name + "]";
}

}  // namespace frobrw
