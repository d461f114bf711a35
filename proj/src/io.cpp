#include "frobrw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace frobrw {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

Word parse_sig_word(const Signature& sig, const std::vector<std::string>& toks,
                    size_t from, size_t to) {
    Word w;
    if (to == from + 1 && !toks[from].empty() &&
        toks[from].find_first_not_of("0123456789") == std::string::npos) {
        long n = std::stol(toks[from]);
        if (n != 0 && !sig.monochrome())
            throw Error("integer arity sugar needs a monochrome signature");
        for (long i = 0; i < n; ++i) w.push_back(0);
        return w;
    }
    for (size_t i = from; i < to; ++i) {
        auto c = sig.colour_by_name(toks[i]);
        if (!c) throw Error("unknown colour in signature file: " + toks[i]);
        w.push_back(*c);
    }
    return w;
}

}  // namespace

Signature parse_signature_text(const std::string& text) {
    Signature sig;
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> pending;
    bool have_colours = false;
    std::vector<std::string> frob_names;
    bool have_frob = false;
    while (std::getline(is, line)) {
        line = strip_comment(line);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "colours:") {
            for (size_t i = 1; i < toks.size(); ++i) sig.add_colour(toks[i]);
            have_colours = true;
            continue;
        }
        if (toks[0] == "frobenius:") {
            frob_names.assign(toks.begin() + 1, toks.end());
            have_frob = true;
            continue;
        }
        pending.push_back(line);
    }
    if (!have_colours) sig.add_colour("w");
    if (have_frob) {
        for (const std::string& n : frob_names) {
            auto c = sig.colour_by_name(n);
            if (!c) throw Error("unknown frobenius colour: " + n);
            sig.mark_frobenius(*c);
        }
    } else {
        for (const Colour& c : sig.colours) sig.mark_frobenius(c.id);
    }
    for (const std::string& decl : pending) {
        std::vector<std::string> toks = split_ws(decl);
        // name : w1 ... -> w2 ...
        auto colon = std::find(toks.begin(), toks.end(), ":");
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (toks.size() < 3 || colon != toks.begin() + 1 || arrow == toks.end())
            throw Error("malformed signature declaration: " + decl);
        size_t ai = static_cast<size_t>(arrow - toks.begin());
        Word dom = parse_sig_word(sig, toks, 2, ai);
        Word cod = parse_sig_word(sig, toks, ai + 1, toks.size());
        if (toks[0] == "chg") {
            if (dom.size() != 1 || cod.size() != 1 || dom[0] == cod[0])
                throw Error("malformed changer declaration: " + decl);
            sig.add_changer(dom[0], cod[0]);
        } else {
            sig.add_generator(toks[0], std::move(dom), std::move(cod));
        }
    }
    sig.require_valid();
    return sig;
}

Signature load_signature(const std::string& path) {
    return parse_signature_text(read_file(path));
}

namespace {

json graph_json(const Hypergraph& g) {
    json nodes = json::array();
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        nodes.push_back({{"id", v}, {"colour", g.sig->colour(g.node_colour[v]).name}});
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges[e];
        edges.push_back({{"id", e},
                         {"label", g.sig->generator(ed.label).name},
                         {"sources", ed.sources},
                         {"targets", ed.targets}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

Hypergraph graph_from(const Signature& sig, const json& j) {
    Hypergraph g(sig);
    std::vector<ColourId> colour_of_id;
    int expect = 0;
    for (const auto& n : j.at("nodes")) {
        if (n.at("id").get<int>() != expect++)
            throw Error("graph nodes must be listed with dense ascending ids");
        auto c = sig.colour_by_name(n.at("colour").get<std::string>());
        if (!c) throw Error("unknown colour: " + n.at("colour").get<std::string>());
        g.add_node(*c);
    }
    expect = 0;
    for (const auto& e : j.at("edges")) {
        if (e.at("id").get<int>() != expect++)
            throw Error("graph edges must be listed with dense ascending ids");
        auto l = sig.generator_by_name(e.at("label").get<std::string>());
        if (!l) throw Error("unknown generator: " + e.at("label").get<std::string>());
        g.add_edge(*l, e.at("sources").get<std::vector<NodeId>>(),
                   e.at("targets").get<std::vector<NodeId>>());
    }
    return g;
}

std::vector<NodeId> legs_from(const Hypergraph& g, const json& j, const char* key) {
    std::vector<NodeId> legs = j.at(key).get<std::vector<NodeId>>();
    for (NodeId v : legs)
        if (v < 0 || v >= g.num_nodes()) throw Error(std::string(key) + " leg out of range");
    return legs;
}

}  // namespace

std::string graph_to_json(const Hypergraph& g) { return graph_json(g).dump(2); }

std::string cospan_to_json(const Cospan& c) {
    json j = graph_json(c.graph);
    j["inputs"] = c.inputs;
    j["outputs"] = c.outputs;
    return j.dump(2);
}

std::string interfaced_to_json(const InterfacedGraph& g) {
    json j = graph_json(g.graph);
    j["interface"] = g.interface;
    return j.dump(2);
}

Hypergraph graph_from_json(const Signature& sig, const std::string& json_text) {
    try {
        return graph_from(sig, json::parse(json_text));
    } catch (const json::exception& e) {
        throw Error(std::string("bad graph JSON: ") + e.what());
    }
}

Cospan cospan_from_json(const Signature& sig, const std::string& json_text) {
    try {
        json j = json::parse(json_text);
        Cospan c;
        c.graph = graph_from(sig, j);
        c.inputs = legs_from(c.graph, j, "inputs");
        c.outputs = legs_from(c.graph, j, "outputs");
        return c;
    } catch (const json::exception& e) {
        throw Error(std::string("bad cospan JSON: ") + e.what());
    }
}

InterfacedGraph interfaced_from_json(const Signature& sig, const std::string& json_text) {
    try {
        json j = json::parse(json_text);
        InterfacedGraph g;
        g.graph = graph_from(sig, j);
        g.interface = legs_from(g.graph, j, "interface");
        return g;
    } catch (const json::exception& e) {
        throw Error(std::string("bad interfaced graph JSON: ") + e.what());
    }
}

std::vector<Rule> parse_rules_text(const Signature& sig, const std::string& text) {
    std::vector<Rule> rules;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = strip_comment(line);
        if (split_ws(line).empty()) continue;
        size_t colon = line.find(':');
        size_t arrow = line.find("=>");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            throw Error("malformed rule line: " + line);
        std::string name = line.substr(0, colon);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        std::string l = line.substr(colon + 1, arrow - colon - 1);
        std::string r = line.substr(arrow + 2);
        rules.push_back(rule_from_terms(sig, name, l, r));
    }
    return rules;
}

std::vector<Rule> load_rules(const Signature& sig, const std::string& path) {
    return parse_rules_text(sig, read_file(path));
}

namespace {

std::string dot_impl(const Hypergraph& g, const std::vector<NodeId>& interface) {
    static const char* palette[] = {"black", "firebrick", "royalblue", "darkgreen",
                                    "darkorange", "purple"};
    std::ostringstream os;
    os << "digraph G {\n  rankdir=LR;\n";
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        const char* col = palette[g.node_colour[v] % 6];
        os << "  n" << v << " [shape=circle,label=\"" << v << "\",color=" << col
           << ",fontcolor=" << col << "];\n";
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges[e];
        os << "  e" << e << " [shape=box,label=\"" << g.sig->generator(ed.label).name
           << "\"];\n";
        for (size_t i = 0; i < ed.sources.size(); ++i)
            os << "  n" << ed.sources[i] << " -> e" << e << " [label=\"s" << i << "\"];\n";
        for (size_t i = 0; i < ed.targets.size(); ++i)
            os << "  e" << e << " -> n" << ed.targets[i] << " [label=\"t" << i << "\"];\n";
    }
    for (size_t i = 0; i < interface.size(); ++i) {
        os << "  j" << i << " [shape=diamond,label=\"" << i << "\"];\n";
        os << "  j" << i << " -> n" << interface[i] << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const InterfacedGraph& g) { return dot_impl(g.graph, g.interface); }

std::string to_dot(const Cospan& c) {
    std::vector<NodeId> legs = c.inputs;
    legs.insert(legs.end(), c.outputs.begin(), c.outputs.end());
    return dot_impl(c.graph, legs);
}

}  // namespace frobrw
