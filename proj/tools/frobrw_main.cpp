#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobrw/gen.hpp"
#include "frobrw/io.hpp"
#include "frobrw/multifrob.hpp"
#include "frobrw/semantics.hpp"
#include "frobrw/strategies.hpp"

using namespace frobrw;
using nlohmann::json;

// Exit codes: 0 success, 1 usage or input errors, 2 negative outcome
// (parse failure, no applicable rule, inequality, not reduced).
namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNegative = 2;

uint64_t effective_seed(uint64_t cli_seed, bool seed_set) {
    if (seed_set) return cli_seed;
    if (const char* env = std::getenv("FROBRW_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

// Signature files may declare extra Frobenius families for the polychrome
// pipeline: `family <colour> : <mult> <unit> <comult> <counit>`.
PolySignature load_poly(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream is(text);
    std::string line, rest;
    std::vector<FrobFamily> fams;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "family") {
            FrobFamily f;
            std::string colon;
            ls >> f.name >> colon >> f.mult >> f.unit >> f.comult >> f.counit;
            if (colon != ":" || f.counit.empty())
                throw Error("malformed family declaration: " + line);
            fams.push_back(std::move(f));
        } else {
            rest += line + "\n";
        }
    }
    return PolySignature::make(parse_signature_text(rest), std::move(fams));
}

FiniteModel load_model(const Signature& sig, const std::string& path) {
    json j = json::parse(read_file(path));
    std::vector<int> carriers(sig.colours.size(), 0);
    for (const auto& [name, size] : j.at("carriers").items()) {
        auto c = sig.colour_by_name(name);
        if (!c) throw Error("unknown colour in model: " + name);
        carriers[*c] = size.get<int>();
    }
    FiniteModel m(sig, carriers);
    if (j.contains("relations"))
        for (const auto& [name, tuples] : j.at("relations").items())
            m.set_relation(name, tuples.get<std::set<std::vector<int>>>());
    return m;
}

json relation_json(const Relation& r) {
    json pairs = json::array();
    for (const auto& [x, y] : r.pairs) pairs.push_back({{"in", x}, {"out", y}});
    return {{"pairs", pairs}};
}

void write_log(const std::string& path, const std::vector<StepRecord>& log) {
    std::ostream* os = &std::cerr;
    std::ofstream file;
    if (!path.empty()) {
        file.open(path);
        os = &file;
    }
    for (const StepRecord& s : log) {
        json j = {{"step", s.step},       {"rule", s.rule},
                  {"match", s.match_index}, {"partition", s.partition_index},
                  {"nodes", s.result_nodes}, {"edges", s.result_edges}};
        *os << j.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobrw: string diagram rewriting over hypergraph cospans"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool seed_set = false;
    app.add_option("--seed", seed, "seed for randomized subcommands (or FROBRW_SEED)")
        ->each([&](const std::string&) { seed_set = true; });

    std::string sig_path, term_src, host_path, rules_path, out_path, log_path, model_path;
    std::string mode = "group", colour = "b", kind = "group";
    int max_steps = 1000, count = 1;
    bool as_dot = false, swap_colours = false;

    auto* parse_cmd = app.add_subcommand("parse", "parse and type check a term");
    parse_cmd->add_option("--sig", sig_path, "signature file")->required();
    parse_cmd->add_option("term", term_src, "term text")->required();

    auto* interp_cmd = app.add_subcommand("interp", "interpret a term as a cospan");
    interp_cmd->add_option("--sig", sig_path)->required();
    interp_cmd->add_option("term", term_src)->required();
    interp_cmd->add_flag("--dot", as_dot, "emit graphviz instead of JSON");

    auto* rw_cmd = app.add_subcommand("rewrite", "rewrite a host with a rule file");
    rw_cmd->add_option("--sig", sig_path)->required();
    rw_cmd->add_option("--rules", rules_path)->required();
    rw_cmd->add_option("--host", host_path, "host cospan JSON file")->required();
    rw_cmd->add_option("--steps", max_steps);
    rw_cmd->add_option("--log", log_path, "derivation log file (JSON lines)");

    auto* ups_cmd = app.add_subcommand("normalize-upsilon", "cancel inverse changer pairs");
    ups_cmd->add_option("--sig", sig_path)->required();
    ups_cmd->add_option("--host", host_path)->required();

    auto* tr_cmd = app.add_subcommand("transform-rules",
                                      "translate base rules and absorb boundary changers");
    tr_cmd->add_option("--sig", sig_path, "signature file with family declarations")
        ->required();
    tr_cmd->add_option("--rules", rules_path)->required();

    auto* red_cmd = app.add_subcommand("reduce", "run a terminating strategy");
    red_cmd->add_option("--mode", mode, "group or ib")->check(CLI::IsMember({"group", "ib"}));
    red_cmd->add_option("--host", host_path)->required();
    red_cmd->add_option("--colour", colour, "interface colour for ib mode");
    red_cmd->add_flag("--swap", swap_colours, "reduce with the interface colour swapped");
    red_cmd->add_option("--steps", max_steps);

    auto* sem_cmd = app.add_subcommand("semantics", "evaluate in a finite model or GF(2)");
    sem_cmd->add_option("--sig", sig_path)->required();
    sem_cmd->add_option("--model", model_path, "finite model JSON; omit for GF(2)");
    sem_cmd->add_option("term", term_src, "term, or @file.json for a cospan");

    auto* exp_cmd = app.add_subcommand("export", "render a cospan JSON file as graphviz");
    exp_cmd->add_option("--sig", sig_path)->required();
    exp_cmd->add_option("--host", host_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "emit seeded random corpora");
    gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"group", "ib", "changer"}));
    gen_cmd->add_option("--count", count);

    // let the global --seed appear after the subcommand name too
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*parse_cmd) {
            Signature sig = load_signature(sig_path);
            TermPtr t;
            try {
                t = parse_term(sig, term_src);
            } catch (const ParseError& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kNegative;
            }
            std::cout << term_str(sig, *t) << "\n";
            std::cout << sig.word_str(t->dom) << " -> " << sig.word_str(t->cod) << "\n";
            return kOk;
        }
        if (*interp_cmd) {
            Signature sig = load_signature(sig_path);
            Cospan c = interp(sig, *parse_term(sig, term_src));
            std::cout << (as_dot ? to_dot(c) : cospan_to_json(c)) << "\n";
            return kOk;
        }
        if (*rw_cmd) {
            Signature sig = load_signature(sig_path);
            std::vector<Rule> rules = load_rules(sig, rules_path);
            InterfacedGraph host =
                fold(cospan_from_json(sig, read_file(host_path))).ig;
            ClosureResult res = rewrite_closure(rules, host, max_steps);
            write_log(log_path, res.log);
            std::cout << interfaced_to_json(res.graph) << "\n";
            return res.log.empty() ? kNegative : kOk;
        }
        if (*ups_cmd) {
            Signature sig = load_signature(sig_path);
            Cospan c = cospan_from_json(sig, read_file(host_path));
            std::cout << cospan_to_json(upsilon_normalize_cospan(c)) << "\n";
            return kOk;
        }
        if (*tr_cmd) {
            PolySignature ps = load_poly(sig_path);
            std::vector<std::pair<TermPtr, TermPtr>> pairs;
            std::vector<std::string> names;
            std::istringstream is(read_file(rules_path));
            std::string line;
            while (std::getline(is, line)) {
                size_t h = line.find('#');
                if (h != std::string::npos) line = line.substr(0, h);
                if (line.find_first_not_of(" \t") == std::string::npos) continue;
                size_t colon = line.find(':');
                size_t arrow = line.find("=>");
                if (colon == std::string::npos || arrow == std::string::npos)
                    throw Error("malformed rule line: " + line);
                names.push_back(line.substr(0, colon));
                pairs.push_back({parse_term(ps.base, line.substr(colon + 1, arrow - colon - 1)),
                                 parse_term(ps.base, line.substr(arrow + 2))});
            }
            for (const Rule& r : prepare_rules(ps, pairs, names)) {
                std::cout << "rule " << r.name << " lhs:\n" << cospan_to_json(r.lhs) << "\n";
                std::cout << "rule " << r.name << " rhs:\n" << cospan_to_json(r.rhs) << "\n";
            }
            return kOk;
        }
        if (*red_cmd) {
            if (mode == "group") {
                Signature sig = make_group_signature();
                InterfacedGraph host =
                    fold(cospan_from_json(sig, read_file(host_path))).ig;
                GroupReduceResult res =
                    group_reduce(sig, make_group_rules(sig), host, max_steps);
                std::cout << interfaced_to_json(res.graph) << "\n";
                return res.budget_exhausted ? kNegative : kOk;
            }
            Signature sig = make_ib_signature();
            Cospan host = cospan_from_json(sig, read_file(host_path));
            auto ic = sig.colour_by_name(colour);
            if (!ic) throw Error("unknown colour: " + colour);
            if (swap_colours) {
                host = ib_colour_swap(host);
                ic = 1 - *ic;
            }
            IbReduceResult res = ib_reduce(host, *ic);
            std::cout << cospan_to_json(res.graph) << "\n";
            return ib_is_reduced(res.graph, *ic).reduced ? kOk : kNegative;
        }
        if (*sem_cmd) {
            Signature sig = load_signature(sig_path);
            if (!model_path.empty()) {
                FiniteModel m = load_model(sig, model_path);
                Relation r = term_src.size() && term_src[0] == '@'
                                 ? eval_graph(m, cospan_from_json(sig, read_file(term_src.substr(1))))
                                 : eval_term(m, *parse_term(sig, term_src));
                std::cout << relation_json(r).dump(2) << "\n";
                return kOk;
            }
            Cospan c = term_src.size() && term_src[0] == '@'
                           ? cospan_from_json(sig, read_file(term_src.substr(1)))
                           : interp(sig, *parse_term(sig, term_src));
            Subspace2 s = ib_subspace(c);
            json basis = json::array();
            for (uint64_t b : s.basis) {
                std::vector<int> bits;
                for (int i = 0; i < s.dim; ++i) bits.push_back((b >> i) & 1);
                basis.push_back(bits);
            }
            std::cout << json{{"dim", s.dim}, {"basis", basis}}.dump(2) << "\n";
            return kOk;
        }
        if (*exp_cmd) {
            Signature sig = load_signature(sig_path);
            std::cout << to_dot(cospan_from_json(sig, read_file(host_path))) << "\n";
            return kOk;
        }
        if (*gen_cmd) {
            Rng rng(effective_seed(seed, seed_set));
            for (int i = 0; i < count; ++i) {
                if (kind == "group") {
                    Signature sig = make_group_signature();
                    std::cout << interfaced_to_json(random_group_host(sig, rng)) << "\n";
                } else if (kind == "changer") {
                    Signature sig = make_ib_signature();
                    std::cout << interfaced_to_json(random_changer_graph(sig, rng)) << "\n";
                } else {
                    Signature sig = make_ib_signature();
                    std::cout << cospan_to_json(random_ib_cospan(sig, 0, rng)) << "\n";
                }
            }
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
