#include "polycoord/cli.hpp"

#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polycoord/errors.hpp"
#include "polycoord/json_io.hpp"
#include "polycoord/oracle.hpp"

namespace polycoord::cli {

namespace {

struct Outcome {
    Json document;
    int code = kOk;
};

Json error_document(const std::string &kind, const std::string &message) {
    return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

// Reduction documents are expanded to their explicit game first.
LanguageGame load_language_game(const Json &doc) {
    if (is_language_document(doc)) {
        return language_game_from_json(doc);
    }
    if (is_reduction_document(doc)) {
        return reduction_from_json(doc).materialise();
    }
    throw InvalidInput("document is neither a language game nor a reduction");
}

PolymatrixGame load_game(const Json &doc) {
    if (is_language_document(doc) || is_reduction_document(doc)) {
        return to_polymatrix(load_language_game(doc));
    }
    return game_from_json(doc);
}

// Accepts {"n", "edges": [[i, j], ...]} as well as any game document.
Graph load_graph(const Json &doc) {
    if (is_language_document(doc) || is_reduction_document(doc)) {
        return load_language_game(doc).graph;
    }
    const auto edges = doc.find("edges");
    if (edges != doc.end() && edges->is_array() && !edges->empty() && edges->front().is_object()) {
        return game_from_json(doc).underlying_graph();
    }
    return graph_from_json(doc);
}

Json profile_value(const StrategyProfile &p, const Rational &v) {
    return Json{{"profile", p.str()}, {"value", to_json(v)}};
}

Outcome solve_report(const SolveReport &report, bool brute_force,
                     const std::function<std::pair<StrategyProfile, Rational>()> &fallback) {
    Json doc = to_json(report);
    if (report.status != SolveStatus::Hard) {
        return {doc, kOk};
    }
    if (!brute_force) {
        return {doc, kHard};
    }
    const auto [profile, value] = fallback();
    doc["profile"] = profile.str();
    doc["value"] = to_json(value);
    doc["fallback"] = "brute_force";
    return {doc, kOk};
}

Json nash_document(const std::vector<Vertex> &deviators) {
    return Json{{"equilibrium", deviators.empty()}, {"deviators", deviators}};
}

Outcome check_nash(const Json &doc, const StrategyProfile &profile) {
    if (is_reduction_document(doc)) {
        return {nash_document(reduction_deviators(reduction_from_json(doc), profile)), kOk};
    }
    const NashReport r = is_nash(load_game(doc), profile);
    Json out = nash_document(r.deviators);
    out["strict"] = r.strict;
    return {out, kOk};
}

Json language_report(const LanguageSolveReport &r) {
    Json out{{"case", to_string(r.which)},
             {"profile", r.profile.str()},
             {"welfare", to_json(r.welfare)},
             {"cut_value", nullptr}};
    if (r.cut_value) {
        out["cut_value"] = to_json(*r.cut_value);
    }
    return out;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out) {
    CLI::App app{"Exact solvers for binary-action polymatrix coordination games"};
    app.name("polycoord");
    app.require_subcommand(1);

    std::string file;
    std::string profile_file;
    std::string gamma_a;
    std::string gamma_b;
    bool brute_force = false;
    bool materialise = false;
    std::size_t cap = kDefaultEnumerationCap;
    std::optional<std::size_t> cut_cap;
    std::function<Outcome()> action;

    const auto add_leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                              const std::string &file_help) {
        CLI::App *leaf = parent->add_subcommand(name, help);
        leaf->add_option("file", file, file_help)->required();
        return leaf;
    };

    CLI::App *solve = app.add_subcommand("solve", "Polynomial-time solvers");
    solve->require_subcommand(1);
    for (const char *objective : {"welfare", "potential"}) {
        const std::string name = objective;
        CLI::App *leaf = add_leaf(solve, name, "Maximise " + name + " of a game", "game JSON");
        leaf->add_flag("--brute-force", brute_force, "Enumerate profiles when the instance is hard");
        leaf->add_option("--cap", cap, "Largest n for enumeration");
        leaf->callback([&, name] {
            action = [&, name]() -> Outcome {
                const PolymatrixGame game = load_game(load_json_file(file));
                if (name == "welfare") {
                    return solve_report(maximize_welfare(game), brute_force, [&] {
                        const auto pv = brute_welfare_max(game, cap);
                        return std::pair{pv.profile, pv.value};
                    });
                }
                return solve_report(maximize_potential(game), brute_force, [&] {
                    const auto pv = brute_potential_max(game, cap);
                    return std::pair{pv.profile, pv.value};
                });
            };
        });
    }
    {
        CLI::App *leaf = add_leaf(solve, "mwop", "Maximum weighted orgraph partition", "MWOP JSON");
        leaf->add_flag("--brute-force", brute_force, "Enumerate partitions when the instance is hard");
        leaf->add_option("--cap", cap, "Largest n for enumeration");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                const MwopInstance inst = mwop_from_json(load_json_file(file));
                return solve_report(solve_mwop(inst), brute_force, [&] {
                    const auto s = brute_force_mwop(inst, cap);
                    return std::pair{s.partition, s.value};
                });
            };
        });
    }
    {
        CLI::App *leaf = add_leaf(solve, "language", "Best Nash equilibrium of a language game",
                                  "language game or reduction JSON");
        leaf->add_option("--cap", cap, "Largest n for enumeration in the general case");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                return {language_report(solve_language(load_language_game(load_json_file(file)), cap)), kOk};
            };
        });
    }

    CLI::App *check = app.add_subcommand("check", "Equilibrium checks");
    check->require_subcommand(1);
    {
        CLI::App *leaf = add_leaf(check, "nash", "Test a profile for Nash equilibrium", "game JSON");
        leaf->add_option("profile", profile_file, "profile JSON")->required();
        leaf->callback([&] {
            action = [&]() -> Outcome {
                const Json doc = load_json_file(file);
                return check_nash(doc, profile_from_json(load_json_file(profile_file)));
            };
        });
    }

    CLI::App *gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    {
        CLI::App *leaf = add_leaf(gen, "hardness", "Language game from a 3-uniform hypergraph", "hypergraph JSON");
        leaf->add_option("--gamma-a", gamma_a, "Threshold of group A, p/q")->required();
        leaf->add_option("--gamma-b", gamma_b, "Threshold of group B, p/q")->required();
        leaf->add_flag("--materialise", materialise, "Also emit the explicit edge list");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                const Hypergraph3 h = hypergraph_from_json(load_json_file(file));
                const auto inst = build_reduction(h, Rational::parse(gamma_a), Rational::parse(gamma_b));
                return {to_json(inst, materialise), kOk};
            };
        });
    }

    CLI::App *oracle = app.add_subcommand("oracle", "Exhaustive reference solvers");
    oracle->require_subcommand(1);
    for (const char *objective : {"welfare", "potential"}) {
        const std::string name = objective;
        CLI::App *leaf = add_leaf(oracle, name, "Exhaustive " + name + " maximum", "game JSON");
        leaf->add_option("--cap", cap, "Largest n for enumeration");
        leaf->callback([&, name] {
            action = [&, name]() -> Outcome {
                const PolymatrixGame game = load_game(load_json_file(file));
                const auto pv = name == "welfare" ? brute_welfare_max(game, cap) : brute_potential_max(game, cap);
                return {profile_value(pv.profile, pv.value), kOk};
            };
        });
    }
    {
        CLI::App *leaf = add_leaf(oracle, "ne", "All pure Nash equilibria", "game JSON");
        leaf->add_option("--cap", cap, "Largest n for enumeration");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                Json list = Json::array();
                for (const auto &p : enumerate_pure_ne(load_game(load_json_file(file)), cap)) {
                    list.push_back(p.str());
                }
                const std::size_t count = list.size();
                return {Json{{"equilibria", list}, {"count", count}}, kOk};
            };
        });
    }
    {
        CLI::App *leaf = add_leaf(oracle, "maxcut", "Exhaustive maximum cut", "graph or game JSON");
        leaf->add_option("--cap", cut_cap, "Largest n for enumeration");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                const auto r = brute_max_cut(load_graph(load_json_file(file)), cut_cap.value_or(kDefaultCutCap));
                return {Json{{"partition", r.partition.str()}, {"cut_size", r.cut_size}}, kOk};
            };
        });
    }
    {
        CLI::App *leaf = add_leaf(oracle, "transversal", "Exhaustive minimum transversal", "hypergraph JSON");
        leaf->add_option("--cap", cap, "Largest |V| for enumeration");
        leaf->callback([&] {
            action = [&]() -> Outcome {
                const auto r = brute_min_transversal(hypergraph_from_json(load_json_file(file)), cap);
                return {Json{{"set", r.set}, {"size", r.size}}, kOk};
            };
        });
    }

    Outcome outcome;
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError &e) {
            out << error_document("UsageError", e.what()).dump(2) << '\n';
            return kInputError;
        }
        outcome = action();
    } catch (const InstanceTooLarge &e) {
        outcome = {error_document(e.kind(), e.what()), kCapExceeded};
    } catch (const Error &e) {
        outcome = {error_document(e.kind(), e.what()), kInputError};
    } catch (const std::exception &e) {
        outcome = {error_document("InternalError", e.what()), kInternalError};
    }
    out << outcome.document.dump(2) << '\n';
    return outcome.code;
}

} // namespace polycoord::cli
