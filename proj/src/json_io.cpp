#include "polycoord/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polycoord/errors.hpp"

namespace polycoord {

namespace {

const Json &field(const Json &j, const char *key) {
    if (!j.is_object()) {
        throw InvalidInput(std::string("expected an object holding \"") + key + "\"");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

std::size_t count_from_json(const Json &j, const char *what) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long long>() < 0)) {
        throw InvalidInput(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

const Json &array_field(const Json &j, const char *key) {
    const Json &a = field(j, key);
    if (!a.is_array()) {
        throw InvalidInput(std::string("field \"") + key + "\" must be an array");
    }
    return a;
}

const std::string &string_field(const Json &j, const char *key) {
    const Json &s = field(j, key);
    if (!s.is_string()) {
        throw InvalidInput(std::string("field \"") + key + "\" must be a string");
    }
    return s.get_ref<const std::string &>();
}

std::vector<Vertex> index_tuple(const Json &j, std::size_t arity, const char *what) {
    if (!j.is_array() || j.size() != arity) {
        throw InvalidInput(std::string(what) + " must be an array of " + std::to_string(arity) + " vertex ids");
    }
    std::vector<Vertex> out;
    for (const Json &v : j) {
        out.push_back(count_from_json(v, "vertex id"));
    }
    return out;
}

} // namespace

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error &e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Json to_json(const Rational &r) { return r.str(); }

Rational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return Rational::parse(j.get_ref<const std::string &>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw InvalidInput("rational must be a \"p/q\" string or an integer");
}

Json to_json(const Matrix2 &m) {
    return Json::array({Json::array({to_json(m.aa), to_json(m.ab)}), Json::array({to_json(m.ba), to_json(m.bb)})});
}

Matrix2 matrix_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2) {
        throw InvalidInput("matrix must be a 2x2 array");
    }
    return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
            rational_from_json(j[1][1])};
}

Json to_json(const StrategyProfile &p) { return Json{{"actions", p.str()}}; }

StrategyProfile profile_from_json(const Json &j) { return StrategyProfile::parse(string_field(j, "actions")); }

Json to_json(const PolymatrixGame &game) {
    Json edges = Json::array();
    for (const auto &e : game.edges()) {
        edges.push_back(
            {{"row", e.row}, {"col", e.col}, {"u_row", to_json(e.payoff.row)}, {"u_col", to_json(e.payoff.col)}});
    }
    return Json{{"n", game.num_vertices()}, {"edges", edges}};
}

PolymatrixGame game_from_json(const Json &j) {
    PolymatrixGame game(count_from_json(field(j, "n"), "n"));
    for (const Json &e : array_field(j, "edges")) {
        game.add_edge(count_from_json(field(e, "row"), "row"), count_from_json(field(e, "col"), "col"),
                      {matrix_from_json(field(e, "u_row")), matrix_from_json(field(e, "u_col"))});
    }
    return game;
}

Json to_json(const Graph &g) {
    Json edges = Json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    return Json{{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json &j) {
    Graph g(count_from_json(field(j, "n"), "n"));
    for (const Json &e : array_field(j, "edges")) {
        const auto ends = index_tuple(e, 2, "edge");
        g.add_edge(ends[0], ends[1]);
    }
    return g;
}

Json to_json(const MwopInstance &inst) {
    Json arcs = Json::array();
    for (const auto &a : inst.arcs()) {
        arcs.push_back({{"tail", a.tail}, {"head", a.head}, {"m", to_json(a.m)}});
    }
    return Json{{"n", inst.num_vertices()}, {"arcs", arcs}};
}

MwopInstance mwop_from_json(const Json &j) {
    MwopInstance inst(count_from_json(field(j, "n"), "n"));
    for (const Json &a : array_field(j, "arcs")) {
        inst.add_arc(count_from_json(field(a, "tail"), "tail"), count_from_json(field(a, "head"), "head"),
                     matrix_from_json(field(a, "m")));
    }
    return inst;
}

Json to_json(const LanguageGame &lg) {
    Json out = to_json(lg.graph);
    std::string groups;
    for (Group g : lg.group) {
        groups.push_back(g == Group::A ? 'A' : 'B');
    }
    out["group"] = groups;
    out["gamma_A"] = to_json(lg.gamma_A);
    out["gamma_B"] = to_json(lg.gamma_B);
    return out;
}

LanguageGame language_game_from_json(const Json &j) {
    LanguageGame lg;
    lg.graph = graph_from_json(j);
    for (char c : string_field(j, "group")) {
        if (c != 'A' && c != 'B') {
            throw InvalidInput(std::string("group string may only hold 'A' and 'B', found '") + c + "'");
        }
        lg.group.push_back(c == 'A' ? Group::A : Group::B);
    }
    lg.gamma_A = rational_from_json(field(j, "gamma_A"));
    lg.gamma_B = rational_from_json(field(j, "gamma_B"));
    lg.validate();
    return lg;
}

Json to_json(const Hypergraph3 &h) {
    Json edges = Json::array();
    for (const auto &e : h.edges()) {
        edges.push_back(Json::array({e[0], e[1], e[2]}));
    }
    return Json{{"n", h.num_vertices()}, {"edges", edges}};
}

Hypergraph3 hypergraph_from_json(const Json &j) {
    Hypergraph3 h(count_from_json(field(j, "n"), "n"));
    for (const Json &e : array_field(j, "edges")) {
        const auto v = index_tuple(e, 3, "hyperedge");
        h.add_edge({v[0], v[1], v[2]});
    }
    return h;
}

Json to_json(const ReductionInstance &inst, bool materialise) {
    const auto &c = inst.constants();
    Json e3 = Json::array();
    for (const auto &e : inst.hypergraph().edges()) {
        e3.push_back(Json::array({e[0], e[1], e[2]}));
    }
    Json out{{"clique_A", c.clique_a_size},
             {"clique_B", c.clique_b_size},
             {"x_A", c.attach_a},
             {"x_B", c.attach_b},
             {"z", c.block_size},
             {"E3", e3},
             {"num_hypervertices", inst.hypergraph().num_vertices()},
             {"gamma_A", to_json(inst.gamma_A())},
             {"gamma_B", to_json(inst.gamma_B())}};
    out["meta"] = Json{{"theta", to_json(c.theta)},
                       {"baseline_welfare", to_json(inst.baseline_welfare())},
                       {"num_vertices", inst.num_vertices()},
                       {"num_edges", inst.num_edges()},
                       {"num_clique_edges", inst.num_clique_edges()},
                       {"num_E2", inst.clique_links().size()},
                       {"num_E3", inst.incidence_links().size()},
                       {"num_E4", inst.block_links().size()},
                       {"num_hyperedges", inst.hypergraph().num_edges()}};
    if (materialise) {
        const Json explicit_game = to_json(inst.materialise());
        out["n"] = explicit_game["n"];
        out["edges"] = explicit_game["edges"];
        out["group"] = explicit_game["group"];
    }
    return out;
}

ReductionInstance reduction_from_json(const Json &j) {
    Hypergraph3 h(count_from_json(field(j, "num_hypervertices"), "num_hypervertices"));
    for (const Json &e : array_field(j, "E3")) {
        const auto v = index_tuple(e, 3, "E3 row");
        h.add_edge({v[0], v[1], v[2]});
    }
    const Rational gamma_A = rational_from_json(field(j, "gamma_A"));
    const Rational gamma_B = rational_from_json(field(j, "gamma_B"));

    const auto as_int = [&](const char *key) {
        return static_cast<std::int64_t>(count_from_json(field(j, key), key));
    };
    ReductionConstants c;
    c.clique_a_size = as_int("clique_A");
    c.clique_b_size = as_int("clique_B");
    c.attach_a = as_int("x_A");
    c.attach_b = as_int("x_B");
    c.block_size = as_int("z");
    c.theta = Rational(static_cast<long>(6 * h.num_edges() + 2 * h.num_vertices() * static_cast<std::size_t>(c.block_size)));
    return ReductionInstance(std::move(h), gamma_A, gamma_B, std::move(c));
}

bool is_reduction_document(const Json &j) { return j.is_object() && j.contains("clique_A"); }

bool is_language_document(const Json &j) { return j.is_object() && j.contains("group"); }

Json to_json(const SolveReport &report) {
    Json out{{"status", to_string(report.status)}, {"profile", nullptr}, {"value", nullptr}};
    if (report.profile) {
        out["profile"] = report.profile->str();
    }
    if (report.value) {
        out["value"] = to_json(*report.value);
    }
    return out;
}

} // namespace polycoord
