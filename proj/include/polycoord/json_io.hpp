#ifndef POLYCOORD_JSON_IO_HPP
#define POLYCOORD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "polycoord/game.hpp"
#include "polycoord/hardness.hpp"
#include "polycoord/hypergraph.hpp"
#include "polycoord/language_game.hpp"
#include "polycoord/mwop.hpp"
#include "polycoord/tractable.hpp"

namespace polycoord {

// JSON documents. Objects use sorted keys; rationals are "p/q" strings in
// lowest terms (integers included). Readers also accept plain integers where
// a rational is expected. Every reader throws InvalidInput on malformed
// input.

using Json = nlohmann::json;

/// Reads and parses a file.
Json load_json_file(const std::string &path);

Json to_json(const Rational &r);
Rational rational_from_json(const Json &j);

/// [[aa, ab], [ba, bb]]
Json to_json(const Matrix2 &m);
Matrix2 matrix_from_json(const Json &j);

/// {"actions": "abab..."}
Json to_json(const StrategyProfile &p);
StrategyProfile profile_from_json(const Json &j);

/// {"n": int, "edges": [{"row": i, "col": j, "u_row": M, "u_col": M}]}
Json to_json(const PolymatrixGame &game);
PolymatrixGame game_from_json(const Json &j);

/// {"n": int, "edges": [[i, j], ...]}
Json to_json(const Graph &g);
Graph graph_from_json(const Json &j);

/// {"n": int, "arcs": [{"tail": i, "head": j, "m": M}]}
Json to_json(const MwopInstance &inst);
MwopInstance mwop_from_json(const Json &j);

/// {"n": int, "edges": [[i, j], ...], "group": "ABAB...", "gamma_A": q, "gamma_B": q}
Json to_json(const LanguageGame &lg);
LanguageGame language_game_from_json(const Json &j);

/// {"n": int, "edges": [[i, j, k], ...]}
Json to_json(const Hypergraph3 &h);
Hypergraph3 hypergraph_from_json(const Json &j);

/**
 * Implicit-clique reduction document:
 *   {"clique_A": c_A, "clique_B": c_B, "x_A": .., "x_B": .., "z": ..,
 *    "E3": [[i, j, k], ...], "num_hypervertices": |V(H)|,
 *    "gamma_A": q, "gamma_B": q,
 *    "meta": {"theta", "baseline_welfare", "num_vertices", "num_edges", ...}}
 * Row e of "E3" lists the hypergraph vertices whose copies are adjacent to
 * r_e. With `materialise` the explicit language-game keys "n", "edges" and
 * "group" are added, so the document also reads as a language game.
 */
Json to_json(const ReductionInstance &inst, bool materialise = false);
ReductionInstance reduction_from_json(const Json &j);

bool is_reduction_document(const Json &j);
bool is_language_document(const Json &j);

/// {"status": .., "profile": "ab.." | null, "value": q | null}
Json to_json(const SolveReport &report);

} // namespace polycoord

#endif // POLYCOORD_JSON_IO_HPP
