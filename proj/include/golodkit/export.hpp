#pragma once

#include "golodkit/ainf.hpp"
#include "golodkit/morse.hpp"

#include <json.hpp>

#include <string>

namespace golodkit {

/// "u124", "u{1,10}" or "u{}" back to a cell; throws std::invalid_argument.
CellId parse_cell_name(const std::string& name, std::size_t r);

/// Graphviz digraph of the Morse graph. Nodes follow canonical cell order;
/// matched arrows are drawn bold red, other invertible edges dashed.
std::string export_dot(const MorseGraph& g, const Matching& m);

/// {"schema": "golodkit.matching/1", "arrows": [...], "critical": [...]}.
/// Each arrow carries both its cell names and 1-based generator subsets.
nlohmann::json matching_to_json(const BasedComplex& f, const Matching& m, const std::string& construction);

/// Accepts arrows as {"from": "u124", "to": "u24"} or with 1-based index
/// arrays; optional "stage"/"substep".
Matching matching_from_json(const nlohmann::json& j, std::size_t r);

/// Arity 2: square table, rows and columns the basis cells. Higher arities:
/// one row per tuple. Values use canonical term order; zeros print as 0.
std::string ainf_table_csv(const AInfTable& t, const MonomialIdeal& ideal);
nlohmann::json ainf_table_json(const AInfTable& t, const MonomialIdeal& ideal);

} // namespace golodkit
