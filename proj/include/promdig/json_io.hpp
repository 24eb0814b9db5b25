#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "json.hpp"
#include "promdig/digraph.hpp"
#include "promdig/harness.hpp"
#include "promdig/lattice_word.hpp"
#include "promdig/noncrossing.hpp"
#include "promdig/plabic.hpp"
#include "promdig/tableau.hpp"

namespace promdig {

using AnyTableau = std::variant<StandardTableau, IncreasingTableau>;

// Tableau: {"kind":"standard"|"increasing","shape":[...],"rows":[[...],...],
//           "q":n,"offset":k}
nlohmann::json tableau_to_json(const StandardTableau& t);
nlohmann::json tableau_to_json(const IncreasingTableau& t);
AnyTableau tableau_from_json(const nlohmann::json& j);

// Lattice word: {"row_count":r,"letters":[[...],...]} (empty letters allowed)
nlohmann::json lattice_word_to_json(const LatticeWord& w);
LatticeWord lattice_word_from_json(const nlohmann::json& j);

// Digraph: {"n":N,"i":I,"edges":[[a,b],...]} with edges sorted
// lexicographically.
nlohmann::json digraph_to_json(const PromotionDigraph& d);
nlohmann::json digraph_to_json(const TripDigraph& d);
PromotionDigraph digraph_from_json(const nlohmann::json& j);

// Partition: {"q":Q,"blocks":[[...],...]} blocks ascending, sorted by min.
nlohmann::json nc_partition_to_json(const NoncrossingSetPartition& p);
NoncrossingSetPartition nc_partition_from_json(const nlohmann::json& j);

// Plabic graph: {"n":N,"interior":[{"id":...,"color":"black"|"white"},...],
//                "edges":[[u,v],...],"rotation":{"vertex":[edge ids,...]}}
// Rotation lists are clockwise; edge ids index the edges array.
nlohmann::json plabic_to_json(const PlabicGraph& g);
PlabicGraph plabic_from_json(const nlohmann::json& j);

// DOT export (write-only).
std::string digraph_to_dot(const PromotionDigraph& d);
std::string digraph_to_dot(const TripDigraph& d);
std::string plabic_to_dot(const PlabicGraph& g);

/// Parses a file whose content is either one JSON value or JSON lines.
std::vector<nlohmann::json> parse_json_stream(std::istream& in);

}  // namespace promdig
