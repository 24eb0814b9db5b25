#pragma once

#include <functional>
#include <vector>

#include "promdig/noncrossing.hpp"
#include "promdig/plabic.hpp"
#include "promdig/tableau.hpp"

namespace promdig {

/// Exhaustive generators at desk scale. All streams are deterministic:
/// SYT in lexicographic lattice-word order, increasing tableaux in
/// lexicographic row-reading order, noncrossing structures in recursive
/// stack-move order, flamingo webs grouped by interior size then stub
/// partition. A yield callback returning false stops the stream.

inline constexpr int kDefaultSytCap = 12;          // max cells
inline constexpr int kDefaultIncreasingCap = 12;   // max q
inline constexpr int kDefaultNcCap = 14;           // max q
inline constexpr int kDefaultFlamingoBoundary = 12;
inline constexpr int kDefaultFlamingoInterior = 8;

using SytYield = std::function<bool(const StandardTableau&)>;
using IncYield = std::function<bool(const IncreasingTableau&)>;
using NcYield = std::function<bool(const NoncrossingSetPartition&)>;
using MatchingYield = std::function<bool(const NoncrossingMatching&)>;
using WebYield = std::function<bool(const PlabicGraph&)>;

void enumerate_syt(const Partition& shape, const SytYield& yield,
                   int cap_cells = kDefaultSytCap);

void enumerate_increasing(const Partition& shape, int q, bool packed_only,
                          const IncYield& yield, int cap_q = kDefaultIncreasingCap);

void enumerate_nc_partitions(int q, const NcYield& yield, int cap_q = kDefaultNcCap);

void enumerate_nc_matchings(int two_c, const MatchingYield& yield, int cap = kDefaultNcCap);

/// All flamingo webs with n boundary vertices and white-minus-black excess
/// k, exhaustive over simple graphs with at most max_interior interior
/// vertices, deduplicated by rotation-system canonical form with fixed
/// boundary labels.
void enumerate_flamingo(int n, int k, int max_interior, const WebYield& yield,
                        int cap_boundary = kDefaultFlamingoBoundary,
                        int cap_interior = kDefaultFlamingoInterior);

// Materialized conveniences.
std::vector<StandardTableau> all_syt(const Partition& shape, int cap_cells = kDefaultSytCap);
std::vector<IncreasingTableau> all_increasing(const Partition& shape, int q,
                                              bool packed_only = false,
                                              int cap_q = kDefaultIncreasingCap);
std::vector<NoncrossingSetPartition> all_nc_partitions(int q, int cap_q = kDefaultNcCap);
std::vector<NoncrossingMatching> all_nc_matchings(int two_c, int cap = kDefaultNcCap);
std::vector<PlabicGraph> all_flamingo(int n, int k, int max_interior,
                                      int cap_boundary = kDefaultFlamingoBoundary,
                                      int cap_interior = kDefaultFlamingoInterior);

/// All partitions of exactly n boxes, lexicographically decreasing parts.
std::vector<Partition> partitions_of(int n);

/// Canonical string of a plabic graph's rotation system with fixed
/// boundary labels; equal strings mean equal webs up to interior
/// relabeling.
std::string web_canonical_form(const PlabicGraph& g);

}  // namespace promdig
