#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "promdig/partition.hpp"
#include "promdig/tableau.hpp"

namespace promdig {

/// The i-th promotion digraph of a tableau: vertices [n], with an edge
/// alpha -> beta whenever beta moves from row i+1 to row i during the
/// alpha-th gromotion of the orbit. Loop-free by construction. Stored as
/// a sorted edge list; equality compares n and the edge set (not i).
class PromotionDigraph {
  public:
    PromotionDigraph() = default;
    PromotionDigraph(int n, int index, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int index() const { return index_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int a, int b) const;
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;

    bool operator==(const PromotionDigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    int index_ = 1;
    std::vector<std::pair<int, int>> edges_;
};

PromotionDigraph promotion_digraph(const StandardTableau& t, int i);
PromotionDigraph promotion_digraph(const IncreasingTableau& t, int i);

/// All prom_i for i = 1..max_index from a single gromotion orbit pass.
std::vector<PromotionDigraph> promotion_digraphs(const StandardTableau& t, int max_index);
std::vector<PromotionDigraph> promotion_digraphs(const IncreasingTableau& t, int max_index);

/// Vertices j receiving an edge from some i < j.
std::vector<int> excedances(const PromotionDigraph& d);
std::vector<int> nonexcedances(const PromotionDigraph& d);

/// Rebuild a standard tableau from prom_1..prom_{l-1}: the row of a value
/// is the least i for which it is a nonexcedance of prom_i, bottom row as
/// fallback. Re-derives the digraphs and fails closed on mismatch.
StandardTableau reconstruct_standard(const std::vector<PromotionDigraph>& digraphs,
                                     const Partition& shape);

/// Rebuild a rectangular increasing tableau from prom_1..prom_{r-1},
/// working from the bottom row up. q is taken from the digraph vertex
/// count; r and c must be supplied. Fails closed on mismatch.
IncreasingTableau reconstruct_rect_increasing(const std::vector<PromotionDigraph>& digraphs,
                                              int r, int c);

/// Shift every endpoint down by one, wrapping 1 to n.
PromotionDigraph rotate_digraph(const PromotionDigraph& d);

/// If the non-isolated vertices split into groups each inducing a complete
/// digraph with no edges between groups, returns the groups (sorted by
/// minimum); otherwise nullopt.
std::optional<std::vector<std::vector<int>>> is_union_of_complete_digraphs(
    const PromotionDigraph& d);

/// Per-vertex (indegree, outdegree), index 0 holding vertex 1.
std::vector<std::pair<int, int>> degree_profile(const PromotionDigraph& d);

}  // namespace promdig
