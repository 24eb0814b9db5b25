#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "promdig/noncrossing.hpp"

namespace promdig {

enum class Color { black, white };

/// A bicolored planar graph in a disk, given combinatorially: boundary
/// vertices 1..n (degree 1, listed clockwise), interior vertices with a
/// color, an edge list, and for every vertex the clockwise cyclic order of
/// its incident edges. Edge ids are indices into the edge list.
class PlabicGraph {
  public:
    struct InteriorVertex {
        int id = 0;
        Color color = Color::white;
        auto operator<=>(const InteriorVertex&) const = default;
    };

    PlabicGraph() = default;

    /// Checks boundary degrees, rotation consistency, and planarity in the
    /// disk (per-component Euler count via face tracing, a single face
    /// holding each component's boundary stubs in sorted circular order,
    /// and pairwise noncrossing stub sets across components).
    static PlabicGraph validate(int n, std::vector<InteriorVertex> interior,
                                std::vector<std::pair<int, int>> edges,
                                std::map<int, std::vector<int>> rotation);

    int n() const { return n_; }
    const std::vector<InteriorVertex>& interior() const { return interior_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::map<int, std::vector<int>>& rotation() const { return rotation_; }

    bool is_boundary(int vertex) const { return vertex >= 1 && vertex <= n_; }
    Color color_of(int vertex) const;  // boundary vertices are black
    int degree(int vertex) const { return static_cast<int>(rotation_.at(vertex).size()); }
    int other_end(int edge_id, int vertex) const;

    bool operator==(const PlabicGraph&) const = default;

  private:
    int n_ = 0;
    std::vector<InteriorVertex> interior_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, std::vector<int>> rotation_;
};

/// A face walk: directed half-edges (edge id, head vertex) in trace order.
struct Face {
    std::vector<std::pair<int, int>> steps;
    bool outer = false;  // contains a boundary stub
    int size() const { return static_cast<int>(steps.size()); }
};

std::vector<Face> faces(const PlabicGraph& g);

/// Normal: interior black vertices have degree 3 and every edge joins a
/// black and a white vertex (boundary vertices count as black).
bool is_normal(const PlabicGraph& g);

/// Flamingo: normal, interior faces of at least 6 vertices, white degrees
/// at least 3. k = #white - #interior black.
struct FlamingoResult {
    bool flamingo = false;
    int k = 0;
};

FlamingoResult is_flamingo(const PlabicGraph& g);

/// Boundary-to-boundary reachability digraph under the turn rule: at a
/// degree-h vertex reached along an edge, the walk may leave by the
/// (i+l)-th left (white) or (i+l)-th right (black) for 0 <= l <= h-r.
/// Vertices of degree < h admit no exits and end the walk. Computed as
/// reachability over directed half-edges, so cyclic walks cannot loop the
/// computation.
class TripDigraph {
  public:
    TripDigraph() = default;
    TripDigraph(int n, int i, int r, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int i() const { return i_; }
    int r() const { return r_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Same vertex count and edge set.
    bool same_digraph(const PromotionDigraph& d) const;

    bool operator==(const TripDigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    int i_ = 1;
    int r_ = 2;
    std::vector<std::pair<int, int>> edges_;
};

TripDigraph trip_digraph(const PlabicGraph& g, int i, int r);

/// One white interior vertex per block, joined to its elements; black
/// boundary vertices 1..q clockwise.
PlabicGraph partition_to_plabic(const NoncrossingSetPartition& p);

/// Shift boundary labels b_x -> b_{x-1} (b_1 -> b_n); interior untouched.
PlabicGraph rotate_web(const PlabicGraph& g);

}  // namespace promdig
