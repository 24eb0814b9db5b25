#include "promdig/plabic.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace promdig {

namespace {

using HalfEdge = std::pair<int, int>;  // (edge id, head vertex)

std::string vtx(int v) { return std::to_string(v); }

}  // namespace

Color PlabicGraph::color_of(int vertex) const {
    if (is_boundary(vertex)) return Color::black;
    for (const auto& iv : interior_) {
        if (iv.id == vertex) return iv.color;
    }
    throw NotPartition("unknown vertex " + vtx(vertex));
}

int PlabicGraph::other_end(int edge_id, int vertex) const {
    const auto& [u, v] = edges_[static_cast<std::size_t>(edge_id)];
    return u == vertex ? v : u;
}

namespace {

// Face tracing for a clockwise rotation system: after arriving at v along
// edge e, the face continues along the edge following e in clockwise order
// at v. Returns faces as directed half-edge walks.
std::vector<Face> trace_faces(int n, const std::vector<std::pair<int, int>>& edges,
                              const std::map<int, std::vector<int>>& rotation) {
    std::map<int, std::map<int, std::size_t>> pos;  // vertex -> edge id -> index in rotation
    for (const auto& [v, rot] : rotation) {
        for (std::size_t idx = 0; idx < rot.size(); ++idx) pos[v][rot[idx]] = idx;
    }
    auto other_end = [&](int e, int v) {
        const auto& [a, b] = edges[static_cast<std::size_t>(e)];
        return a == v ? b : a;
    };

    std::set<HalfEdge> seen;
    std::vector<Face> faces;
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
        for (int head : {edges[eid].first, edges[eid].second}) {
            HalfEdge start{static_cast<int>(eid), head};
            if (seen.count(start)) continue;
            Face face;
            HalfEdge current = start;
            do {
                seen.insert(current);
                face.steps.push_back(current);
                const auto& [e, at] = current;
                if (at <= n) face.outer = true;
                const auto& rot = rotation.at(at);
                std::size_t idx = pos.at(at).at(e);
                int next_edge = rot[(idx + 1) % rot.size()];
                current = {next_edge, other_end(next_edge, at)};
            } while (!(current == start));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

// Union-find over vertex ids.
struct Components {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second != x) it->second = find(it->second);
        return it->second;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlabicGraph PlabicGraph::validate(int n, std::vector<InteriorVertex> interior,
                                  std::vector<std::pair<int, int>> edges,
                                  std::map<int, std::vector<int>> rotation) {
    if (n < 1) throw BoundaryDegree("need at least one boundary vertex");
    std::set<int> ids;
    for (int b = 1; b <= n; ++b) ids.insert(b);
    std::sort(interior.begin(), interior.end());
    for (const auto& iv : interior) {
        if (iv.id <= n) throw InconsistentRotation("interior id " + vtx(iv.id) + " collides with boundary");
        if (!ids.insert(iv.id).second) throw InconsistentRotation("interior id " + vtx(iv.id) + " repeated");
    }

    std::map<int, std::vector<int>> incident;
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
        const auto& [u, v] = edges[eid];
        if (!ids.count(u) || !ids.count(v)) {
            throw InconsistentRotation("edge endpoint " + vtx(ids.count(u) ? v : u) + " unknown");
        }
        if (u == v) throw InconsistentRotation("loop edges are not allowed");
        incident[u].push_back(static_cast<int>(eid));
        incident[v].push_back(static_cast<int>(eid));
    }

    for (int b = 1; b <= n; ++b) {
        if (incident[b].size() != 1) {
            throw BoundaryDegree("boundary vertex " + vtx(b) + " has degree " +
                                 std::to_string(incident[b].size()));
        }
    }

    // Fill in trivial rotations, then demand each vertex's rotation list
    // its incident edges exactly once.
    for (int id : ids) {
        auto it = rotation.find(id);
        if (it == rotation.end()) {
            if (incident[id].size() <= 1) {
                rotation[id] = incident[id];
            } else {
                throw InconsistentRotation("vertex " + vtx(id) + " is missing a rotation");
            }
        }
    }
    for (const auto& [v, rot] : rotation) {
        if (!ids.count(v)) throw InconsistentRotation("rotation for unknown vertex " + vtx(v));
        std::vector<int> sorted_rot = rot;
        std::sort(sorted_rot.begin(), sorted_rot.end());
        if (std::adjacent_find(sorted_rot.begin(), sorted_rot.end()) != sorted_rot.end()) {
            throw InconsistentRotation("vertex " + vtx(v) + " lists a half-edge twice");
        }
        std::vector<int> sorted_inc = incident[v];
        std::sort(sorted_inc.begin(), sorted_inc.end());
        if (sorted_rot != sorted_inc) {
            throw InconsistentRotation("rotation of vertex " + vtx(v) +
                                       " does not match its incident edges");
        }
    }

    // Connected components.
    Components comps;
    for (int id : ids) comps.find(id);
    for (const auto& [u, v] : edges) comps.unite(u, v);

    // Per-component Euler count from the face trace, one face holding all
    // of a component's boundary stubs, stubs in sorted circular order.
    std::vector<Face> all_faces = trace_faces(n, edges, rotation);
    std::map<int, int> face_count;
    std::map<int, int> vertex_count;
    std::map<int, int> edge_count;
    for (int id : ids) {
        ++vertex_count[comps.find(id)];
    }
    for (const auto& [u, v] : edges) ++edge_count[comps.find(u)];
    std::map<int, std::vector<const Face*>> stub_faces;
    for (const auto& face : all_faces) {
        int root = comps.find(face.steps.front().second);
        ++face_count[root];
        if (face.outer) stub_faces[root].push_back(&face);
    }
    for (const auto& [root, vcount] : vertex_count) {
        int fcount = face_count.count(root) ? face_count[root] : 0;
        int ecount = edge_count.count(root) ? edge_count[root] : 0;
        if (ecount == 0) continue;  // isolated vertex: trivially planar
        if (vcount - ecount + fcount != 2) {
            throw NotPlanar("component fails the Euler check (V-E+F = " +
                            std::to_string(vcount - ecount + fcount) + ")");
        }
    }
    for (const auto& [root, fs] : stub_faces) {
        if (fs.size() != 1) {
            throw NotPlanar("boundary stubs of one component lie on several faces");
        }
        std::vector<int> order;
        for (const auto& [e, at] : fs.front()->steps) {
            if (at <= n) order.push_back(at);
        }
        // Circularly sorted?
        int descents = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] > order[(i + 1) % order.size()]) ++descents;
        }
        if (order.size() > 1 && descents != 1) {
            throw NotPlanar("boundary stubs appear out of circular order");
        }
    }
    // Stub sets of distinct components must not interleave (nesting and
    // side-by-side placement are the only disk-realizable options).
    {
        std::map<int, int> first_stub;
        std::map<int, int> last_stub;
        for (int b = 1; b <= n; ++b) {
            int root = comps.find(b);
            if (!first_stub.count(root)) first_stub[root] = b;
            last_stub[root] = b;
        }
        std::vector<int> stack;
        for (int b = 1; b <= n; ++b) {
            int root = comps.find(b);
            if (first_stub[root] == b) stack.push_back(root);
            if (stack.empty() || stack.back() != root) {
                throw NotPlanar("boundary stubs of components interleave");
            }
            if (last_stub[root] == b) stack.pop_back();
        }
    }

    PlabicGraph g;
    g.n_ = n;
    g.interior_ = std::move(interior);
    g.edges_ = std::move(edges);
    g.rotation_ = std::move(rotation);
    return g;
}

std::vector<Face> faces(const PlabicGraph& g) {
    return trace_faces(g.n(), g.edges(), g.rotation());
}

bool is_normal(const PlabicGraph& g) {
    for (const auto& iv : g.interior()) {
        if (iv.color == Color::black && g.degree(iv.id) != 3) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (g.color_of(u) == g.color_of(v)) return false;
    }
    return true;
}

FlamingoResult is_flamingo(const PlabicGraph& g) {
    FlamingoResult result;
    int whites = 0;
    int blacks = 0;
    for (const auto& iv : g.interior()) {
        if (iv.color == Color::white) {
            ++whites;
        } else {
            ++blacks;
        }
    }
    result.k = whites - blacks;
    if (!is_normal(g)) return result;
    for (const auto& iv : g.interior()) {
        if (iv.color == Color::white && g.degree(iv.id) < 3) return result;
    }
    for (const Face& face : faces(g)) {
        if (!face.outer && face.size() < 6) return result;
    }
    result.flamingo = true;
    return result;
}

TripDigraph::TripDigraph(int n, int i, int r, std::vector<std::pair<int, int>> edges)
    : n_(n), i_(i), r_(r), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool TripDigraph::same_digraph(const PromotionDigraph& d) const {
    return n_ == d.n() && edges_ == d.edges();
}

TripDigraph trip_digraph(const PlabicGraph& g, int i, int r) {
    if (r < 2 || i < 1 || i > r - 1) {
        throw DegreeBelowThreshold("trip parameters need 1 <= i <= r-1 and r >= 2");
    }
    // States are directed half-edges (edge, head vertex); reachability over
    // them terminates even when the underlying walks can cycle. Vertices
    // of degree < r admit no exits and end the walk.
    std::map<int, std::map<int, std::size_t>> pos;
    for (const auto& [v, rot] : g.rotation()) {
        for (std::size_t idx = 0; idx < rot.size(); ++idx) pos[v][rot[idx]] = idx;
    }

    auto exits = [&](const HalfEdge& state) {
        std::vector<HalfEdge> out;
        const auto& [e, at] = state;
        if (g.is_boundary(at)) return out;
        const auto& rot = g.rotation().at(at);
        const int h = static_cast<int>(rot.size());
        if (h < r) return out;
        const std::size_t idx = pos.at(at).at(e);
        const bool white = g.color_of(at) == Color::white;
        for (int l = 0; l <= h - r; ++l) {
            const int m = i + l;  // m-th left (white) or m-th right (black)
            std::size_t exit_idx;
            if (white) {
                exit_idx = (idx + static_cast<std::size_t>(m)) % rot.size();
            } else {
                exit_idx = (idx + rot.size() - static_cast<std::size_t>(m) % rot.size()) % rot.size();
            }
            int exit_edge = rot[exit_idx];
            out.push_back({exit_edge, g.other_end(exit_edge, at)});
        }
        return out;
    };

    std::vector<std::pair<int, int>> trip_edges;
    for (int alpha = 1; alpha <= g.n(); ++alpha) {
        int stub = g.rotation().at(alpha).front();
        HalfEdge start{stub, g.other_end(stub, alpha)};
        std::set<HalfEdge> visited{start};
        std::queue<HalfEdge> frontier;
        frontier.push(start);
        std::set<int> reached;
        while (!frontier.empty()) {
            HalfEdge state = frontier.front();
            frontier.pop();
            if (g.is_boundary(state.second)) {
                reached.insert(state.second);
                continue;
            }
            for (const HalfEdge& next : exits(state)) {
                if (visited.insert(next).second) frontier.push(next);
            }
        }
        for (int beta : reached) trip_edges.push_back({alpha, beta});
    }
    return TripDigraph(g.n(), i, r, std::move(trip_edges));
}

PlabicGraph partition_to_plabic(const NoncrossingSetPartition& p) {
    const int q = p.q();
    std::vector<PlabicGraph::InteriorVertex> interior;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> rotation;
    int next_id = q + 1;
    for (const auto& block : p.blocks()) {
        const int white = next_id++;
        interior.push_back({white, Color::white});
        std::vector<int> rot;
        for (int x : block) {
            edges.push_back({white, x});
            rot.push_back(static_cast<int>(edges.size()) - 1);
        }
        rotation[white] = std::move(rot);
    }
    return PlabicGraph::validate(q, std::move(interior), std::move(edges), std::move(rotation));
}

PlabicGraph rotate_web(const PlabicGraph& g) {
    auto shift = [&](int v) {
        if (!g.is_boundary(v)) return v;
        return v == 1 ? g.n() : v - 1;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.push_back({shift(u), shift(v)});
    std::map<int, std::vector<int>> rotation;
    for (const auto& [v, rot] : g.rotation()) rotation[shift(v)] = rot;
    return PlabicGraph::validate(g.n(), g.interior(), std::move(edges), std::move(rotation));
}

}  // namespace promdig
