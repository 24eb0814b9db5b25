#include "promdig/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace promdig {

namespace {

template <typename Yield, typename Item>
struct Stopper {
    const Yield& yield;
    bool stopped = false;
    bool emit(const Item& item) {
        if (stopped) return false;
        if (!yield(item)) stopped = true;
        return !stopped;
    }
};

}  // namespace

void enumerate_syt(const Partition& shape, const SytYield& yield, int cap_cells) {
    if (shape.size() > cap_cells) {
        throw CapExceeded("|shape| = " + std::to_string(shape.size()) + " exceeds cap " +
                          std::to_string(cap_cells));
    }
    const int n = shape.size();
    const int rows = shape.length();
    std::vector<int> filled(static_cast<std::size_t>(rows), 0);
    Grid grid(static_cast<std::size_t>(rows));
    bool stopped = false;

    // Choose the row of each value in turn, smallest row first, which
    // is lexicographic order on lattice words.
    auto place = [&](auto&& self, int value) -> void {
        if (stopped) return;
        if (value > n) {
            stopped = !yield(make_standard(grid));
            return;
        }
        for (int r = 1; r <= rows && !stopped; ++r) {
            auto& count = filled[static_cast<std::size_t>(r - 1)];
            if (count >= shape.row_length(r)) continue;
            if (r > 1 && filled[static_cast<std::size_t>(r - 2)] <= count) continue;
            grid[static_cast<std::size_t>(r - 1)].push_back(value);
            ++count;
            self(self, value + 1);
            --count;
            grid[static_cast<std::size_t>(r - 1)].pop_back();
        }
    };
    place(place, 1);
}

void enumerate_increasing(const Partition& shape, int q, bool packed_only, const IncYield& yield,
                          int cap_q) {
    if (q > cap_q) {
        throw CapExceeded("q = " + std::to_string(q) + " exceeds cap " + std::to_string(cap_q));
    }
    const int rows = shape.length();
    Grid grid(static_cast<std::size_t>(rows));
    std::vector<int> value_count(static_cast<std::size_t>(q) + 1, 0);
    int distinct = 0;
    bool stopped = false;

    // Boxes in row-major order; each box tries values ascending, which is
    // lexicographic order on row-reading words.
    std::vector<std::pair<int, int>> boxes;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= shape.row_length(r); ++c) boxes.push_back({r, c});
    }

    auto remaining_after = [&](std::size_t idx) { return boxes.size() - idx - 1; };

    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (stopped) return;
        if (idx == boxes.size()) {
            if (!packed_only || distinct == q) {
                stopped = !yield(make_increasing(grid, q));
            }
            return;
        }
        const auto [r, c] = boxes[idx];
        int lo = 1;
        if (c > 1) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)] + 1);
        if (r > 1) lo = std::max(lo, grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
        // Strict increase to the right and downward bounds the value.
        int hi = q - std::max(shape.row_length(r) - c, shape.column_length(c) - r);
        for (int v = lo; v <= hi && !stopped; ++v) {
            if (packed_only) {
                int missing = q - distinct - (value_count[static_cast<std::size_t>(v)] == 0 ? 1 : 0);
                if (missing > static_cast<int>(remaining_after(idx))) continue;
            }
            grid[static_cast<std::size_t>(r - 1)].push_back(v);
            if (value_count[static_cast<std::size_t>(v)]++ == 0) ++distinct;
            self(self, idx + 1);
            if (--value_count[static_cast<std::size_t>(v)] == 0) --distinct;
            grid[static_cast<std::size_t>(r - 1)].pop_back();
        }
    };
    fill(fill, 0);
}

namespace {

// Noncrossing set partitions via stack moves per element: open a block,
// extend or close the innermost open block, or place a singleton.
void nc_partition_search(int q, int next, std::vector<std::vector<int>>& blocks,
                         std::vector<std::size_t>& open, bool& stopped, const NcYield& yield) {
    if (stopped) return;
    if (next > q) {
        if (open.empty()) {
            std::vector<std::vector<int>> copy = blocks;
            stopped = !yield(NoncrossingSetPartition::validate(q, std::move(copy)));
        }
        return;
    }
    // singleton
    blocks.push_back({next});
    nc_partition_search(q, next + 1, blocks, open, stopped, yield);
    blocks.pop_back();
    // open a new block
    if (next < q) {
        blocks.push_back({next});
        open.push_back(blocks.size() - 1);
        nc_partition_search(q, next + 1, blocks, open, stopped, yield);
        open.pop_back();
        blocks.pop_back();
    }
    if (!open.empty()) {
        auto& top = blocks[open.back()];
        // extend the innermost open block
        if (next < q) {
            top.push_back(next);
            nc_partition_search(q, next + 1, blocks, open, stopped, yield);
            top.pop_back();
        }
        // close the innermost open block
        top.push_back(next);
        std::size_t reopen = open.back();
        open.pop_back();
        nc_partition_search(q, next + 1, blocks, open, stopped, yield);
        open.push_back(reopen);
        top.pop_back();
    }
}

}  // namespace

void enumerate_nc_partitions(int q, const NcYield& yield, int cap_q) {
    if (q > cap_q) {
        throw CapExceeded("q = " + std::to_string(q) + " exceeds cap " + std::to_string(cap_q));
    }
    if (q < 1) return;
    std::vector<std::vector<int>> blocks;
    std::vector<std::size_t> open;
    bool stopped = false;
    nc_partition_search(q, 1, blocks, open, stopped, yield);
}

void enumerate_nc_matchings(int two_c, const MatchingYield& yield, int cap) {
    if (two_c > cap) {
        throw CapExceeded("ground set " + std::to_string(two_c) + " exceeds cap " +
                          std::to_string(cap));
    }
    if (two_c < 2 || two_c % 2 != 0) return;
    std::vector<std::vector<int>> blocks;
    std::vector<std::size_t> open;
    bool stopped = false;

    auto search = [&](auto&& self, int next) -> void {
        if (stopped) return;
        if (next > two_c) {
            if (open.empty()) {
                std::vector<std::vector<int>> copy = blocks;
                stopped = !yield(NoncrossingMatching::validate(
                    NoncrossingSetPartition::validate(two_c, std::move(copy))));
            }
            return;
        }
        if (next < two_c) {
            blocks.push_back({next});
            open.push_back(blocks.size() - 1);
            self(self, next + 1);
            open.pop_back();
            blocks.pop_back();
        }
        if (!open.empty()) {
            auto& top = blocks[open.back()];
            top.push_back(next);
            std::size_t reopen = open.back();
            open.pop_back();
            self(self, next + 1);
            open.push_back(reopen);
            top.pop_back();
        }
    };
    search(search, 1);
}

namespace {

// ---- flamingo web enumeration ----------------------------------------
//
// Every boundary stub attaches to a white vertex and the stub sets of
// distinct whites never interleave, so the search runs over noncrossing
// partitions of the stubs, then over black vertices joined to white
// triples, then over the cyclic interleavings of black edges into each
// white fan. Planarity and the face conditions are checked by the plabic
// validator; rotation-system canonical forms deduplicate.

struct WebCandidate {
    int n = 0;
    std::vector<PlabicGraph::InteriorVertex> interior;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> rotation;
};

// Canonical string of the rotation system with fixed boundary labels:
// relabel interior vertices by BFS discovery order from the stubs and
// print each rotation starting at the discovery edge, so the string is
// independent of interior vertex and edge ids. Interior vertices not
// reachable from the boundary cannot occur in flamingo webs; they are
// recorded only by count.
std::string canonical_form_impl(const PlabicGraph& g) {
    std::map<int, int> relabel;
    std::map<int, int> arrival_edge;
    std::vector<int> order;
    std::vector<int> queue;
    std::set<int> enqueued;
    auto discover = [&](int v, int via_edge) {
        if (!g.is_boundary(v) && enqueued.insert(v).second) {
            arrival_edge[v] = via_edge;
            queue.push_back(v);
        }
    };
    for (int b = 1; b <= g.n(); ++b) {
        int e = g.rotation().at(b).front();
        discover(g.other_end(e, b), e);
    }
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        relabel[v] = static_cast<int>(order.size());
        order.push_back(v);
        const auto& rot = g.rotation().at(v);
        std::size_t start = 0;
        while (rot[start] != arrival_edge[v]) ++start;
        for (std::size_t s = 1; s < rot.size(); ++s) {
            int e = rot[(start + s) % rot.size()];
            discover(g.other_end(e, v), e);
        }
    }
    std::string out = "n" + std::to_string(g.n()) + ";";
    for (int v : order) {
        out += g.color_of(v) == Color::white ? "w" : "b";
        const auto& rot = g.rotation().at(v);
        std::size_t start = 0;
        while (rot[start] != arrival_edge[v]) ++start;
        out += "[";
        for (std::size_t s = 0; s < rot.size(); ++s) {
            int w = g.other_end(rot[(start + s) % rot.size()], v);
            if (g.is_boundary(w)) {
                out += "B" + std::to_string(w);
            } else {
                out += "i" + std::to_string(relabel.at(w));
            }
            out += ",";
        }
        out += "];";
    }
    int unreachable = static_cast<int>(g.interior().size()) - static_cast<int>(order.size());
    if (unreachable > 0) out += "float" + std::to_string(unreachable);
    return out;
}

// Regions of the disk cut out by the white star forest, as sets of whites
// on each region's boundary. A black vertex can only reach whites lying
// on one common region, which prunes its triples. Computed by face
// tracing the forest together with the boundary circle; the single face
// using no stub edges is the outside of the disk and is dropped.
std::vector<std::set<int>> star_forest_region_whitesets(
    int n, const std::vector<std::vector<int>>& stub_blocks) {
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::vector<int>> rotation;
    // stub edges first
    int next_id = n + 1;
    std::map<int, int> stub_edge_of;  // boundary vertex -> stub edge id
    for (const auto& block : stub_blocks) {
        int white = next_id++;
        std::vector<int> rot;
        for (int x : block) {
            edges.push_back({white, x});
            stub_edge_of[x] = static_cast<int>(edges.size()) - 1;
            rot.push_back(static_cast<int>(edges.size()) - 1);
        }
        rotation[white] = std::move(rot);
    }
    if (n == 1) {
        std::set<int> whites;
        for (int w = n + 1; w < next_id; ++w) whites.insert(w);
        return {whites};
    }
    const int stub_count = static_cast<int>(edges.size());
    // boundary cycle b_i -- b_{i+1}
    std::vector<int> cycle_edge(static_cast<std::size_t>(n));  // edge from b_i to b_{i+1}
    for (int b = 1; b <= n; ++b) {
        edges.push_back({b, b % n + 1});
        cycle_edge[static_cast<std::size_t>(b - 1)] = static_cast<int>(edges.size()) - 1;
    }
    for (int b = 1; b <= n; ++b) {
        int prev = cycle_edge[static_cast<std::size_t>((b - 2 + n) % n)];
        int next = cycle_edge[static_cast<std::size_t>(b - 1)];
        rotation[b] = {prev, next, stub_edge_of.at(b)};
    }

    auto other_end = [&](int e, int v) {
        const auto& [a, b] = edges[static_cast<std::size_t>(e)];
        return a == v ? b : a;
    };
    std::map<int, std::map<int, std::size_t>> pos;
    for (const auto& [v, rot] : rotation) {
        for (std::size_t idx = 0; idx < rot.size(); ++idx) pos[v][rot[idx]] = idx;
    }

    std::vector<std::set<int>> out;
    std::set<std::pair<int, int>> seen;
    for (std::size_t eid = 0; eid < edges.size(); ++eid) {
        for (int head : {edges[eid].first, edges[eid].second}) {
            std::pair<int, int> start{static_cast<int>(eid), head};
            if (seen.count(start)) continue;
            std::set<int> whites;
            bool uses_stub = false;
            std::pair<int, int> current = start;
            do {
                seen.insert(current);
                const auto& [e, at] = current;
                if (e < stub_count) uses_stub = true;
                if (at > n) whites.insert(at);
                const auto& rot = rotation.at(at);
                std::size_t idx = pos.at(at).at(e);
                int next_e = rot[(idx + 1) % rot.size()];
                current = {next_e, other_end(next_e, at)};
            } while (!(current == start));
            if (uses_stub) out.push_back(std::move(whites));
        }
    }
    return out;
}

// All cyclic interleavings of the items into a fan of t fixed-order
// stubs: insert items one at a time after any element already present.
// For t = 0 the first item roots the cyclic order. Duplicate-free.
void cyclic_interleavings(const std::vector<int>& stubs, const std::vector<int>& items,
                          const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> current = stubs;
    auto rec = [&](auto&& self, std::size_t item) -> void {
        if (item == items.size()) {
            emit(current);
            return;
        }
        if (current.empty()) {
            current.push_back(items[item]);
            self(self, item + 1);
            current.pop_back();
            return;
        }
        for (std::size_t pos = 0; pos < current.size(); ++pos) {
            current.insert(current.begin() + static_cast<std::ptrdiff_t>(pos) + 1, items[item]);
            self(self, item + 1);
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        }
    };
    rec(rec, 0);
}

// Flat-array filter for rotation candidates: traces faces and applies the
// disk-planarity and flamingo face conditions without building maps. The
// edge list and components are fixed per black assignment; only rotations
// vary, so the per-component Euler face counts are precomputed.
struct FastWebChecker {
    int n = 0;
    int vertex_count = 0;                       // ids are 1..vertex_count
    std::vector<std::pair<int, int>> edges;
    std::vector<int> component;                 // per vertex id
    std::vector<int> faces_required;            // per component root
    bool feasible = true;

    FastWebChecker(int n_, int total_interior, const std::vector<std::pair<int, int>>& edge_list)
        : n(n_), vertex_count(n_ + total_interior), edges(edge_list) {
        component.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
        std::vector<int> parent(static_cast<std::size_t>(vertex_count) + 1);
        for (int v = 0; v <= vertex_count; ++v) parent[static_cast<std::size_t>(v)] = v;
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& [u, v] : edges) parent[static_cast<std::size_t>(find(u))] = find(v);
        std::vector<int> vcount(static_cast<std::size_t>(vertex_count) + 1, 0);
        std::vector<int> ecount(static_cast<std::size_t>(vertex_count) + 1, 0);
        for (int v = 1; v <= vertex_count; ++v) {
            component[static_cast<std::size_t>(v)] = find(v);
            ++vcount[static_cast<std::size_t>(find(v))];
        }
        for (const auto& [u, v] : edges) ++ecount[static_cast<std::size_t>(find(u))];
        faces_required.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
        for (int v = 1; v <= vertex_count; ++v) {
            if (component[static_cast<std::size_t>(v)] != v) continue;
            int f = 2 - vcount[static_cast<std::size_t>(v)] + ecount[static_cast<std::size_t>(v)];
            if (ecount[static_cast<std::size_t>(v)] > 0 && f < 1) feasible = false;
            faces_required[static_cast<std::size_t>(v)] = f;
        }
        // stub sets of distinct components must not interleave
        std::vector<int> first(static_cast<std::size_t>(vertex_count) + 1, 0);
        std::vector<int> last(static_cast<std::size_t>(vertex_count) + 1, 0);
        for (int b = 1; b <= n; ++b) {
            int root = component[static_cast<std::size_t>(b)];
            if (first[static_cast<std::size_t>(root)] == 0) first[static_cast<std::size_t>(root)] = b;
            last[static_cast<std::size_t>(root)] = b;
        }
        std::vector<int> stack;
        for (int b = 1; b <= n; ++b) {
            int root = component[static_cast<std::size_t>(b)];
            if (first[static_cast<std::size_t>(root)] == b) stack.push_back(root);
            if (stack.empty() || stack.back() != root) {
                feasible = false;
                break;
            }
            if (last[static_cast<std::size_t>(root)] == b) stack.pop_back();
        }
    }

    // rotation[v] = clockwise edge ids for interior v (boundary implied).
    bool accept(const std::map<int, std::vector<int>>& rotation) const {
        const std::size_t half_edges = 2 * edges.size();
        // half-edge 2e has head edges[e].first, 2e+1 has head .second
        auto head_of = [&](std::size_t h) {
            return (h & 1) ? edges[h >> 1].second : edges[h >> 1].first;
        };
        auto toward = [&](int e, int head) {
            return static_cast<std::size_t>(2 * e) +
                   (edges[static_cast<std::size_t>(e)].second == head ? 1u : 0u);
        };
        std::vector<char> visited(half_edges, 0);
        std::vector<int> stub_face_of(static_cast<std::size_t>(vertex_count) + 1, -1);
        std::vector<int> face_count(static_cast<std::size_t>(vertex_count) + 1, 0);
        std::vector<int> stub_walk;
        int face_id = 0;
        for (std::size_t start = 0; start < half_edges; ++start) {
            if (visited[start]) continue;
            int size = 0;
            bool has_stub = false;
            std::size_t current = start;
            int root = component[static_cast<std::size_t>(head_of(start))];
            stub_walk.clear();
            do {
                visited[current] = 1;
                ++size;
                int at = head_of(current);
                int e = static_cast<int>(current >> 1);
                if (at <= n) {
                    has_stub = true;
                    stub_walk.push_back(at);
                    current = toward(e, at == edges[static_cast<std::size_t>(e)].first
                                            ? edges[static_cast<std::size_t>(e)].second
                                            : edges[static_cast<std::size_t>(e)].first);
                    continue;
                }
                const auto& rot = rotation.at(at);
                std::size_t idx = 0;
                while (rot[idx] != e) ++idx;
                int next_e = rot[(idx + 1) % rot.size()];
                int other = edges[static_cast<std::size_t>(next_e)].first == at
                                ? edges[static_cast<std::size_t>(next_e)].second
                                : edges[static_cast<std::size_t>(next_e)].first;
                current = toward(next_e, other);
            } while (current != start);
            ++face_id;
            ++face_count[static_cast<std::size_t>(root)];
            if (has_stub) {
                if (stub_face_of[static_cast<std::size_t>(root)] != -1) return false;
                stub_face_of[static_cast<std::size_t>(root)] = face_id;
                // stubs must appear in sorted circular order
                int descents = 0;
                for (std::size_t i = 0; i < stub_walk.size(); ++i) {
                    if (stub_walk[i] > stub_walk[(i + 1) % stub_walk.size()]) ++descents;
                }
                if (stub_walk.size() > 1 && descents != 1) return false;
            } else if (size < 6) {
                return false;  // interior face below the flamingo bound
            }
        }
        for (int v = 1; v <= vertex_count; ++v) {
            if (component[static_cast<std::size_t>(v)] != v) continue;
            if (faces_required[static_cast<std::size_t>(v)] > 0 &&
                face_count[static_cast<std::size_t>(v)] != faces_required[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

std::string web_canonical_form(const PlabicGraph& g) { return canonical_form_impl(g); }

void enumerate_flamingo(int n, int k, int max_interior, const WebYield& yield, int cap_boundary,
                        int cap_interior) {
    if (n > cap_boundary) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap_boundary));
    }
    if (max_interior > cap_interior) {
        throw CapExceeded("max_interior = " + std::to_string(max_interior) + " exceeds cap " +
                          std::to_string(cap_interior));
    }
    if (n < 1 || k < 0) return;
    if (k > max_interior) return;

    std::set<std::string> seen;
    bool stopped = false;

    const std::vector<NoncrossingSetPartition> stub_partitions = all_nc_partitions(n);

    // Outer loop: the stub partition fixes the stubbed whites; inner
    // loops add black vertices and stubless whites, then rotations.
    for (const NoncrossingSetPartition& p : stub_partitions) {
        if (stopped) return;
        const auto& stub_blocks = p.blocks();
        const int stubbed = p.block_count();
        if (stubbed > k + (max_interior - k) / 2) continue;  // w = k + b, stubbed <= w

        std::vector<std::set<int>> face_whites;  // lazily computed regions
        bool have_regions = false;

        for (int blacks = 0; !stopped; ++blacks) {
            const int whites = blacks + k;
            if (whites + blacks > max_interior) break;
            const int stubless = whites - stubbed;
            if (stubless < 0) continue;
            if (stubless > 0 && blacks < 3) continue;
            if (blacks > 0 && whites < 3) continue;

            // Degree feasibility: stubbed whites may gain black edges.
            int deficit = 0;
            for (const auto& block : stub_blocks) {
                deficit += std::max(0, 3 - static_cast<int>(block.size()));
            }
            if (deficit + 3 * stubless > 3 * blacks) continue;
            if (blacks == 0 && deficit > 0) continue;

            if (!have_regions && (blacks > 0 || stubless > 0)) {
                face_whites = star_forest_region_whitesets(n, stub_blocks);
                have_regions = true;
            }

            // White ids n+1 .. n+whites (stubbed first), black ids after.
            std::vector<int> white_ids;
            for (int w = 0; w < whites; ++w) white_ids.push_back(n + 1 + w);
            std::vector<int> black_ids;
            for (int b = 0; b < blacks; ++b) black_ids.push_back(n + whites + 1 + b);

            std::vector<std::vector<int>> triples;
            std::vector<int> white_extra(static_cast<std::size_t>(whites), 0);

            auto assign_blacks = [&](auto&& self, int b, int min_code) -> void {
                if (stopped) return;
                if (b == blacks) {
                    for (int w = 0; w < whites; ++w) {
                        int stubs = w < stubbed
                                        ? static_cast<int>(stub_blocks[static_cast<std::size_t>(w)].size())
                                        : 0;
                        if (stubs + white_extra[static_cast<std::size_t>(w)] < 3) return;
                    }
                    // Shared candidate skeleton; rotations vary below.
                    WebCandidate base;
                    base.n = n;
                    for (int w = 0; w < whites; ++w) {
                        base.interior.push_back({white_ids[static_cast<std::size_t>(w)], Color::white});
                    }
                    for (int bb = 0; bb < blacks; ++bb) {
                        base.interior.push_back({black_ids[static_cast<std::size_t>(bb)], Color::black});
                    }
                    std::map<int, std::vector<int>> white_stub_edges;
                    for (int w = 0; w < stubbed; ++w) {
                        for (int x : stub_blocks[static_cast<std::size_t>(w)]) {
                            base.edges.push_back({white_ids[static_cast<std::size_t>(w)], x});
                            white_stub_edges[white_ids[static_cast<std::size_t>(w)]].push_back(
                                static_cast<int>(base.edges.size()) - 1);
                        }
                    }
                    std::map<int, std::vector<int>> white_black_edges;
                    std::map<int, std::vector<int>> black_edges;
                    for (int bb = 0; bb < blacks; ++bb) {
                        for (int w : triples[static_cast<std::size_t>(bb)]) {
                            base.edges.push_back({black_ids[static_cast<std::size_t>(bb)],
                                                  white_ids[static_cast<std::size_t>(w)]});
                            int eid = static_cast<int>(base.edges.size()) - 1;
                            white_black_edges[white_ids[static_cast<std::size_t>(w)]].push_back(eid);
                            black_edges[black_ids[static_cast<std::size_t>(bb)]].push_back(eid);
                        }
                    }

                    FastWebChecker fast(n, whites + blacks, base.edges);
                    if (!fast.feasible) return;

                    auto emit = [&](const std::map<int, std::vector<int>>& rotation) {
                        if (stopped) return;
                        if (!fast.accept(rotation)) return;
                        PlabicGraph g;
                        try {
                            g = PlabicGraph::validate(base.n, base.interior, base.edges, rotation);
                        } catch (const Error&) {
                            return;  // unrealizable rotation assignment
                        }
                        FlamingoResult fr = is_flamingo(g);
                        if (!fr.flamingo || fr.k != k) return;
                        if (!seen.insert(web_canonical_form(g)).second) return;
                        if (!yield(g)) stopped = true;
                    };

                    // Rotations: black 3-fans have two cyclic orders; each
                    // white interleaves its black edges into the stub fan.
                    std::vector<int> white_list;
                    for (int w = 0; w < whites; ++w) {
                        white_list.push_back(white_ids[static_cast<std::size_t>(w)]);
                    }
                    std::map<int, std::vector<int>> rotation;
                    auto rotations = [&](auto&& rotate_self, std::size_t wi) -> void {
                        if (stopped) return;
                        if (wi == white_list.size()) {
                            auto blacks_rec = [&](auto&& bself, int bb) -> void {
                                if (stopped) return;
                                if (bb == blacks) {
                                    emit(rotation);
                                    return;
                                }
                                const auto& be = black_edges[black_ids[static_cast<std::size_t>(bb)]];
                                rotation[black_ids[static_cast<std::size_t>(bb)]] = be;
                                bself(bself, bb + 1);
                                if (be.size() == 3) {
                                    rotation[black_ids[static_cast<std::size_t>(bb)]] = {be[0], be[2], be[1]};
                                    bself(bself, bb + 1);
                                }
                                rotation.erase(black_ids[static_cast<std::size_t>(bb)]);
                            };
                            blacks_rec(blacks_rec, 0);
                            return;
                        }
                        int white = white_list[wi];
                        const auto& stubs = white_stub_edges[white];
                        const auto& extras = white_black_edges[white];
                        if (extras.empty()) {
                            rotation[white] = stubs;
                            rotate_self(rotate_self, wi + 1);
                            rotation.erase(white);
                            return;
                        }
                        cyclic_interleavings(stubs, extras, [&](const std::vector<int>& rot) {
                            if (stopped) return;
                            rotation[white] = rot;
                            rotate_self(rotate_self, wi + 1);
                            rotation.erase(white);
                        });
                    };
                    rotations(rotations, 0);
                    return;
                }
                // Choose the triple for black b; prune by region visibility.
                for (int w1 = 0; w1 < whites; ++w1) {
                    for (int w2 = w1 + 1; w2 < whites; ++w2) {
                        for (int w3 = w2 + 1; w3 < whites; ++w3) {
                            if (stopped) return;
                            int code = (w1 * whites + w2) * whites + w3;
                            if (code < min_code) continue;
                            if (!face_whites.empty()) {
                                bool visible = false;
                                for (const auto& fw : face_whites) {
                                    int hits = 0;
                                    for (int w : {w1, w2, w3}) {
                                        if (w >= stubbed ||
                                            fw.count(white_ids[static_cast<std::size_t>(w)])) {
                                            ++hits;
                                        }
                                    }
                                    if (hits == 3) {
                                        visible = true;
                                        break;
                                    }
                                }
                                if (!visible) continue;
                            }
                            triples.push_back({w1, w2, w3});
                            for (int w : {w1, w2, w3}) ++white_extra[static_cast<std::size_t>(w)];
                            self(self, b + 1, code);
                            for (int w : {w1, w2, w3}) --white_extra[static_cast<std::size_t>(w)];
                            triples.pop_back();
                        }
                    }
                }
            };
            assign_blacks(assign_blacks, 0, 0);
        }
    }
}

std::vector<StandardTableau> all_syt(const Partition& shape, int cap_cells) {
    std::vector<StandardTableau> out;
    enumerate_syt(shape, [&](const StandardTableau& t) {
        out.push_back(t);
        return true;
    }, cap_cells);
    return out;
}

std::vector<IncreasingTableau> all_increasing(const Partition& shape, int q, bool packed_only,
                                              int cap_q) {
    std::vector<IncreasingTableau> out;
    enumerate_increasing(shape, q, packed_only, [&](const IncreasingTableau& t) {
        out.push_back(t);
        return true;
    }, cap_q);
    return out;
}

std::vector<NoncrossingSetPartition> all_nc_partitions(int q, int cap_q) {
    std::vector<NoncrossingSetPartition> out;
    enumerate_nc_partitions(q, [&](const NoncrossingSetPartition& p) {
        out.push_back(p);
        return true;
    }, cap_q);
    return out;
}

std::vector<NoncrossingMatching> all_nc_matchings(int two_c, int cap) {
    std::vector<NoncrossingMatching> out;
    enumerate_nc_matchings(two_c, [&](const NoncrossingMatching& m) {
        out.push_back(m);
        return true;
    }, cap);
    return out;
}

std::vector<PlabicGraph> all_flamingo(int n, int k, int max_interior, int cap_boundary,
                                      int cap_interior) {
    std::vector<PlabicGraph> out;
    enumerate_flamingo(n, k, max_interior, [&](const PlabicGraph& g) {
        out.push_back(g);
        return true;
    }, cap_boundary, cap_interior);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace promdig
