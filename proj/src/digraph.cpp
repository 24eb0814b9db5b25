#include "promdig/digraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "promdig/promotion.hpp"

namespace promdig {

PromotionDigraph::PromotionDigraph(int n, int index, std::vector<std::pair<int, int>> edges)
    : n_(n), index_(index), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [a, b] : edges_) {
        if (a < 1 || a > n_ || b < 1 || b > n_) {
            throw InconsistentDigraphs("edge endpoint outside [1,n]");
        }
        if (a == b) throw InconsistentDigraphs("promotion digraphs have no loops");
    }
}

bool PromotionDigraph::has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

std::vector<int> PromotionDigraph::out_neighbors(int v) const {
    std::vector<int> out;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(v, 0));
    for (; it != edges_.end() && it->first == v; ++it) out.push_back(it->second);
    return out;
}

std::vector<int> PromotionDigraph::in_neighbors(int v) const {
    std::vector<int> in;
    for (const auto& [a, b] : edges_) {
        if (b == v) in.push_back(a);
    }
    return in;
}

int PromotionDigraph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
int PromotionDigraph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

namespace {

// Walk the gromotion orbit once, recording for each step alpha the values
// crossing each row boundary.
template <typename TableauT, typename GromoteFn>
std::vector<PromotionDigraph> digraphs_from_orbit(const TableauT& t, int max_index, int n,
                                                  const GromoteFn& gromote_fn) {
    if (!t.alphabet().is_canonical()) {
        throw NonCanonicalAlphabet("promotion digraphs require alphabet offset 0");
    }
    if (max_index < 0) throw InconsistentDigraphs("digraph index must be nonnegative");
    if (max_index == 0) return {};
    std::vector<std::vector<std::pair<int, int>>> edges(static_cast<std::size_t>(max_index));
    TableauT current = t;
    for (int alpha = 1; alpha <= n; ++alpha) {
        auto result = gromote_fn(current);
        for (const GromotionEvent& ev : result.events) {
            int i = ev.from_row - 1;
            if (i >= 1 && i <= max_index) {
                edges[static_cast<std::size_t>(i - 1)].push_back({alpha, ev.value});
            }
        }
        current = std::move(result.tableau);
    }
    std::vector<PromotionDigraph> out;
    out.reserve(static_cast<std::size_t>(max_index));
    for (int i = 1; i <= max_index; ++i) {
        out.emplace_back(n, i, std::move(edges[static_cast<std::size_t>(i - 1)]));
    }
    return out;
}

}  // namespace

std::vector<PromotionDigraph> promotion_digraphs(const StandardTableau& t, int max_index) {
    return digraphs_from_orbit(t, max_index, t.size(),
                               [](const StandardTableau& x) { return gromote_standard(x); });
}

std::vector<PromotionDigraph> promotion_digraphs(const IncreasingTableau& t, int max_index) {
    return digraphs_from_orbit(t, max_index, t.q(),
                               [](const IncreasingTableau& x) { return k_gromote(x); });
}

PromotionDigraph promotion_digraph(const StandardTableau& t, int i) {
    return promotion_digraphs(t, i).back();
}

PromotionDigraph promotion_digraph(const IncreasingTableau& t, int i) {
    return promotion_digraphs(t, i).back();
}

std::vector<int> excedances(const PromotionDigraph& d) {
    std::set<int> exc;
    for (const auto& [a, b] : d.edges()) {
        if (a < b) exc.insert(b);
    }
    return {exc.begin(), exc.end()};
}

std::vector<int> nonexcedances(const PromotionDigraph& d) {
    std::vector<int> exc = excedances(d);
    std::vector<int> out;
    auto it = exc.begin();
    for (int v = 1; v <= d.n(); ++v) {
        if (it != exc.end() && *it == v) {
            ++it;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

StandardTableau reconstruct_standard(const std::vector<PromotionDigraph>& digraphs,
                                     const Partition& shape) {
    const int rows = shape.length();
    if (static_cast<int>(digraphs.size()) != rows - 1) {
        throw InconsistentDigraphs("need exactly l(shape)-1 digraphs");
    }
    const int n = shape.size();
    for (const auto& d : digraphs) {
        if (d.n() != n) throw InconsistentDigraphs("digraph vertex count differs from |shape|");
    }

    // Thm: nonexcedances of prom_i are exactly the first i rows, so the row
    // of a value is the least i failing to see it as an excedance.
    Grid grid(static_cast<std::size_t>(rows));
    for (int v = 1; v <= n; ++v) {
        int row = rows;
        for (int i = 1; i < rows; ++i) {
            std::vector<int> exc = excedances(digraphs[static_cast<std::size_t>(i - 1)]);
            if (!std::binary_search(exc.begin(), exc.end(), v)) {
                row = i;
                break;
            }
        }
        grid[static_cast<std::size_t>(row - 1)].push_back(v);
    }
    for (int r = 1; r <= rows; ++r) {
        if (static_cast<int>(grid[static_cast<std::size_t>(r - 1)].size()) != shape.row_length(r)) {
            throw InconsistentDigraphs("row content incompatible with shape");
        }
    }

    StandardTableau candidate = [&] {
        try {
            return make_standard(grid);
        } catch (const Error&) {
            throw InconsistentDigraphs("reconstructed grid is not a standard tableau");
        }
    }();
    std::vector<PromotionDigraph> derived = promotion_digraphs(candidate, rows - 1);
    for (std::size_t i = 0; i < derived.size(); ++i) {
        if (!(derived[i] == digraphs[i])) {
            throw InconsistentDigraphs("digraphs of reconstruction differ from input");
        }
    }
    return candidate;
}

IncreasingTableau reconstruct_rect_increasing(const std::vector<PromotionDigraph>& digraphs,
                                              int r, int c) {
    if (r < 1 || c < 1) throw InconsistentDigraphs("need positive rectangle dimensions");
    if (static_cast<int>(digraphs.size()) != r - 1) {
        throw InconsistentDigraphs("need exactly r-1 digraphs");
    }
    const int q = digraphs.empty() ? 0 : digraphs.front().n();
    for (const auto& d : digraphs) {
        if (d.n() != q) throw InconsistentDigraphs("digraph vertex counts differ");
    }
    if (r == 1) throw InconsistentDigraphs("cannot reconstruct a one-row tableau from no digraphs");

    auto prom = [&](int i) -> const PromotionDigraph& {
        return digraphs[static_cast<std::size_t>(i - 1)];
    };

    // A value appears in the tableau exactly when it has positive outdegree
    // (rectangular shape: every gromotion's flow path crosses every row).
    std::set<int> appearing;
    for (int v = 1; v <= q; ++v) {
        if (prom(1).out_degree(v) > 0) appearing.insert(v);
    }

    // bottom_k[k] = values in the union of the bottom k rows.
    std::vector<std::set<int>> bottom_k(static_cast<std::size_t>(r) + 1);
    for (int k = 1; k < r; ++k) {
        std::vector<int> exc = excedances(prom(r - k));
        bottom_k[static_cast<std::size_t>(k)] = {exc.begin(), exc.end()};
    }
    bottom_k[static_cast<std::size_t>(r)] = appearing;
    for (int k = 1; k < r; ++k) {
        const auto& inner = bottom_k[static_cast<std::size_t>(k)];
        const auto& outer = bottom_k[static_cast<std::size_t>(k) + 1];
        if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) {
            throw InconsistentDigraphs("bottom-row sets are not nested");
        }
    }

    // Whether v, known to lie in the bottom k rows, also lies in row r-k.
    // The first condition (v crossed the boundary above before first
    // entering row r-k from below) certifies membership. The second (the
    // flow path continues past v's crossing to a larger value) is
    // necessary but not sufficient: several branches of one flow path can
    // cross the same row boundary independently, so values passing only
    // this test are candidates to be settled by verification.
    enum class Membership { certain, candidate, no };
    auto membership_above = [&](int v, int k) {
        const PromotionDigraph& d = prom(r - k);
        std::vector<int> ins = d.in_neighbors(v);
        if (ins.empty()) throw InconsistentDigraphs("excedance with empty in-neighborhood");
        int t = *std::min_element(ins.begin(), ins.end());
        if (r - k - 1 >= 1) {
            for (int tp : prom(r - k - 1).in_neighbors(v)) {
                if (tp < t) return Membership::certain;
            }
        }
        for (int w : d.out_neighbors(t)) {
            if (w > v) return Membership::candidate;
        }
        return Membership::no;
    };

    // Per row above the bottom: certain members plus a candidate pool.
    std::vector<std::vector<int>> certain_rows(static_cast<std::size_t>(r));
    std::vector<std::vector<int>> candidate_rows(static_cast<std::size_t>(r));
    certain_rows[static_cast<std::size_t>(r - 1)].assign(bottom_k[1].begin(), bottom_k[1].end());
    for (int k = 1; k <= r - 1; ++k) {
        auto& certain = certain_rows[static_cast<std::size_t>(r - k - 1)];
        auto& candidates = candidate_rows[static_cast<std::size_t>(r - k - 1)];
        for (int v : bottom_k[static_cast<std::size_t>(k) + 1]) {
            if (!bottom_k[static_cast<std::size_t>(k)].count(v)) certain.push_back(v);
        }
        for (int v : bottom_k[static_cast<std::size_t>(k)]) {
            switch (membership_above(v, k)) {
                case Membership::certain: certain.push_back(v); break;
                case Membership::candidate: candidates.push_back(v); break;
                case Membership::no: break;
            }
        }
        std::sort(certain.begin(), certain.end());
    }

    if (static_cast<int>(certain_rows[static_cast<std::size_t>(r - 1)].size()) != c) {
        throw NotRectangularWitness("bottom row length differs from c");
    }
    for (int row = 1; row <= r; ++row) {
        int have = static_cast<int>(certain_rows[static_cast<std::size_t>(row - 1)].size());
        int pool = static_cast<int>(candidate_rows[static_cast<std::size_t>(row - 1)].size());
        if (have > c || have + pool < c) {
            throw NotRectangularWitness("reconstructed rows have unequal lengths");
        }
    }

    // Search candidate subsets row by row, verifying fail-closed; by the
    // uniqueness theorem at most one assignment survives.
    std::optional<IncreasingTableau> found;
    Grid grid(static_cast<std::size_t>(r));
    auto verify = [&]() {
        IncreasingTableau candidate = [&]() -> IncreasingTableau {
            try {
                return make_increasing(grid, q);
            } catch (const Error&) {
                throw NotRectangularWitness("not a tableau");
            }
        }();
        std::vector<PromotionDigraph> derived = promotion_digraphs(candidate, r - 1);
        for (std::size_t i = 0; i < derived.size(); ++i) {
            if (!(derived[i] == digraphs[i])) {
                throw NotRectangularWitness("digraph mismatch");
            }
        }
        found = candidate;
    };
    auto assemble = [&](auto&& self, int row) -> void {
        if (found) return;
        if (row > r) {
            try {
                verify();
            } catch (const Error&) {
                // not this assignment
            }
            return;
        }
        const auto& certain = certain_rows[static_cast<std::size_t>(row - 1)];
        const auto& pool = candidate_rows[static_cast<std::size_t>(row - 1)];
        const int need = c - static_cast<int>(certain.size());
        std::vector<int> chosen;
        auto choose = [&](auto&& choose_self, std::size_t from) -> void {
            if (found) return;
            if (static_cast<int>(chosen.size()) == need) {
                std::vector<int> content = certain;
                content.insert(content.end(), chosen.begin(), chosen.end());
                std::sort(content.begin(), content.end());
                grid[static_cast<std::size_t>(row - 1)] = std::move(content);
                self(self, row + 1);
                return;
            }
            for (std::size_t i = from; i < pool.size(); ++i) {
                chosen.push_back(pool[i]);
                choose_self(choose_self, i + 1);
                chosen.pop_back();
            }
        };
        choose(choose, 0);
    };
    assemble(assemble, 1);
    if (!found) {
        throw InconsistentDigraphs("no rectangular tableau realizes the digraphs");
    }
    return *found;
}

PromotionDigraph rotate_digraph(const PromotionDigraph& d) {
    auto dec = [n = d.n()](int v) { return v == 1 ? n : v - 1; };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(d.edges().size());
    for (const auto& [a, b] : d.edges()) edges.push_back({dec(a), dec(b)});
    return PromotionDigraph(d.n(), d.index(), std::move(edges));
}

std::optional<std::vector<std::vector<int>>> is_union_of_complete_digraphs(
    const PromotionDigraph& d) {
    // Group the supported vertices by connected component of the
    // underlying undirected graph, then demand completeness.
    std::vector<int> component(static_cast<std::size_t>(d.n()) + 1, 0);
    int next_component = 0;
    for (int v = 1; v <= d.n(); ++v) {
        if (component[static_cast<std::size_t>(v)] != 0) continue;
        if (d.out_degree(v) == 0 && d.in_degree(v) == 0) continue;
        ++next_component;
        std::vector<int> stack{v};
        component[static_cast<std::size_t>(v)] = next_component;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            auto visit = [&](int w) {
                if (component[static_cast<std::size_t>(w)] == 0) {
                    component[static_cast<std::size_t>(w)] = next_component;
                    stack.push_back(w);
                }
            };
            for (int w : d.out_neighbors(u)) visit(w);
            for (int w : d.in_neighbors(u)) visit(w);
        }
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(next_component));
    for (int v = 1; v <= d.n(); ++v) {
        int comp = component[static_cast<std::size_t>(v)];
        if (comp > 0) groups[static_cast<std::size_t>(comp - 1)].push_back(v);
    }
    std::size_t expected_edges = 0;
    for (const auto& group : groups) {
        for (int a : group) {
            for (int b : group) {
                if (a != b && !d.has_edge(a, b)) return std::nullopt;
            }
        }
        expected_edges += group.size() * (group.size() - 1);
    }
    if (expected_edges != d.edges().size()) return std::nullopt;
    std::sort(groups.begin(), groups.end());
    return groups;
}

std::vector<std::pair<int, int>> degree_profile(const PromotionDigraph& d) {
    std::vector<std::pair<int, int>> profile(static_cast<std::size_t>(d.n()), {0, 0});
    for (const auto& [a, b] : d.edges()) {
        ++profile[static_cast<std::size_t>(a - 1)].second;
        ++profile[static_cast<std::size_t>(b - 1)].first;
    }
    return profile;
}

}  // namespace promdig
