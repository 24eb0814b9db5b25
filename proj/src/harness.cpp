#include "promdig/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "promdig/digraph.hpp"
#include "promdig/enumerate.hpp"
#include "promdig/json_io.hpp"
#include "promdig/promotion.hpp"

namespace promdig {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::conjecture_consistent: return "conjecture-consistent";
        case CheckStatus::conjecture_violated: return "conjecture-violated";
    }
    return "unknown";
}

json CheckReport::to_json() const {
    return json{{"check_id", check_id},
                {"parameters", parameters},
                {"instances_checked", instances_checked},
                {"failures", failures},
                {"status", promdig::to_string(status)},
                {"wall_time_seconds", wall_time_seconds}};
}

HarnessCaps HarnessCaps::from_environment() {
    HarnessCaps caps;
    const char* env = std::getenv("PROMDIG_CAPS");
    if (env == nullptr) return caps;
    std::istringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        try {
            caps.apply_override(item.substr(0, eq), std::stoi(item.substr(eq + 1)));
        } catch (const std::exception&) {
            // ignore malformed entries
        }
    }
    return caps;
}

void HarnessCaps::apply_override(const std::string& name, int value) {
    if (name == "syt_cells") syt_cells = value;
    else if (name == "rect_cells") rect_cells = value;
    else if (name == "inc_q") inc_q = value;
    else if (name == "two_row_q") two_row_q = value;
    else if (name == "two_row_c") two_row_c = value;
    else if (name == "conj3_c") conj3_c = value;
    else if (name == "conj3_q") conj3_q = value;
    else if (name == "flamingo_n") flamingo_n = value;
    else if (name == "flamingo_interior") flamingo_interior = value;
    else if (name == "indegree_r") indegree_r = value;
    else if (name == "indegree_c") indegree_c = value;
    else if (name == "indegree_q") indegree_q = value;
}

namespace {

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json witness(const StandardTableau& t, const std::string& reason) {
    return json{{"reason", reason}, {"tableau", tableau_to_json(t)}};
}

json witness(const IncreasingTableau& t, const std::string& reason) {
    return json{{"reason", reason}, {"tableau", tableau_to_json(t)}};
}

bool same_edge_sets(const PromotionDigraph& a, const PromotionDigraph& b) { return a == b; }

}  // namespace

CheckReport check_order_rect_standard(int r, int k) {
    Timer timer;
    CheckReport report;
    report.check_id = "order_rect_standard";
    report.parameters = json{{"r", r}, {"k", k}};
    enumerate_syt(Partition::rectangle(r, k), [&](const StandardTableau& t) {
        ++report.instances_checked;
        StandardTableau current = t;
        for (int step = 0; step < r * k; ++step) current = promote_standard(current);
        if (!(current == t)) {
            report.failures.push_back(witness(t, "promotion^(rk) differs from identity"));
        }
        return true;
    });
    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_prom_perms(int r, int k) {
    Timer timer;
    CheckReport report;
    report.check_id = "prom_perms";
    report.parameters = json{{"r", r}, {"k", k}};
    const int n = r * k;
    enumerate_syt(Partition::rectangle(r, k), [&](const StandardTableau& t) {
        ++report.instances_checked;
        auto digs = promotion_digraphs(t, r - 1);
        auto fail = [&](const std::string& reason) { report.failures.push_back(witness(t, reason)); };
        for (int i = 1; i <= r - 1; ++i) {
            const auto& d = digs[static_cast<std::size_t>(i - 1)];
            auto profile = degree_profile(d);
            for (const auto& [in_deg, out_deg] : profile) {
                if (in_deg != 1 || out_deg != 1) {
                    fail("prom_" + std::to_string(i) + " is not a permutation");
                    return true;
                }
            }
            // prom_i = prom_{r-i}^{-1}
            std::vector<std::pair<int, int>> reversed;
            for (const auto& [a, b] : d.edges()) reversed.push_back({b, a});
            PromotionDigraph inv(d.n(), r - i, std::move(reversed));
            if (!same_edge_sets(inv, digs[static_cast<std::size_t>(r - i - 1)])) {
                fail("prom_" + std::to_string(i) + " is not inverse to prom_" +
                     std::to_string(r - i));
                return true;
            }
        }
        if (r % 2 == 0) {
            const auto& mid = digs[static_cast<std::size_t>(r / 2 - 1)];
            for (const auto& [a, b] : mid.edges()) {
                if (!mid.has_edge(b, a)) {
                    fail("prom_{r/2} is not an involution");
                    return true;
                }
            }
        }
        // Rotation law: prom_i(P(T)) = rotated prom_i(T), including vertex n.
        StandardTableau promoted = promote_standard(t);
        auto promoted_digs = promotion_digraphs(promoted, r - 1);
        for (int i = 1; i <= r - 1; ++i) {
            if (!same_edge_sets(rotate_digraph(digs[static_cast<std::size_t>(i - 1)]),
                                promoted_digs[static_cast<std::size_t>(i - 1)])) {
                fail("rotation law fails for prom_" + std::to_string(i));
                return true;
            }
        }
        (void)n;
        return true;
    });
    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_reconstruction_standard(int max_cells) {
    Timer timer;
    CheckReport report;
    report.check_id = "reconstruction_standard";
    report.parameters = json{{"max_cells", max_cells}};
    for (int n = 1; n <= max_cells; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            enumerate_syt(shape, [&](const StandardTableau& t) {
                ++report.instances_checked;
                try {
                    StandardTableau rebuilt =
                        reconstruct_standard(promotion_digraphs(t, shape.length() - 1), shape);
                    if (!(rebuilt == t)) {
                        report.failures.push_back(witness(t, "reconstruction differs"));
                    }
                } catch (const Error& e) {
                    report.failures.push_back(witness(t, std::string("reconstruction threw: ") + e.what()));
                }
                return true;
            });
        }
    }
    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_reconstruction_rect_increasing(int two_row_q, int three_row_q) {
    Timer timer;
    CheckReport report;
    report.check_id = "reconstruction_rect_increasing";
    report.parameters = json{{"two_row_q", two_row_q}, {"three_row_q", three_row_q}};
    auto run_family = [&](int r, int max_c, int max_q) {
        for (int c = 1; c <= max_c; ++c) {
            for (int q = r + c - 1; q <= max_q; ++q) {
                enumerate_increasing(Partition::rectangle(r, c), q, false,
                                     [&](const IncreasingTableau& t) {
                    ++report.instances_checked;
                    try {
                        IncreasingTableau rebuilt =
                            reconstruct_rect_increasing(promotion_digraphs(t, r - 1), r, c);
                        if (!(rebuilt == t)) {
                            report.failures.push_back(witness(t, "reconstruction differs"));
                        }
                    } catch (const Error& e) {
                        report.failures.push_back(
                            witness(t, std::string("reconstruction threw: ") + e.what()));
                    }
                    return true;
                });
            }
        }
    };
    run_family(2, 4, two_row_q);
    run_family(3, 3, three_row_q);
    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_reconstruction_nonrect_collisions() {
    Timer timer;
    CheckReport report;
    report.check_id = "reconstruction_nonrect_collisions";
    report.parameters = json::object();

    // Group tableaux over a corpus by their digraph tuple and report the
    // classes with several members; the pinned examples must collide.
    auto collision_classes = [&](const std::vector<Partition>& shapes, int q, int digraph_count) {
        std::map<std::string, std::vector<IncreasingTableau>> classes;
        for (const Partition& shape : shapes) {
            enumerate_increasing(shape, q, false, [&](const IncreasingTableau& t) {
                ++report.instances_checked;
                std::string key;
                for (const auto& d : promotion_digraphs(t, digraph_count)) {
                    key += digraph_to_json(d).dump();
                }
                classes[key].push_back(t);
                return true;
            });
        }
        return classes;
    };

    auto find_class_with = [&](const std::map<std::string, std::vector<IncreasingTableau>>& classes,
                               const std::vector<IncreasingTableau>& needles) {
        for (const auto& [key, members] : classes) {
            bool all = true;
            for (const auto& needle : needles) {
                if (std::find(members.begin(), members.end(), needle) == members.end()) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    };

    json found = json::object();

    // The four two-row tableaux sharing one prom_1.
    {
        auto classes = collision_classes(
            {Partition({2, 1}), Partition({3, 1}), Partition({3, 2})}, 5, 1);
        std::vector<IncreasingTableau> needles = {
            make_increasing({{1, 3, 5}, {2}}, 5),
            make_increasing({{1, 4, 5}, {2}}, 5),
            make_increasing({{1, 5}, {2}}, 5),
            make_increasing({{1, 2, 5}, {2}}, 5),
        };
        found["four_two_row_tableaux"] = find_class_with(classes, needles);
        json sizes = json::array();
        for (const auto& [key, members] : classes) {
            if (members.size() > 1) sizes.push_back(members.size());
        }
        report.parameters["q5_collision_class_sizes"] = sizes;
    }
    // A rectangular and a nonrectangular tableau sharing prom_1.
    {
        auto classes = collision_classes({Partition({2, 2}), Partition({3, 2})}, 3, 1);
        std::vector<IncreasingTableau> needles = {
            make_increasing({{1, 2}, {2, 3}}, 3),
            make_increasing({{1, 2, 3}, {2, 3}}, 3),
        };
        found["rect_vs_nonrect"] = find_class_with(classes, needles);
    }
    // Packed same-shape tableaux sharing both digraphs.
    {
        auto classes = collision_classes({Partition({2, 1, 1})}, 3, 2);
        std::vector<IncreasingTableau> needles = {
            make_increasing({{1, 2}, {2}, {3}}, 3),
            make_increasing({{1, 3}, {2}, {3}}, 3),
        };
        found["packed_same_shape"] = find_class_with(classes, needles);
    }

    report.parameters["pinned_collisions_found"] = found;
    bool ok = true;
    for (const auto& [key, value] : found.items()) ok = ok && value.get<bool>();
    if (!ok) report.failures.push_back(json{{"reason", "a pinned collision class was not found"}});
    report.status = ok ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_conjecture_3row(int max_c, int max_q) {
    Timer timer;
    CheckReport report;
    report.check_id = "conjecture_3row";
    report.parameters = json{{"max_c", max_c}, {"max_q", max_q}};
    for (int c = 1; c <= max_c; ++c) {
        for (int q = c + 2; q <= max_q; ++q) {
            enumerate_increasing(Partition::rectangle(3, c), q, false,
                                 [&](const IncreasingTableau& t) {
                ++report.instances_checked;
                IncreasingTableau current = t;
                for (int step = 0; step < q; ++step) current = k_promote(current);
                if (!(current == t)) {
                    report.failures.push_back(witness(t, "K-promotion^q differs from identity"));
                }
                return true;
            });
        }
    }
    report.status = report.failures.empty() ? CheckStatus::conjecture_consistent
                                            : CheckStatus::conjecture_violated;
    report.wall_time_seconds = timer.seconds();
    return report;
}

CheckReport check_trip_eq_prom_2row(int max_q, int max_c) {
    Timer timer;
    CheckReport report;
    report.check_id = "trip_eq_prom_2row";
    report.parameters = json{{"max_q", max_q}, {"max_c", max_c}};
    for (int q = 1; q <= max_q; ++q) {
        // All-singleton edge case: both digraphs are empty.
        {
            std::vector<std::vector<int>> singletons;
            for (int x = 1; x <= q; ++x) singletons.push_back({x});
            NoncrossingSetPartition p = NoncrossingSetPartition::validate(q, singletons);
            ++report.instances_checked;
            TripDigraph trip = trip_digraph(partition_to_plabic(p), 1, 2);
            if (!trip.same_digraph(blocks_to_complete_digraphs(p))) {
                report.failures.push_back(json{{"reason", "singleton partition digraph mismatch"},
                                               {"partition", nc_partition_to_json(p)}});
            }
        }
        for (int c = 1; c <= max_c; ++c) {
            if (q < c + 1) continue;
            enumerate_increasing(Partition::rectangle(2, c), q, false,
                                 [&](const IncreasingTableau& t) {
                ++report.instances_checked;
                NoncrossingSetPartition p = pi_bijection(t);
                TripDigraph trip = trip_digraph(partition_to_plabic(p), 1, 2);
                if (!trip.same_digraph(promotion_digraph(t, 1))) {
                    report.failures.push_back(witness(t, "trip_{1,2} differs from prom_1"));
                }
                return true;
            });
        }
    }
    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

PlabicGraph hexagon_core_web() {
    // Ten boundary vertices; hexagon h1..h6 alternating black/white with
    // three outer whites w1 (degree 4), w3, w5 hanging off the black
    // corners. Ids: 11..16 = h1..h6, 17 = w1, 18 = w3, 19 = w5.
    const int h1 = 11, h2 = 12, h3 = 13, h4 = 14, h5 = 15, h6 = 16;
    const int w1 = 17, w3 = 18, w5 = 19;
    std::vector<PlabicGraph::InteriorVertex> interior = {
        {h1, Color::black}, {h2, Color::white}, {h3, Color::black},
        {h4, Color::white}, {h5, Color::black}, {h6, Color::white},
        {w1, Color::white}, {w3, Color::white}, {w5, Color::white},
    };
    std::vector<std::pair<int, int>> edges = {
        {h1, h2},   // 0
        {h2, h3},   // 1
        {h3, h4},   // 2
        {h4, h5},   // 3
        {h5, h6},   // 4
        {h6, h1},   // 5
        {h1, w1},   // 6
        {h3, w3},   // 7
        {h5, w5},   // 8
        {w1, 10},   // 9
        {w1, 1},    // 10
        {w1, 9},    // 11
        {h2, 8},    // 12
        {w3, 7},    // 13
        {w3, 6},    // 14
        {h4, 5},    // 15
        {w5, 4},    // 16
        {w5, 3},    // 17
        {h6, 2},    // 18
    };
    std::map<int, std::vector<int>> rotation = {
        {h1, {6, 5, 0}},    // w1, h6, h2
        {h2, {0, 1, 12}},   // h1, h3, b8
        {h3, {1, 2, 7}},    // h2, h4, w3
        {h4, {2, 3, 15}},   // h3, h5, b5
        {h5, {3, 4, 8}},    // h4, h6, w5
        {h6, {5, 18, 4}},   // h1, b2, h5
        {w1, {9, 10, 6, 11}},  // b10, b1, h1, b9
        {w3, {7, 14, 13}},     // h3, b6, b7
        {w5, {8, 17, 16}},     // h5, b3, b4
    };
    return PlabicGraph::validate(10, std::move(interior), std::move(edges), std::move(rotation));
}

CheckReport check_conjecture_trip_eq_prom(const std::vector<PlabicGraph>& webs) {
    Timer timer;
    CheckReport report;
    report.check_id = "conjecture_trip_eq_prom";
    report.parameters = json{{"webs", webs.size()}};

    std::map<std::pair<int, int>, std::set<std::string>> trip_pairs_seen;
    long long injective_pairs = 0;

    for (const PlabicGraph& web : webs) {
        ++report.instances_checked;
        FlamingoResult fr = is_flamingo(web);
        if (!fr.flamingo) throw NotFlamingo("corpus web fails the flamingo conditions");
        const int q = web.n();
        const int c = q - 2 * fr.k;
        auto violated = [&](const std::string& reason) {
            report.failures.push_back(json{{"reason", reason}, {"web", plabic_to_json(web)}});
        };

        TripDigraph trip1 = trip_digraph(web, 1, 3);
        TripDigraph trip2 = trip_digraph(web, 2, 3);

        // Distinctness of the pair within FW(q, k).
        std::string pair_key = digraph_to_json(trip1).dump() + digraph_to_json(trip2).dump();
        if (!trip_pairs_seen[{q, fr.k}].insert(pair_key).second) {
            violated("two webs share the same trip digraph pair");
            continue;
        }
        ++injective_pairs;

        if (c < 1) {
            violated("no 3 x (q-2k) rectangle exists");
            continue;
        }
        try {
            std::vector<PromotionDigraph> digs;
            digs.emplace_back(q, 1, trip1.edges());
            digs.emplace_back(q, 2, trip2.edges());
            IncreasingTableau tau = reconstruct_rect_increasing(digs, 3, c);

            // Rotation-equivariance leg: trips of the rotated web match
            // the digraphs of the K-promoted tableau.
            PlabicGraph rotated = rotate_web(web);
            IncreasingTableau promoted = k_promote(tau);
            auto promoted_digs = promotion_digraphs(promoted, 2);
            if (!trip_digraph(rotated, 1, 3).same_digraph(promoted_digs[0]) ||
                !trip_digraph(rotated, 2, 3).same_digraph(promoted_digs[1])) {
                violated("rotation equivariance fails");
            }
        } catch (const Error& e) {
            violated(std::string("no tableau realizes the trip digraphs: ") + e.what());
        }
    }
    report.parameters["distinct_trip_pairs"] = injective_pairs;
    report.status = report.failures.empty() ? CheckStatus::conjecture_consistent
                                            : CheckStatus::conjecture_violated;
    report.wall_time_seconds = timer.seconds();
    return report;
}

std::vector<PlabicGraph> default_flamingo_corpus(int max_n, int max_interior) {
    std::vector<PlabicGraph> corpus;
    std::set<std::string> keys;
    auto add = [&](const PlabicGraph& g) {
        if (keys.insert(web_canonical_form(g)).second) corpus.push_back(g);
        return true;
    };
    for (int n = 3; n <= max_n; ++n) {
        for (int k = 1; 2 * k <= n + 2; ++k) {
            enumerate_flamingo(n, k, max_interior, add);
        }
    }
    add(hexagon_core_web());
    return corpus;
}

namespace {

// Rows (1-based) of each value of a rectangular increasing tableau.
std::vector<std::set<int>> value_rows(const IncreasingTableau& t) {
    std::vector<std::set<int>> rows(static_cast<std::size_t>(t.q()) + 1);
    for (int r = 1; r <= t.shape().length(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            rows[static_cast<std::size_t>(t.at(r, c))].insert(r);
        }
    }
    return rows;
}

}  // namespace

CheckReport check_indegree_suite(int max_r, int max_c, int max_q) {
    Timer timer;
    CheckReport report;
    report.check_id = "indegree_suite";
    report.parameters = json{{"max_r", max_r}, {"max_c", max_c}, {"max_q", max_q}};

    for (int r = 2; r <= max_r; ++r) {
        for (int c = 1; c <= max_c; ++c) {
            for (int q = r + c - 1; q <= max_q; ++q) {
                enumerate_increasing(Partition::rectangle(r, c), q, true,
                                     [&](const IncreasingTableau& t) {
                    ++report.instances_checked;
                    auto digs = promotion_digraphs(t, r - 1);
                    std::vector<std::vector<int>> indeg(digs.size());
                    for (std::size_t i = 0; i < digs.size(); ++i) {
                        for (const auto& [in_d, out_d] : degree_profile(digs[i])) {
                            indeg[i].push_back(in_d);
                        }
                    }
                    auto indeg_positive_everywhere = [&](int v) {
                        for (const auto& column : indeg) {
                            if (column[static_cast<std::size_t>(v - 1)] == 0) return false;
                        }
                        return true;
                    };
                    auto fail = [&](const std::string& reason) {
                        report.failures.push_back(witness(t, reason));
                    };

                    // prom_1 and prom_{r-1}: indegree >= 1 unconditionally.
                    for (std::size_t i : {std::size_t{0}, digs.size() - 1}) {
                        for (int v = 1; v <= q; ++v) {
                            if (indeg[i][static_cast<std::size_t>(v - 1)] == 0) {
                                fail("indegree 0 in prom_1 or prom_{r-1} at vertex " +
                                     std::to_string(v));
                                return true;
                            }
                        }
                    }

                    auto rows_before = value_rows(t);
                    IncreasingTableau after = t;
                    for (int step = 0; step < q; ++step) after = k_promote(after);
                    auto rows_after = value_rows(after);

                    // Frame values and row r-1 values: indegree >= 1 in
                    // every prom_i.
                    for (int v = 1; v <= q; ++v) {
                        const auto& rows = rows_before[static_cast<std::size_t>(v)];
                        bool in_frame = false;
                        for (int row : rows) {
                            if (row == 1 || row == r) in_frame = true;
                        }
                        // first/last column values are also frame values
                        for (int row = 1; row <= r; ++row) {
                            if (t.at(row, 1) == v || t.at(row, c) == v) in_frame = true;
                        }
                        bool in_row_r1 = rows.count(r - 1) > 0;
                        if ((in_frame || in_row_r1) && !indeg_positive_everywhere(v)) {
                            fail("frame/row-(r-1) value " + std::to_string(v) +
                                 " has an indegree-0 digraph");
                            return true;
                        }
                        // Lemma: v in row k of T and row k' <= k of P^q(T).
                        const auto& rows2 = rows_after[static_cast<std::size_t>(v)];
                        bool lemma_applies = false;
                        for (int k_row : rows) {
                            for (int k2 : rows2) {
                                if (k2 <= k_row) lemma_applies = true;
                            }
                        }
                        if (lemma_applies && !indeg_positive_everywhere(v)) {
                            fail("same-row lemma fails at value " + std::to_string(v));
                            return true;
                        }
                    }

                    if (after == t) {
                        for (int v = 1; v <= q; ++v) {
                            if (!indeg_positive_everywhere(v)) {
                                fail("P^q(T)=T but vertex " + std::to_string(v) +
                                     " has indegree 0");
                                return true;
                            }
                        }
                    }

                    if (r == 3) {
                        for (int v = 1; v <= q; ++v) {
                            if (!indeg_positive_everywhere(v)) {
                                fail("three-row tableau with indegree-0 vertex " +
                                     std::to_string(v));
                                return true;
                            }
                        }
                    }
                    return true;
                });
            }
        }
    }

    // Pinned golden case: the 4 x 10 packed tableau of order 675 whose
    // prom_2 misses vertex 14.
    {
        IncreasingTableau t = make_increasing(
            {{1, 3, 5, 7, 8, 9, 10, 13, 15, 18},
             {2, 4, 7, 8, 11, 14, 15, 17, 21, 22},
             {6, 8, 11, 16, 17, 20, 21, 22, 25, 26},
             {8, 10, 12, 17, 19, 22, 23, 24, 26, 27}},
            27);
        ++report.instances_checked;
        PromotionDigraph prom2 = promotion_digraph(t, 2);
        if (prom2.in_degree(14) != 0) {
            report.failures.push_back(witness(t, "expected indegree 0 at vertex 14 of prom_2"));
        }
        if (promotion_order(t) != 675) {
            report.failures.push_back(witness(t, "expected promotion order 675"));
        }
    }

    report.status = report.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
    report.wall_time_seconds = timer.seconds();
    return report;
}

std::vector<std::string> all_check_ids() {
    return {"order_rect_standard",
            "prom_perms",
            "reconstruction_standard",
            "reconstruction_rect_increasing",
            "reconstruction_nonrect_collisions",
            "trip_eq_prom_2row",
            "indegree_suite",
            "conjecture_3row",
            "conjecture_trip_eq_prom"};
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const HarnessCaps& caps) {
    std::vector<CheckReport> reports;
    for (const std::string& id : ids) {
        if (id == "order_rect_standard") {
            for (int r = 1; r <= caps.rect_cells; ++r) {
                for (int k = 1; r * k <= caps.rect_cells; ++k) {
                    reports.push_back(check_order_rect_standard(r, k));
                }
            }
        } else if (id == "prom_perms") {
            for (int r = 1; r <= caps.rect_cells; ++r) {
                for (int k = 1; r * k <= caps.rect_cells; ++k) {
                    reports.push_back(check_prom_perms(r, k));
                }
            }
        } else if (id == "reconstruction_standard") {
            reports.push_back(check_reconstruction_standard(caps.syt_cells));
        } else if (id == "reconstruction_rect_increasing") {
            reports.push_back(check_reconstruction_rect_increasing(caps.two_row_q, caps.inc_q));
        } else if (id == "reconstruction_nonrect_collisions") {
            reports.push_back(check_reconstruction_nonrect_collisions());
        } else if (id == "conjecture_3row") {
            reports.push_back(check_conjecture_3row(caps.conj3_c, caps.conj3_q));
        } else if (id == "trip_eq_prom_2row") {
            reports.push_back(check_trip_eq_prom_2row(caps.two_row_q, caps.two_row_c));
        } else if (id == "conjecture_trip_eq_prom") {
            reports.push_back(check_conjecture_trip_eq_prom(
                default_flamingo_corpus(caps.flamingo_n, caps.flamingo_interior)));
        } else if (id == "indegree_suite") {
            reports.push_back(
                check_indegree_suite(caps.indegree_r, caps.indegree_c, caps.indegree_q));
        } else {
            throw ParseError("unknown check id \"" + id + "\"");
        }
    }
    return reports;
}

}  // namespace promdig
