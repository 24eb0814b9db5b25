// Acceptance suite: one line per criterion, exit 0 only if everything
// holds. Conjecture suites (criterion 10) report their outcome; a
// violation there is surfaced as a finding with a serialized witness and
// still fails the gate, while "consistent" passes it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "promdig/digraph.hpp"
#include "promdig/enumerate.hpp"
#include "promdig/harness.hpp"
#include "promdig/json_io.hpp"
#include "promdig/noncrossing.hpp"
#include "promdig/plabic.hpp"
#include "promdig/promotion.hpp"

using namespace promdig;

namespace {

int failures_total = 0;

struct Criterion {
    int number;
    std::string label;
    std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

// ---- golden data -------------------------------------------------------

const StandardTableau kNonRect = make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}});
const StandardTableau kRect3 = make_standard({{1, 2, 6}, {3, 5, 8}, {4, 7, 9}});
const IncreasingTableau kInc543 = make_increasing({{1, 2, 3, 5, 7}, {2, 3, 6, 9}, {4, 6, 8}}, 9);
const IncreasingTableau kInc3x4 = make_increasing({{1, 2, 3, 6}, {4, 5, 6, 9}, {7, 8, 9, 10}}, 10);
const IncreasingTableau kTwoRow8 =
    make_increasing({{1, 2, 3, 5, 6, 8, 9, 12}, {3, 4, 5, 7, 8, 10, 11, 13}}, 13);

const std::vector<Grid> kOrbitNonRect = {
    {{2, 3, 4, 6}, {5, 8, 9}, {7, 1}},
    {{3, 4, 6, 2}, {5, 8, 9}, {7, 1}},
    {{4, 6, 9, 2}, {5, 8, 3}, {7, 1}},
    {{5, 6, 9, 2}, {7, 8, 3}, {1, 4}},
    {{6, 8, 9, 2}, {7, 3, 5}, {1, 4}},
    {{7, 8, 9, 2}, {1, 3, 5}, {4, 6}},
    {{8, 9, 2, 7}, {1, 3, 5}, {4, 6}},
    {{9, 2, 5, 7}, {1, 3, 8}, {4, 6}},
    {{1, 2, 5, 7}, {3, 6, 8}, {4, 9}},
};

const std::vector<Grid> kOrbitRect3 = {
    {{2, 5, 6}, {3, 7, 8}, {4, 9, 1}},
    {{3, 5, 6}, {4, 7, 8}, {9, 1, 2}},
    {{4, 5, 6}, {7, 8, 2}, {9, 1, 3}},
    {{5, 6, 2}, {7, 8, 3}, {9, 1, 4}},
    {{6, 8, 2}, {7, 1, 3}, {9, 4, 5}},
    {{7, 8, 2}, {9, 1, 3}, {4, 5, 6}},
    {{8, 1, 2}, {9, 3, 6}, {4, 5, 7}},
    {{9, 1, 2}, {3, 5, 6}, {4, 7, 8}},
    {{1, 2, 6}, {3, 5, 8}, {4, 7, 9}},
};

const std::vector<Grid> kOrbitInc543 = {
    {{2, 3, 5, 7, 1}, {3, 6, 8, 9}, {4, 8, 1}},
    {{3, 5, 7, 9, 1}, {4, 6, 8, 2}, {8, 1, 2}},
    {{4, 5, 7, 9, 1}, {6, 8, 2, 3}, {8, 1, 3}},
    {{5, 7, 9, 1, 4}, {6, 8, 2, 3}, {8, 1, 3}},
    {{6, 7, 9, 1, 4}, {8, 1, 2, 3}, {1, 3, 5}},
    {{7, 9, 1, 3, 4}, {8, 1, 2, 6}, {1, 3, 5}},
    {{8, 9, 1, 3, 4}, {1, 2, 5, 6}, {3, 5, 7}},
    {{9, 1, 3, 4, 8}, {1, 2, 5, 6}, {3, 5, 7}},
    {{1, 2, 3, 4, 8}, {2, 5, 6, 9}, {3, 7, 9}},
};

const std::vector<Grid> kOrbitInc3x4 = {
    {{2, 3, 6, 9}, {4, 5, 9, 10}, {7, 8, 10, 1}},
    {{3, 5, 6, 9}, {4, 8, 9, 10}, {7, 10, 1, 2}},
    {{4, 5, 6, 9}, {7, 8, 9, 10}, {10, 1, 2, 3}},
    {{5, 6, 9, 10}, {7, 8, 10, 3}, {10, 1, 2, 4}},
    {{6, 8, 9, 10}, {7, 10, 2, 3}, {10, 1, 4, 5}},
    {{7, 8, 9, 10}, {10, 1, 2, 3}, {1, 4, 5, 6}},
    {{8, 9, 10, 3}, {10, 1, 2, 6}, {1, 4, 5, 7}},
    {{9, 10, 2, 3}, {10, 1, 5, 6}, {1, 4, 7, 8}},
    {{10, 1, 2, 3}, {1, 4, 5, 6}, {4, 7, 8, 9}},
    {{1, 2, 3, 6}, {4, 5, 6, 9}, {7, 8, 9, 10}},
};

using Edges = std::vector<std::pair<int, int>>;

PromotionDigraph graph(int n, int i, Edges e) { return PromotionDigraph(n, i, std::move(e)); }

template <typename T, typename Gro>
void check_orbit(std::vector<std::string>& problems, const T& start,
                 const std::vector<Grid>& expected, const Gro& gro, const std::string& name) {
    T current = start;
    for (std::size_t step = 0; step < expected.size(); ++step) {
        current = gro(current);
        expect(problems, current.rows() == expected[step],
               name + " orbit step " + std::to_string(step + 1));
        expect(problems, current.alphabet().offset() == static_cast<int>(step + 1) %
                                                            current.alphabet().size(),
               name + " offset at step " + std::to_string(step + 1));
    }
}

// ---- criteria ----------------------------------------------------------

void criterion_golden(std::vector<std::string>& problems) {
    // Promotions.
    expect(problems, promote_standard(kNonRect) == make_standard({{1, 2, 3, 5}, {4, 7, 8}, {6, 9}}),
           "promotion of the (4,3,2) tableau");
    expect(problems, promote_standard(kRect3) == make_standard({{1, 4, 5}, {2, 6, 7}, {3, 8, 9}}),
           "promotion of the 3x3 tableau");
    expect(problems,
           k_promote(kInc543) == make_increasing({{1, 2, 4, 6, 9}, {2, 5, 7, 8}, {3, 7, 9}}, 9),
           "K-promotion of the (5,4,3) tableau");
    expect(problems,
           k_promote(kTwoRow8) ==
               make_increasing({{1, 2, 4, 5, 7, 8, 10, 11}, {2, 3, 6, 7, 9, 10, 12, 13}}, 13),
           "K-promotion of the 2x8 tableau");

    // Gromotion orbits, step for step.
    check_orbit(problems, kNonRect, kOrbitNonRect,
                [](const StandardTableau& t) { return gromote_standard(t).tableau; }, "nonrect");
    check_orbit(problems, kRect3, kOrbitRect3,
                [](const StandardTableau& t) { return gromote_standard(t).tableau; }, "rect3");
    check_orbit(problems, kInc543, kOrbitInc543,
                [](const IncreasingTableau& t) { return k_gromote(t).tableau; }, "inc543");
    check_orbit(problems, kInc3x4, kOrbitInc3x4,
                [](const IncreasingTableau& t) { return k_gromote(t).tableau; }, "inc3x4");
    // Canonicalized gromotion equals promotion along the orbits.
    {
        StandardTableau grom = kNonRect;
        StandardTableau prom = kNonRect;
        for (int step = 0; step < 9; ++step) {
            grom = gromote_standard(grom).tableau;
            prom = promote_standard(prom);
            expect(problems, canonicalize(grom) == prom,
                   "gromotion/promotion mismatch at step " + std::to_string(step + 1));
        }
    }

    // Promotion digraphs.
    expect(problems,
           promotion_digraph(kNonRect, 1) ==
               graph(9, 1, {{3, 9}, {9, 1}, {1, 2}, {6, 7}, {4, 5}, {5, 8}, {8, 5}}),
           "prom_1 of the nonrectangular tableau");
    expect(problems,
           promotion_digraph(kNonRect, 2) == graph(9, 2, {{9, 6}, {6, 1}, {1, 8}, {4, 7}}),
           "prom_2 of the nonrectangular tableau");
    expect(problems,
           promotion_digraph(kRect3, 1) ==
               graph(9, 1,
                     {{1, 5}, {5, 8}, {8, 9}, {9, 6}, {6, 7}, {7, 1}, {2, 3}, {3, 4}, {4, 2}}),
           "prom_1 of the 3x3 tableau");
    expect(problems,
           promotion_digraph(kRect3, 2) ==
               graph(9, 2,
                     {{5, 1}, {8, 5}, {9, 8}, {6, 9}, {7, 6}, {1, 7}, {3, 2}, {4, 3}, {2, 4}}),
           "prom_2 of the 3x3 tableau");
    expect(problems,
           promotion_digraph(kInc543, 1) ==
               graph(9, 1,
                     {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {9, 1}, {2, 9}, {9, 2}, {5, 6}, {6, 3},
                      {7, 8}}),
           "prom_1 of the (5,4,3) tableau");
    expect(problems,
           promotion_digraph(kInc543, 2) ==
               graph(9, 2, {{9, 5}, {5, 1}, {1, 6}, {7, 5}, {7, 1}, {5, 8}, {1, 8}, {3, 2}, {2, 4}}),
           "prom_2 of the (5,4,3) tableau");
    expect(problems,
           promotion_digraph(kInc3x4, 1) ==
               graph(10, 1,
                     {{1, 6}, {6, 7}, {7, 3}, {1, 9}, {9, 1}, {9, 10}, {4, 9}, {4, 10}, {3, 4},
                      {10, 1}, {10, 6}, {5, 8}, {8, 2}, {2, 5}}),
           "prom_1 of the 3x4 tableau");
    expect(problems,
           promotion_digraph(kInc3x4, 2) ==
               graph(10, 2,
                     {{1, 10}, {1, 9}, {3, 7}, {4, 3}, {6, 1}, {6, 10}, {7, 6}, {9, 1}, {9, 4},
                      {10, 9}, {10, 4}, {2, 8}, {8, 5}, {5, 2}}),
           "prom_2 of the 3x4 tableau");

    // Reconstruction from the worked 3x3 example.
    PromotionDigraph prom1 =
        graph(7, 1,
              {{1, 4}, {4, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {6, 7}, {5, 6}, {4, 5}, {7, 5},
               {5, 1}, {4, 6}});
    PromotionDigraph prom2 =
        graph(7, 2,
              {{1, 5}, {2, 4}, {3, 2}, {4, 1}, {4, 3}, {5, 4}, {5, 7}, {5, 3}, {6, 3}, {6, 4},
               {6, 5}, {7, 6}});
    expect(problems,
           reconstruct_rect_increasing({prom1, prom2}, 3, 3) ==
               make_increasing({{1, 2, 5}, {3, 4, 6}, {4, 5, 7}}, 7),
           "reconstruction of the worked 3x3 example");
    expect(problems,
           promotion_digraph(make_increasing({{1, 2, 5}, {3, 4, 6}, {4, 5, 7}}, 7), 1) == prom1 &&
               promotion_digraph(make_increasing({{1, 2, 5}, {3, 4, 6}, {4, 5, 7}}, 7), 2) == prom2,
           "digraphs of the worked 3x3 example");
}

void criterion_order(std::vector<std::string>& problems) {
    for (int r = 1; r <= 12; ++r) {
        for (int k = 1; r * k <= 12; ++k) {
            CheckReport report = check_order_rect_standard(r, k);
            expect(problems, report.status == CheckStatus::pass,
                   "order failure at " + std::to_string(r) + "x" + std::to_string(k));
        }
    }
}

void criterion_prom_perms(std::vector<std::string>& problems) {
    for (int r = 1; r <= 12; ++r) {
        for (int k = 1; r * k <= 12; ++k) {
            CheckReport report = check_prom_perms(r, k);
            expect(problems, report.status == CheckStatus::pass,
                   "permutation-structure failure at " + std::to_string(r) + "x" +
                       std::to_string(k));
        }
    }
}

void criterion_reconstruction(std::vector<std::string>& problems) {
    CheckReport standard = check_reconstruction_standard(8);
    expect(problems, standard.status == CheckStatus::pass, "standard reconstruction sweep");
    CheckReport increasing = check_reconstruction_rect_increasing(8, 8);
    expect(problems, increasing.status == CheckStatus::pass,
           "rectangular increasing reconstruction sweep");
}

void criterion_balance(std::vector<std::string>& problems) {
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            enumerate_syt(shape, [&](const StandardTableau& t) {
                if (!(promote_standard_via_balance(t) == promote_standard(t))) {
                    problems.push_back("balance promotion differs on a " +
                                       std::to_string(n) + "-cell tableau");
                }
                return true;
            });
        }
    }
    for (int q = 1; q <= 8; ++q) {
        for (int a = 1; a <= q; ++a) {
            for (int b = 0; b <= a; ++b) {
                std::vector<int> parts{a};
                if (b > 0) parts.push_back(b);
                enumerate_increasing(Partition(parts), q, false, [&](const IncreasingTableau& t) {
                    if (!(k_promote_2row_via_balance(t) == k_promote(t))) {
                        problems.push_back("two-row balance K-promotion differs at q=" +
                                           std::to_string(q));
                    }
                    return true;
                });
            }
        }
    }
}

void criterion_complete_blocks(std::vector<std::string>& problems) {
    for (int q = 2; q <= 9; ++q) {
        for (int c = 1; c <= 4 && c + 1 <= q; ++c) {
            long long count = 0;
            enumerate_increasing(Partition::rectangle(2, c), q, false,
                                 [&](const IncreasingTableau& t) {
                ++count;
                NoncrossingSetPartition p = pi_bijection(t);
                if (p.block_count() != q - c) {
                    problems.push_back("block-count law fails at q=" + std::to_string(q));
                }
                if (!(blocks_to_complete_digraphs(p) == promotion_digraph(t, 1))) {
                    problems.push_back("complete-digraph law fails at q=" + std::to_string(q));
                }
                if (!(pi_bijection(k_promote(t)) == rotate_partition(p))) {
                    problems.push_back("pi equivariance fails at q=" + std::to_string(q));
                }
                auto grouping = is_union_of_complete_digraphs(promotion_digraph(t, 1));
                if (!grouping.has_value()) {
                    problems.push_back("prom_1 is not a union of complete digraphs at q=" +
                                       std::to_string(q));
                }
                return true;
            });
            if (count == 0) problems.push_back("empty corpus at q=" + std::to_string(q));
        }
    }
}

void criterion_trip_2row(std::vector<std::string>& problems) {
    CheckReport report = check_trip_eq_prom_2row(9, 4);
    expect(problems, report.status == CheckStatus::pass, "trip_{1,2} differs from prom_1");
}

void criterion_order675(std::vector<std::string>& problems) {
    IncreasingTableau t = make_increasing(
        {{1, 3, 5, 7, 8, 9, 10, 13, 15, 18},
         {2, 4, 7, 8, 11, 14, 15, 17, 21, 22},
         {6, 8, 11, 16, 17, 20, 21, 22, 25, 26},
         {8, 10, 12, 17, 19, 22, 23, 24, 26, 27}},
        27);
    expect(problems, promotion_order(t) == 675, "promotion order is not 675");
    expect(problems, promotion_digraph(t, 2).in_degree(14) == 0,
           "prom_2 indegree at vertex 14 is not 0");
}

void criterion_hexagon_web(std::vector<std::string>& problems) {
    PlabicGraph w = hexagon_core_web();
    expect(problems, trip_digraph(w, 1, 3).same_digraph(promotion_digraph(kInc3x4, 1)),
           "trip_{1,3} of the paper web differs from prom_1");
    expect(problems, trip_digraph(w, 2, 3).same_digraph(promotion_digraph(kInc3x4, 2)),
           "trip_{2,3} of the paper web differs from prom_2");
}

void criterion_conjectures(std::vector<std::string>& problems) {
    CheckReport c3 = check_conjecture_3row(3, 9);
    std::cout << "      conjecture_3row: " << to_string(c3.status) << " ("
              << c3.instances_checked << " tableaux)\n";
    if (c3.status == CheckStatus::conjecture_violated) {
        problems.push_back("Conjecture 1.1 violated; witness: " + c3.failures.front().dump());
    }

    HarnessCaps caps;
    auto corpus = default_flamingo_corpus(caps.flamingo_n, caps.flamingo_interior);
    bool has_paper_web = false;
    std::string target = web_canonical_form(hexagon_core_web());
    for (const PlabicGraph& g : corpus) {
        if (web_canonical_form(g) == target) has_paper_web = true;
    }
    expect(problems, has_paper_web, "flamingo corpus misses the 10-boundary paper web");
    CheckReport trip = check_conjecture_trip_eq_prom(corpus);
    std::cout << "      conjecture_trip_eq_prom: " << to_string(trip.status) << " ("
              << trip.instances_checked << " webs)\n";
    if (trip.status == CheckStatus::conjecture_violated) {
        problems.push_back("Conjecture trip=prom violated; witness: " +
                           trip.failures.front().dump());
    }
}

void criterion_counting(std::vector<std::string>& problems) {
    auto catalan = [](int n) {
        std::vector<long long> cat(static_cast<std::size_t>(n) + 1, 0);
        cat[0] = 1;
        for (int m = 1; m <= n; ++m) {
            for (int i = 0; i < m; ++i) {
                cat[static_cast<std::size_t>(m)] +=
                    cat[static_cast<std::size_t>(i)] * cat[static_cast<std::size_t>(m - 1 - i)];
            }
        }
        return cat[static_cast<std::size_t>(n)];
    };
    for (int c = 1; c <= 7; ++c) {
        long long count = 0;
        enumerate_syt(Partition::rectangle(2, c), [&](const StandardTableau&) {
            ++count;
            return true;
        }, 14);
        expect(problems, count == catalan(c), "|SYT(2x" + std::to_string(c) + ")| is off");
    }
    for (int q = 1; q <= 9; ++q) {
        long long count = 0;
        enumerate_nc_partitions(q, [&](const NoncrossingSetPartition&) {
            ++count;
            return true;
        });
        expect(problems, count == catalan(q), "|NC(" + std::to_string(q) + ")| is off");
    }
}

void run_criterion(const Criterion& criterion) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    criterion.body(problems);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s %-55s (%.2fs)\n", criterion.number,
                problems.empty() ? "PASS" : "FAIL", criterion.label.c_str(), seconds);
    for (const std::string& p : problems) std::printf("      - %s\n", p.c_str());
    failures_total += static_cast<int>(problems.size());
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden paper examples (promotion, orbits, digraphs)", criterion_golden},
        {2, "promotion order rk on SYT(r x k), rk <= 12", criterion_order},
        {3, "promotion permutations, inverses, involution, rotation", criterion_prom_perms},
        {4, "reconstruction roundtrips (standard and rectangular)", criterion_reconstruction},
        {5, "balance-point promotion equivalences", criterion_balance},
        {6, "two-row digraphs: complete blocks, pi equivariance", criterion_complete_blocks},
        {7, "trip_{1,2} on partition webs equals prom_1", criterion_trip_2row},
        {8, "order-675 tableau with indegree-0 vertex", criterion_order675},
        {9, "10-boundary web trips equal 3x4 tableau digraphs", criterion_hexagon_web},
        {10, "conjecture suites (Conj 1.1 and trip=prom)", criterion_conjectures},
        {11, "counting oracles (hook length, Catalan)", criterion_counting},
    };
    for (const Criterion& criterion : criteria) run_criterion(criterion);
    if (failures_total == 0) {
        std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("ACCEPTANCE: %d problem(s)\n", failures_total);
    return 1;
}
