#include "doctest.h"

#include <set>

#include "promdig/digraph.hpp"
#include "promdig/enumerate.hpp"
#include "promdig/promotion.hpp"

using namespace promdig;

namespace {

using Edges = std::vector<std::pair<int, int>>;

PromotionDigraph graph(int n, int i, Edges edges) { return PromotionDigraph(n, i, std::move(edges)); }

const StandardTableau kNonRect = make_standard({{1, 3, 4, 6}, {2, 5, 9}, {7, 8}});
const StandardTableau kRect3 = make_standard({{1, 2, 6}, {3, 5, 8}, {4, 7, 9}});
const IncreasingTableau kInc543 = make_increasing({{1, 2, 3, 5, 7}, {2, 3, 6, 9}, {4, 6, 8}}, 9);
const IncreasingTableau kInc3x4 = make_increasing({{1, 2, 3, 6}, {4, 5, 6, 9}, {7, 8, 9, 10}}, 10);

}  // namespace

TEST_CASE("promotion digraphs of the nonrectangular standard tableau") {
    CHECK(promotion_digraph(kNonRect, 1) ==
          graph(9, 1, {{3, 9}, {9, 1}, {1, 2}, {6, 7}, {4, 5}, {5, 8}, {8, 5}}));
    CHECK(promotion_digraph(kNonRect, 2) == graph(9, 2, {{9, 6}, {6, 1}, {1, 8}, {4, 7}}));
    CHECK(promotion_digraph(kNonRect, 3).edges().empty());
}

TEST_CASE("promotion digraphs of the 3x3 standard tableau are inverse cycles") {
    CHECK(promotion_digraph(kRect3, 1) ==
          graph(9, 1, {{1, 5}, {5, 8}, {8, 9}, {9, 6}, {6, 7}, {7, 1}, {2, 3}, {3, 4}, {4, 2}}));
    CHECK(promotion_digraph(kRect3, 2) ==
          graph(9, 2, {{5, 1}, {8, 5}, {9, 8}, {6, 9}, {7, 6}, {1, 7}, {3, 2}, {4, 3}, {2, 4}}));
}

TEST_CASE("promotion digraphs of the increasing (5,4,3) tableau") {
    CHECK(promotion_digraph(kInc543, 1) ==
          graph(9, 1,
                {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {9, 1}, {2, 9}, {9, 2}, {5, 6}, {6, 3}, {7, 8}}));
    CHECK(promotion_digraph(kInc543, 2) ==
          graph(9, 2,
                {{9, 5}, {5, 1}, {1, 6}, {7, 5}, {7, 1}, {5, 8}, {1, 8}, {3, 2}, {2, 4}}));
}

TEST_CASE("promotion digraphs of the increasing 3x4 tableau") {
    CHECK(promotion_digraph(kInc3x4, 1) ==
          graph(10, 1,
                {{1, 6}, {6, 7}, {7, 3}, {1, 9}, {9, 1}, {9, 10}, {4, 9}, {4, 10}, {3, 4},
                 {10, 1}, {10, 6}, {5, 8}, {8, 2}, {2, 5}}));
    CHECK(promotion_digraph(kInc3x4, 2) ==
          graph(10, 2,
                {{1, 10}, {1, 9}, {3, 7}, {4, 3}, {6, 1}, {6, 10}, {7, 6}, {9, 1}, {9, 4},
                 {10, 9}, {10, 4}, {2, 8}, {8, 5}, {5, 2}}));
}

TEST_CASE("no digraph has a loop, and standard outdegrees stay below two") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            enumerate_syt(shape, [&](const StandardTableau& t) {
                for (const auto& d : promotion_digraphs(t, shape.length())) {
                    for (const auto& [a, b] : d.edges()) CHECK(a != b);
                    for (const auto& [in_deg, out_deg] : degree_profile(d)) {
                        CHECK(out_deg <= 1);
                        (void)in_deg;
                    }
                }
                return true;
            });
        }
    }
}

TEST_CASE("excedances of the paper examples") {
    auto exc1 = excedances(promotion_digraph(kNonRect, 1));
    CHECK(exc1 == std::vector<int>{2, 5, 7, 8, 9});
    CHECK(nonexcedances(promotion_digraph(kNonRect, 1)) == std::vector<int>{1, 3, 4, 6});

    CHECK(excedances(promotion_digraph(kInc543, 2)) == std::vector<int>{4, 6, 8});

    CHECK(excedances(PromotionDigraph(4, 1, {})).empty());
}

TEST_CASE("reconstruct_standard from the paper digraphs") {
    CHECK(reconstruct_standard(promotion_digraphs(kNonRect, 2), kNonRect.shape()) == kNonRect);
    CHECK(reconstruct_standard(promotion_digraphs(kRect3, 2), kRect3.shape()) == kRect3);
}

TEST_CASE("reconstruct_standard roundtrips on every SYT with <= 8 cells") {
    for (int n = 1; n <= 8; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            enumerate_syt(shape, [&](const StandardTableau& t) {
                CHECK(reconstruct_standard(promotion_digraphs(t, shape.length() - 1), shape) == t);
                return true;
            });
        }
    }
}

TEST_CASE("reconstruct_standard fails closed on inconsistent input") {
    auto digs = promotion_digraphs(kRect3, 2);
    CHECK_THROWS_AS(reconstruct_standard(digs, Partition({4, 4, 1})), InconsistentDigraphs);
    CHECK_THROWS_AS(reconstruct_standard({digs[0]}, kRect3.shape()), InconsistentDigraphs);
}

TEST_CASE("reconstruct_rect_increasing on the worked 3x3 example") {
    PromotionDigraph prom1 =
        graph(7, 1,
              {{1, 4}, {4, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {6, 7}, {5, 6}, {4, 5}, {7, 5},
               {5, 1}, {4, 6}});
    PromotionDigraph prom2 =
        graph(7, 2,
              {{1, 5}, {2, 4}, {3, 2}, {4, 1}, {4, 3}, {5, 4}, {5, 7}, {5, 3}, {6, 3}, {6, 4},
               {6, 5}, {7, 6}});
    IncreasingTableau s = reconstruct_rect_increasing({prom1, prom2}, 3, 3);
    CHECK(s == make_increasing({{1, 2, 5}, {3, 4, 6}, {4, 5, 7}}, 7));
}

TEST_CASE("reconstruct_rect_increasing recovers the 3x4 tableau") {
    CHECK(reconstruct_rect_increasing(promotion_digraphs(kInc3x4, 2), 3, 4) == kInc3x4);
}

TEST_CASE("reconstruct_rect_increasing roundtrips over two-row rectangles") {
    for (int c = 1; c <= 4; ++c) {
        for (int q = c + 1; q <= 9; ++q) {
            enumerate_increasing(Partition::rectangle(2, c), q, false,
                                 [&](const IncreasingTableau& t) {
                CHECK(reconstruct_rect_increasing(promotion_digraphs(t, 1), 2, c) == t);
                return true;
            });
        }
    }
}

TEST_CASE("rectangularity must be known: the complete-digraph collision") {
    IncreasingTableau rect = make_increasing({{1, 2}, {2, 3}}, 3);
    IncreasingTableau nonrect = make_increasing({{1, 2, 3}, {2, 3}}, 3);
    CHECK(promotion_digraph(rect, 1) == promotion_digraph(nonrect, 1));
    // With the rectangle dimensions supplied, reconstruction picks the
    // rectangular witness.
    CHECK(reconstruct_rect_increasing({promotion_digraph(rect, 1)}, 2, 2) == rect);
}

TEST_CASE("rotate_digraph") {
    PromotionDigraph d = promotion_digraph(kRect3, 1);
    CHECK(rotate_digraph(d) == promotion_digraph(promote_standard(kRect3), 1));

    PromotionDigraph current = d;
    for (int step = 0; step < 9; ++step) current = rotate_digraph(current);
    CHECK(current == d);
}

TEST_CASE("shift property holds away from vertex n") {
    for (int n = 2; n <= 7; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            enumerate_syt(shape, [&](const StandardTableau& t) {
                StandardTableau promoted = promote_standard(t);
                for (int i = 1; i <= shape.length() - 1; ++i) {
                    PromotionDigraph before = promotion_digraph(t, i);
                    PromotionDigraph after = promotion_digraph(promoted, i);
                    for (int a = 1; a <= n - 1; ++a) {
                        for (int b = 1; b <= n - 1; ++b) {
                            CHECK(before.has_edge(a + 1, b + 1) == after.has_edge(a, b));
                        }
                    }
                }
                return true;
            });
        }
    }
}

TEST_CASE("outdegree zero marks exactly the absent values (rectangular)") {
    for (int q = 3; q <= 7; ++q) {
        enumerate_increasing(Partition::rectangle(2, 2), q, false,
                             [&](const IncreasingTableau& t) {
            std::set<int> present;
            for (const auto& row : t.rows()) present.insert(row.begin(), row.end());
            PromotionDigraph d = promotion_digraph(t, 1);
            for (int v = 1; v <= q; ++v) {
                CHECK((d.out_degree(v) > 0) == (present.count(v) > 0));
            }
            return true;
        });
    }
}

TEST_CASE("is_union_of_complete_digraphs") {
    PromotionDigraph blocks = graph(
        13, 1, [] {
            Edges e;
            for (const auto& block : std::vector<std::vector<int>>{
                     {1, 5, 8, 11}, {2, 3, 4}, {6, 7}, {9, 10}, {12, 13}}) {
                for (int a : block) {
                    for (int b : block) {
                        if (a != b) e.push_back({a, b});
                    }
                }
            }
            return e;
        }());
    auto grouping = is_union_of_complete_digraphs(blocks);
    REQUIRE(grouping.has_value());
    CHECK(*grouping == std::vector<std::vector<int>>{{1, 5, 8, 11}, {2, 3, 4}, {6, 7}, {9, 10},
                                                     {12, 13}});

    CHECK(is_union_of_complete_digraphs(graph(3, 1, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}))
              .value() == std::vector<std::vector<int>>{{1, 2, 3}});

    CHECK_FALSE(is_union_of_complete_digraphs(graph(3, 1, {{1, 2}, {2, 3}})).has_value());
}

TEST_CASE("degree profiles") {
    auto profile = degree_profile(promotion_digraph(kRect3, 1));
    for (const auto& [in_deg, out_deg] : profile) {
        CHECK(in_deg == 1);
        CHECK(out_deg == 1);
    }
    CHECK(degree_profile(PromotionDigraph(3, 1, {})) ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 0}, {0, 0}});
}

TEST_CASE("the order-675 tableau has an indegree-0 vertex in prom_2") {
    IncreasingTableau t = make_increasing(
        {{1, 3, 5, 7, 8, 9, 10, 13, 15, 18},
         {2, 4, 7, 8, 11, 14, 15, 17, 21, 22},
         {6, 8, 11, 16, 17, 20, 21, 22, 25, 26},
         {8, 10, 12, 17, 19, 22, 23, 24, 26, 27}},
        27);
    PromotionDigraph prom2 = promotion_digraph(t, 2);
    CHECK(prom2.in_degree(14) == 0);
    CHECK(promotion_order(t) == 675);
}
