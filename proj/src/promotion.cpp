#include "promdig/promotion.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace promdig {

namespace {

constexpr int kBullet = 0;

struct EngineResult {
    Grid rows;
    std::vector<GromotionEvent> events;
    FlowPath flow_path;
};

// One K-gromotion pass over a grid of symbols: delete the rank-0 symbol,
// run the simultaneous-bullet swaps for ranks 1..q-1, then write the old
// minimum into every remaining bullet. Values only ever sit right of or
// below a bullet box, so adjacency scans look in those two directions.
EngineResult gromote_engine(const Partition& shape, Grid grid, const RotatedAlphabet& alphabet) {
    EngineResult result;
    const int q = alphabet.size();
    const int a1 = alphabet.min_symbol();
    std::vector<Box> bullets;
    std::set<Box> visited;
    std::set<std::pair<Box, Box>> covers;

    auto entry = [&](int r, int c) -> int& {
        return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };

    if (shape.size() > 0 && entry(1, 1) == a1) {
        entry(1, 1) = kBullet;
        bullets.push_back({1, 1});
        visited.insert({1, 1});
    }

    std::vector<GromotionEvent> events;
    for (int rank = 1; rank < q && !bullets.empty(); ++rank) {
        const int ai = alphabet.symbol_at_rank(rank);
        std::set<Box> incoming;  // the paper's C: boxes holding a_i next to a bullet
        for (const Box& b : bullets) {
            Box right{b.row, b.col + 1};
            Box below{b.row + 1, b.col};
            if (shape.contains_box(right.row, right.col) && entry(right.row, right.col) == ai) {
                incoming.insert(right);
            }
            if (shape.contains_box(below.row, below.col) && entry(below.row, below.col) == ai) {
                incoming.insert(below);
            }
        }
        if (incoming.empty()) continue;

        std::vector<Box> next_bullets;
        for (const Box& b : bullets) {
            Box right{b.row, b.col + 1};
            Box below{b.row + 1, b.col};
            const bool from_right = incoming.count(right) > 0;
            const bool from_below = incoming.count(below) > 0;
            if (!from_right && !from_below) {
                next_bullets.push_back(b);
                continue;
            }
            entry(b.row, b.col) = ai;
            if (from_right) covers.insert({b, right});
            if (from_below) {
                covers.insert({b, below});
                events.push_back({ai, b.row + 1});
            }
        }
        for (const Box& c : incoming) {
            entry(c.row, c.col) = kBullet;
            next_bullets.push_back(c);
            visited.insert(c);
        }
        std::sort(next_bullets.begin(), next_bullets.end());
        bullets = std::move(next_bullets);
    }

    for (const Box& b : bullets) entry(b.row, b.col) = a1;

    // Strict column increase makes a repeated (value, row) event impossible.
    assert(std::set<GromotionEvent>(events.begin(), events.end()).size() == events.size());

    result.rows = std::move(grid);
    result.events = std::move(events);
    result.flow_path.boxes.assign(visited.begin(), visited.end());
    result.flow_path.covers.assign(covers.begin(), covers.end());
    return result;
}

// Promotion = gromotion followed by pulling every symbol down one rank,
// which keeps the original alphabet.
Grid pull_down_one_rank(Grid grid, int q) {
    for (auto& row : grid) {
        for (int& v : row) v = (v - 2 + q) % q + 1;
    }
    return grid;
}

}  // namespace

GromoteResult<StandardTableau> gromote_standard(const StandardTableau& t) {
    EngineResult e = gromote_engine(t.shape(), t.rows(), t.alphabet());
    return {validate_standard(t.shape(), e.rows, t.alphabet().grown()), std::move(e.events),
            std::move(e.flow_path)};
}

GromoteResult<IncreasingTableau> k_gromote(const IncreasingTableau& t) {
    EngineResult e = gromote_engine(t.shape(), t.rows(), t.alphabet());
    return {validate_increasing(t.shape(), e.rows, t.alphabet().grown()), std::move(e.events),
            std::move(e.flow_path)};
}

StandardTableau promote_standard(const StandardTableau& t) {
    EngineResult e = gromote_engine(t.shape(), t.rows(), t.alphabet());
    return validate_standard(t.shape(), pull_down_one_rank(std::move(e.rows), t.size()),
                             t.alphabet());
}

IncreasingTableau k_promote(const IncreasingTableau& t) {
    EngineResult e = gromote_engine(t.shape(), t.rows(), t.alphabet());
    return validate_increasing(t.shape(), pull_down_one_rank(std::move(e.rows), t.q()),
                               t.alphabet());
}

FlowPath flow_path(const StandardTableau& t) {
    EngineResult e = gromote_engine(t.shape(), t.rows(), t.alphabet());
    return e.flow_path;
}

// Def-style construction for increasing tableaux: grow greedily from the
// top-left box toward the smaller of the right/below entries, branching on
// ties; independent of the slide engine, which the tests exploit.
FlowPath flow_path(const IncreasingTableau& t) {
    FlowPath path;
    const RotatedAlphabet& alphabet = t.alphabet();
    if (t.shape().size() == 0 || t.at(1, 1) != alphabet.min_symbol()) return path;

    std::set<Box> boxes;
    std::set<std::pair<Box, Box>> covers;
    std::vector<Box> frontier{{1, 1}};
    boxes.insert({1, 1});
    while (!frontier.empty()) {
        Box b = frontier.back();
        frontier.pop_back();
        Box right{b.row, b.col + 1};
        Box below{b.row + 1, b.col};
        const bool has_right = t.shape().contains_box(right.row, right.col);
        const bool has_below = t.shape().contains_box(below.row, below.col);
        if (!has_right && !has_below) continue;
        std::vector<Box> nexts;
        if (has_right && has_below) {
            int vr = t.at(right.row, right.col);
            int vb = t.at(below.row, below.col);
            if (vr == vb) {
                nexts = {right, below};
            } else {
                nexts = {alphabet.less(vr, vb) ? right : below};
            }
        } else {
            nexts = {has_right ? right : below};
        }
        for (const Box& nb : nexts) {
            covers.insert({b, nb});
            if (boxes.insert(nb).second) frontier.push_back(nb);
        }
    }
    path.boxes.assign(boxes.begin(), boxes.end());
    path.covers.assign(covers.begin(), covers.end());
    return path;
}

BalanceReport balance_report(const LatticeWord& w, int i) {
    BalanceReport report;
    report.i = i;
    int count_i = 0;
    int count_next = 0;
    for (int pos = 1; pos <= w.length(); ++pos) {
        const bool has_i = i <= w.row_count() && w.letter_contains(pos, i);
        const bool has_next = i + 1 <= w.row_count() && w.letter_contains(pos, i + 1);
        if (has_i) ++count_i;
        if (has_next) ++count_next;
        if (has_next && count_i == count_next) report.balance_points.push_back(pos);
        if (has_i && has_next && count_i == count_next + 1) report.teetering_points.push_back(pos);
    }
    return report;
}

StandardTableau promote_standard_via_balance(const StandardTableau& t) {
    if (!t.alphabet().is_canonical()) {
        throw NonCanonicalAlphabet("balance-point promotion requires offset 0");
    }
    LatticeWord w = lattice_word(t);
    std::vector<std::uint32_t> masks = w.masks();

    // Successive first balance points: j_i is the first i-balance point
    // after j_{i-1}, starting from j_0 = 1.
    int prev = 1;
    int k = 0;
    for (int i = 1; i < w.row_count() + 1; ++i) {
        BalanceReport rep = balance_report(w, i);
        auto it = std::upper_bound(rep.balance_points.begin(), rep.balance_points.end(), prev);
        if (it == rep.balance_points.end()) break;
        int j = *it;
        masks[static_cast<std::size_t>(j - 1)] = 1u << (i - 1);  // decrement w_j from i+1 to i
        prev = j;
        k = i;
    }

    masks.erase(masks.begin());
    masks.push_back(1u << k);  // append k+1
    int rows = std::max(w.row_count(), k + 1);
    return standard_from_lattice_word(LatticeWord(rows, std::move(masks)));
}

IncreasingTableau k_promote_2row_via_balance(const IncreasingTableau& t) {
    if (!t.alphabet().is_canonical()) {
        throw NonCanonicalAlphabet("balance-point K-promotion requires offset 0");
    }
    if (t.shape().length() > 2) {
        throw WrongShape("balance-point K-promotion is defined for at most two rows");
    }
    LatticeWord w = lattice_word(t);
    // Treat one-row tableaux as two-row with an empty second row.
    std::vector<std::uint32_t> masks = w.masks();
    constexpr std::uint32_t kRow1 = 1u;
    constexpr std::uint32_t kRow2 = 2u;
    constexpr std::uint32_t kBoth = 3u;

    std::uint32_t appended = 0;
    if (masks.front() == 0) {
        // Case (1): no value 1, pure cyclic shift.
        appended = 0;
    } else {
        BalanceReport rep = balance_report(w, 1);
        if (rep.balance_points.empty()) {
            if (rep.teetering_points.empty()) {
                appended = kRow1;  // case (2a)
            } else {
                int jt = rep.teetering_points.front();  // case (2b)
                masks[static_cast<std::size_t>(jt - 1)] = kRow1;
                appended = kBoth;
            }
        } else {
            int jb = rep.balance_points.front();
            auto first_teeter = std::find_if(rep.teetering_points.begin(),
                                             rep.teetering_points.end(),
                                             [jb](int j) { return j < jb; });
            if (first_teeter == rep.teetering_points.end()) {
                masks[static_cast<std::size_t>(jb - 1)] = kRow1;  // case (3a)
            } else {
                int jt = *first_teeter;  // case (3b)
                masks[static_cast<std::size_t>(jt - 1)] = kRow1;
                masks[static_cast<std::size_t>(jb - 1)] = kBoth;
            }
            appended = kRow2;
        }
    }
    masks.erase(masks.begin());
    masks.push_back(appended);
    return increasing_from_lattice_word(LatticeWord(2, std::move(masks)));
}

int default_order_bound(int q) { return q * (q * (q - 1) / 2); }

namespace {

template <typename TableauT, typename Step>
int order_of(const TableauT& start, int max_iterations, const Step& step) {
    const int bound = max_iterations > 0 ? max_iterations
                                         : default_order_bound(start.alphabet().size());
    TableauT current = step(start);
    for (int m = 1; m <= bound; ++m) {
        if (current == start) return m;
        current = step(current);
    }
    throw OrderExceedsBound("promotion order exceeds " + std::to_string(bound));
}

}  // namespace

int promotion_order(const StandardTableau& t, int max_iterations) {
    return order_of(t, max_iterations, [](const StandardTableau& x) { return promote_standard(x); });
}

int promotion_order(const IncreasingTableau& t, int max_iterations) {
    return order_of(t, max_iterations, [](const IncreasingTableau& x) { return k_promote(x); });
}

}  // namespace promdig
