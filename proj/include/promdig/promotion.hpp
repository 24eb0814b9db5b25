#pragma once

#include <utility>
#include <vector>

#include "promdig/lattice_word.hpp"
#include "promdig/tableau.hpp"

namespace promdig {

/// 1-based box coordinates (row, column).
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

/// The region disturbed by one (K-)gromotion step. For standard tableaux
/// the boxes form a maximal chain and covers are the consecutive pairs;
/// for increasing tableaux the box set alone under-determines the poset,
/// so cover relations are stored explicitly.
struct FlowPath {
    std::vector<Box> boxes;                      // sorted
    std::vector<std::pair<Box, Box>> covers;     // sorted, b < b' with b' right of or below b
    bool operator==(const FlowPath&) const = default;
};

/// A value crossing rows during gromotion: `value` moved from `from_row`
/// to `from_row - 1`. from_row >= 2 always.
struct GromotionEvent {
    int value = 0;
    int from_row = 0;
    auto operator<=>(const GromotionEvent&) const = default;
};

template <typename TableauT>
struct GromoteResult {
    TableauT tableau;                    // over the grown alphabet
    std::vector<GromotionEvent> events;  // in slide order
    FlowPath flow_path;
};

/// Schuetzenberger promotion via jeu-de-taquin slides; output over the
/// same alphabet as the input.
StandardTableau promote_standard(const StandardTableau& t);

/// Promotion variant that rotates the alphabet instead of relabeling.
GromoteResult<StandardTableau> gromote_standard(const StandardTableau& t);

/// K-promotion of an increasing tableau (simultaneous-bullet swaps).
IncreasingTableau k_promote(const IncreasingTableau& t);

GromoteResult<IncreasingTableau> k_gromote(const IncreasingTableau& t);

/// Flow path without performing the slide: for standard input the boxes
/// where t and gromotion(t) differ; for increasing input the greedy
/// smallest-neighbor poset (ties include both covers).
FlowPath flow_path(const StandardTableau& t);
FlowPath flow_path(const IncreasingTableau& t);

/// Balance and teetering points of a lattice word for a fixed row index i.
/// j is an i-balance point when the prefix w_1..w_j holds equally many i's
/// and (i+1)'s and w_j contains i+1 (the position where the count of i+1
/// catches up; prefixes that merely preserve an existing tie do not count).
/// j is i-teetering when i and i+1 both lie in w_j and the prefix holds
/// exactly one more i than i+1.
struct BalanceReport {
    int i = 0;
    std::vector<int> balance_points;    // ascending
    std::vector<int> teetering_points;  // ascending
    bool operator==(const BalanceReport&) const = default;
};

BalanceReport balance_report(const LatticeWord& w, int i);

/// First-balance-point promotion on the lattice word; equals
/// promote_standard on every standard tableau.
StandardTableau promote_standard_via_balance(const StandardTableau& t);

/// Two-row K-promotion through balance/teetering points; equals k_promote
/// on every increasing tableau with at most two rows.
IncreasingTableau k_promote_2row_via_balance(const IncreasingTableau& t);

/// Least m >= 1 with promotion^m(t) = t.
int promotion_order(const StandardTableau& t, int max_iterations = -1);
int promotion_order(const IncreasingTableau& t, int max_iterations = -1);

/// Default bound used when max_iterations is not supplied: q*C(q,2).
int default_order_bound(int q);

}  // namespace promdig
