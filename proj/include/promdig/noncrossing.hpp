#pragma once

#include <utility>
#include <vector>

#include "promdig/digraph.hpp"
#include "promdig/tableau.hpp"

namespace promdig {

/// A set partition of [q] whose blocks have pairwise disjoint convex hulls
/// on a disk: no a < b < c < d with a, c together and b, d together in a
/// different block. Blocks are stored ascending, sorted by minimum.
class NoncrossingSetPartition {
  public:
    NoncrossingSetPartition() = default;

    /// Validates disjointness, coverage of [q], and the noncrossing
    /// property (stack-based linear scan).
    static NoncrossingSetPartition validate(int q, std::vector<std::vector<int>> blocks);

    int q() const { return q_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    /// Index into blocks() of the block containing x.
    int block_index_of(int x) const;
    const std::vector<int>& block_of(int x) const { return blocks_[static_cast<std::size_t>(block_index_of(x))]; }

    bool operator==(const NoncrossingSetPartition&) const = default;

  private:
    int q_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;  // per element, 0-based
};

/// A noncrossing set partition all of whose blocks are pairs.
class NoncrossingMatching {
  public:
    NoncrossingMatching() = default;
    static NoncrossingMatching validate(NoncrossingSetPartition p);

    const NoncrossingSetPartition& partition() const { return partition_; }
    int partner_of(int x) const;
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const NoncrossingMatching&) const = default;

  private:
    explicit NoncrossingMatching(NoncrossingSetPartition p) : partition_(std::move(p)) {}
    NoncrossingSetPartition partition_;
};

/// Parenthesis matching of the lattice word of a 2 x c standard tableau;
/// its pairs are exactly the 2-cycles of prom_1.
NoncrossingMatching tograph(const StandardTableau& t);

/// The equivariant bijection Inc^q(2 x c) -> NC(q): absent values become
/// singletons, top-only values block minima, bottom-only values block
/// maxima, both-row values interior elements.
NoncrossingSetPartition pi_bijection(const IncreasingTableau& t);

/// Inverse of pi_bijection onto 2 x c tableaux; requires q - c blocks.
IncreasingTableau pi_inverse(const NoncrossingSetPartition& p, int c);

/// Relabel x -> x-1 with 1 -> q; intertwines with K-promotion under pi.
NoncrossingSetPartition rotate_partition(const NoncrossingSetPartition& p);

/// max B_1 and B_1 \ {1, max B_1} for the block B_1 containing 1; these
/// are the first balance point and the teetering points before it of the
/// corresponding two-row tableau.
struct FirstBlockAnalysis {
    int balance = 0;
    std::vector<int> teetering;
    bool operator==(const FirstBlockAnalysis&) const = default;
};

FirstBlockAnalysis first_block_analysis(const NoncrossingSetPartition& p);

/// All ordered pairs within each block of size >= 2; equals prom_1 of the
/// corresponding two-row tableau.
PromotionDigraph blocks_to_complete_digraphs(const NoncrossingSetPartition& p);

}  // namespace promdig
