#include "promdig/noncrossing.hpp"

#include <algorithm>
#include <string>

namespace promdig {

NoncrossingSetPartition NoncrossingSetPartition::validate(int q,
                                                          std::vector<std::vector<int>> blocks) {
    if (q < 1) throw NotPartition("ground set must be nonempty");
    NoncrossingSetPartition p;
    p.q_ = q;
    p.block_index_.assign(static_cast<std::size_t>(q), -1);
    for (auto& block : blocks) {
        if (block.empty()) throw NotPartition("blocks must be nonempty");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        for (int x : blocks[bi]) {
            if (x < 1 || x > q) throw NotPartition("element outside [1,q]");
            if (p.block_index_[static_cast<std::size_t>(x - 1)] != -1) {
                throw NotPartition("element " + std::to_string(x) + " repeated");
            }
            p.block_index_[static_cast<std::size_t>(x - 1)] = static_cast<int>(bi);
        }
    }
    for (int x = 1; x <= q; ++x) {
        if (p.block_index_[static_cast<std::size_t>(x - 1)] == -1) {
            throw NotPartition("element " + std::to_string(x) + " uncovered");
        }
    }
    // Stack scan: open a block at its minimum, close at its maximum; any
    // element whose block is not on top of the stack witnesses a crossing.
    std::vector<int> stack;
    for (int x = 1; x <= q; ++x) {
        int b = p.block_index_[static_cast<std::size_t>(x - 1)];
        const auto& block = blocks[static_cast<std::size_t>(b)];
        if (x == block.front()) {
            stack.push_back(b);
        }
        if (stack.empty() || stack.back() != b) {
            throw NotNoncrossing("blocks cross at element " + std::to_string(x));
        }
        if (x == block.back()) stack.pop_back();
    }
    p.blocks_ = std::move(blocks);
    return p;
}

int NoncrossingSetPartition::block_index_of(int x) const {
    if (x < 1 || x > q_) throw NotPartition("element outside [1,q]");
    return block_index_[static_cast<std::size_t>(x - 1)];
}

NoncrossingMatching NoncrossingMatching::validate(NoncrossingSetPartition p) {
    for (const auto& block : p.blocks()) {
        if (block.size() != 2) throw NotPartition("matching blocks must be pairs");
    }
    return NoncrossingMatching(std::move(p));
}

int NoncrossingMatching::partner_of(int x) const {
    const auto& block = partition_.block_of(x);
    return block[0] == x ? block[1] : block[0];
}

std::vector<std::pair<int, int>> NoncrossingMatching::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : partition_.blocks()) out.push_back({block[0], block[1]});
    return out;
}

NoncrossingMatching tograph(const StandardTableau& t) {
    const Partition& shape = t.shape();
    if (shape.length() != 2 || !shape.is_rectangular()) {
        throw WrongShape("tograph needs a 2 x c rectangular standard tableau");
    }
    if (!t.alphabet().is_canonical()) throw NonCanonicalAlphabet("tograph requires offset 0");
    // Parenthesis matching of the lattice word: row 1 opens, row 2 closes.
    LatticeWord w = lattice_word(t);
    std::vector<int> open_stack;
    std::vector<std::vector<int>> blocks;
    for (int pos = 1; pos <= w.length(); ++pos) {
        if (w.letter_contains(pos, 1)) {
            open_stack.push_back(pos);
        } else {
            blocks.push_back({open_stack.back(), pos});
            open_stack.pop_back();
        }
    }
    return NoncrossingMatching::validate(
        NoncrossingSetPartition::validate(w.length(), std::move(blocks)));
}

NoncrossingSetPartition pi_bijection(const IncreasingTableau& t) {
    const Partition& shape = t.shape();
    if (shape.length() != 2 || !shape.is_rectangular()) {
        throw WrongShape("pi needs a 2 x c rectangular increasing tableau");
    }
    if (!t.alphabet().is_canonical()) throw NonCanonicalAlphabet("pi requires offset 0");
    LatticeWord w = lattice_word(t);
    // Top-only values open blocks, both-row values extend the innermost
    // open block, bottom-only values close it, absent values are
    // singletons.
    std::vector<std::vector<int>> blocks;
    std::vector<std::size_t> open_stack;
    for (int v = 1; v <= t.q(); ++v) {
        const bool top = w.letter_contains(v, 1);
        const bool bottom = w.letter_contains(v, 2);
        if (!top && !bottom) {
            blocks.push_back({v});
        } else if (top && !bottom) {
            blocks.push_back({v});
            open_stack.push_back(blocks.size() - 1);
        } else {
            if (open_stack.empty()) throw NoValidPartition("no open block for value bound below");
            blocks[open_stack.back()].push_back(v);
            if (!top) open_stack.pop_back();
        }
    }
    if (!open_stack.empty()) throw NoValidPartition("unclosed block");
    return NoncrossingSetPartition::validate(t.q(), std::move(blocks));
}

IncreasingTableau pi_inverse(const NoncrossingSetPartition& p, int c) {
    if (p.block_count() != p.q() - c) {
        throw BlockCountMismatch("expected q-c = " + std::to_string(p.q() - c) + " blocks, got " +
                                 std::to_string(p.block_count()));
    }
    Grid grid(2);
    for (const auto& block : p.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block.size() == 1) continue;
            if (i + 1 < block.size()) grid[0].push_back(block[i]);  // non-maximum: top row
            if (i > 0) grid[1].push_back(block[i]);                 // non-minimum: bottom row
        }
    }
    std::sort(grid[0].begin(), grid[0].end());
    std::sort(grid[1].begin(), grid[1].end());
    IncreasingTableau t = [&] {
        try {
            return make_increasing(grid, p.q());
        } catch (const Error&) {
            throw NoValidPartition("partition does not describe a two-row tableau");
        }
    }();
    if (!(pi_bijection(t) == p)) {
        throw NoValidPartition("pi of the rebuilt tableau differs");
    }
    return t;
}

NoncrossingSetPartition rotate_partition(const NoncrossingSetPartition& p) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : p.blocks()) {
        std::vector<int> moved;
        for (int x : block) moved.push_back(x == 1 ? p.q() : x - 1);
        blocks.push_back(std::move(moved));
    }
    return NoncrossingSetPartition::validate(p.q(), std::move(blocks));
}

FirstBlockAnalysis first_block_analysis(const NoncrossingSetPartition& p) {
    const auto& b1 = p.block_of(1);
    if (b1.size() == 1) throw SingletonFirstBlock("1 is a singleton block");
    FirstBlockAnalysis out;
    out.balance = b1.back();
    out.teetering.assign(b1.begin() + 1, b1.end() - 1);
    return out;
}

PromotionDigraph blocks_to_complete_digraphs(const NoncrossingSetPartition& p) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& block : p.blocks()) {
        for (int a : block) {
            for (int b : block) {
                if (a != b) edges.push_back({a, b});
            }
        }
    }
    return PromotionDigraph(p.q(), 1, std::move(edges));
}

}  // namespace promdig
