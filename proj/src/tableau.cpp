#include "promdig/tableau.hpp"

#include <algorithm>
#include <string>

namespace promdig {

namespace {

std::string box_str(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

void check_grid_shape(const Partition& shape, const Grid& grid) {
    if (static_cast<int>(grid.size()) != shape.length()) {
        throw ShapeMismatch("grid has " + std::to_string(grid.size()) + " rows, shape has " +
                            std::to_string(shape.length()));
    }
    for (int r = 1; r <= shape.length(); ++r) {
        const auto& row = grid[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) != shape.row_length(r)) {
            throw ShapeMismatch("row " + std::to_string(r) + " has " +
                                std::to_string(row.size()) + " boxes, shape wants " +
                                std::to_string(shape.row_length(r)));
        }
    }
}

void check_strict_increase(const Partition& shape, const Grid& grid,
                           const RotatedAlphabet& alphabet) {
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape.row_length(r); ++c) {
            int v = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
            if (!alphabet.contains(v)) {
                throw SymbolOutOfRange("entry " + std::to_string(v) + " at " + box_str(r, c) +
                                       " outside [1," + std::to_string(alphabet.size()) + "]");
            }
            if (c > 1) {
                int left = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)];
                if (!alphabet.less(left, v)) {
                    throw RowNotIncreasing("row not strictly increasing at " + box_str(r, c));
                }
            }
            if (r > 1 && shape.contains_box(r - 1, c)) {
                int up = grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)];
                if (!alphabet.less(up, v)) {
                    throw ColumnNotIncreasing("column not strictly increasing at " + box_str(r, c));
                }
            }
        }
    }
}

Grid relabel_to_canonical(const Grid& grid, const RotatedAlphabet& alphabet) {
    Grid out = grid;
    for (auto& row : out) {
        for (int& v : row) v = alphabet.rank(v) + 1;
    }
    return out;
}

}  // namespace

StandardTableau validate_standard(const Partition& shape, const Grid& grid,
                                  const RotatedAlphabet& alphabet) {
    check_grid_shape(shape, grid);
    if (alphabet.size() != shape.size()) {
        throw ShapeMismatch("standard tableau needs an alphabet of size |shape|");
    }
    std::vector<char> seen(static_cast<std::size_t>(shape.size()) + 1, 0);
    for (const auto& row : grid) {
        for (int v : row) {
            if (v < 1 || v > shape.size()) {
                throw SymbolOutOfRange("entry " + std::to_string(v) + " outside [1,n]");
            }
            if (seen[static_cast<std::size_t>(v)]++) {
                throw NotBijective("entry " + std::to_string(v) + " repeated");
            }
        }
    }
    check_strict_increase(shape, grid, alphabet);
    return StandardTableau(shape, grid, alphabet);
}

IncreasingTableau validate_increasing(const Partition& shape, const Grid& grid,
                                      const RotatedAlphabet& alphabet) {
    check_grid_shape(shape, grid);
    check_strict_increase(shape, grid, alphabet);
    return IncreasingTableau(shape, grid, alphabet);
}

StandardTableau make_standard(const Grid& grid) {
    int n = 0;
    std::vector<int> parts;
    for (const auto& row : grid) {
        parts.push_back(static_cast<int>(row.size()));
        n += static_cast<int>(row.size());
    }
    return validate_standard(Partition(parts), grid, RotatedAlphabet(n));
}

IncreasingTableau make_increasing(const Grid& grid, int q) {
    std::vector<int> parts;
    for (const auto& row : grid) parts.push_back(static_cast<int>(row.size()));
    return validate_increasing(Partition(parts), grid, RotatedAlphabet(q));
}

StandardTableau canonicalize(const StandardTableau& t) {
    if (t.alphabet().is_canonical()) return t;
    return validate_standard(t.shape(), relabel_to_canonical(t.rows(), t.alphabet()),
                             RotatedAlphabet(t.alphabet().size()));
}

IncreasingTableau canonicalize(const IncreasingTableau& t) {
    if (t.alphabet().is_canonical()) return t;
    return validate_increasing(t.shape(), relabel_to_canonical(t.rows(), t.alphabet()),
                               RotatedAlphabet(t.alphabet().size()));
}

namespace {

LatticeWord lattice_word_of_grid(const Grid& grid, int q, const RotatedAlphabet& alphabet) {
    if (!alphabet.is_canonical()) {
        throw NonCanonicalAlphabet("lattice words require alphabet offset 0");
    }
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(q), 0);
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (int v : grid[r]) {
            masks[static_cast<std::size_t>(v - 1)] |= 1u << r;
        }
    }
    return LatticeWord(static_cast<int>(grid.size()), std::move(masks));
}

}  // namespace

LatticeWord lattice_word(const StandardTableau& t) {
    return lattice_word_of_grid(t.rows(), t.size(), t.alphabet());
}

LatticeWord lattice_word(const IncreasingTableau& t) {
    return lattice_word_of_grid(t.rows(), t.q(), t.alphabet());
}

namespace {

// Shared inverse: letter j lists the rows receiving value j. Realizable as
// a tableau exactly when every occurrence of row i+1 is preceded by
// strictly more i's than i+1's (this sharpens the lattice property to give
// strict column increase).
Grid grid_from_lattice_word(const LatticeWord& w) {
    const int rows = w.row_count();
    std::vector<int> count(static_cast<std::size_t>(rows) + 1, 0);
    Grid grid(static_cast<std::size_t>(rows));
    for (int pos = 1; pos <= w.length(); ++pos) {
        for (int r = 1; r <= rows; ++r) {
            if (!w.letter_contains(pos, r)) continue;
            if (r > 1 && count[static_cast<std::size_t>(r - 1)] <= count[static_cast<std::size_t>(r)]) {
                throw NotLattice("row " + std::to_string(r) + " occurs too early at position " +
                                 std::to_string(pos));
            }
        }
        for (int r = 1; r <= rows; ++r) {
            if (w.letter_contains(pos, r)) {
                ++count[static_cast<std::size_t>(r)];
                grid[static_cast<std::size_t>(r - 1)].push_back(pos);
            }
        }
    }
    for (std::size_t r = 0; r + 1 < grid.size(); ++r) {
        if (grid[r].size() < grid[r + 1].size()) {
            throw InvalidShape("row lengths not weakly decreasing");
        }
    }
    while (!grid.empty() && grid.back().empty()) grid.pop_back();
    if (grid.empty()) throw InvalidShape("empty tableau");
    return grid;
}

}  // namespace

StandardTableau standard_from_lattice_word(const LatticeWord& w) {
    if (!w.all_singletons()) {
        throw NotLattice("standard lattice words must have singleton letters");
    }
    return make_standard(grid_from_lattice_word(w));
}

IncreasingTableau increasing_from_lattice_word(const LatticeWord& w) {
    return make_increasing(grid_from_lattice_word(w), w.length());
}

bool is_packed(const IncreasingTableau& t) {
    std::vector<char> seen(static_cast<std::size_t>(t.q()) + 1, 0);
    for (const auto& row : t.rows()) {
        for (int v : row) seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= t.q(); ++v) {
        if (!seen[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

IncreasingTableau as_increasing(const StandardTableau& t) {
    return validate_increasing(t.shape(), t.rows(), t.alphabet());
}

}  // namespace promdig
