#pragma once

#include <vector>

#include "promdig/alphabet.hpp"
#include "promdig/errors.hpp"
#include "promdig/lattice_word.hpp"
#include "promdig/partition.hpp"

namespace promdig {

using Grid = std::vector<std::vector<int>>;

/// A bijective filling of a Young diagram, strictly increasing along rows
/// and columns under the alphabet's rotated order.
class StandardTableau {
  public:
    const Partition& shape() const { return shape_; }
    const RotatedAlphabet& alphabet() const { return alphabet_; }
    const Grid& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    /// Entry at 1-based (row, col).
    int at(int row, int col) const {
        return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }

    bool operator==(const StandardTableau&) const = default;

  private:
    friend StandardTableau validate_standard(const Partition&, const Grid&,
                                             const RotatedAlphabet&);
    StandardTableau(Partition shape, Grid rows, RotatedAlphabet alphabet)
        : shape_(std::move(shape)), rows_(std::move(rows)), alphabet_(alphabet) {}

    Partition shape_;
    Grid rows_;
    RotatedAlphabet alphabet_;
};

/// A filling of a Young diagram with symbols from [q], strictly increasing
/// along rows and columns under the alphabet's rotated order. Values may
/// repeat across the tableau and need not exhaust [q].
class IncreasingTableau {
  public:
    const Partition& shape() const { return shape_; }
    const RotatedAlphabet& alphabet() const { return alphabet_; }
    const Grid& rows() const { return rows_; }
    int q() const { return alphabet_.size(); }

    int at(int row, int col) const {
        return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }

    bool operator==(const IncreasingTableau&) const = default;

  private:
    friend IncreasingTableau validate_increasing(const Partition&, const Grid&,
                                                 const RotatedAlphabet&);
    IncreasingTableau(Partition shape, Grid rows, RotatedAlphabet alphabet)
        : shape_(std::move(shape)), rows_(std::move(rows)), alphabet_(alphabet) {}

    Partition shape_;
    Grid rows_;
    RotatedAlphabet alphabet_;
};

StandardTableau validate_standard(const Partition& shape, const Grid& grid,
                                  const RotatedAlphabet& alphabet);
IncreasingTableau validate_increasing(const Partition& shape, const Grid& grid,
                                      const RotatedAlphabet& alphabet);

/// Convenience constructors on the canonical alphabet (offset 0).
StandardTableau make_standard(const Grid& grid);
IncreasingTableau make_increasing(const Grid& grid, int q);

/// Relabel so the alphabet offset becomes 0 (symbol s -> rank(s)+1).
StandardTableau canonicalize(const StandardTableau& t);
IncreasingTableau canonicalize(const IncreasingTableau& t);

/// Lattice words require the canonical alphabet.
LatticeWord lattice_word(const StandardTableau& t);
LatticeWord lattice_word(const IncreasingTableau& t);

StandardTableau standard_from_lattice_word(const LatticeWord& w);
IncreasingTableau increasing_from_lattice_word(const LatticeWord& w);

bool is_packed(const IncreasingTableau& t);

/// Reinterpret a standard tableau as an increasing tableau on the same
/// alphabet (every standard tableau is increasing).
IncreasingTableau as_increasing(const StandardTableau& t);

}  // namespace promdig
