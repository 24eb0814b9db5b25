#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "promdig/errors.hpp"

namespace promdig {

/// Lattice word of a tableau on a canonical alphabet: letter j is the set
/// of rows containing the value j. Rows are 1-based; letters may be empty
/// for increasing tableaux. Letters are stored as bitmasks (bit r-1 = row r).
class LatticeWord {
  public:
    LatticeWord() = default;

    LatticeWord(int row_count, std::vector<std::uint32_t> letter_masks)
        : row_count_(row_count), letters_(std::move(letter_masks)) {
        if (row_count_ < 0 || row_count_ > 31) {
            throw InvalidShape("row count out of supported range");
        }
        const std::uint32_t bound = (row_count_ == 0) ? 0u : ((1u << row_count_) - 1u);
        for (std::uint32_t m : letters_) {
            if ((m & ~bound) != 0) throw NotLattice("letter mentions a row beyond row_count");
        }
    }

    static LatticeWord from_sets(int row_count, const std::vector<std::vector<int>>& letters) {
        std::vector<std::uint32_t> masks;
        masks.reserve(letters.size());
        for (const auto& letter : letters) {
            std::uint32_t m = 0;
            for (int row : letter) {
                if (row < 1 || row > row_count) {
                    throw NotLattice("letter mentions a row beyond row_count");
                }
                m |= 1u << (row - 1);
            }
            masks.push_back(m);
        }
        return LatticeWord(row_count, std::move(masks));
    }

    /// Parses a singleton word like "121121332" (rows 1..9 only).
    static LatticeWord from_digits(const std::string& digits) {
        std::vector<std::uint32_t> masks;
        int rows = 0;
        for (char c : digits) {
            if (c < '1' || c > '9') throw NotLattice("digit word must use 1..9");
            int row = c - '0';
            rows = std::max(rows, row);
            masks.push_back(1u << (row - 1));
        }
        return LatticeWord(rows, std::move(masks));
    }

    int row_count() const { return row_count_; }
    int length() const { return static_cast<int>(letters_.size()); }

    std::uint32_t mask(int pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }
    bool letter_contains(int pos, int row) const { return (mask(pos) >> (row - 1)) & 1u; }

    std::vector<int> letter(int pos) const {
        std::vector<int> rows;
        for (int r = 1; r <= row_count_; ++r) {
            if (letter_contains(pos, r)) rows.push_back(r);
        }
        return rows;
    }

    const std::vector<std::uint32_t>& masks() const { return letters_; }

    bool all_singletons() const {
        for (std::uint32_t m : letters_) {
            if (m == 0 || (m & (m - 1)) != 0) return false;
        }
        return true;
    }

    /// Prefix-count lattice property: at every prefix, row j occurs at
    /// least as often as row j+1.
    bool is_lattice() const {
        std::vector<int> count(static_cast<std::size_t>(row_count_) + 2, 0);
        for (std::uint32_t m : letters_) {
            for (int r = 1; r <= row_count_; ++r) {
                if ((m >> (r - 1)) & 1u) ++count[static_cast<std::size_t>(r)];
            }
            for (int r = 1; r < row_count_; ++r) {
                if (count[static_cast<std::size_t>(r)] < count[static_cast<std::size_t>(r) + 1]) {
                    return false;
                }
            }
        }
        return true;
    }

    bool operator==(const LatticeWord&) const = default;

  private:
    int row_count_ = 0;
    std::vector<std::uint32_t> letters_;
};

}  // namespace promdig
