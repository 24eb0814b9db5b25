#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "promdig/errors.hpp"

namespace promdig {

/// An integer partition: weakly decreasing positive parts, read as box
/// counts per row of a Young diagram.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw InvalidShape("partition parts must be positive");
            }
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
                throw InvalidShape("partition parts must be weakly decreasing");
            }
        }
    }

    static Partition rectangle(int rows, int cols) {
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }

    const std::vector<int>& parts() const { return parts_; }

    /// Number of rows.
    int length() const { return static_cast<int>(parts_.size()); }

    /// Number of boxes.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_rectangular() const {
        for (int p : parts_) {
            if (p != parts_.front()) return false;
        }
        return true;
    }

    /// Row length, 1-based row index; 0 when the row does not exist.
    int row_length(int row) const {
        if (row < 1 || row > length()) return 0;
        return parts_[static_cast<std::size_t>(row - 1)];
    }

    /// Column length, 1-based column index.
    int column_length(int col) const {
        int len = 0;
        for (int p : parts_) {
            if (p >= col) ++len;
        }
        return len;
    }

    bool contains_box(int row, int col) const {
        return row >= 1 && col >= 1 && col <= row_length(row);
    }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

}  // namespace promdig
