#pragma once

#include <compare>

#include "promdig/errors.hpp"

namespace promdig {

/// A rotated total order on the symbols 1..size. The symbols themselves
/// never change; only their relative order rotates. With offset k the
/// order is k+1 < k+2 < ... < size < 1 < ... < k, so offset 0 is the
/// standard order. grow() realizes the alphabet rotation of gromotion.
class RotatedAlphabet {
  public:
    RotatedAlphabet() = default;

    RotatedAlphabet(int size, int offset = 0) : size_(size), offset_(offset) {
        if (size_ < 1) throw SymbolOutOfRange("alphabet size must be positive");
        if (offset_ < 0 || offset_ >= size_) {
            throw SymbolOutOfRange("alphabet offset must lie in [0, size)");
        }
    }

    int size() const { return size_; }
    int offset() const { return offset_; }
    bool is_canonical() const { return offset_ == 0; }

    bool contains(int symbol) const { return symbol >= 1 && symbol <= size_; }

    /// Position of a symbol in the rotated order, in [0, size).
    int rank(int symbol) const { return (symbol - 1 - offset_ + size_) % size_; }

    /// Symbol occupying a given position of the rotated order.
    int symbol_at_rank(int r) const { return (r + offset_) % size_ + 1; }

    int min_symbol() const { return symbol_at_rank(0); }
    int max_symbol() const { return symbol_at_rank(size_ - 1); }

    bool less(int a, int b) const { return rank(a) < rank(b); }

    RotatedAlphabet grown() const { return RotatedAlphabet(size_, (offset_ + 1) % size_); }

    auto operator<=>(const RotatedAlphabet&) const = default;

  private:
    int size_ = 1;
    int offset_ = 0;
};

}  // namespace promdig
