#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace forklat {

// Fixed-width bit vector over 0..n-1.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  [[nodiscard]] bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  void assign_and(BitRow const& a, BitRow const& b) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] = a.words_[w] & b.words_[w];
    }
  }
  void or_with(BitRow const& a) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= a.words_[w];
    }
  }
  [[nodiscard]] bool contains(BitRow const& a) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((a.words_[w] & ~words_[w]) != 0) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::optional<std::size_t> first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return std::nullopt;
  }
  [[nodiscard]] std::optional<std::size_t> last() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) {
        return w * 64 + 63
               - static_cast<std::size_t>(std::countl_zero(words_[w]));
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Square bit matrix, one BitRow per row.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : rows_(n, BitRow(n)) {}

  void set(std::size_t r, std::size_t c) { rows_[r].set(c); }
  [[nodiscard]] bool test(std::size_t r, std::size_t c) const {
    return rows_[r].test(c);
  }
  void row_or(std::size_t r, std::size_t src) { rows_[r].or_with(rows_[src]); }
  [[nodiscard]] BitRow const& row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] bool row_contains(std::size_t r, BitRow const& a) const {
    return rows_[r].contains(a);
  }

  [[nodiscard]] BitMatrix transposed() const {
    BitMatrix t(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_.size(); ++c) {
        if (test(r, c)) {
          t.set(c, r);
        }
      }
    }
    return t;
  }

 private:
  std::vector<BitRow> rows_;
};

}  // namespace forklat
