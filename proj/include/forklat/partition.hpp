#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "forklat/lattice.hpp"

namespace forklat {

/// An equivalence relation on 0..n-1 in canonical form: blocks are numbered
/// in order of their least element, so equal relations compare equal.
class Partition {
 public:
  Partition() = default;

  static Partition identity(std::size_t n);
  static Partition full(std::size_t n);
  /// Any labelling; relabelled canonically.
  static Partition from_labels(std::span<Elem const> labels);
  static Partition from_blocks(std::size_t n,
                               std::vector<std::vector<Elem>> const& blocks);

  [[nodiscard]] std::size_t size() const noexcept { return block_of_.size(); }
  [[nodiscard]] std::size_t block_count() const noexcept { return count_; }
  [[nodiscard]] Elem block_of(Elem e) const noexcept { return block_of_[e]; }
  [[nodiscard]] bool same(Elem a, Elem b) const noexcept {
    return block_of_[a] == block_of_[b];
  }
  [[nodiscard]] std::span<Elem const> labels() const noexcept {
    return block_of_;
  }

  [[nodiscard]] std::vector<std::vector<Elem>> blocks() const;
  [[nodiscard]] std::vector<std::vector<Elem>> nontrivial_blocks() const;
  /// The block containing e, ascending.
  [[nodiscard]] std::vector<Elem> block(Elem e) const;

  [[nodiscard]] bool is_identity() const noexcept { return count_ == size(); }
  [[nodiscard]] bool is_full() const noexcept { return count_ <= 1; }

  /// Every block of *this lies inside a block of `coarser`.
  [[nodiscard]] bool refines(Partition const& coarser) const;

  friend bool operator==(Partition const& a, Partition const& b) {
    return a.block_of_ == b.block_of_;
  }

 private:
  std::vector<Elem> block_of_;
  std::size_t count_ = 0;
};

/// Equivalence join (transitive closure of the union).
Partition partition_join(Partition const& a, Partition const& b);
Partition partition_meet(Partition const& a, Partition const& b);

struct PartitionHash {
  std::size_t operator()(Partition const& p) const noexcept;
};

/// Disjoint-set forest over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  Elem find(Elem x);
  /// True when two different sets were merged.
  bool unite(Elem a, Elem b);
  bool same(Elem a, Elem b) { return find(a) == find(b); }
  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }

  [[nodiscard]] Partition partition();

 private:
  std::vector<Elem> parent_;
};

}  // namespace forklat
