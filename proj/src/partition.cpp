#include "forklat/partition.hpp"

#include <numeric>
#include <string>

namespace forklat {

Partition Partition::identity(std::size_t n) {
  Partition p;
  p.block_of_.resize(n);
  std::iota(p.block_of_.begin(), p.block_of_.end(), Elem{0});
  p.count_ = n;
  return p;
}

Partition Partition::full(std::size_t n) {
  Partition p;
  p.block_of_.assign(n, 0);
  p.count_ = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_labels(std::span<Elem const> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::vector<Elem> relabel;
  std::vector<std::uint8_t> seen;
  for (std::size_t e = 0; e < labels.size(); ++e) {
    Elem const l = labels[e];
    if (l >= seen.size()) {
      seen.resize(l + 1, 0);
      relabel.resize(l + 1, 0);
    }
    if (!seen[l]) {
      seen[l] = 1;
      relabel[l] = static_cast<Elem>(p.count_++);
    }
    p.block_of_[e] = relabel[l];
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n,
                                 std::vector<std::vector<Elem>> const& blocks) {
  UnionFind uf(n);
  for (auto const& b : blocks) {
    for (Elem e : b) {
      if (e >= n) {
        throw LatticeError(LatticeError::Kind::InvalidInput,
                           "block element " + std::to_string(e)
                               + " out of range");
      }
      uf.unite(b.front(), e);
    }
  }
  return uf.partition();
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(count_);
  for (std::size_t e = 0; e < size(); ++e) {
    out[block_of_[e]].push_back(static_cast<Elem>(e));
  }
  return out;
}

std::vector<std::vector<Elem>> Partition::nontrivial_blocks() const {
  std::vector<std::vector<Elem>> out;
  for (auto& b : blocks()) {
    if (b.size() > 1) {
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Elem> Partition::block(Elem e) const {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (block_of_[x] == block_of_[e]) {
      out.push_back(static_cast<Elem>(x));
    }
  }
  return out;
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.size() != size()) {
    return false;
  }
  // canonical labels: the first element of every block is seen first
  std::vector<Elem> image(count_, 0);
  std::vector<std::uint8_t> seen(count_, 0);
  for (std::size_t e = 0; e < size(); ++e) {
    Elem const b = block_of_[e];
    if (!seen[b]) {
      seen[b] = 1;
      image[b] = coarser.block_of_[e];
    } else if (image[b] != coarser.block_of_[e]) {
      return false;
    }
  }
  return true;
}

Partition partition_join(Partition const& a, Partition const& b) {
  UnionFind uf(a.size());
  std::vector<Elem> first_a(a.block_count(), 0);
  std::vector<Elem> first_b(b.block_count(), 0);
  std::vector<std::uint8_t> sa(a.block_count(), 0);
  std::vector<std::uint8_t> sb(b.block_count(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto const e = static_cast<Elem>(i);
    Elem const ba = a.block_of(e);
    Elem const bb = b.block_of(e);
    if (!sa[ba]) {
      sa[ba] = 1;
      first_a[ba] = e;
    } else {
      uf.unite(first_a[ba], e);
    }
    if (!sb[bb]) {
      sb[bb] = 1;
      first_b[bb] = e;
    } else {
      uf.unite(first_b[bb], e);
    }
  }
  return uf.partition();
}

Partition partition_meet(Partition const& a, Partition const& b) {
  std::vector<Elem> labels(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    auto const x = static_cast<Elem>(e);
    labels[e] = static_cast<Elem>(a.block_of(x) * b.block_count()
                                  + b.block_of(x));
  }
  return Partition::from_labels(labels);
}

std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Elem l : p.labels()) {
    h = (h ^ l) * 1099511628211ULL;
  }
  return h;
}

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem UnionFind::find(Elem x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Elem a, Elem b) {
  a = find(a);
  b = find(b);
  if (a == b) {
    return false;
  }
  if (a < b) {
    parent_[b] = a;
  } else {
    parent_[a] = b;
  }
  return true;
}

Partition UnionFind::partition() {
  std::vector<Elem> labels(parent_.size());
  for (std::size_t e = 0; e < parent_.size(); ++e) {
    labels[e] = find(static_cast<Elem>(e));
  }
  return Partition::from_labels(labels);
}

}  // namespace forklat
