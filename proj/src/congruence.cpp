#include "forklat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace forklat {

std::string CongruenceViolation::describe() const {
  auto s = [](Elem e) { return std::to_string(e); };
  switch (reason) {
    case Reason::ClassNotInterval:
      return "class of " + s(x) + " is not an interval";
    case Reason::JoinCondition:
      return s(x) + " covered by " + s(y) + " != " + s(z) + ", " + s(x)
             + " ≡ " + s(y) + " but " + s(z) + " ≢ " + s(y) + "∨" + s(z);
    case Reason::MeetCondition:
      return s(x) + " covers " + s(y) + " != " + s(z) + ", " + s(x) + " ≡ "
             + s(y) + " but " + s(z) + " ≢ " + s(y) + "∧" + s(z);
  }
  return {};
}

std::optional<CongruenceViolation> congruence_violation(Lattice const& lattice,
                                                        Partition const& p) {
  using R = CongruenceViolation::Reason;
  auto const n = static_cast<Elem>(lattice.size());
  if (p.size() != n) {
    return CongruenceViolation{R::ClassNotInterval, 0, 0, 0};
  }
  std::vector<Elem> lo(p.block_count(), n);
  std::vector<Elem> hi(p.block_count(), n);
  for (Elem e = 0; e < n; ++e) {
    Elem const b = p.block_of(e);
    lo[b] = lo[b] == n ? e : lattice.meet(lo[b], e);
    hi[b] = hi[b] == n ? e : lattice.join(hi[b], e);
  }
  for (Elem e = 0; e < n; ++e) {
    Elem const b = p.block_of(e);
    if (!p.same(lo[b], e) || !p.same(hi[b], e)) {
      return CongruenceViolation{R::ClassNotInterval, e, lo[b], hi[b]};
    }
  }
  // every element between the bounds of a class must belong to it
  for (Elem b = 0; b < p.block_count(); ++b) {
    if (lo[b] == hi[b]) {
      continue;
    }
    for (Elem e = lo[b]; e <= hi[b]; ++e) {
      if (lattice.leq(lo[b], e) && lattice.leq(e, hi[b])
          && p.block_of(e) != b) {
        return CongruenceViolation{R::ClassNotInterval, lo[b], e, hi[b]};
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    auto const up = lattice.upper_covers(x);
    for (Elem y : up) {
      if (!p.same(x, y)) {
        continue;
      }
      for (Elem z : up) {
        if (z != y && !p.same(z, lattice.join(y, z))) {
          return CongruenceViolation{R::JoinCondition, x, y, z};
        }
      }
    }
    auto const down = lattice.lower_covers(x);
    for (Elem y : down) {
      if (!p.same(x, y)) {
        continue;
      }
      for (Elem z : down) {
        if (z != y && !p.same(z, lattice.meet(y, z))) {
          return CongruenceViolation{R::MeetCondition, x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_congruence(Lattice const& lattice, Partition const& p) {
  return !congruence_violation(lattice, p).has_value();
}

namespace {

  // Closes the relation held by `uf` into a congruence.
  void close_congruence(Lattice const& lattice, UnionFind& uf) {
    auto const n = static_cast<Elem>(lattice.size());
    std::vector<Elem> lo(n);
    std::vector<Elem> hi(n);
    std::vector<std::uint8_t> big(n);
    bool changed = true;
    while (changed) {
      changed = false;

      // classes become intervals [∧ class, ∨ class]
      std::fill(big.begin(), big.end(), 0);
      for (Elem e = 0; e < n; ++e) {
        lo[e] = hi[e] = e;
      }
      for (Elem e = 0; e < n; ++e) {
        Elem const r = uf.find(e);
        if (r != e) {
          lo[r] = lattice.meet(lo[r], e);
          hi[r] = lattice.join(hi[r], e);
          big[r] = 1;
        }
      }
      for (Elem r = 0; r < n; ++r) {
        if (!big[r]) {
          continue;
        }
        for (Elem e = lo[r]; e <= hi[r]; ++e) {
          if (lattice.leq(lo[r], e) && lattice.leq(e, hi[r])) {
            changed |= uf.unite(r, e);
          }
        }
      }

      for (Elem x = 0; x < n; ++x) {
        auto const up = lattice.upper_covers(x);
        for (Elem y : up) {
          if (!uf.same(x, y)) {
            continue;
          }
          for (Elem z : up) {
            if (z != y) {
              changed |= uf.unite(z, lattice.join(y, z));
            }
          }
        }
        auto const down = lattice.lower_covers(x);
        for (Elem y : down) {
          if (!uf.same(x, y)) {
            continue;
          }
          for (Elem z : down) {
            if (z != y) {
              changed |= uf.unite(z, lattice.meet(y, z));
            }
          }
        }
      }
    }
  }

}  // namespace

Partition generated_congruence(Lattice const& lattice,
                               std::span<std::pair<Elem, Elem> const> pairs) {
  UnionFind uf(lattice.size());
  bool any = false;
  for (auto [a, b] : pairs) {
    any |= uf.unite(a, b);
  }
  if (any) {
    close_congruence(lattice, uf);
  }
  return uf.partition();
}

Partition principal_congruence_fixpoint(Lattice const& lattice, Elem a,
                                        Elem b) {
  std::pair<Elem, Elem> const pr{a, b};
  return generated_congruence(lattice, std::span(&pr, 1));
}

bool cpersp_up(Lattice const& lattice, Interval from, Interval to) {
  return lattice.leq(from.bottom, to.bottom)
         && to.top == lattice.join(from.top, to.bottom);
}

bool cpersp_dn(Lattice const& lattice, Interval from, Interval to) {
  return lattice.leq(to.top, from.top)
         && to.bottom == lattice.meet(from.bottom, to.top);
}

bool cpersp(Lattice const& lattice, Interval from, Interval to) {
  return cpersp_up(lattice, from, to) || cpersp_dn(lattice, from, to);
}

namespace {

  // Multi-source breadth-first search over intervals; visited[c * n + d].
  std::vector<std::uint8_t> cproj_search(Lattice const& lattice,
                                         std::span<Interval const> sources) {
    auto const n = static_cast<Elem>(lattice.size());
    std::vector<std::uint8_t> visited(std::size_t{n} * n, 0);
    std::deque<Interval> queue;
    auto push = [&](Interval iv) {
      auto& v = visited[std::size_t{iv.bottom} * n + iv.top];
      if (!v) {
        v = 1;
        queue.push_back(iv);
      }
    };
    for (auto iv : sources) {
      push(iv);
    }
    while (!queue.empty()) {
      auto const [a, b] = queue.front();
      queue.pop_front();
      for (Elem c = 0; c < n; ++c) {
        if (lattice.leq(a, c)) {
          push({c, lattice.join(b, c)});
        }
        if (lattice.leq(c, b)) {
          push({lattice.meet(a, c), c});
        }
      }
    }
    return visited;
  }

}  // namespace

std::vector<Interval> cproj_reachable(Lattice const& lattice, Interval from) {
  auto const n = static_cast<Elem>(lattice.size());
  auto const visited = cproj_search(lattice, std::span(&from, 1));
  std::vector<Interval> out;
  for (Elem c = 0; c < n; ++c) {
    for (Elem d = 0; d < n; ++d) {
      if (visited[std::size_t{c} * n + d]) {
        out.push_back({c, d});
      }
    }
  }
  return out;
}

bool cproj(Lattice const& lattice, Interval from, Interval to) {
  auto const n = lattice.size();
  auto const visited = cproj_search(lattice, std::span(&from, 1));
  return visited[std::size_t{to.bottom} * n + to.top] != 0;
}

Partition principal_congruence_projective(Lattice const& lattice, Elem a,
                                          Elem b) {
  auto const n = static_cast<Elem>(lattice.size());
  Elem const lo = lattice.meet(a, b);
  Elem const hi = lattice.join(a, b);
  std::vector<Interval> inside;
  for (auto const& p : lattice.prime_intervals()) {
    if (lattice.leq(lo, p.bottom) && lattice.leq(p.top, hi)) {
      inside.push_back(p);
    }
  }
  UnionFind uf(n);
  if (inside.empty()) {
    return uf.partition();
  }
  auto const visited = cproj_search(lattice, inside);
  for (Elem top = 0; top < n; ++top) {
    for (Elem c : lattice.lower_covers(top)) {
      if (visited[std::size_t{c} * n + top]) {
        uf.unite(c, top);
      }
    }
  }
  return uf.partition();
}

PrincipalTable principal_table_serial(Lattice const& lattice) {
  PrincipalTable t;
  t.primes = lattice.prime_intervals();
  t.congruences.reserve(t.primes.size());
  for (auto const& p : t.primes) {
    t.congruences.push_back(
        principal_congruence_fixpoint(lattice, p.bottom, p.top));
  }
  return t;
}

PrincipalTable principal_table(Lattice const& lattice) {
  PrincipalTable t;
  t.primes = lattice.prime_intervals();
  t.congruences.resize(t.primes.size());
  auto const count = static_cast<std::ptrdiff_t>(t.primes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto const& p = t.primes[static_cast<std::size_t>(k)];
    t.congruences[static_cast<std::size_t>(k)] =
        principal_congruence_fixpoint(lattice, p.bottom, p.top);
  }
  return t;
}

ConLattice ConLattice::compute(Lattice const& lattice, ConOptions const& opts) {
  using K = LatticeError::Kind;
  if (lattice.size() > opts.max_elements) {
    throw LatticeError(K::SizeBound,
                       "lattice has " + std::to_string(lattice.size())
                           + " elements, bound is "
                           + std::to_string(opts.max_elements));
  }
  auto table = opts.parallel ? principal_table(lattice)
                             : principal_table_serial(lattice);

  ConLattice C;
  C.primes_ = std::move(table.primes);

  // distinct principal congruences of prime intervals, finer first
  std::unordered_map<Partition, std::size_t, PartitionHash> seen;
  for (auto const& p : table.congruences) {
    if (seen.emplace(p, C.ji_.size()).second) {
      C.ji_.push_back(p);
    }
  }
  std::sort(C.ji_.begin(), C.ji_.end(), [](auto const& x, auto const& y) {
    if (x.block_count() != y.block_count()) {
      return x.block_count() > y.block_count();
    }
    return std::lexicographical_compare(x.labels().begin(), x.labels().end(),
                                        y.labels().begin(), y.labels().end());
  });
  if (C.ji_.size() > 64) {
    throw LatticeError(K::SizeBound,
                       std::to_string(C.ji_.size())
                           + " join-irreducible congruences exceed 64");
  }
  std::unordered_map<Partition, std::size_t, PartitionHash> ji_pos;
  for (std::size_t j = 0; j < C.ji_.size(); ++j) {
    ji_pos.emplace(C.ji_[j], j);
  }
  C.prime_ji_.reserve(C.primes_.size());
  for (auto const& p : table.congruences) {
    C.prime_ji_.push_back(ji_pos.at(p));
  }

  std::size_t const J = C.ji_.size();
  C.below_.assign(J, 0);
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t k = 0; k <= j; ++k) {
      if (C.ji_[k].refines(C.ji_[j])) {
        C.below_[j] |= std::uint64_t{1} << k;
      }
    }
  }

  // down-sets of the join-irreducible poset, breadth first
  C.members_.push_back(Partition::identity(lattice.size()));
  C.masks_.push_back(0);
  C.by_mask_.emplace(0, 0);
  for (std::size_t head = 0; head < C.masks_.size(); ++head) {
    std::uint64_t const m = C.masks_[head];
    for (std::size_t j = 0; j < J; ++j) {
      std::uint64_t const bit = std::uint64_t{1} << j;
      if ((m & bit) || (C.below_[j] & ~bit & ~m)) {
        continue;
      }
      std::uint64_t const next = m | bit;
      if (C.by_mask_.contains(next)) {
        continue;
      }
      if (C.masks_.size() >= opts.max_members) {
        throw LatticeError(K::SizeBound,
                           "congruence lattice exceeds "
                               + std::to_string(opts.max_members)
                               + " members");
      }
      C.by_mask_.emplace(next, C.masks_.size());
      C.masks_.push_back(next);
      C.members_.push_back(partition_join(C.members_[head], C.ji_[j]));
    }
  }
  for (std::size_t k = 0; k < C.members_.size(); ++k) {
    C.by_partition_.emplace(C.members_[k], k);
  }
  return C;
}

std::vector<std::size_t> ConLattice::join_irreducibles() const {
  std::vector<std::size_t> out;
  out.reserve(ji_.size());
  for (auto m : below_) {
    out.push_back(by_mask_.at(m));
  }
  return out;
}

std::optional<std::size_t> ConLattice::ji_index(Partition const& p) const {
  for (std::size_t j = 0; j < ji_.size(); ++j) {
    if (ji_[j] == p) {
      return j;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> ConLattice::index_of(Partition const& p) const {
  auto it = by_partition_.find(p);
  if (it == by_partition_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::size_t> ConLattice::index_of_mask(std::uint64_t m) const {
  auto it = by_mask_.find(m);
  if (it == by_mask_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>>
ConLattice::cover_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < masks_.size(); ++k) {
    for (std::size_t j = 0; j < ji_.size(); ++j) {
      std::uint64_t const bit = std::uint64_t{1} << j;
      if (masks_[k] & bit) {
        continue;
      }
      auto it = by_mask_.find(masks_[k] | bit);
      if (it != by_mask_.end()) {
        out.emplace_back(k, it->second);
      }
    }
  }
  return out;
}

std::size_t ConLattice::principal_of(Interval prime) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), prime);
  if (it == primes_.end() || *it != prime) {
    throw LatticeError(LatticeError::Kind::InvalidInput,
                       "not a prime interval");
  }
  return by_mask_.at(below_[prime_ji_[static_cast<std::size_t>(
      it - primes_.begin())]]);
}

Partition restrict(Partition const& p, std::span<Elem const> embedding) {
  std::vector<Elem> labels(embedding.size());
  for (std::size_t k = 0; k < embedding.size(); ++k) {
    labels[k] = p.block_of(embedding[k]);
  }
  return Partition::from_labels(labels);
}

Partition minimal_extension(std::span<Elem const> embedding,
                            Lattice const& extension, Partition const& alpha) {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> first(alpha.block_count(), 0);
  std::vector<std::uint8_t> seen(alpha.block_count(), 0);
  for (std::size_t k = 0; k < embedding.size(); ++k) {
    Elem const b = alpha.block_of(static_cast<Elem>(k));
    if (!seen[b]) {
      seen[b] = 1;
      first[b] = embedding[k];
    } else {
      pairs.emplace_back(first[b], embedding[k]);
    }
  }
  return generated_congruence(extension, pairs);
}

std::vector<Interval>
prime_condition_failures(Lattice const& sub, std::span<Elem const> embedding,
                         Lattice const& extension) {
  std::vector<std::uint8_t> in_sub(extension.size(), 0);
  for (Elem e : embedding) {
    in_sub[e] = 1;
  }
  std::unordered_map<Partition, int, PartitionHash> old_generated;
  for (auto const& q : sub.prime_intervals()) {
    old_generated.emplace(principal_congruence(extension, embedding[q.bottom],
                                               embedding[q.top]),
                          0);
  }
  std::vector<Interval> failures;
  for (auto const& p : extension.prime_intervals()) {
    if (in_sub[p.bottom] && in_sub[p.top]) {
      continue;
    }
    if (!old_generated.contains(
            principal_congruence(extension, p.bottom, p.top))) {
      failures.push_back(p);
    }
  }
  return failures;
}

}  // namespace forklat
