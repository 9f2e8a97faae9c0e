#pragma once
// Brute-force reference implementations. They only look at the cover pairs
// of a lattice and recompute everything else the slow way.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "forklat/generator.hpp"
#include "forklat/lattice.hpp"
#include "forklat/partition.hpp"

namespace oracle {

using forklat::Elem;
using forklat::Lattice;

struct Order {
  std::size_t n = 0;
  std::vector<std::vector<char>> le;
  std::vector<std::vector<Elem>> meet, join;
  std::vector<std::vector<char>> cov;

  explicit Order(Lattice const& L) : n(L.size()) {
    le.assign(n, std::vector<char>(n, 0));
    cov.assign(n, std::vector<char>(n, 0));
    for (Elem e = 0; e < n; ++e) {
      le[e][e] = 1;
      for (Elem c : L.lower_covers(e)) {
        le[c][e] = 1;
        cov[c][e] = 1;
      }
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if (le[a][k])
          for (std::size_t b = 0; b < n; ++b)
            if (le[k][b]) le[a][b] = 1;
    meet.assign(n, std::vector<Elem>(n));
    join.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        // greatest lower bound by scanning every candidate
        Elem m = 0, j = static_cast<Elem>(n - 1);
        for (Elem c = 0; c < n; ++c) {
          if (le[c][a] && le[c][b] && le[m][c]) m = c;
          if (le[a][c] && le[b][c] && le[c][j]) j = c;
        }
        meet[a][b] = m;
        join[a][b] = j;
      }
    }
  }
};

// Substitution property checked for every pair and every third element.
inline bool is_congruence(Order const& o, std::vector<Elem> const& lab) {
  for (Elem a = 0; a < o.n; ++a)
    for (Elem b = a + 1; b < o.n; ++b) {
      if (lab[a] != lab[b]) continue;
      for (Elem c = 0; c < o.n; ++c)
        if (lab[o.meet[a][c]] != lab[o.meet[b][c]]
            || lab[o.join[a][c]] != lab[o.join[b][c]])
          return false;
    }
  return true;
}

// Restricted growth strings: every set partition of 0..n-1 once.
inline void each_partition(std::size_t n,
                           std::function<void(std::vector<Elem> const&)> const& f) {
  std::vector<Elem> rgs(n, 0);
  std::function<void(std::size_t, Elem)> rec = [&](std::size_t k, Elem mx) {
    if (k == n) {
      f(rgs);
      return;
    }
    for (Elem c = 0; c <= mx + 1; ++c) {
      rgs[k] = c;
      rec(k + 1, std::max(mx, c));
    }
  };
  if (n == 0) return;
  rec(1, 0);
}

inline std::vector<forklat::Partition> congruences(Lattice const& L) {
  Order o(L);
  std::vector<forklat::Partition> out;
  each_partition(L.size(), [&](std::vector<Elem> const& lab) {
    if (is_congruence(o, lab)) out.push_back(forklat::Partition::from_labels(lab));
  });
  return out;
}

// con(a, b): intersection of all congruences that identify a and b.
inline forklat::Partition principal(std::vector<forklat::Partition> const& all,
                                    std::size_t n, Elem a, Elem b) {
  auto best = forklat::Partition::full(n);
  for (auto const& p : all)
    if (p.same(a, b)) best = forklat::partition_meet(best, p);
  return best;
}

// Two-phase search for an extension of alpha: new elements either join an
// old class or open their own.
inline bool extends(Order const& big, std::vector<Elem> const& embedding,
                    forklat::Partition const& alpha) {
  std::vector<Elem> lab(big.n, static_cast<Elem>(-1));
  std::vector<char> old(big.n, 0);
  for (Elem a = 0; a < embedding.size(); ++a) {
    lab[embedding[a]] = alpha.block_of(a);
    old[embedding[a]] = 1;
  }
  std::vector<Elem> fresh;
  for (Elem e = 0; e < big.n; ++e)
    if (!old[e]) fresh.push_back(e);
  Elem const labels = static_cast<Elem>(alpha.block_count() + fresh.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == fresh.size()) return is_congruence(big, lab);
    for (Elem c = 0; c < labels; ++c) {
      lab[fresh[k]] = c;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Seeded generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(rng() % k); }
  forklat::Generated lattice(std::size_t cap = 30) {
    forklat::GeneratorParams p;
    p.max_base = 2 + below(3);
    p.forks = below(5);
    p.size_cap = cap;
    return forklat::random_sps(rng(), p);
  }
};

}  // namespace oracle
