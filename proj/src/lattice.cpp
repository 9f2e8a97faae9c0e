#include "forklat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>

#include "bitrow.hpp"

namespace forklat {

char const* to_string(LatticeError::Kind kind) noexcept {
  using K = LatticeError::Kind;
  switch (kind) {
    case K::NotALattice: return "NotALattice";
    case K::NotTransitiveReduction: return "NotTransitiveReduction";
    case K::InconsistentLeftOrder: return "InconsistentLeftOrder";
    case K::InvalidInput: return "InvalidInput";
    case K::NotSPS: return "NotSPS";
    case K::NotACoveringSquare: return "NotACoveringSquare";
    case K::SizeBound: return "SizeBound";
    case K::ClassClash: return "ClassClash";
    case K::Unsatisfiable: return "Unsatisfiable";
    case K::InvalidStep: return "InvalidStep";
  }
  return "Unknown";
}

namespace {

  [[noreturn]] void fail(LatticeError::Kind kind, std::string const& msg) {
    throw LatticeError(kind, msg);
  }

  // Post-order of a depth-first search from the top, visiting lower covers in
  // the given direction. Every element is emitted after everything below it.
  std::vector<std::size_t>
  dfs_rank(std::vector<std::vector<Elem>> const& down, bool left_first) {
    std::size_t const n = down.size();
    std::vector<std::size_t> rank(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    std::size_t next = 0;
    // iterative: (element, next child position)
    std::vector<std::pair<Elem, std::size_t>> stack;
    stack.emplace_back(static_cast<Elem>(n - 1), 0);
    seen[n - 1] = 1;
    while (!stack.empty()) {
      auto& [e, pos] = stack.back();
      auto const& kids = down[e];
      if (pos < kids.size()) {
        Elem c = left_first ? kids[pos] : kids[kids.size() - 1 - pos];
        ++pos;
        if (!seen[c]) {
          seen[c] = 1;
          stack.emplace_back(c, 0);
        }
      } else {
        rank[e] = next++;
        stack.pop_back();
      }
    }
    return rank;
  }

}  // namespace

Lattice Lattice::from_lower_covers(std::size_t n,
                                   std::vector<std::vector<Elem>> lower) {
  using K = LatticeError::Kind;
  if (n == 0) {
    fail(K::InvalidInput, "a lattice needs at least one element");
  }
  if (lower.size() != n) {
    fail(K::InvalidInput, "lower cover table has wrong length");
  }
  for (std::size_t e = 0; e < n; ++e) {
    auto const& lc = lower[e];
    for (Elem c : lc) {
      if (c >= e) {
        fail(K::InvalidInput, "cover (" + std::to_string(c) + ","
                                  + std::to_string(e)
                                  + ") does not respect the element indexing");
      }
    }
    auto sorted = lc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(K::InvalidInput, "duplicate cover below " + std::to_string(e));
    }
  }

  Lattice L;
  L.n_ = n;
  L.down_ = std::move(lower);

  // down-sets, then transitive reduction check
  BitMatrix downset(n);
  for (std::size_t e = 0; e < n; ++e) {
    downset.set(e, e);
    for (Elem c : L.down_[e]) {
      downset.row_or(e, c);
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    for (Elem c : L.down_[e]) {
      for (Elem d : L.down_[e]) {
        if (c != d && downset.test(d, c)) {
          fail(K::NotTransitiveReduction,
               "cover (" + std::to_string(c) + "," + std::to_string(e)
                   + ") is implied through " + std::to_string(d));
        }
      }
    }
  }
  BitMatrix upset = downset.transposed();

  L.meet_.assign(n * n, 0);
  L.join_.assign(n * n, 0);
  BitRow scratch(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      // least upper bound: smallest index among common upper bounds
      scratch.assign_and(upset.row(a), upset.row(b));
      auto lub = scratch.first();
      if (!lub || !upset.row_contains(*lub, scratch)) {
        fail(K::NotALattice, std::to_string(a) + " and " + std::to_string(b)
                                 + " have no least upper bound");
      }
      scratch.assign_and(downset.row(a), downset.row(b));
      auto glb = scratch.last();
      if (!glb || !downset.row_contains(*glb, scratch)) {
        fail(K::NotALattice, std::to_string(a) + " and " + std::to_string(b)
                                 + " have no greatest lower bound");
      }
      L.join_[a * n + b] = L.join_[b * n + a] = static_cast<Elem>(*lub);
      L.meet_[a * n + b] = L.meet_[b * n + a] = static_cast<Elem>(*glb);
    }
  }

  L.cover_.assign(n * n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    for (Elem c : L.down_[e]) {
      L.cover_[c * n + e] = 1;
    }
  }

  L.left_rank_ = dfs_rank(L.down_, true);
  auto const right_rank = dfs_rank(L.down_, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool const dominated = L.left_rank_[a] <= L.left_rank_[b]
                             && right_rank[a] <= right_rank[b];
      if (dominated != L.leq(static_cast<Elem>(a), static_cast<Elem>(b))) {
        fail(K::InconsistentLeftOrder,
             "lower cover orders do not describe a planar diagram (elements "
                 + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }

  L.up_.assign(n, {});
  for (std::size_t e = 0; e < n; ++e) {
    for (Elem c : L.down_[e]) {
      L.up_[c].push_back(static_cast<Elem>(e));
    }
  }
  for (auto& uc : L.up_) {
    std::sort(uc.begin(), uc.end(), [&L](Elem x, Elem y) {
      return L.left_rank_[x] < L.left_rank_[y];
    });
  }
  return L;
}

Lattice Lattice::build(std::size_t n,
                       std::vector<std::pair<Elem, Elem>> const& covers,
                       std::vector<std::vector<Elem>> const& left_order) {
  using K = LatticeError::Kind;
  std::vector<std::vector<Elem>> lower(n);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      fail(K::InvalidInput, "cover pair out of range");
    }
    lower[hi].push_back(lo);
  }
  if (!left_order.empty()) {
    if (left_order.size() != n) {
      fail(K::InconsistentLeftOrder, "left_order must list every element");
    }
    for (std::size_t e = 0; e < n; ++e) {
      auto a = lower[e];
      auto b = left_order[e];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        fail(K::InconsistentLeftOrder,
             "left_order of " + std::to_string(e)
                 + " is not a permutation of its lower covers");
      }
      lower[e] = left_order[e];
    }
  }
  return from_lower_covers(n, std::move(lower));
}

std::vector<Interval> Lattice::prime_intervals() const {
  std::vector<Interval> out;
  for (std::size_t e = 0; e < n_; ++e) {
    for (Elem c : down_[e]) {
      out.push_back({c, static_cast<Elem>(e)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Lattice::cover_count() const noexcept {
  std::size_t k = 0;
  for (auto const& d : down_) {
    k += d.size();
  }
  return k;
}

Lattice Lattice::reflected() const {
  auto lower = down_;
  for (auto& lc : lower) {
    std::reverse(lc.begin(), lc.end());
  }
  return from_lower_covers(n_, std::move(lower));
}

std::vector<Elem> Lattice::interval_elements(Elem lo, Elem hi) const {
  std::vector<Elem> out;
  for (Elem e = lo; e <= hi && e < n_; ++e) {
    if (leq(lo, e) && leq(e, hi)) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_semimodular(Lattice const& lattice) {
  auto const n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (lattice.covers(lattice.meet(a, b), a)
          && !lattice.covers(b, lattice.join(a, b))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Elem> join_irreducibles(Lattice const& lattice) {
  std::vector<Elem> out;
  for (Elem e = 0; e < lattice.size(); ++e) {
    if (lattice.lower_covers(e).size() == 1) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_slim(Lattice const& lattice) {
  auto const ji = join_irreducibles(lattice);
  for (std::size_t x = 0; x < ji.size(); ++x) {
    for (std::size_t y = x + 1; y < ji.size(); ++y) {
      if (lattice.comparable(ji[x], ji[y])) {
        continue;
      }
      for (std::size_t z = y + 1; z < ji.size(); ++z) {
        if (!lattice.comparable(ji[x], ji[z])
            && !lattice.comparable(ji[y], ji[z])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_sps(Lattice const& lattice) {
  return is_slim(lattice) && is_semimodular(lattice);
}

bool is_distributive_interval(Lattice const& lattice, Interval iv) {
  auto const el = lattice.interval_elements(iv.bottom, iv.top);
  for (Elem x : el) {
    for (Elem y : el) {
      for (Elem z : el) {
        if (lattice.meet(x, lattice.join(y, z))
            != lattice.join(lattice.meet(x, y), lattice.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_covering_square(Lattice const& lattice, CoveringSquare const& s) {
  auto const n = lattice.size();
  if (s.o >= n || s.a_l >= n || s.a_r >= n || s.i >= n || s.a_l == s.a_r) {
    return false;
  }
  return lattice.covers(s.o, s.a_l) && lattice.covers(s.o, s.a_r)
         && lattice.covers(s.a_l, s.i) && lattice.covers(s.a_r, s.i)
         && lattice.left_of(s.a_l, s.a_r);
}

std::vector<CoveringSquare> covering_squares(Lattice const& lattice) {
  std::vector<CoveringSquare> out;
  for (Elem o = 0; o < lattice.size(); ++o) {
    auto const uc = lattice.upper_covers(o);
    for (std::size_t x = 0; x < uc.size(); ++x) {
      for (std::size_t y = x + 1; y < uc.size(); ++y) {
        Elem const i = lattice.join(uc[x], uc[y]);
        if (lattice.covers(uc[x], i) && lattice.covers(uc[y], i)) {
          out.push_back({o, uc[x], uc[y], i});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](auto const& p, auto const& q) {
    return std::tie(p.i, p.o, p.a_l) < std::tie(q.i, q.o, q.a_l);
  });
  return out;
}

std::vector<Elem> generated_sublattice(Lattice const& lattice,
                                       std::span<Elem const> generators) {
  std::vector<std::uint8_t> in(lattice.size(), 0);
  std::vector<Elem> members;
  for (Elem g : generators) {
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      for (Elem r : {lattice.meet(members[x], members[y]),
                     lattice.join(members[x], members[y])}) {
        if (!in[r]) {
          in[r] = 1;
          members.push_back(r);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<S7Sublattice> s7_sublattices(Lattice const& lattice) {
  std::vector<S7Sublattice> out;
  auto const s7_shape = s7();
  for (Elem i = 0; i < lattice.size(); ++i) {
    auto const lc = lattice.lower_covers(i);
    for (std::size_t p = 0; p < lc.size(); ++p) {
      for (std::size_t q = p + 1; q < lc.size(); ++q) {
        for (std::size_t r = q + 1; r < lc.size(); ++r) {
          S7Sublattice a{};
          a.i = i;
          a.a_l = lc[p];
          a.t = lc[q];
          a.a_r = lc[r];
          a.z_l = lattice.meet(a.a_l, a.t);
          a.z_r = lattice.meet(a.t, a.a_r);
          a.o = lattice.meet(a.a_l, a.a_r);
          bool const cover_preserving =
              lattice.covers(a.z_l, a.a_l) && lattice.covers(a.z_l, a.t)
              && lattice.covers(a.z_r, a.t) && lattice.covers(a.z_r, a.a_r)
              && lattice.covers(a.o, a.z_l) && lattice.covers(a.o, a.z_r);
          if (!cover_preserving) {
            continue;
          }
          auto const el = a.elements();
          auto const closure = generated_sublattice(lattice, el);
          if (closure.size() == 7 && isomorphic_to(lattice, el, s7_shape)) {
            out.push_back(a);
          }
        }
      }
    }
  }
  for (auto& a : out) {
    a.minimal = std::none_of(out.begin(), out.end(), [&](auto const& b) {
      return lattice.less(b.i, a.i);
    });
    a.unique_minimal = std::none_of(out.begin(), out.end(), [&](auto const& b) {
      return &b != &a && lattice.leq(b.i, a.i);
    });
  }
  return out;
}

namespace {

  // Hasse diagram of a subset under the induced order.
  std::vector<std::vector<std::size_t>>
  induced_lower_covers(Lattice const& lattice, std::span<Elem const> subset) {
    std::vector<Elem> el(subset.begin(), subset.end());
    std::sort(el.begin(), el.end());
    std::size_t const k = el.size();
    std::vector<std::vector<std::size_t>> lower(k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < x; ++y) {
        if (!lattice.less(el[y], el[x])) {
          continue;
        }
        bool direct = true;
        for (std::size_t z = y + 1; z < x && direct; ++z) {
          direct = !(lattice.less(el[y], el[z]) && lattice.less(el[z], el[x]));
        }
        if (direct) {
          lower[x].push_back(y);
        }
      }
    }
    return lower;
  }

  bool hasse_isomorphic(std::vector<std::vector<std::size_t>> const& a,
                        std::vector<std::vector<std::size_t>> const& b) {
    std::size_t const k = a.size();
    if (b.size() != k) {
      return false;
    }
    auto upcount = [](auto const& low) {
      std::vector<std::size_t> up(low.size(), 0);
      for (auto const& lc : low) {
        for (auto c : lc) {
          ++up[c];
        }
      }
      return up;
    };
    auto const up_a = upcount(a);
    auto const up_b = upcount(b);
    std::vector<std::vector<std::uint8_t>> cov_b(k, std::vector<std::uint8_t>(k));
    for (std::size_t x = 0; x < k; ++x) {
      for (auto c : b[x]) {
        cov_b[c][x] = 1;
      }
    }
    std::vector<std::size_t> map(k);
    std::vector<std::uint8_t> used(k, 0);
    // a's indices are a linear extension, so lower covers are mapped first
    std::function<bool(std::size_t)> extend = [&](std::size_t x) -> bool {
      if (x == k) {
        return true;
      }
      for (std::size_t y = 0; y < k; ++y) {
        if (used[y] || a[x].size() != b[y].size() || up_a[x] != up_b[y]) {
          continue;
        }
        bool ok = true;
        for (auto c : a[x]) {
          ok = ok && cov_b[map[c]][y];
        }
        if (!ok) {
          continue;
        }
        used[y] = 1;
        map[x] = y;
        if (extend(x + 1)) {
          return true;
        }
        used[y] = 0;
      }
      return false;
    };
    return extend(0);
  }

  std::vector<Elem> all_elements(Lattice const& lattice) {
    std::vector<Elem> el(lattice.size());
    std::iota(el.begin(), el.end(), Elem{0});
    return el;
  }

}  // namespace

bool isomorphic(Lattice const& a, Lattice const& b) {
  if (a.size() != b.size() || a.cover_count() != b.cover_count()) {
    return false;
  }
  return isomorphic_to(a, all_elements(a), b);
}

bool isomorphic_to(Lattice const& a, std::span<Elem const> subset,
                   Lattice const& b) {
  if (subset.size() != b.size()) {
    return false;
  }
  return hasse_isomorphic(induced_lower_covers(a, subset),
                          induced_lower_covers(b, all_elements(b)));
}

Lattice s7() {
  return Lattice::from_lower_covers(
      7, {{}, {0}, {0}, {1}, {1, 2}, {2}, {3, 4, 5}});
}

}  // namespace forklat
