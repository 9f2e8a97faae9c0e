#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "forklat/lattice.hpp"
#include "forklat/partition.hpp"

namespace forklat {

/// Bookkeeping of one fork insertion L -> L[S].
///
/// `square` is in the indices of L; every other element is an index of L[S].
/// The tracks are 0-based: x_l[0] = a_l, y_l[0] = o, z_l[0] is the new atom of
/// the S7 on the left, and x_l[k] covers z_l[k], which covers y_l[k].
struct ForkTrace {
  CoveringSquare square;
  Elem t = 0;
  std::vector<Elem> z_l, z_r;
  std::vector<Elem> x_l, y_l, x_r, y_r;
  std::vector<Elem> new_elements;
  /// old_to_new[e] is the position of e of L inside L[S].
  std::vector<Elem> old_to_new;

  /// Track lengths, the number of z elements on each side.
  [[nodiscard]] std::size_t n() const noexcept { return z_l.size(); }
  [[nodiscard]] std::size_t m() const noexcept { return z_r.size(); }

  /// The element of L at position e of L[S], if e is not new.
  [[nodiscard]] std::optional<Elem> new_to_old(Elem e) const;
  [[nodiscard]] Elem o() const { return old_to_new[square.o]; }
  [[nodiscard]] Elem a_l() const { return old_to_new[square.a_l]; }
  [[nodiscard]] Elem a_r() const { return old_to_new[square.a_r]; }
  [[nodiscard]] Elem i() const { return old_to_new[square.i]; }
};

struct ForkResult {
  Lattice lattice;
  ForkTrace trace;
};

/// Inserts a fork at the covering square S of the SPS lattice L.
ForkResult insert_fork(Lattice const& lattice, CoveringSquare const& square);

enum class SquareTag { Tight, Wide };

struct SquareKind {
  SquareTag tag;
  bool distributive;

  friend bool operator==(SquareKind const&, SquareKind const&) = default;
};

char const* to_string(SquareTag tag) noexcept;

SquareKind classify_square(Lattice const& lattice,
                           CoveringSquare const& square);

/// {o, z_l[0], z_r[0], a_l, a_r, t, i} in L[S].
S7Sublattice associated_s7(ForkTrace const& trace);

/// The prime intervals of L[S] that are not prime intervals of L, in five
/// groups: [z_l, x_l], [t, i], [z_r, x_r], [y_l, z_l], [y_r, z_r].
std::array<std::vector<Interval>, 5> fork_prime_lists(ForkTrace const& trace);

/// All prime intervals of L[S] that are not prime in L, sorted: the five
/// groups above plus [z_l[0], t], [z_r[0], t] and the chain steps
/// [z[k+1], z[k]] on both tracks, which the groups leave out.
std::vector<Interval> fork_new_primes(ForkTrace const& trace);

/// con_L(a_l, i), con_L(a_r, i), and con_{L[S]}(a_l, i), con_{L[S]}(a_r, i),
/// con_{L[S]}(t, i).
struct NamedCongruences {
  Partition alpha_l;
  Partition alpha_r;
  Partition alpha_l_bar;
  Partition alpha_r_bar;
  Partition gamma;
};

NamedCongruences named_congruences(Lattice const& lattice,
                                   Lattice const& extension,
                                   ForkTrace const& trace);

/// Re-indexes a lattice given by lower cover lists over arbitrary ids into a
/// linear extension; ties are broken by the smaller id. Returns the lattice
/// and the id -> index map.
std::pair<Lattice, std::vector<Elem>>
lattice_from_unordered(std::vector<std::vector<Elem>> const& lower);

}  // namespace forklat
