#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forklat {

/// Index of a lattice element. Indices always form a linear extension of the
/// order: 0 is the bottom, size()-1 is the top.
using Elem = std::uint32_t;

/// Error raised by constructors and validators of this library.
class LatticeError : public std::runtime_error {
 public:
  enum class Kind {
    NotALattice,
    NotTransitiveReduction,
    InconsistentLeftOrder,
    InvalidInput,
    NotSPS,
    NotACoveringSquare,
    SizeBound,
    ClassClash,
    Unsatisfiable,
    InvalidStep,
  };

  LatticeError(Kind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

char const* to_string(LatticeError::Kind kind) noexcept;

struct Interval {
  Elem bottom;
  Elem top;

  friend bool operator==(Interval const&, Interval const&) = default;
  friend auto operator<=>(Interval const&, Interval const&) = default;
};

/// {o, a_l, a_r, i} with o covered by both coatoms, a_l drawn left of a_r.
struct CoveringSquare {
  Elem o;
  Elem a_l;
  Elem a_r;
  Elem i;

  friend bool operator==(CoveringSquare const&, CoveringSquare const&) = default;
};

/// A finite lattice together with a planar diagram.
///
/// The diagram is given by the left-to-right order of the lower covers of
/// every element. From those lists the constructor derives the two
/// "left-first" and "right-first" linear extensions of a planar drawing; the
/// order must be their intersection, otherwise the lists do not describe a
/// planar diagram and construction fails with InconsistentLeftOrder. The
/// upper cover lists are ordered left to right by the left-first extension.
///
/// Values are immutable once built.
class Lattice {
 public:
  Lattice() = default;

  /// Build from an element count and the lower covers of every element,
  /// leftmost first. Validates the lattice axioms.
  static Lattice from_lower_covers(std::size_t n,
                                   std::vector<std::vector<Elem>> lower);

  /// Build from a flat list of cover pairs (lo, hi) and per-element left to
  /// right lower cover lists. `left_order` may be empty, in which case the
  /// cover pairs' order of appearance is used.
  static Lattice build(std::size_t n,
                       std::vector<std::pair<Elem, Elem>> const& covers,
                       std::vector<std::vector<Elem>> const& left_order);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] Elem bottom() const noexcept { return 0; }
  [[nodiscard]] Elem top() const noexcept { return static_cast<Elem>(n_ - 1); }

  [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
    return join_[index(a, b)] == b;
  }
  [[nodiscard]] bool less(Elem a, Elem b) const noexcept {
    return a != b && leq(a, b);
  }
  [[nodiscard]] bool comparable(Elem a, Elem b) const noexcept {
    return leq(a, b) || leq(b, a);
  }
  [[nodiscard]] Elem meet(Elem a, Elem b) const noexcept {
    return meet_[index(a, b)];
  }
  [[nodiscard]] Elem join(Elem a, Elem b) const noexcept {
    return join_[index(a, b)];
  }
  /// a is covered by b.
  [[nodiscard]] bool covers(Elem a, Elem b) const noexcept {
    return cover_[index(a, b)] != 0;
  }

  [[nodiscard]] std::span<Elem const> lower_covers(Elem a) const noexcept {
    return down_[a];
  }
  [[nodiscard]] std::span<Elem const> upper_covers(Elem a) const noexcept {
    return up_[a];
  }

  /// Position in the left-first linear extension of the diagram.
  [[nodiscard]] std::size_t left_rank(Elem a) const noexcept {
    return left_rank_[a];
  }
  /// Incomparable and drawn to the left.
  [[nodiscard]] bool left_of(Elem a, Elem b) const noexcept {
    return !comparable(a, b) && left_rank_[a] < left_rank_[b];
  }

  /// All prime intervals (cover pairs), sorted.
  [[nodiscard]] std::vector<Interval> prime_intervals() const;
  [[nodiscard]] std::size_t cover_count() const noexcept;

  /// The same lattice with every diagram order reversed.
  [[nodiscard]] Lattice reflected() const;

  /// Elements of [lo, hi], ascending.
  [[nodiscard]] std::vector<Elem> interval_elements(Elem lo, Elem hi) const;

  friend bool operator==(Lattice const& a, Lattice const& b) {
    return a.n_ == b.n_ && a.down_ == b.down_;
  }

 private:
  [[nodiscard]] std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  std::size_t n_ = 0;
  std::vector<std::vector<Elem>> down_;
  std::vector<std::vector<Elem>> up_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<std::uint8_t> cover_;
  std::vector<std::size_t> left_rank_;
};

bool is_semimodular(Lattice const& lattice);
std::vector<Elem> join_irreducibles(Lattice const& lattice);
/// Join-irreducibles have no three-element antichain.
bool is_slim(Lattice const& lattice);
bool is_sps(Lattice const& lattice);

bool is_distributive_interval(Lattice const& lattice, Interval iv);

bool is_covering_square(Lattice const& lattice, CoveringSquare const& s);
/// Every covering square, ordered by (i, o).
std::vector<CoveringSquare> covering_squares(Lattice const& lattice);

/// A cover-preserving S7 sublattice: unit i covering a_l, t, a_r (left to
/// right), atoms z_l = a_l ∧ t and z_r = t ∧ a_r, bottom o.
struct S7Sublattice {
  Elem o, z_l, z_r, a_l, a_r, t, i;
  // no covering S7 has a strictly smaller unit
  bool minimal = false;
  // ... and no other covering S7 shares the unit either
  bool unique_minimal = false;

  [[nodiscard]] std::vector<Elem> elements() const {
    return {o, z_l, z_r, a_l, a_r, t, i};
  }
  friend bool operator==(S7Sublattice const&, S7Sublattice const&) = default;
};

std::vector<S7Sublattice> s7_sublattices(Lattice const& lattice);

/// Closure of `generators` under meet and join, sorted.
std::vector<Elem> generated_sublattice(Lattice const& lattice,
                                       std::span<Elem const> generators);

/// Order-isomorphism test for small lattices (or subsets) by backtracking.
bool isomorphic(Lattice const& a, Lattice const& b);
bool isomorphic_to(Lattice const& a, std::span<Elem const> subset,
                   Lattice const& b);

/// The seven element lattice S7 with indices o=0, z_l=1, z_r=2, a_l=3, t=4,
/// a_r=5, i=6.
Lattice s7();

}  // namespace forklat
