#pragma once

#include <cstddef>
#include <vector>

#include "forklat/fork.hpp"
#include "forklat/lattice.hpp"
#include "forklat/partition.hpp"

namespace forklat {

/// A protrusion on one track of a fork.
///
/// Positions are 1-based track indices: position k means x[k-1] of the
/// trace. The protrusion at position i covers three or more elements of L;
/// its extensions are positions i+2 .. last_extension, and companions[j]
/// is the element a at position i+2+j (an index of L[S]).
struct Protrusion {
  std::size_t position = 0;
  std::size_t last_extension = 0;
  std::vector<Elem> companions;

  [[nodiscard]] bool is_extension(std::size_t pos) const noexcept {
    return pos >= position + 2 && pos <= last_extension;
  }
  [[nodiscard]] Elem companion(std::size_t pos) const {
    return companions.at(pos - position - 2);
  }
};

struct ProtrusionReport {
  std::vector<Protrusion> left;
  std::vector<Protrusion> right;

  [[nodiscard]] bool empty() const noexcept {
    return left.empty() && right.empty();
  }
};

/// Protrusions and extensions of a fork at a tight square of `lattice`.
ProtrusionReport find_protrusions(Lattice const& lattice,
                                  ForkTrace const& trace);

struct ProtrusionCongruences {
  /// π in L and π̄ (generated by π) in L[S].
  Partition pi;
  Partition pi_bar;
  /// con_L(y_i, y_{i+1}) per protrusion, left protrusions first, and their
  /// minimal extensions to L[S].
  std::vector<Partition> parts;
  std::vector<Partition> parts_bar;
};

ProtrusionCongruences protrusion_congruence(Lattice const& lattice,
                                            Lattice const& extension,
                                            ForkTrace const& trace,
                                            ProtrusionReport const& report);

/// γ(S) of a tight square assembled from its explicit class description:
/// {i, t}; {x_k, z_k} on plain track positions; {x_i, x_{i+1}, z_i, z_{i+1}}
/// and {y_i, y_{i+1}} at a protrusion i; {a_j, x_j, z_j} at each extension
/// j; every other element keeps its π class. Throws ClassClash when two of
/// these rules disagree about an element.
Partition gamma_direct_tight(Lattice const& extension, ForkTrace const& trace,
                             ProtrusionReport const& report,
                             Partition const& pi);

/// The same description read permissively: extension classes yield at
/// positions already covered by a protrusion class (adjacent protrusions),
/// and the listed classes are joined with π̄ instead of clashing with it.
Partition gamma_direct_tight_resolved(Lattice const& extension,
                                      ForkTrace const& trace,
                                      ProtrusionReport const& report,
                                      Partition const& pi_bar);

/// π̄ predicted from π: classes of π, and z_j ≡ z_k on a track exactly when
/// x_j ≡ x_k in π. New elements never join a class of L.
Partition lift_by_tracks(ForkTrace const& trace, std::size_t extension_size,
                         Partition const& pi);

/// γ(S) of a distributive square: the doubletons {x_k, z_k} on both tracks
/// and {t, i}.
Partition gamma_direct_distributive(Lattice const& extension,
                                    ForkTrace const& trace);

/// The prime intervals [z_k, x_k] of both tracks and [t, i].
std::vector<Interval> gamma_prime_set(ForkTrace const& trace);

}  // namespace forklat
