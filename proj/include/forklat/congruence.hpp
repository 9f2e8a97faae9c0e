#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "forklat/lattice.hpp"
#include "forklat/partition.hpp"

namespace forklat {

// ---------------------------------------------------------------------------
// Congruence tests
// ---------------------------------------------------------------------------

/// Witness that a partition is not a congruence.
struct CongruenceViolation {
  enum class Reason { ClassNotInterval, JoinCondition, MeetCondition };
  Reason reason;
  // For the cover conditions: x is covered by (covers) y != z and x ≡ y, but
  // z is not congruent to y ∨ z (y ∧ z). For a non-interval class, x is the
  // class representative.
  Elem x;
  Elem y;
  Elem z;

  [[nodiscard]] std::string describe() const;
};

/// Classes must be intervals and both cover conditions must hold.
std::optional<CongruenceViolation> congruence_violation(Lattice const& lattice,
                                                        Partition const& p);

bool is_congruence(Lattice const& lattice, Partition const& p);

// ---------------------------------------------------------------------------
// Principal congruences
// ---------------------------------------------------------------------------

/// Smallest congruence containing every pair, by closing under the interval
/// rule and the two cover conditions.
Partition generated_congruence(Lattice const& lattice,
                               std::span<std::pair<Elem, Elem> const> pairs);

/// con(a, b) by fixpoint closure.
Partition principal_congruence_fixpoint(Lattice const& lattice, Elem a, Elem b);

inline Partition principal_congruence(Lattice const& lattice, Elem a, Elem b) {
  return principal_congruence_fixpoint(lattice, a, b);
}

/// con(a, b) from the prime intervals that are congruence-projective from a
/// prime interval inside [a, b].
Partition principal_congruence_projective(Lattice const& lattice, Elem a,
                                          Elem b);

// ---------------------------------------------------------------------------
// Congruence-perspectivity
// ---------------------------------------------------------------------------

/// [a,b] up-perspective to [c,d]: a ≤ c and d = b ∨ c.
bool cpersp_up(Lattice const& lattice, Interval from, Interval to);
/// [a,b] down-perspective to [c,d]: d ≤ b and c = a ∧ d.
bool cpersp_dn(Lattice const& lattice, Interval from, Interval to);
bool cpersp(Lattice const& lattice, Interval from, Interval to);

/// Every interval reachable from `from` by a finite chain of
/// congruence-perspectivities (breadth first, includes `from`).
std::vector<Interval> cproj_reachable(Lattice const& lattice, Interval from);
bool cproj(Lattice const& lattice, Interval from, Interval to);

// ---------------------------------------------------------------------------
// All principal congruences of prime intervals
// ---------------------------------------------------------------------------

struct PrincipalTable {
  std::vector<Interval> primes;
  std::vector<Partition> congruences;  // congruences[k] = con(primes[k])
};

/// Serial reference.
PrincipalTable principal_table_serial(Lattice const& lattice);
/// OpenMP data-parallel over prime intervals; identical output.
PrincipalTable principal_table(Lattice const& lattice);

// ---------------------------------------------------------------------------
// The congruence lattice
// ---------------------------------------------------------------------------

struct ConOptions {
  std::size_t max_elements = 128;
  std::size_t max_members = std::size_t{1} << 16;
  bool parallel = true;
};

/// Con L for a finite lattice L.
///
/// Con L is distributive and its join-irreducibles are exactly the distinct
/// con(p), p prime. Members are stored as down-sets of that poset (bit masks
/// over the join-irreducibles), so refinement is mask inclusion. Member 0 is
/// the identity relation.
class ConLattice {
 public:
  static ConLattice compute(Lattice const& lattice, ConOptions const& opts = {});

  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] Partition const& congruence(std::size_t k) const {
    return members_[k];
  }
  [[nodiscard]] std::uint64_t mask(std::size_t k) const { return masks_[k]; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const {
    return (masks_[a] & ~masks_[b]) == 0;
  }

  /// Member indices of the join-irreducible congruences.
  [[nodiscard]] std::vector<std::size_t> join_irreducibles() const;
  [[nodiscard]] std::size_t ji_count() const noexcept { return ji_.size(); }
  /// j-th join-irreducible (refinement-compatible order: finer first).
  [[nodiscard]] Partition const& ji(std::size_t j) const { return ji_[j]; }
  /// Down-set of j in the join-irreducible poset, including j.
  [[nodiscard]] std::uint64_t ji_below(std::size_t j) const {
    return below_[j];
  }
  /// Index among the join-irreducibles, if p is one.
  [[nodiscard]] std::optional<std::size_t> ji_index(Partition const& p) const;

  [[nodiscard]] std::optional<std::size_t> index_of(Partition const& p) const;
  [[nodiscard]] std::optional<std::size_t> index_of_mask(std::uint64_t m) const;

  /// Covering pairs (finer, coarser) of the refinement order.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>>
  cover_edges() const;

  [[nodiscard]] std::vector<Interval> const& primes() const { return primes_; }
  /// Index of con(p) among the join-irreducibles.
  [[nodiscard]] std::size_t prime_ji(std::size_t prime_index) const {
    return prime_ji_[prime_index];
  }
  [[nodiscard]] std::size_t principal_of(Interval prime) const;

 private:
  std::vector<Partition> ji_;
  std::vector<std::uint64_t> below_;
  std::vector<Partition> members_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::size_t> by_mask_;
  std::unordered_map<Partition, std::size_t, PartitionHash> by_partition_;
  std::vector<Interval> primes_;
  std::vector<std::size_t> prime_ji_;
};

// ---------------------------------------------------------------------------
// Sublattices and extensions
// ---------------------------------------------------------------------------

/// Induced partition on a subset; element k of the result is embedding[k].
Partition restrict(Partition const& p, std::span<Elem const> embedding);

/// Smallest congruence of `extension` containing alpha, where alpha is a
/// partition of the sublattice whose element k sits at embedding[k].
Partition minimal_extension(std::span<Elem const> embedding,
                            Lattice const& extension, Partition const& alpha);

/// Witness search for condition (P): every prime interval of the extension
/// with an endpoint outside the sublattice generates the same congruence as
/// some prime interval of the sublattice. Returns the offending prime
/// intervals (empty when the condition holds).
std::vector<Interval>
prime_condition_failures(Lattice const& sub, std::span<Elem const> embedding,
                         Lattice const& extension);

}  // namespace forklat
