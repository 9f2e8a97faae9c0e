#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "forklat/lattice.hpp"

namespace forklat {

/// Direct product of the chains C_p and C_q. Element (u, v) has index
/// u * q + v and lower covers (u - 1, v), (u, v - 1), left to right.
Lattice grid(std::size_t p, std::size_t q);

/// A grid followed by a sequence of fork insertions. Each step is a covering
/// square given by element indices of the lattice at the time of the step.
struct History {
  std::size_t p = 1;
  std::size_t q = 1;
  std::uint64_t seed = 0;
  std::vector<CoveringSquare> steps;

  friend bool operator==(History const&, History const&) = default;
};

struct GeneratorParams {
  std::size_t max_base = 4;  // grid sides are drawn from [2, max_base]
  std::size_t forks = 6;     // attempted insertions
  std::size_t size_cap = 60;
  // a fixed p x q base when both are nonzero; max_base is then unused
  std::size_t base_p = 0;
  std::size_t base_q = 0;
};

struct Generated {
  Lattice lattice;
  History history;
};

/// Seeded random SPS lattice. Steps whose result would exceed size_cap are
/// abandoned. Uses std::mt19937_64, whose output sequence is fixed by the
/// standard, reduced modulo the range.
Generated random_sps(std::uint64_t seed, GeneratorParams const& params = {});

Lattice replay(History const& history);

/// Lattice before step k for k < steps.size(), then the final lattice.
std::vector<Lattice> replay_stages(History const& history);

/// random_sps for every seed in [first, first + count).
std::vector<Generated> corpus(std::uint64_t first, std::size_t count,
                              GeneratorParams const& params = {});

/// The corpus used by the verification harness and the acceptance suite.
inline constexpr std::size_t kDefaultCorpusSize = 200;
GeneratorParams default_corpus_params();

}  // namespace forklat
