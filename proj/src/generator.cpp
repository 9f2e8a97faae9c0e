#include "forklat/generator.hpp"

#include <random>
#include <string>

#include "forklat/fork.hpp"

namespace forklat {

Lattice grid(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) {
    throw LatticeError(LatticeError::Kind::InvalidInput,
                       "grid sides must be positive");
  }
  std::vector<std::vector<Elem>> lower(p * q);
  for (std::size_t u = 0; u < p; ++u) {
    for (std::size_t v = 0; v < q; ++v) {
      auto& lc = lower[u * q + v];
      if (u > 0) {
        lc.push_back(static_cast<Elem>((u - 1) * q + v));
      }
      if (v > 0) {
        lc.push_back(static_cast<Elem>(u * q + v - 1));
      }
    }
  }
  return Lattice::from_lower_covers(p * q, std::move(lower));
}

Generated random_sps(std::uint64_t seed, GeneratorParams const& params) {
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t k) {
    return static_cast<std::size_t>(rng() % k);
  };
  std::size_t const span = params.max_base < 2 ? 1 : params.max_base - 1;
  Generated g;
  g.history.seed = seed;
  if (params.base_p > 0 && params.base_q > 0) {
    g.history.p = params.base_p;
    g.history.q = params.base_q;
  } else {
    g.history.p = 2 + pick(span);
    g.history.q = 2 + pick(span);
  }
  g.lattice = grid(g.history.p, g.history.q);
  for (std::size_t step = 0; step < params.forks; ++step) {
    auto const squares = covering_squares(g.lattice);
    if (squares.empty()) {
      throw LatticeError(LatticeError::Kind::Unsatisfiable,
                         "no covering square available");
    }
    auto const& s = squares[pick(squares.size())];
    auto res = insert_fork(g.lattice, s);
    if (res.lattice.size() > params.size_cap) {
      continue;
    }
    g.lattice = std::move(res.lattice);
    g.history.steps.push_back(s);
  }
  return g;
}

std::vector<Lattice> replay_stages(History const& history) {
  std::vector<Lattice> stages{grid(history.p, history.q)};
  for (std::size_t k = 0; k < history.steps.size(); ++k) {
    auto const& s = history.steps[k];
    if (!is_covering_square(stages.back(), s)) {
      throw LatticeError(LatticeError::Kind::InvalidStep,
                         "step " + std::to_string(k)
                             + " is not a covering square");
    }
    stages.push_back(insert_fork(stages.back(), s).lattice);
  }
  return stages;
}

Lattice replay(History const& history) {
  return replay_stages(history).back();
}

std::vector<Generated> corpus(std::uint64_t first, std::size_t count,
                              GeneratorParams const& params) {
  std::vector<Generated> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(random_sps(first + k, params));
  }
  return out;
}

GeneratorParams default_corpus_params() {
  return GeneratorParams{4, 6, 60};
}

}  // namespace forklat
